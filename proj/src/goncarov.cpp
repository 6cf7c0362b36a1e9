#include "gonc/goncarov.hpp"

#include "gonc/combinat.hpp"
#include "gonc/errors.hpp"

#include <mutex>
#include <sstream>
#include <utility>

namespace gonc {

Grid Grid::affine(const Rational& a, const Rational& b) {
    Grid g;
    g.affine_ = true;
    g.a_ = a;
    g.b_ = b;
    return g;
}

Grid Grid::list(std::vector<Rational> nodes) {
    Grid g;
    g.nodes_ = std::move(nodes);
    return g;
}

bool Grid::has_nodes(int count) const {
    return affine_ || count <= static_cast<int>(nodes_.size());
}

Rational Grid::node(int i) const {
    if (affine_) return a_ + b_ * i;
    if (i < 0 || i >= static_cast<int>(nodes_.size()))
        throw InsufficientNodes("grid has " + std::to_string(nodes_.size()) +
                                " nodes, node " + std::to_string(i) + " requested");
    return nodes_[static_cast<std::size_t>(i)];
}

std::vector<Rational> Grid::materialize(int count) const {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v.push_back(node(i));
    return v;
}

Grid Grid::shifted(int j) const {
    if (affine_) return affine(a_ + b_ * j, b_);
    if (j > static_cast<int>(nodes_.size()))
        throw InsufficientNodes("cannot shift a " + std::to_string(nodes_.size()) +
                                "-node grid by " + std::to_string(j));
    return list(std::vector<Rational>(nodes_.begin() + j, nodes_.end()));
}

Grid Grid::translated(const Rational& xi) const {
    if (affine_) return affine(a_ + xi, b_);
    std::vector<Rational> v = nodes_;
    for (auto& z : v) z += xi;
    return list(std::move(v));
}

Grid Grid::arithmetic_added(const Rational& xi) const {
    if (affine_) return affine(a_, b_ + xi);
    std::vector<Rational> v = nodes_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += xi * static_cast<int>(i);
    return list(std::move(v));
}

Grid Grid::negated() const {
    if (affine_) return affine(-a_, -b_);
    std::vector<Rational> v = nodes_;
    for (auto& z : v) z = -z;
    return list(std::move(v));
}

Grid Grid::with_node(int k, const Rational& z, int count) const {
    std::vector<Rational> v = materialize(std::max(count, k + 1));
    v[static_cast<std::size_t>(k)] = z;
    return list(std::move(v));
}

std::string Grid::describe() const {
    std::ostringstream os;
    if (affine_) {
        os << "affine:" << to_string(a_) << "," << to_string(b_);
    } else {
        os << "list:";
        for (std::size_t i = 0; i < nodes_.size(); ++i) os << (i ? "," : "") << to_string(nodes_[i]);
    }
    return os.str();
}

struct GoncarovBasis::Cache {
    std::mutex m;
    std::vector<Poly> polys;
};

GoncarovBasis::GoncarovBasis(OperatorSpec delta_op, Grid grid)
    : op_(std::move(delta_op)), grid_(std::move(grid)), basics_(op_), cache_(std::make_shared<Cache>()) {}

Poly GoncarovBasis::at(int n) const {
    if (!grid_.has_nodes(n))
        throw InsufficientNodes("t_" + std::to_string(n) + " needs nodes z_0..z_" +
                                std::to_string(n - 1) + " but grid " + grid_.describe() +
                                " is shorter");
    std::lock_guard<std::mutex> lock(cache_->m);
    auto& polys = cache_->polys;
    if (polys.empty()) polys.push_back(Poly::constant(1));
    for (int m = static_cast<int>(polys.size()); m <= n; ++m) {
        Poly t = basics_.at(m);
        for (int i = 0; i < m; ++i) {
            Rational c = Rational(binomial(m, i)) * basics_.at(m - i)(grid_.node(i));
            if (c != 0) t -= c * polys[static_cast<std::size_t>(i)];
        }
        polys.push_back(std::move(t));
    }
    return polys[static_cast<std::size_t>(n)];
}

Poly goncarov_recursion(const OperatorSpec& d, const Grid& z, int n) {
    return GoncarovBasis(d, z).at(n);
}

namespace {

// Fraction-free (Bareiss) elimination; exact over Q.
Rational bareiss_determinant(std::vector<std::vector<Rational>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Rational(1);
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return Rational(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    Rational det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Poly goncarov_determinant(const OperatorSpec& d, const Grid& z, int n) {
    if (!d.is_delta()) throw NotDeltaOperator("'" + d.name() + "' is not a delta operator");
    if (!z.has_nodes(n))
        throw InsufficientNodes("determinant route for t_" + std::to_string(n) +
                                " needs nodes z_0..z_" + std::to_string(n - 1));
    BasicSequence bs(d);
    if (n == 0) return Poly::constant(1);

    // lambda[i][j] = eps_{z_i}(d^i p_j) / j! for the n numeric rows.
    std::vector<std::vector<Rational>> lambda(static_cast<std::size_t>(n),
                                              std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0)));
    std::vector<Rational> jfact(static_cast<std::size_t>(n) + 1, Rational(1));
    for (int j = 1; j <= n; ++j) jfact[static_cast<std::size_t>(j)] = jfact[static_cast<std::size_t>(j - 1)] * j;
    for (int i = 0; i < n; ++i) {
        Rational zi = z.node(i);
        for (int j = i; j <= n; ++j) {
            Poly applied = apply_power(d, i, bs.at(j));
            lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                applied(zi) / jfact[static_cast<std::size_t>(j)];
        }
    }

    // Expand along the last (polynomial) row.
    Poly result;
    for (int j = 0; j <= n; ++j) {
        std::vector<std::vector<Rational>> minor(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            minor[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
            for (int c = 0; c <= n; ++c)
                if (c != j)
                    minor[static_cast<std::size_t>(i)].push_back(
                        lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
        }
        Rational cof = bareiss_determinant(std::move(minor));
        if ((n + j) % 2 != 0) cof = -cof;
        if (cof != 0) result += cof / jfact[static_cast<std::size_t>(j)] * bs.at(j);
    }
    return Rational(factorial(n)) * result;
}

Poly shifted_basis(const OperatorSpec& d, const Grid& z, int j, int n) {
    return goncarov_recursion(d, z.shifted(j), n);
}

Poly interpolation_solve(const OperatorSpec& d, const Grid& z, const std::vector<Rational>& b) {
    if (b.empty()) return {};
    int n = static_cast<int>(b.size()) - 1;
    GoncarovBasis basis(d, z);
    basis.at(n);  // surfaces InsufficientNodes before any work below
    Poly p;
    Rational ifact(1);
    for (int i = 0; i <= n; ++i) {
        if (i > 0) ifact *= i;
        if (b[static_cast<std::size_t>(i)] != 0)
            p += b[static_cast<std::size_t>(i)] / ifact * basis.at(i);
    }
    return p;
}

Poly delta_abel(const OperatorSpec& d, const Rational& a, const Rational& b, int n) {
    if (!d.is_delta()) throw NotDeltaOperator("'" + d.name() + "' is not a delta operator");
    if (n == 0) return Poly::constant(1);
    BasicSequence bs(d);
    Rational c = a + Rational(n) * b;
    Poly shifted = bs.at(n).shifted_arg(-c);  // p_n(x - a - nb)
    Poly quotient = div_exact(shifted, Poly({-c, Rational(1)}));
    return Poly({-a, Rational(1)}) * quotient;
}

Poly perturbed_basis(const OperatorSpec& d, const Grid& z, int k, const Rational& z_new, int n) {
    GoncarovBasis basis(d, z);
    if (n <= k) return basis.at(n);
    Rational correction = Rational(binomial(n, k)) * goncarov_recursion(d, z.shifted(k), n - k)(z_new);
    return basis.at(n) - correction * basis.at(k);
}

std::vector<Rational> basic_basis_coefficients(const OperatorSpec& d, const Grid& z, int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] =
            Rational(binomial(n, i)) * goncarov_recursion(d, z.shifted(i), n - i)(Rational(0));
    return c;
}

namespace {

CheckReport fail(std::string detail) { return CheckReport{false, std::move(detail)}; }

std::string poly_pair(const Poly& lhs, const Poly& rhs) {
    return "lhs = " + poly_to_string(lhs) + ", rhs = " + poly_to_string(rhs);
}

}  // namespace

CheckReport biorthogonality_check(const OperatorSpec& d, const Grid& z, int n_max) {
    GoncarovBasis basis(d, z);
    for (int n = 0; n <= n_max; ++n) {
        Poly tn = basis.at(n);
        if (tn.degree() != n)
            return fail("deg t_" + std::to_string(n) + " = " + std::to_string(tn.degree()));
        for (int i = 0; i <= n; ++i) {
            Poly applied = apply_power(d, i, tn);
            // d^n t_n is a constant, so the node z_n is never needed.
            Rational val = i == n ? applied.coeff(0) : applied(z.node(i));
            Rational expect = i == n ? Rational(factorial(n)) : Rational(0);
            if (val != expect)
                return fail("eps_{z_" + std::to_string(i) + "}(d^" + std::to_string(i) + " t_" +
                            std::to_string(n) + ") = " + to_string(val) + ", expected " +
                            to_string(expect));
        }
    }
    return {};
}

CheckReport differential_relation_check(const OperatorSpec& d, const Grid& z, int n_max) {
    GoncarovBasis basis(d, z);
    for (int n = 0; n <= n_max; ++n) {
        for (int j = 0; j <= n; ++j) {
            Poly lhs = apply_power(d, j, basis.at(n));
            Poly rhs = Rational(falling_factorial(Int(n), j)) * shifted_basis(d, z, j, n - j);
            if (lhs != rhs)
                return fail("d^" + std::to_string(j) + " t_" + std::to_string(n) + ": " +
                            poly_pair(lhs, rhs));
        }
    }
    return {};
}

CheckReport translation_invariance_check(const OperatorSpec& d, const Grid& z, const Rational& xi,
                                         int n_max) {
    GoncarovBasis t(d, z);
    GoncarovBasis h(d, z.translated(xi));
    for (int n = 0; n <= n_max; ++n) {
        Poly lhs = h.at(n).shifted_arg(xi);
        if (lhs != t.at(n))
            return fail("n = " + std::to_string(n) + ", xi = " + to_string(xi) + ": " +
                        poly_pair(lhs, t.at(n)));
    }
    return {};
}

CheckReport shift_duality_check(const OperatorSpec& d, const Grid& z, const Rational& xi, int n_max) {
    GoncarovBasis lhs(d, z.arithmetic_added(xi));
    GoncarovBasis rhs(compose(shift_op(xi), d), z);
    for (int n = 0; n <= n_max; ++n)
        if (lhs.at(n) != rhs.at(n))
            return fail("n = " + std::to_string(n) + ", xi = " + to_string(xi) + ": " +
                        poly_pair(lhs.at(n), rhs.at(n)));
    return {};
}

CheckReport binomial_expansion_check(const OperatorSpec& d, const Grid& z, const Rational& xi,
                                     int n_max) {
    GoncarovBasis basis(d, z);
    for (int n = 0; n <= n_max; ++n) {
        Poly lhs = basis.at(n).shifted_arg(xi);
        Poly rhs;
        for (int i = 0; i <= n; ++i) {
            Rational c = Rational(binomial(n, i)) * shifted_basis(d, z, i, n - i)(xi);
            if (c != 0) rhs += c * basis.basics().at(i);
        }
        if (lhs != rhs)
            return fail("n = " + std::to_string(n) + ", xi = " + to_string(xi) + ": " +
                        poly_pair(lhs, rhs));
    }
    return {};
}

CheckReport perturbation_check(const OperatorSpec& d, const Grid& z, int k, const Rational& z_new,
                               int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        Poly lhs = perturbed_basis(d, z, k, z_new, n);
        Poly rhs = goncarov_recursion(d, z.with_node(k, z_new, n), n);
        if (lhs != rhs)
            return fail("n = " + std::to_string(n) + ", k = " + std::to_string(k) + ": " +
                        poly_pair(lhs, rhs));
    }
    return {};
}

CheckReport integral_formula_check(const OperatorSpec& d, const Grid& z, int n, int k) {
    if (k > n) return fail("k > n");
    Poly expected = goncarov_recursion(d, z, n);
    Poly g = shifted_basis(d, z, k, n - k);
    for (int i = k - 1; i >= 0; --i) {
        g = right_inverse_apply(d, g);
        g -= Poly::constant(g(z.node(i)));
    }
    Poly lhs = Rational(falling_factorial(Int(n), k)) * g;
    if (lhs != expected)
        return fail("n = " + std::to_string(n) + ", k = " + std::to_string(k) + ": " +
                    poly_pair(lhs, expected));
    return {};
}

CheckReport appell_check(const OperatorSpec& d, const Grid& z, int N) {
    if (!z.has_nodes(N + 1))
        throw InsufficientNodes("Appell check at order " + std::to_string(N) +
                                " needs nodes z_0..z_" + std::to_string(N));
    GoncarovBasis basis(d, z);
    TruncSeries dser = series_reverse(d.indicator(std::max(N, 1)));

    // lhs[m] = coefficient of t^m in e^{x d(t)}, a polynomial in x.
    std::vector<Poly> lhs(static_cast<std::size_t>(N) + 1);
    lhs[0] = Poly::constant(1);
    TruncSeries dpow = dser;
    Rational kfact(1);
    for (int k = 1; k <= N; ++k) {
        kfact *= k;
        for (int m = k; m <= N; ++m) {
            Rational c = dpow.coeff(m) / kfact;
            if (c != 0) lhs[static_cast<std::size_t>(m)] += Poly::monomial(k, c);
        }
        if (k < N) dpow = dpow * dser;
    }

    std::vector<Poly> rhs(static_cast<std::size_t>(N) + 1);
    Rational nfact(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) nfact *= n;
        TruncSeries weight = series_exp(z.node(n) * dser);  // e^{z_n d(t)}
        Poly tn = basis.at(n);
        for (int m = n; m <= N; ++m) {
            Rational c = weight.coeff(m - n) / nfact;
            if (c != 0) rhs[static_cast<std::size_t>(m)] += c * tn;
        }
    }

    for (int m = 0; m <= N; ++m)
        if (lhs[static_cast<std::size_t>(m)] != rhs[static_cast<std::size_t>(m)])
            return fail("t^" + std::to_string(m) + " coefficient: " +
                        poly_pair(lhs[static_cast<std::size_t>(m)], rhs[static_cast<std::size_t>(m)]));
    return {};
}

CheckReport binomial_type_point_check(const OperatorSpec& d, const Grid& z, int n,
                                      const Rational& x, const Rational& y) {
    GoncarovBasis basis(d, z);
    Rational lhs = basis.at(n)(x + y);
    Rational rhs(0);
    for (int k = 0; k <= n; ++k)
        rhs += Rational(binomial(n, k)) * basis.at(k)(x) * basis.at(n - k)(y);
    if (lhs != rhs)
        return fail("n = " + std::to_string(n) + " at (" + to_string(x) + ", " + to_string(y) +
                    "): t_n(x+y) = " + to_string(lhs) + ", binomial sum = " + to_string(rhs));
    return {};
}

}  // namespace gonc
