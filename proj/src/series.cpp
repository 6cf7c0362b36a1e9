#include "gonc/series.hpp"

#include "gonc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace gonc {

TruncSeries::TruncSeries(int order) {
    assert(order >= 0);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    assert(!coeffs_.empty());
}

const Rational& TruncSeries::coeff(int k) const {
    if (k < 0 || k > order())
        throw std::out_of_range("series coefficient " + std::to_string(k) +
                                " beyond truncation order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(k)];
}

TruncSeries TruncSeries::truncated(int new_order) const {
    assert(new_order >= 0 && new_order <= order());
    return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    int n = std::min(order(), o.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        coeffs_[static_cast<std::size_t>(k)] += o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    int n = std::min(order(), o.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        coeffs_[static_cast<std::size_t>(k)] -= o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    return *this;
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) {
    a += b;
    return a;
}

TruncSeries operator-(TruncSeries a, const TruncSeries& b) {
    a -= b;
    return a;
}

namespace {

// Cauchy product of coefficient vectors, truncated at index `n`.
std::vector<Rational> mul_vec(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i < static_cast<int>(a.size()) && i <= n; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        int jmax = std::min(n - i, static_cast<int>(b.size()) - 1);
        for (int j = 0; j <= jmax; ++j)
            out[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return out;
}

}  // namespace

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    return TruncSeries(mul_vec(a.coeffs(), b.coeffs(), n));
}

TruncSeries operator*(const Rational& c, TruncSeries f) {
    f *= c;
    return f;
}

TruncSeries series_identity(int order) {
    std::vector<Rational> v(static_cast<std::size_t>(order) + 1, Rational(0));
    if (order >= 1) v[1] = 1;
    return TruncSeries(std::move(v));
}

TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g) {
    if (g.coeff(0) != 0)
        throw NonzeroConstantTerm("composition requires g(0) = 0, got " + to_string(g.coeff(0)));
    int n = std::min(f.order(), g.order());
    // Horner over g: acc <- acc*g + f_k, from the top coefficient down.
    std::vector<Rational> acc(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = n; k >= 0; --k) {
        acc = mul_vec(acc, g.coeffs(), n);
        acc[0] += f.coeff(k);
    }
    return TruncSeries(std::move(acc));
}

TruncSeries series_reverse(const TruncSeries& q) {
    if (q.order() < 1 || q.coeff(0) != 0 || q.coeff(1) == 0)
        throw NotReversible("reversion requires q(0) = 0 and q'(0) != 0");
    int n = q.order();
    Rational q1 = q.coeff(1);
    std::vector<Rational> d(static_cast<std::size_t>(n) + 1, Rational(0));
    d[1] = 1 / q1;
    // Fix d_k so that [t^k] q(d(t)) vanishes, one degree at a time; adding
    // d_k t^k perturbs [t^k] q(d) by exactly q1 * d_k and nothing below.
    for (int k = 2; k <= n; ++k) {
        TruncSeries partial(std::vector<Rational>(d.begin(), d.begin() + k + 1));
        Rational mismatch = series_compose(q.truncated(k), partial).coeff(k);
        d[static_cast<std::size_t>(k)] = -mismatch / q1;
    }
    return TruncSeries(std::move(d));
}

TruncSeries series_exp(const TruncSeries& f) {
    if (f.coeff(0) != 0)
        throw BadConstantTerm("exp requires f(0) = 0, got " + to_string(f.coeff(0)));
    int n = f.order();
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1, Rational(0));
    g[0] = 1;
    // g' = g f'  =>  k g_k = sum_{j=1..k} j f_j g_{k-j}
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 1; j <= k; ++j)
            s += Rational(j) * f.coeff(j) * g[static_cast<std::size_t>(k - j)];
        g[static_cast<std::size_t>(k)] = s / k;
    }
    return TruncSeries(std::move(g));
}

TruncSeries series_log(const TruncSeries& f) {
    if (f.coeff(0) != 1)
        throw BadConstantTerm("log requires f(0) = 1, got " + to_string(f.coeff(0)));
    int n = f.order();
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1, Rational(0));
    // from f = exp(g): k f_k = k g_k + sum_{j=1..k-1} j g_j f_{k-j}
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 1; j < k; ++j)
            s += Rational(j) * g[static_cast<std::size_t>(j)] * f.coeff(k - j);
        g[static_cast<std::size_t>(k)] = f.coeff(k) - s / k;
    }
    return TruncSeries(std::move(g));
}

bool same_series_prefix(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

}  // namespace gonc
