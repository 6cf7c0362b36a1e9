#include "gonc/poly.hpp"

#include "gonc/errors.hpp"

#include <sstream>
#include <utility>

namespace gonc {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

void Poly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const { return coeffs_.back(); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    canonicalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    canonicalize();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Rational Poly::operator()(const Rational& z) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(k) * coeffs_[k];
    return Poly(std::move(d));
}

Poly Poly::shifted_arg(const Rational& c) const {
    // Horner in (x + c): acc <- acc*(x+c) + a_k from the top coefficient down.
    Poly acc;
    Poly lin({c, Rational(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
}

Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return Poly(std::move(c));
}

Poly operator*(const Rational& c, Poly p) {
    p *= c;
    return p;
}

Poly div_exact(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree())
        throw NotDivisible(poly_to_string(q) + " does not divide " + poly_to_string(p));
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1, Rational(0));
    for (int k = p.degree() - q.degree(); k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + q.degree())] / q.leading();
        quot[static_cast<std::size_t>(k)] = c;
        if (c != 0)
            for (int j = 0; j <= q.degree(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= c * q.coeffs()[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw NotDivisible(poly_to_string(q) + " does not divide " + poly_to_string(p));
    return Poly(std::move(quot));
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || k == 0) os << to_string(a);
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace gonc
