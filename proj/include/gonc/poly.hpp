#pragma once

#include "gonc/rational.hpp"

#include <vector>

namespace gonc {

// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of x^k.
// Canonical form: no trailing zero coefficient; the zero polynomial is the
// empty vector, so degree() is -1 for zero and size-1 otherwise.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(int degree, const Rational& c = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;  // 0 outside the stored range
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;  // pre: nonzero

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    // Horner evaluation at z.
    Rational operator()(const Rational& z) const;

    Poly derivative() const;

    // p(x + c) by repeated Horner steps, exact.
    Poly shifted_arg(const Rational& c) const;

    bool operator==(const Poly&) const = default;

private:
    void canonicalize();
    std::vector<Rational> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& c, Poly p);

// Exact quotient p / q; throws NotDivisible if q is zero or does not divide p.
Poly div_exact(const Poly& p, const Poly& q);

// Plain text rendering, e.g. "x^2 - 4x + 3".
std::string poly_to_string(const Poly& p, const std::string& var = "x");

}  // namespace gonc
