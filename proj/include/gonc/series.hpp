#pragma once

#include "gonc/rational.hpp"

#include <vector>

namespace gonc {

// Formal power series over Q truncated at a known order N: exactly N+1 stored
// coefficients. Terms of degree > N are unknown, not zero, so arithmetic
// between orders N1 and N2 yields order min(N1, N2) and coefficient access
// beyond the order is an error rather than a silent zero.
class TruncSeries {
public:
    explicit TruncSeries(int order);  // zero series of the given order
    explicit TruncSeries(std::vector<Rational> coeffs);  // order = size - 1

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const;  // throws std::out_of_range past the order
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncSeries truncated(int new_order) const;  // pre: new_order <= order

    TruncSeries& operator+=(const TruncSeries& o);  // both shrink to min order
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& c);

    bool operator==(const TruncSeries&) const = default;  // same order and coefficients

private:
    std::vector<Rational> coeffs_;
};

TruncSeries operator+(TruncSeries a, const TruncSeries& b);
TruncSeries operator-(TruncSeries a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);  // Cauchy product
TruncSeries operator*(const Rational& c, TruncSeries f);

TruncSeries series_identity(int order);  // t

// f(g(t)); requires g(0) = 0 (throws NonzeroConstantTerm), order = min.
TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g);

// Compositional inverse d with q(d(t)) = t, solved degree by degree.
// Requires q(0) = 0 and q'(0) != 0 (throws NotReversible).
TruncSeries series_reverse(const TruncSeries& q);

TruncSeries series_exp(const TruncSeries& f);  // requires f(0) = 0
TruncSeries series_log(const TruncSeries& f);  // requires f(0) = 1

// Equality on the common known prefix only.
bool same_series_prefix(const TruncSeries& a, const TruncSeries& b);

}  // namespace gonc
