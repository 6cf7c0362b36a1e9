#pragma once

#include "gonc/poly.hpp"
#include "gonc/series.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace gonc {

enum class OperatorKind { delta, invertible, general };

// A shift-invariant operator S on Q[x], stored by its D-indicator: the series
// f with S = f(D), where coeff k multiplies D^k directly (the a_k/k! of the
// expansion is already folded in). The generator must be deterministic:
// requesting a higher order extends the series without changing earlier
// coefficients.
class OperatorSpec {
public:
    using Generator = std::function<TruncSeries(int)>;

    OperatorSpec(std::string name, Generator gen);

    const std::string& name() const { return name_; }
    OperatorKind kind() const { return kind_; }
    bool is_delta() const { return kind_ == OperatorKind::delta; }
    bool is_invertible() const { return kind_ == OperatorKind::invertible; }

    TruncSeries indicator(int order) const { return gen_(order); }

private:
    std::string name_;
    Generator gen_;
    OperatorKind kind_;
};

// Presets.
OperatorSpec derivative_op();                              // D, indicator t
OperatorSpec shift_op(const Rational& a);                  // E_a, indicator e^{at}
OperatorSpec abel_op(const Rational& a);                   // E_a D, indicator t e^{at}
OperatorSpec laguerre_op();                                // K = D(D-I)^{-1}, indicator t/(t-1)
OperatorSpec lambert_op();                                 // indicator = reverse of t e^t
OperatorSpec touchard_op();                                // log(I + D)
OperatorSpec forward_difference_op();                      // E_1 - I
OperatorSpec backward_difference_op();                     // I - E_{-1}
OperatorSpec custom_op(std::vector<Rational> indicator_coeffs);  // finite indicator polynomial

// S1 S2, i.e. the indicator product.
OperatorSpec compose(const OperatorSpec& s1, const OperatorSpec& s2);

// Conjugation by x -> -x: indicator f(t) -> f(-t). Sends the basic sequence
// p_n(x) to p_n(-x).
OperatorSpec reflect(const OperatorSpec& op);

// Preset names accepted by the CLI and JSON interfaces:
//   "D", "abel:a=<rat>", "laguerre", "lambert", "touchard",
//   "fwd-diff", "bwd-diff", "custom:<c0>,<c1>,..."
OperatorSpec parse_operator(const std::string& text);

// sum_k c_k D^k(p), a finite sum because D^k annihilates degree < k.
Poly apply(const OperatorSpec& op, const Poly& p);
Poly apply_power(const OperatorSpec& op, int k, const Poly& p);

// The basic sequence (p_n) of a delta operator: p_0 = 1, p_n(0) = 0 for n >= 1,
// d(p_n) = n p_{n-1}. Computed through the generating function e^{x q^{-1}(t)}.
// Extension is an idempotent cache and safe to call concurrently.
class BasicSequence {
public:
    explicit BasicSequence(OperatorSpec delta_op);  // throws NotDeltaOperator

    const OperatorSpec& op() const { return op_; }
    Poly at(int n) const;

private:
    struct Cache;
    OperatorSpec op_;
    std::shared_ptr<Cache> cache_;
};

BasicSequence basic_sequence(const OperatorSpec& delta_op, int n_max);

// The d-indicator of S truncated at n_max: coeff k = eps_0(S(p_k)) / k! with
// (p_k) the basic sequence of d.
TruncSeries expand_in_delta(const OperatorSpec& s, const OperatorSpec& d, int n_max);

// Right inverse of a delta operator: expands p in the basic sequence and maps
// p_i -> p_{i+1}/(i+1); the result r has d(r) = p, r(0) = 0.
Poly right_inverse_apply(const OperatorSpec& d, const Poly& p);

}  // namespace gonc
