#pragma once

#include "gonc/operators.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gonc {

// Interpolation node sequence: either an explicit finite list or the affine
// grid z_i = a + b*i. Explicit grids raise InsufficientNodes as soon as an
// unavailable node is requested.
class Grid {
public:
    static Grid affine(const Rational& a, const Rational& b);
    static Grid list(std::vector<Rational> nodes);
    static Grid zero() { return affine(0, 0); }

    bool is_affine() const { return affine_; }
    const Rational& affine_a() const { return a_; }
    const Rational& affine_b() const { return b_; }
    const std::vector<Rational>& nodes() const { return nodes_; }

    bool has_nodes(int count) const;
    Rational node(int i) const;
    std::vector<Rational> materialize(int count) const;

    Grid shifted(int j) const;                        // drop the first j nodes
    Grid translated(const Rational& xi) const;        // z_i + xi
    Grid arithmetic_added(const Rational& xi) const;  // z_i + i*xi
    Grid negated() const;
    Grid with_node(int k, const Rational& z, int count) const;  // replace node k

    std::string describe() const;

private:
    Grid() = default;
    bool affine_ = false;
    Rational a_, b_;
    std::vector<Rational> nodes_;
};

// The basis (t_n) biorthogonal to { E_{z_i} d^i }: eps_{z_i}(d^i t_n) = n! delta_{i,n}.
// Polynomials are produced by the linear recursion
//   t_n = p_n - sum_{i<n} C(n,i) p_{n-i}(z_i) t_i
// and cached; extension is idempotent and safe to call concurrently.
class GoncarovBasis {
public:
    GoncarovBasis(OperatorSpec delta_op, Grid grid);  // throws NotDeltaOperator

    const OperatorSpec& op() const { return op_; }
    const Grid& grid() const { return grid_; }
    const BasicSequence& basics() const { return basics_; }
    Poly at(int n) const;

private:
    struct Cache;
    OperatorSpec op_;
    Grid grid_;
    BasicSequence basics_;
    std::shared_ptr<Cache> cache_;
};

Poly goncarov_recursion(const OperatorSpec& d, const Grid& z, int n);

// Same polynomial through the biorthogonality determinant: t_n = n! det(L)
// with L[i][j] = eps_{z_i}(d^i p_j)/j! above the last row and p_j(x)/j! in it.
// Expanded along the polynomial row; numeric minors by fraction-free
// (Bareiss) elimination.
Poly goncarov_determinant(const OperatorSpec& d, const Grid& z, int n);

// t_n for the shifted pair (d, Z^(j)).
Poly shifted_basis(const OperatorSpec& d, const Grid& z, int j, int n);

// The degree-n polynomial p with eps_{z_i}(d^i p) = b[i] for i = 0..n.
Poly interpolation_solve(const OperatorSpec& d, const Grid& z, const std::vector<Rational>& b);

// Closed form on the arithmetic grid (a + b*i): (x-a) p_n(x-a-nb) / (x-a-nb).
Poly delta_abel(const OperatorSpec& d, const Rational& a, const Rational& b, int n);

// t_n for the grid with node k replaced by z_new, via the perturbation
// formula (unchanged for n <= k).
Poly perturbed_basis(const OperatorSpec& d, const Grid& z, int k, const Rational& z_new, int n);

// Coefficients c_i with t_n = sum_i c_i p_i, c_i = C(n,i) t_{n-i}(0; d, Z^(i)).
std::vector<Rational> basic_basis_coefficients(const OperatorSpec& d, const Grid& z, int n);

struct CheckReport {
    bool ok = true;
    std::string detail;  // first failing case when !ok
};

CheckReport biorthogonality_check(const OperatorSpec& d, const Grid& z, int n_max);
CheckReport differential_relation_check(const OperatorSpec& d, const Grid& z, int n_max);
CheckReport translation_invariance_check(const OperatorSpec& d, const Grid& z, const Rational& xi, int n_max);
CheckReport shift_duality_check(const OperatorSpec& d, const Grid& z, const Rational& xi, int n_max);
CheckReport binomial_expansion_check(const OperatorSpec& d, const Grid& z, const Rational& xi, int n_max);
CheckReport perturbation_check(const OperatorSpec& d, const Grid& z, int k, const Rational& z_new, int n_max);

// t_n = (n)_(k) I_k(t_{n-k}^{(k)}) with I_k = prod_{i<k} (1 - eps_{z_i}) d^{-1}.
CheckReport integral_formula_check(const OperatorSpec& d, const Grid& z, int n, int k);

// e^{x d(t)} = sum_n t_n(x) e^{z_n d(t)} t^n / n!, both sides truncated at t^N.
CheckReport appell_check(const OperatorSpec& d, const Grid& z, int N);

// p_n(x+y) = sum_k C(n,k) t_k(x) t_{n-k}(y) at one (x, y) point.
CheckReport binomial_type_point_check(const OperatorSpec& d, const Grid& z, int n,
                                      const Rational& x, const Rational& y);

}  // namespace gonc
