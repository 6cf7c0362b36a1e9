#pragma once

#include "gonc/goncarov.hpp"

#include <functional>
#include <vector>

namespace gonc {

// Enumeration caps; exceeding one is an error, never a silent truncation.
// Environment overrides: GONC_PARTITION_CAP, GONC_BRUTE_CAP.
struct Caps {
    int partition_max_n = 9;                 // Fubini(9) = 1,303,074
    long long brute_max_states = 10'000'000;

    static Caps from_env();
};

// Ordered partition (preferential arrangement) of {1..n}: disjoint nonempty
// blocks, each sorted ascending, covering the whole set.
struct OrderedPartition {
    std::vector<std::vector<int>> blocks;
    int size() const { return static_cast<int>(blocks.size()); }
};

// Visits every ordered partition of [n] exactly once (Fubini(n) of them),
// recursing on the last block.
void for_each_ordered_partition(int n, const std::function<void(const OrderedPartition&)>& fn,
                                const Caps& caps = Caps::from_env());

std::vector<OrderedPartition> ordered_partitions(int n, const Caps& caps = Caps::from_env());

// t_n(0) as the signed sum over ordered partitions:
//   sum_rho (-1)^{|rho|} p_{b_1}(z_0) p_{b_2}(z_{s_1}) ... p_{b_k}(z_{s_{k-1}}).
// Independent of the recursion/determinant routes.
Rational constant_term(const OperatorSpec& d, const Grid& z, int n,
                       const Caps& caps = Caps::from_env());

// Non-decreasing positive integer bounds z_0 <= ... <= z_{n-1} together with
// the label universe size x >= z_{n-1} (defaults to z_{n-1}).
class BoundSpec {
public:
    explicit BoundSpec(std::vector<long long> bounds, long long universe_size = 0);

    const std::vector<long long>& bounds() const { return bounds_; }
    long long universe_size() const { return universe_; }
    int length() const { return static_cast<int>(bounds_.size()); }

private:
    std::vector<long long> bounds_;
    long long universe_ = 0;
};

// Number of structures of the preset's class whose order statistics are
// bounded by the given vector: t_n(0) on the negated grid for the operator
// whose basic sequence enumerates the class. Asserts the result is a
// nonnegative integer (NonIntegerResult otherwise).
Int count_bounded(const OperatorSpec& d, const BoundSpec& bounds);

// Exhaustive scan of {1..x}^n tuples whose order statistics obey the bounds.
long long brute_force_parking(const BoundSpec& bounds, const Caps& caps = Caps::from_env());

// Structure classes of reluctant functions f: S -> S u X, classified by the
// shape of each rooted tree in the final preimage.
enum class ReluctantClass {
    singleton,       // every tree a single vertex: plain functions
    all_trees,       // unrestricted forests
    rooted_paths,    // paths rooted at an end
    depth1_stars,    // stars: every vertex at depth <= 1
    monotone_paths,  // paths with labels increasing toward the root
};

ReluctantClass parse_reluctant_class(const std::string& text);

// Exhaustive scan of all (n+x)^n functions S -> S u X: keeps the reluctant
// ones of the given class whose sorted final images obey the bounds.
long long brute_force_reluctant(ReluctantClass cls, int n, long long x,
                                const std::vector<long long>& bounds,
                                const Caps& caps = Caps::from_env());

// Increasing (strict) or weakly increasing (non-strict) sequences x_1 .. x_n
// with x_i <= bounds[i-1], enumerated one by one.
long long brute_force_lattice_paths(const BoundSpec& bounds, bool strict,
                                    const Caps& caps = Caps::from_env());

enum class CountFamily {
    classical,     // a (a+nb)^{n-1}
    laguerre,      // a sum_k n!/k! C(n-1,k-1) (a+nb)^{k-1}
    inverse_abel,  // a sum_k C(n,k) k^{n-k} (a+nb)^{k-1}
    exponential,   // a sum_k S(n,k) (a+nb)^{k-1}
    strict_path,   // a/(a+nb) C(a+nb, n)
    fuss_catalan,  // a/(a+n(b+1)) C(a+n(b+1), n)
};

CountFamily parse_family(const std::string& text);  // throws UnknownFamily
const char* family_name(CountFamily family);

// Evaluates the named closed form for affine bounds (a + b*i), a >= 1, b >= 0.
// The path families report path counts (the n!-fold labeling factor removed).
Int closed_form_count(CountFamily family, long long a, long long b, int n);

// Brute-force oracle matching a counting preset: parking scan for D,
// reluctant scan for abel:a=-1 / laguerre / lambert / touchard, and
// n! * lattice paths for the difference operators.
Int brute_force_count_for(const OperatorSpec& d, const BoundSpec& bounds,
                          const Caps& caps = Caps::from_env());

}  // namespace gonc
