#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gonc/combinat.hpp"
#include "gonc/errors.hpp"
#include "gonc/goncarov.hpp"
#include "test_support.hpp"

using namespace gonc;

namespace {

Poly P(std::vector<Rational> c) { return Poly(std::move(c)); }

Grid random_int_grid(std::mt19937& rng, int size, int range = 5) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Rational> nodes;
    for (int i = 0; i < size; ++i) nodes.emplace_back(d(rng));
    return Grid::list(std::move(nodes));
}

}  // namespace

TEST_CASE("grid basics") {
    Grid g = Grid::affine(1, 2);
    CHECK(g.node(3) == 7);
    CHECK(g.shifted(2).node(0) == 5);
    CHECK(g.translated(Rational(1, 2)).node(0) == Rational(3, 2));
    CHECK(g.arithmetic_added(1).node(3) == 10);
    CHECK(g.negated().node(1) == -3);

    Grid l = Grid::list({Rational(4), Rational(7), Rational(9)});
    CHECK(l.node(2) == 9);
    CHECK_THROWS_AS(l.node(3), InsufficientNodes);
    CHECK(l.shifted(1).node(0) == 7);
    CHECK(l.arithmetic_added(2).node(2) == 13);
    CHECK(l.with_node(1, Rational(5), 3).node(1) == 5);
    CHECK_FALSE(l.has_nodes(4));
    CHECK(g.has_nodes(1000));
}

TEST_CASE("t_0 and t_1") {
    std::mt19937 rng(67);
    for (const auto& op : test::all_presets()) {
        BasicSequence bs(op);
        for (int trial = 0; trial < 3; ++trial) {
            Grid z = random_int_grid(rng, 3);
            GoncarovBasis basis(op, z);
            CHECK(basis.at(0) == Poly::constant(1));
            CHECK(basis.at(1) == bs.at(1) - Poly::constant(bs.at(1)(z.node(0))));
            CHECK(basis.at(1)(z.node(0)) == 0);  // t_n(z_0) = 0
        }
    }
}

TEST_CASE("classical t_2 on the grid (1,2)") {
    Grid z = Grid::list({Rational(1), Rational(2)});
    CHECK(goncarov_recursion(derivative_op(), z, 2) == P({3, -4, 1}));
}

TEST_CASE("zero grid gives the basic sequence") {
    for (const auto& op : test::all_presets()) {
        GoncarovBasis basis(op, Grid::zero());
        BasicSequence bs(op);
        for (int n = 0; n <= 6; ++n) CHECK(basis.at(n) == bs.at(n));
        // the shifted zero grid is still the zero grid
        for (int j : {1, 3}) CHECK(shifted_basis(op, Grid::zero(), j, 4) == bs.at(4));
    }
}

TEST_CASE("determinant route equals the recursion") {
    CHECK(goncarov_determinant(derivative_op(), Grid::zero(), 0) == Poly::constant(1));
    Grid z12 = Grid::list({Rational(1), Rational(2)});
    CHECK(goncarov_determinant(derivative_op(), z12, 2) == P({3, -4, 1}));

    Grid ones = Grid::list({Rational(1), Rational(1), Rational(1)});
    CHECK(goncarov_determinant(backward_difference_op(), ones, 2) ==
          goncarov_recursion(backward_difference_op(), ones, 2));

    std::mt19937 rng(71);
    for (const auto& op : test::all_presets())
        for (int trial = 0; trial < 2; ++trial) {
            Grid z = random_int_grid(rng, 6);
            GoncarovBasis basis(op, z);
            for (int n = 0; n <= 5; ++n) CHECK(goncarov_determinant(op, z, n) == basis.at(n));
        }
}

TEST_CASE("shifted basis") {
    Grid z = Grid::list({Rational(1), Rational(2), Rational(3)});
    CHECK(shifted_basis(derivative_op(), z, 1, 1) == P({-2, 1}));  // grid (2,3): x - 2
    for (const auto& op : test::all_presets()) {
        GoncarovBasis basis(op, z);
        for (int n = 0; n <= 2; ++n) CHECK(shifted_basis(op, z, 0, n) == basis.at(n));
    }
    // post-condition: agrees with d^j t_{n+j} / (n+j)_(j)
    std::mt19937 rng(73);
    for (const auto& op : test::all_presets()) {
        Grid g = random_int_grid(rng, 6);
        for (int j = 0; j <= 3; ++j)
            for (int n = 0; n + j <= 5; ++n) {
                Poly lhs = Rational(1) / Rational(falling_factorial(Int(n + j), j)) *
                           apply_power(op, j, goncarov_recursion(op, g, n + j));
                CHECK(lhs == shifted_basis(op, g, j, n));
            }
    }
}

TEST_CASE("interpolation solver") {
    Grid z01 = Grid::list({Rational(0), Rational(1)});
    Poly p = interpolation_solve(derivative_op(), z01, {Rational(0), Rational(1)});
    CHECK(p == P({0, 1}));
    CHECK(p(Rational(0)) == 0);                        // eps_0(p) = 0
    CHECK(apply(derivative_op(), p)(Rational(1)) == 1);  // eps_1(Dp) = 1

    std::mt19937 rng(79);
    for (const auto& op : test::all_presets()) {
        Grid z = random_int_grid(rng, 6);
        GoncarovBasis basis(op, z);

        // b = n! delta_{i,n} returns t_n; b = (1,0,...,0) returns 1
        for (int n = 0; n <= 4; ++n) {
            std::vector<Rational> b(static_cast<std::size_t>(n) + 1, Rational(0));
            b.back() = Rational(factorial(n));
            CHECK(interpolation_solve(op, z, b) == basis.at(n));
        }
        CHECK(interpolation_solve(op, z, {Rational(1), Rational(0), Rational(0)}) ==
              Poly::constant(1));

        // round trip through the expansion formula
        for (int trial = 0; trial < 4; ++trial) {
            Poly f = test::random_poly(rng, 5);
            int n = std::max(f.degree(), 0);
            std::vector<Rational> b;
            for (int i = 0; i <= n; ++i) b.push_back(apply_power(op, i, f)(z.node(i)));
            CHECK(interpolation_solve(op, z, b) == f);
        }
    }
}

TEST_CASE("solver demands enough nodes") {
    Grid two = Grid::list({Rational(1), Rational(2)});
    CHECK_THROWS_AS(goncarov_recursion(derivative_op(), two, 3), InsufficientNodes);
    CHECK_THROWS_AS(interpolation_solve(derivative_op(), two,
                                        {Rational(1), Rational(1), Rational(1), Rational(1)}),
                    InsufficientNodes);
}

TEST_CASE("delta-Abel closed forms") {
    std::mt19937 rng(83);
    // D: (x-a)(x-a-nb)^{n-1}
    for (int trial = 0; trial < 4; ++trial) {
        Rational a = test::random_rational(rng, 4, 2), b = test::random_rational(rng, 4, 2);
        for (int n = 1; n <= 5; ++n) {
            Poly expect = P({-a, 1});
            for (int i = 0; i < n - 1; ++i) expect *= P({-a - Rational(n) * b, 1});
            CHECK(delta_abel(derivative_op(), a, b, n) == expect);
        }
    }
    // fwd-diff: (x-a)(x-a-nb-1)_(n-1) = (x-a) prod_{i=0}^{n-2} (x-a-nb-1-i)
    for (int trial = 0; trial < 4; ++trial) {
        Rational a = test::random_rational(rng, 4, 2), b = test::random_rational(rng, 4, 2);
        for (int n = 1; n <= 5; ++n) {
            Poly expect = P({-a, 1});
            for (int i = 0; i <= n - 2; ++i) expect *= P({-a - Rational(n) * b - 1 - i, 1});
            CHECK(delta_abel(forward_difference_op(), a, b, n) == expect);
        }
    }
    // bwd-diff: (x-a)(x-a-nb+1)^(n-1) = (x-a) prod_{i=0}^{n-2} (x-a-nb+1+i)
    for (int trial = 0; trial < 4; ++trial) {
        Rational a = test::random_rational(rng, 4, 2), b = test::random_rational(rng, 4, 2);
        for (int n = 1; n <= 5; ++n) {
            Poly expect = P({-a, 1});
            for (int i = 0; i <= n - 2; ++i) expect *= P({-a - Rational(n) * b + 1 + i, 1});
            CHECK(delta_abel(backward_difference_op(), a, b, n) == expect);
        }
    }
    CHECK(delta_abel(laguerre_op(), 0, 0, 0) == Poly::constant(1));
}

TEST_CASE("delta-Abel closed form equals recursion on the affine grid") {
    std::vector<std::pair<Rational, Rational>> params = {
        {Rational(0), Rational(1)}, {Rational(1), Rational(1)}, {Rational(2), Rational(-1)},
        {Rational(1, 2), Rational(1, 3)}};
    for (const auto& op : test::all_presets())
        for (const auto& [a, b] : params) {
            GoncarovBasis basis(op, Grid::affine(a, b));
            for (int n = 0; n <= 6; ++n) CHECK(delta_abel(op, a, b, n) == basis.at(n));
        }
}

TEST_CASE("the 30 ballot-style count from the closed form") {
    // bwd-diff at a=1, b=1, n=3 on the negated grid: t_3(0) = 5 * 3! = 30
    Poly t3 = delta_abel(backward_difference_op(), Rational(-1), Rational(-1), 3);
    CHECK(t3(Rational(0)) == 30);
}

TEST_CASE("perturbed grids") {
    Grid z12 = Grid::list({Rational(1), Rational(2)});
    CHECK(perturbed_basis(derivative_op(), z12, 1, Rational(3), 2) == P({5, -6, 1}));
    CHECK(perturbed_basis(derivative_op(), z12, 1, Rational(3), 2) ==
          goncarov_recursion(derivative_op(), Grid::list({Rational(1), Rational(3)}), 2));
    // n <= k leaves the polynomial unchanged
    CHECK(perturbed_basis(derivative_op(), z12, 1, Rational(99), 1) ==
          goncarov_recursion(derivative_op(), z12, 1));
    // replacing a node with itself changes nothing
    CHECK(perturbed_basis(derivative_op(), z12, 0, Rational(1), 2) ==
          goncarov_recursion(derivative_op(), z12, 2));

    std::mt19937 rng(89);
    for (const auto& op : test::all_presets()) {
        Grid z = random_int_grid(rng, 6);
        for (int k = 0; k <= 2; ++k)
            CHECK(perturbation_check(op, z, k, z.node(k) + 2, 5).ok);
    }
}

TEST_CASE("Appell relation") {
    CHECK(appell_check(derivative_op(), Grid::zero(), 6).ok);
    CHECK(appell_check(derivative_op(), Grid::affine(1, 1), 5).ok);
    CHECK(appell_check(forward_difference_op(), Grid::affine(1, 1), 5).ok);
    std::mt19937 rng(97);
    for (const auto& op : test::all_presets())
        CHECK(appell_check(op, random_int_grid(rng, 7), 6).ok);
}

TEST_CASE("integral formula") {
    Grid z12 = Grid::list({Rational(1), Rational(2)});
    CHECK(integral_formula_check(derivative_op(), z12, 2, 0).ok);  // I_0 is the identity
    CHECK(integral_formula_check(derivative_op(), z12, 2, 2).ok);
    CHECK(integral_formula_check(abel_op(-1), Grid::affine(1, 1), 3, 1).ok);
    std::mt19937 rng(101);
    for (const auto& op : test::all_presets()) {
        Grid z = random_int_grid(rng, 6);
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) CHECK(integral_formula_check(op, z, n, k).ok);
    }
}

TEST_CASE("biorthogonality on random grids") {
    std::mt19937 rng(103);
    for (const auto& op : test::all_presets())
        for (int trial = 0; trial < 2; ++trial)
            CHECK(biorthogonality_check(op, random_int_grid(rng, 8), 8).ok);
}

TEST_CASE("differential relation, translation, duality, binomial expansion") {
    std::mt19937 rng(107);
    for (const auto& op : test::all_presets()) {
        Grid z = random_int_grid(rng, 8);
        Rational xi = test::random_nonzero_rational(rng, 5, 3);
        CHECK(differential_relation_check(op, z, 8).ok);
        CHECK(translation_invariance_check(op, z, xi, 6).ok);
        CHECK(shift_duality_check(op, z, xi, 6).ok);
        CHECK(binomial_expansion_check(op, z, xi, 6).ok);
    }
}

TEST_CASE("constant-grid binomial expansion uses the unshifted basis") {
    // on a constant grid Z^(j) = Z, so t_n(x+xi) = sum C(n,i) t_{n-i}(xi) p_i(x)
    Grid c = Grid::affine(3, 0);
    for (const auto& op : test::all_presets()) {
        GoncarovBasis basis(op, c);
        BasicSequence bs(op);
        Rational xi(5, 2);
        for (int n = 0; n <= 5; ++n) {
            Poly rhs;
            for (int i = 0; i <= n; ++i)
                rhs += Rational(binomial(n, i)) * basis.at(n - i)(xi) * bs.at(i);
            CHECK(basis.at(n).shifted_arg(xi) == rhs);
        }
    }
}

TEST_CASE("t_n depends only on the first n nodes") {
    std::mt19937 rng(109);
    for (const auto& op : test::all_presets()) {
        Grid z = random_int_grid(rng, 7);
        Grid changed = z.with_node(5, z.node(5) + 17, 7);
        for (int n = 0; n <= 5; ++n)
            CHECK(goncarov_recursion(op, z, n) == goncarov_recursion(op, changed, n));
    }
}

TEST_CASE("binomial type iff arithmetic grid starting at zero") {
    std::mt19937 rng(113);
    for (const auto& op : test::all_presets())
        for (int b = 0; b <= 2; ++b) {
            Grid z = Grid::affine(0, b);
            for (int trial = 0; trial < 3; ++trial) {
                Rational x = test::random_rational(rng, 5, 3);
                Rational y = test::random_rational(rng, 5, 3);
                for (int n = 0; n <= 6; ++n)
                    CHECK(binomial_type_point_check(op, z, n, x, y).ok);
            }
        }

    // the non-arithmetic grid (0,1,3) fails at n=3, (x,y) = (1,1)
    Grid bad = Grid::list({Rational(0), Rational(1), Rational(3)});
    CHECK_FALSE(binomial_type_point_check(derivative_op(), bad, 3, 1, 1).ok);
}

TEST_CASE("coefficients in the basic basis recombine to t_n") {
    std::mt19937 rng(127);
    for (const auto& op : test::all_presets()) {
        Grid z = random_int_grid(rng, 6);
        BasicSequence bs(op);
        for (int n = 0; n <= 5; ++n) {
            std::vector<Rational> c = basic_basis_coefficients(op, z, n);
            Poly sum;
            for (int i = 0; i <= n; ++i)
                if (c[static_cast<std::size_t>(i)] != 0)
                    sum += c[static_cast<std::size_t>(i)] * bs.at(i);
            CHECK(sum == goncarov_recursion(op, z, n));
        }
    }
}

TEST_CASE("recursion and basic sequence share the leading coefficient") {
    std::mt19937 rng(131);
    for (const auto& op : test::all_presets()) {
        Grid z = random_int_grid(rng, 6);
        GoncarovBasis basis(op, z);
        BasicSequence bs(op);
        for (int n = 0; n <= 5; ++n) {
            CHECK(basis.at(n).degree() == n);
            CHECK(basis.at(n).leading() == bs.at(n).leading());
        }
    }
}
