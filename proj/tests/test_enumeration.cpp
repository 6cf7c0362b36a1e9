#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gonc/combinat.hpp"
#include "gonc/enumeration.hpp"
#include "gonc/errors.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <set>

using namespace gonc;

namespace {

// all non-decreasing vectors of the given length with entries in 1..max_value
std::vector<std::vector<long long>> nondecreasing_bounds(int length, long long max_value) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur(static_cast<std::size_t>(length));
    std::function<void(int, long long)> rec = [&](int i, long long lo) {
        if (i == length) {
            out.push_back(cur);
            return;
        }
        for (long long v = lo; v <= max_value; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 1);
    return out;
}

Grid random_int_grid(std::mt19937& rng, int size, int range = 4) {
    std::uniform_int_distribution<int> d(-range, range);
    std::vector<Rational> nodes;
    for (int i = 0; i < size; ++i) nodes.emplace_back(d(rng));
    return Grid::list(std::move(nodes));
}

}  // namespace

TEST_CASE("combinatorial number tables") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(5, -1) == 0);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 5) == 1);
    CHECK(lah(4, 2) == 36);
    CHECK(lah(3, 3) == 1);
    CHECK(fubini(0) == 1);
    CHECK(fubini(3) == 13);
    CHECK(falling_factorial(Int(5), 3) == 60);
    CHECK(rising_factorial(Int(4), 3) == 120);
}

TEST_CASE("ordered partition enumeration") {
    CHECK(ordered_partitions(0).size() == 1);
    CHECK(ordered_partitions(0)[0].blocks.empty());

    auto two = ordered_partitions(2);
    REQUIRE(two.size() == 3);
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& p : two) seen.insert(p.blocks);
    CHECK(seen.count({{1, 2}}) == 1);
    CHECK(seen.count({{1}, {2}}) == 1);
    CHECK(seen.count({{2}, {1}}) == 1);

    CHECK(ordered_partitions(4).size() == 75);

    for (int n = 0; n <= 7; ++n) {
        long long count = 0;
        for_each_ordered_partition(n, [&](const OrderedPartition& p) {
            ++count;
            // blocks are nonempty, sorted, disjoint, and cover [n]
            std::set<int> all;
            for (const auto& b : p.blocks) {
                CHECK(!b.empty());
                CHECK(std::is_sorted(b.begin(), b.end()));
                for (int e : b) CHECK(all.insert(e).second);
            }
            CHECK(static_cast<int>(all.size()) == n);
        });
        CHECK(count == fubini(n));
    }
}

TEST_CASE("partition cap") {
    Caps caps;
    caps.partition_max_n = 4;
    CHECK_THROWS_AS(ordered_partitions(5, caps), CapExceeded);
    CHECK(ordered_partitions(4, caps).size() == 75);
}

TEST_CASE("caps read environment overrides") {
    setenv("GONC_PARTITION_CAP", "3", 1);
    setenv("GONC_BRUTE_CAP", "123", 1);
    Caps caps = Caps::from_env();
    CHECK(caps.partition_max_n == 3);
    CHECK(caps.brute_max_states == 123);
    setenv("GONC_BRUTE_CAP", "zero", 1);
    CHECK_THROWS_AS(Caps::from_env(), ParseError);
    unsetenv("GONC_PARTITION_CAP");
    unsetenv("GONC_BRUTE_CAP");
    CHECK(Caps::from_env().partition_max_n == 9);
}

TEST_CASE("constant term formula") {
    Grid z12 = Grid::list({Rational(1), Rational(2)});
    // n=2 display: 2 p_1(z_0) p_1(z_1) - p_2(z_0); for D on (1,2) that is 2*1*2 - 1 = 3
    CHECK(constant_term(derivative_op(), z12, 2) == 3);
    CHECK(constant_term(derivative_op(), z12, 0) == 1);

    std::mt19937 rng(137);
    for (const auto& op : test::all_presets())
        for (int trial = 0; trial < 2; ++trial) {
            Grid z = random_int_grid(rng, 7);
            GoncarovBasis basis(op, z);
            for (int n = 0; n <= 7; ++n)
                CHECK(constant_term(op, z, n) == basis.at(n)(Rational(0)));
        }
}

TEST_CASE("bound specs validate") {
    CHECK_THROWS_AS(BoundSpec({2, 1}), Error);
    CHECK_THROWS_AS(BoundSpec({0, 1}), Error);
    CHECK_THROWS_AS(BoundSpec({1, 3}, 2), Error);
    CHECK(BoundSpec({1, 3}).universe_size() == 3);
    CHECK(BoundSpec({1, 3}, 10).universe_size() == 10);
    CHECK(BoundSpec({}).length() == 0);
}

TEST_CASE("classical parking counts") {
    CHECK(count_bounded(derivative_op(), BoundSpec({1, 2, 3})) == 16);
    for (int n = 1; n <= 6; ++n) {
        std::vector<long long> b;
        for (int i = 1; i <= n; ++i) b.push_back(i);
        CHECK(count_bounded(derivative_op(), BoundSpec(b)) ==
              boost::multiprecision::pow(Int(n + 1), static_cast<unsigned>(n - 1)));
    }
}

TEST_CASE("published count sequences") {
    auto affine_bounds = [](int n) {
        std::vector<long long> b;
        for (int i = 0; i < n; ++i) b.push_back(1 + i);
        return BoundSpec(b);
    };
    const Int laguerre_seq[] = {1, 5, 46, 629, 11496};
    const Int lambert_seq[] = {1, 5, 43, 549, 9341};
    const Int touchard_seq[] = {1, 4, 29, 311, 4447};
    for (int n = 1; n <= 5; ++n) {
        CHECK(count_bounded(laguerre_op(), affine_bounds(n)) == laguerre_seq[n - 1]);
        CHECK(count_bounded(lambert_op(), affine_bounds(n)) == lambert_seq[n - 1]);
        CHECK(count_bounded(touchard_op(), affine_bounds(n)) == touchard_seq[n - 1]);
    }
}

TEST_CASE("non-counting operators are rejected") {
    // basic polynomials of 2D are x^n/2^n, so t_1(0) = 1/2
    CHECK_THROWS_AS(count_bounded(custom_op({Rational(0), Rational(2)}), BoundSpec({1})),
                    NonIntegerResult);
}

TEST_CASE("parking brute force") {
    CHECK(brute_force_parking(BoundSpec({1, 2})) == 3);
    CHECK(brute_force_parking(BoundSpec({1, 1, 1})) == 1);
    CHECK(brute_force_parking(BoundSpec({2, 2})) == 4);
    CHECK(brute_force_parking(BoundSpec({})) == 1);
    // independent of the universe size once it covers the largest bound
    CHECK(brute_force_parking(BoundSpec({1, 2}, 5)) == 3);

    Caps tight;
    tight.brute_max_states = 100;
    CHECK_THROWS_AS(brute_force_parking(BoundSpec({1, 2, 3, 4}, 10), tight), CapExceeded);
}

TEST_CASE("count_bounded equals the parking scan") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : nondecreasing_bounds(n, 4))
            CHECK(count_bounded(derivative_op(), BoundSpec(b)) == brute_force_parking(BoundSpec(b)));
}

TEST_CASE("reluctant scans") {
    // the singleton class is plain functions
    for (const auto& b : nondecreasing_bounds(3, 3))
        CHECK(brute_force_reluctant(ReluctantClass::singleton, 3, 4, b) ==
              brute_force_parking(BoundSpec(b, 4)));

    // unbounded all-trees scan recovers x(x+n)^{n-1}
    for (int n = 1; n <= 3; ++n)
        for (long long x = 1; x <= 3; ++x) {
            std::vector<long long> unbounded(static_cast<std::size_t>(n), x);
            CHECK(brute_force_reluctant(ReluctantClass::all_trees, n, x, unbounded) ==
                  Int(x) * boost::multiprecision::pow(Int(x + n), static_cast<unsigned>(n - 1)));
        }

    Caps tight;
    tight.brute_max_states = 10;
    CHECK_THROWS_AS(brute_force_reluctant(ReluctantClass::all_trees, 3, 4, {1, 2, 3}, tight),
                    CapExceeded);
}

TEST_CASE("count_bounded matches every class scan") {
    struct Case {
        OperatorSpec op;
        ReluctantClass cls;
    };
    const Case cases[] = {
        {derivative_op(), ReluctantClass::singleton},
        {abel_op(-1), ReluctantClass::all_trees},
        {laguerre_op(), ReluctantClass::rooted_paths},
        {lambert_op(), ReluctantClass::depth1_stars},
        {touchard_op(), ReluctantClass::monotone_paths},
    };
    for (const auto& c : cases)
        for (int n = 1; n <= 3; ++n)
            for (const auto& b : nondecreasing_bounds(n, 3))
                CHECK(count_bounded(c.op, BoundSpec(b)) ==
                      brute_force_reluctant(c.cls, n, 4, b));
}

TEST_CASE("lattice path scans") {
    CHECK(brute_force_lattice_paths(BoundSpec({1, 2, 3}), true) == 1);
    CHECK(brute_force_lattice_paths(BoundSpec({1, 2, 3}), false) == 5);
    CHECK(brute_force_lattice_paths(BoundSpec({2, 3}), true) == 3);  // (1,2),(1,3),(2,3)
    CHECK(brute_force_lattice_paths(BoundSpec({}), true) == 1);

    // n! * paths = t_n(0) for the difference operators
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : nondecreasing_bounds(n, 4)) {
            BoundSpec bs(b);
            CHECK(count_bounded(forward_difference_op(), bs) ==
                  factorial(n) * brute_force_lattice_paths(bs, true));
            CHECK(count_bounded(backward_difference_op(), bs) ==
                  factorial(n) * brute_force_lattice_paths(bs, false));
        }
}

TEST_CASE("closed forms") {
    CHECK(closed_form_count(CountFamily::classical, 1, 1, 3) == 16);
    const Int inverse_abel_seq[] = {1, 5, 43, 549, 9341};
    for (int n = 1; n <= 5; ++n)
        CHECK(closed_form_count(CountFamily::inverse_abel, 1, 1, n) == inverse_abel_seq[n - 1]);
    CHECK(closed_form_count(CountFamily::fuss_catalan, 1, 2, 3) == 12);  // (1/7) C(9,3)
    CHECK(closed_form_count(CountFamily::strict_path, 2, 1, 2) == 3);
    for (int n = 1; n <= 8; ++n) CHECK(closed_form_count(CountFamily::strict_path, 1, 1, n) == 1);
    CHECK_THROWS_AS(parse_family("nope"), UnknownFamily);
    CHECK_THROWS_AS(closed_form_count(CountFamily::classical, 0, 1, 2), Error);
}

TEST_CASE("closed forms agree with count_bounded on affine bounds") {
    struct Case {
        OperatorSpec op;
        CountFamily family;
        bool scaled;  // path families carry the n! labeling factor
    };
    const Case cases[] = {
        {derivative_op(), CountFamily::classical, false},
        {laguerre_op(), CountFamily::laguerre, false},
        {lambert_op(), CountFamily::inverse_abel, false},
        {touchard_op(), CountFamily::exponential, false},
        {forward_difference_op(), CountFamily::strict_path, true},
        {backward_difference_op(), CountFamily::fuss_catalan, true},
    };
    for (const auto& c : cases)
        for (long long a = 1; a <= 2; ++a)
            for (long long b = 0; b <= 2; ++b)
                for (int n = 1; n <= 8; ++n) {
                    std::vector<long long> bounds;
                    for (int i = 0; i < n; ++i) bounds.push_back(a + b * i);
                    Int closed = closed_form_count(c.family, a, b, n);
                    if (c.scaled) closed *= factorial(n);
                    CHECK(count_bounded(c.op, BoundSpec(bounds)) == closed);
                }
}

TEST_CASE("enlarging a bound never shrinks the count") {
    for (const auto& op : test::all_presets())
        for (const auto& b : nondecreasing_bounds(3, 3)) {
            Int base = count_bounded(op, BoundSpec(b));
            for (std::size_t i = 0; i < b.size(); ++i) {
                auto larger = b;
                larger[i] += 1;
                if (i + 1 < larger.size() && larger[i] > larger[i + 1]) continue;
                CHECK(count_bounded(op, BoundSpec(larger)) >= base);
            }
        }
}

TEST_CASE("k-colored forest counts equal shifted parking counts") {
    // t_n(0; E_{-k}D, -Z) also counts u-parking functions with u_i = z_i + k*i
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n)
            for (const auto& b : nondecreasing_bounds(n, 3)) {
                std::vector<long long> shifted;
                for (int i = 0; i < n; ++i) shifted.push_back(b[static_cast<std::size_t>(i)] + k * i);
                CHECK(count_bounded(abel_op(-k), BoundSpec(b)) ==
                      brute_force_parking(BoundSpec(shifted)));
            }
}

TEST_CASE("brute-force dispatch by preset") {
    BoundSpec b({1, 2, 3});
    CHECK(brute_force_count_for(derivative_op(), b) == 16);
    CHECK(brute_force_count_for(forward_difference_op(), b) == factorial(3));
    CHECK(brute_force_count_for(laguerre_op(), b) == count_bounded(laguerre_op(), b));
    CHECK_THROWS_AS(brute_force_count_for(custom_op({Rational(0), Rational(1)}), b), Error);
}
