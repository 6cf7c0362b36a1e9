#include "gonc/enumeration.hpp"

#include "gonc/combinat.hpp"
#include "gonc/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace gonc {

namespace {

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long long parsed = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0' || parsed <= 0)
        throw ParseError(std::string(name) + " must be a positive integer, got '" + v + "'");
    return parsed;
}

}  // namespace

Caps Caps::from_env() {
    Caps caps;
    caps.partition_max_n = static_cast<int>(env_ll("GONC_PARTITION_CAP", caps.partition_max_n));
    caps.brute_max_states = env_ll("GONC_BRUTE_CAP", caps.brute_max_states);
    return caps;
}

void for_each_ordered_partition(int n, const std::function<void(const OrderedPartition&)>& fn,
                                const Caps& caps) {
    if (n < 0) throw Error("ordered partitions need n >= 0");
    if (n > caps.partition_max_n)
        throw CapExceeded("ordered partitions of [" + std::to_string(n) +
                          "] exceed the cap of n <= " + std::to_string(caps.partition_max_n));
    OrderedPartition part;
    std::vector<std::vector<int>> last_first;  // blocks collected last-to-first

    auto block_of = [n](unsigned bits) {
        std::vector<int> b;
        for (int i = 0; i < n; ++i)
            if (bits & (1u << i)) b.push_back(i + 1);
        return b;
    };

    // Recurse on the last block: every ordered partition of `mask` is an
    // ordered partition of mask \ B followed by the block B.
    std::function<void(unsigned)> rec = [&](unsigned mask) {
        if (mask == 0) {
            part.blocks.assign(last_first.rbegin(), last_first.rend());
            fn(part);
            return;
        }
        for (unsigned b = mask; b; b = (b - 1) & mask) {
            last_first.push_back(block_of(b));
            rec(mask ^ b);
            last_first.pop_back();
        }
    };
    rec(n == 0 ? 0u : (1u << n) - 1u);
}

std::vector<OrderedPartition> ordered_partitions(int n, const Caps& caps) {
    std::vector<OrderedPartition> all;
    for_each_ordered_partition(n, [&](const OrderedPartition& p) { all.push_back(p); }, caps);
    return all;
}

Rational constant_term(const OperatorSpec& d, const Grid& z, int n, const Caps& caps) {
    if (!d.is_delta()) throw NotDeltaOperator("'" + d.name() + "' is not a delta operator");
    if (n == 0) return Rational(1);
    if (!z.has_nodes(n))
        throw InsufficientNodes("constant-term formula for t_" + std::to_string(n) +
                                " needs nodes z_0..z_" + std::to_string(n - 1));
    BasicSequence bs(d);
    // values[m][i] = p_m(z_i)
    std::vector<std::vector<Rational>> values(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        Poly pm = bs.at(m);
        for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(m)].push_back(pm(z.node(i)));
    }
    Rational total(0);
    for_each_ordered_partition(
        n,
        [&](const OrderedPartition& rho) {
            Rational prod(1);
            int s = 0;
            for (const auto& block : rho.blocks) {
                prod *= values[block.size()][static_cast<std::size_t>(s)];
                s += static_cast<int>(block.size());
            }
            if (rho.size() % 2 != 0) prod = -prod;
            total += prod;
        },
        caps);
    return total;
}

BoundSpec::BoundSpec(std::vector<long long> bounds, long long universe_size)
    : bounds_(std::move(bounds)), universe_(universe_size) {
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (bounds_[i] < 1) throw Error("bounds must be positive integers");
        if (i > 0 && bounds_[i] < bounds_[i - 1]) throw Error("bounds must be non-decreasing");
    }
    long long top = bounds_.empty() ? 1 : bounds_.back();
    if (universe_ == 0) universe_ = top;
    if (universe_ < top) throw Error("universe size must be at least the largest bound");
}

Int count_bounded(const OperatorSpec& d, const BoundSpec& bounds) {
    int n = bounds.length();
    // The Laguerre preset is the one preset whose basic polynomials are not
    // the class enumerator itself but its x -> -x reflection, so counting
    // runs on the reflected operator.
    OperatorSpec counting = d.name() == "laguerre" ? reflect(d) : d;
    std::vector<Rational> neg;
    neg.reserve(bounds.bounds().size());
    for (long long b : bounds.bounds()) neg.push_back(Rational(-b));
    Rational val = goncarov_recursion(counting, Grid::list(std::move(neg)), n)(Rational(0));
    if (!is_integer(val) || val < 0)
        throw NonIntegerResult("t_" + std::to_string(n) + "(0) = " + to_string(val) +
                               " is not a nonnegative integer; '" + d.name() +
                               "' is not a counting preset for these bounds");
    return numerator(val);
}

long long brute_force_parking(const BoundSpec& bounds, const Caps& caps) {
    int n = bounds.length();
    long long x = bounds.universe_size();
    if (n == 0) return 1;
    Int states = boost::multiprecision::pow(Int(x), static_cast<unsigned>(n));
    if (states > caps.brute_max_states)
        throw CapExceeded("parking scan of " + states.str() + " tuples exceeds the cap of " +
                          std::to_string(caps.brute_max_states));
    std::vector<long long> tup(static_cast<std::size_t>(n), 1);
    std::vector<long long> sorted(static_cast<std::size_t>(n));
    long long count = 0;
    while (true) {
        sorted = tup;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = sorted[static_cast<std::size_t>(i)] <= bounds.bounds()[static_cast<std::size_t>(i)];
        if (ok) ++count;
        int pos = 0;
        while (pos < n && tup[static_cast<std::size_t>(pos)] == x) tup[static_cast<std::size_t>(pos++)] = 1;
        if (pos == n) break;
        ++tup[static_cast<std::size_t>(pos)];
    }
    return count;
}

ReluctantClass parse_reluctant_class(const std::string& text) {
    if (text == "singleton") return ReluctantClass::singleton;
    if (text == "all-trees") return ReluctantClass::all_trees;
    if (text == "rooted-paths") return ReluctantClass::rooted_paths;
    if (text == "stars") return ReluctantClass::depth1_stars;
    if (text == "monotone-paths") return ReluctantClass::monotone_paths;
    throw ParseError("unknown reluctant class '" + text + "'");
}

long long brute_force_reluctant(ReluctantClass cls, int n, long long x,
                                const std::vector<long long>& bounds, const Caps& caps) {
    if (static_cast<int>(bounds.size()) != n) throw Error("bounds length must equal n");
    for (long long b : bounds)
        if (b < 1 || b > x) throw Error("reluctant bounds must lie in 1..x");
    if (n == 0) return 1;
    Int states = boost::multiprecision::pow(Int(n + x), static_cast<unsigned>(n));
    if (states > caps.brute_max_states)
        throw CapExceeded("reluctant scan of " + states.str() + " functions exceeds the cap of " +
                          std::to_string(caps.brute_max_states));

    // f[i] in 0..n+x-1: targets < n are elements of S, target n+v-1 is label v.
    std::vector<long long> f(static_cast<std::size_t>(n), 0);
    std::vector<int> in_s_children(static_cast<std::size_t>(n));
    std::vector<long long> finals(static_cast<std::size_t>(n));
    long long total = n + x;
    long long count = 0;
    while (true) {
        bool reluctant = true;
        for (int i = 0; i < n && reluctant; ++i) {
            long long cur = i;
            int steps = 0;
            while (cur < n) {
                cur = f[static_cast<std::size_t>(cur)];
                if (++steps > n) {  // trapped in a cycle inside S
                    reluctant = false;
                    break;
                }
            }
            if (reluctant) finals[static_cast<std::size_t>(i)] = cur - n + 1;
        }
        if (reluctant) {
            std::fill(in_s_children.begin(), in_s_children.end(), 0);
            for (int i = 0; i < n; ++i)
                if (f[static_cast<std::size_t>(i)] < n) ++in_s_children[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])];
            bool shape_ok = true;
            switch (cls) {
                case ReluctantClass::singleton:
                    for (int i = 0; i < n && shape_ok; ++i) shape_ok = f[static_cast<std::size_t>(i)] >= n;
                    break;
                case ReluctantClass::all_trees:
                    break;
                case ReluctantClass::rooted_paths:
                    for (int i = 0; i < n && shape_ok; ++i) shape_ok = in_s_children[static_cast<std::size_t>(i)] <= 1;
                    break;
                case ReluctantClass::depth1_stars:
                    for (int i = 0; i < n && shape_ok; ++i)
                        if (f[static_cast<std::size_t>(i)] < n)
                            shape_ok = f[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] >= n;
                    break;
                case ReluctantClass::monotone_paths:
                    for (int i = 0; i < n && shape_ok; ++i) {
                        shape_ok = in_s_children[static_cast<std::size_t>(i)] <= 1 &&
                                   (f[static_cast<std::size_t>(i)] >= n || f[static_cast<std::size_t>(i)] > i);
                    }
                    break;
            }
            if (shape_ok) {
                std::vector<long long> sorted(finals);
                std::sort(sorted.begin(), sorted.end());
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) ok = sorted[static_cast<std::size_t>(i)] <= bounds[static_cast<std::size_t>(i)];
                if (ok) ++count;
            }
        }
        int pos = 0;
        while (pos < n && f[static_cast<std::size_t>(pos)] == total - 1) f[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
        ++f[static_cast<std::size_t>(pos)];
    }
    return count;
}

long long brute_force_lattice_paths(const BoundSpec& bounds, bool strict, const Caps& caps) {
    int n = bounds.length();
    if (n == 0) return 1;
    if (n > 25) throw CapExceeded("lattice path scan limited to n <= 25");
    long long count = 0;
    long long visited = 0;
    std::function<void(int, long long)> rec = [&](int i, long long prev) {
        if (i == n) {
            ++count;
            return;
        }
        long long lo = strict ? prev + 1 : std::max(prev, 1LL);
        for (long long v = lo; v <= bounds.bounds()[static_cast<std::size_t>(i)]; ++v) {
            if (++visited > caps.brute_max_states)
                throw CapExceeded("lattice path scan exceeds the cap of " +
                                  std::to_string(caps.brute_max_states));
            rec(i + 1, v);
        }
    };
    rec(0, 0);
    return count;
}

CountFamily parse_family(const std::string& text) {
    if (text == "classical") return CountFamily::classical;
    if (text == "laguerre") return CountFamily::laguerre;
    if (text == "inverse-abel") return CountFamily::inverse_abel;
    if (text == "exponential") return CountFamily::exponential;
    if (text == "strict-path") return CountFamily::strict_path;
    if (text == "fuss-catalan") return CountFamily::fuss_catalan;
    throw UnknownFamily("unknown counting family '" + text + "'");
}

const char* family_name(CountFamily family) {
    switch (family) {
        case CountFamily::classical: return "classical";
        case CountFamily::laguerre: return "laguerre";
        case CountFamily::inverse_abel: return "inverse-abel";
        case CountFamily::exponential: return "exponential";
        case CountFamily::strict_path: return "strict-path";
        case CountFamily::fuss_catalan: return "fuss-catalan";
    }
    return "?";
}

Int closed_form_count(CountFamily family, long long a, long long b, int n) {
    if (a < 1 || b < 0) throw Error("closed forms require integers a >= 1, b >= 0");
    if (n == 0) return 1;
    Int base = Int(a) + Int(n) * b;
    auto pow_base = [&](int e) { return boost::multiprecision::pow(base, static_cast<unsigned>(e)); };
    Int sum = 0;
    switch (family) {
        case CountFamily::classical:
            return Int(a) * pow_base(n - 1);
        case CountFamily::laguerre:
            for (int k = 1; k <= n; ++k) sum += lah(n, k) * pow_base(k - 1);
            return Int(a) * sum;
        case CountFamily::inverse_abel:
            for (int k = 1; k <= n; ++k)
                sum += binomial(n, k) * boost::multiprecision::pow(Int(k), static_cast<unsigned>(n - k)) *
                       pow_base(k - 1);
            return Int(a) * sum;
        case CountFamily::exponential:
            for (int k = 1; k <= n; ++k) sum += stirling2(n, k) * pow_base(k - 1);
            return Int(a) * sum;
        case CountFamily::strict_path: {
            Int num = Int(a) * falling_factorial(base - 1, n - 1);
            Int den = factorial(n);
            if (num % den != 0) throw Error("strict path closed form is not an integer");
            return num / den;
        }
        case CountFamily::fuss_catalan: {
            Int num = Int(a) * rising_factorial(base + 1, n - 1);
            Int den = factorial(n);
            if (num % den != 0) throw Error("Fuss-Catalan closed form is not an integer");
            return num / den;
        }
    }
    throw UnknownFamily("unhandled counting family");
}

Int brute_force_count_for(const OperatorSpec& d, const BoundSpec& bounds, const Caps& caps) {
    const std::string& name = d.name();
    int n = bounds.length();
    long long x = bounds.universe_size();
    if (name == "D") return brute_force_parking(bounds, caps);
    if (name == "abel:a=-1")
        return brute_force_reluctant(ReluctantClass::all_trees, n, x, bounds.bounds(), caps);
    if (name == "laguerre")
        return brute_force_reluctant(ReluctantClass::rooted_paths, n, x, bounds.bounds(), caps);
    if (name == "lambert")
        return brute_force_reluctant(ReluctantClass::depth1_stars, n, x, bounds.bounds(), caps);
    if (name == "touchard")
        return brute_force_reluctant(ReluctantClass::monotone_paths, n, x, bounds.bounds(), caps);
    if (name == "fwd-diff")
        return factorial(n) * brute_force_lattice_paths(bounds, true, caps);
    if (name == "bwd-diff")
        return factorial(n) * brute_force_lattice_paths(bounds, false, caps);
    throw Error("no brute-force oracle for operator '" + name + "'");
}

}  // namespace gonc
