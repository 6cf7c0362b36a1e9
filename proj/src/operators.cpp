#include "gonc/operators.hpp"

#include "gonc/combinat.hpp"
#include "gonc/errors.hpp"

#include <mutex>
#include <utility>

namespace gonc {

namespace {

OperatorKind classify(const OperatorSpec::Generator& gen) {
    TruncSeries probe = gen(1);
    if (probe.coeff(0) != 0) return OperatorKind::invertible;
    if (probe.coeff(1) != 0) return OperatorKind::delta;
    return OperatorKind::general;
}

}  // namespace

OperatorSpec::OperatorSpec(std::string name, Generator gen)
    : name_(std::move(name)), gen_(std::move(gen)), kind_(classify(gen_)) {}

OperatorSpec derivative_op() {
    return OperatorSpec("D", [](int n) { return series_identity(n); });
}

OperatorSpec shift_op(const Rational& a) {
    return OperatorSpec("shift:a=" + to_string(a), [a](int n) {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        c[0] = 1;
        for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k - 1)] * a / k;
        return TruncSeries(std::move(c));
    });
}

OperatorSpec abel_op(const Rational& a) {
    return OperatorSpec("abel:a=" + to_string(a), [a](int n) {
        // t e^{at}
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        Rational f(1);
        for (int k = 1; k <= n; ++k) {
            c[static_cast<std::size_t>(k)] = f;
            f = f * a / k;
        }
        return TruncSeries(std::move(c));
    });
}

OperatorSpec laguerre_op() {
    return OperatorSpec("laguerre", [](int n) {
        // t/(t-1) = -t - t^2 - t^3 - ...
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(-1));
        c[0] = 0;
        return TruncSeries(std::move(c));
    });
}

OperatorSpec lambert_op() {
    return OperatorSpec("lambert", [](int n) {
        if (n == 0) return TruncSeries(0);
        // reverse of t e^t
        std::vector<Rational> w(static_cast<std::size_t>(n) + 1, Rational(0));
        Rational f(1);
        for (int k = 1; k <= n; ++k) {
            w[static_cast<std::size_t>(k)] = f;  // [t^k] t e^t = 1/(k-1)!
            f /= k;
        }
        return series_reverse(TruncSeries(std::move(w)));
    });
}

OperatorSpec touchard_op() {
    return OperatorSpec("touchard", [](int n) {
        // log(1 + t)
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int k = 1; k <= n; ++k)
            c[static_cast<std::size_t>(k)] = Rational(k % 2 ? 1 : -1, k);
        return TruncSeries(std::move(c));
    });
}

OperatorSpec forward_difference_op() {
    return OperatorSpec("fwd-diff", [](int n) {
        // e^t - 1
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        Rational f(1);
        for (int k = 1; k <= n; ++k) {
            f /= k;
            c[static_cast<std::size_t>(k)] = f;
        }
        return TruncSeries(std::move(c));
    });
}

OperatorSpec backward_difference_op() {
    return OperatorSpec("bwd-diff", [](int n) {
        // 1 - e^{-t}
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        Rational f(1);
        for (int k = 1; k <= n; ++k) {
            f /= -k;
            c[static_cast<std::size_t>(k)] = -f;
        }
        return TruncSeries(std::move(c));
    });
}

OperatorSpec custom_op(std::vector<Rational> indicator_coeffs) {
    if (indicator_coeffs.empty()) indicator_coeffs.push_back(Rational(0));
    std::string name = "custom:";
    for (std::size_t k = 0; k < indicator_coeffs.size(); ++k)
        name += (k ? "," : "") + to_string(indicator_coeffs[k]);
    auto coeffs = std::make_shared<std::vector<Rational>>(std::move(indicator_coeffs));
    return OperatorSpec(std::move(name), [coeffs](int n) {
        // a finite list describes a polynomial indicator; the tail is zero
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int k = 0; k <= n && k < static_cast<int>(coeffs->size()); ++k)
            c[static_cast<std::size_t>(k)] = (*coeffs)[static_cast<std::size_t>(k)];
        return TruncSeries(std::move(c));
    });
}

OperatorSpec compose(const OperatorSpec& s1, const OperatorSpec& s2) {
    auto g1 = [s1](int n) { return s1.indicator(n); };
    auto g2 = [s2](int n) { return s2.indicator(n); };
    return OperatorSpec(s1.name() + "*" + s2.name(),
                        [g1, g2](int n) { return g1(n) * g2(n); });
}

OperatorSpec reflect(const OperatorSpec& op) {
    return OperatorSpec("reflect(" + op.name() + ")", [op](int n) {
        TruncSeries f = op.indicator(n);
        std::vector<Rational> c = f.coeffs();
        for (int k = 1; k <= n; k += 2) c[static_cast<std::size_t>(k)] = -c[static_cast<std::size_t>(k)];
        return TruncSeries(std::move(c));
    });
}

OperatorSpec parse_operator(const std::string& text) {
    if (text == "D") return derivative_op();
    if (text == "laguerre") return laguerre_op();
    if (text == "lambert") return lambert_op();
    if (text == "touchard") return touchard_op();
    if (text == "fwd-diff") return forward_difference_op();
    if (text == "bwd-diff") return backward_difference_op();
    const std::string abel_prefix = "abel:a=";
    if (text.rfind(abel_prefix, 0) == 0)
        return abel_op(rational_from_string(text.substr(abel_prefix.size())));
    const std::string custom_prefix = "custom:";
    if (text.rfind(custom_prefix, 0) == 0) {
        std::vector<Rational> coeffs;
        std::string rest = text.substr(custom_prefix.size());
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            coeffs.push_back(rational_from_string(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return custom_op(std::move(coeffs));
    }
    throw ParseError("unknown operator '" + text +
                     "' (expected D, abel:a=<rat>, laguerre, lambert, touchard, "
                     "fwd-diff, bwd-diff, custom:<c0>,<c1>,...)");
}

Poly apply(const OperatorSpec& op, const Poly& p) {
    if (p.is_zero()) return {};
    int d = p.degree();
    TruncSeries f = op.indicator(d);
    Poly result;
    Poly dk = p;  // D^k p
    for (int k = 0; k <= d; ++k) {
        if (f.coeff(k) != 0) result += f.coeff(k) * dk;
        dk = dk.derivative();
    }
    return result;
}

Poly apply_power(const OperatorSpec& op, int k, const Poly& p) {
    Poly r = p;
    for (int i = 0; i < k; ++i) r = apply(op, r);
    return r;
}

struct BasicSequence::Cache {
    std::mutex m;
    std::vector<Poly> polys;
};

BasicSequence::BasicSequence(OperatorSpec delta_op)
    : op_(std::move(delta_op)), cache_(std::make_shared<Cache>()) {
    if (!op_.is_delta())
        throw NotDeltaOperator("'" + op_.name() + "' is not a delta operator");
}

Poly BasicSequence::at(int n) const {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (n < static_cast<int>(cache_->polys.size())) return cache_->polys[static_cast<std::size_t>(n)];

    // Recompute from scratch at the requested order. The reversion prefix is
    // stable, so entries already handed out never change.
    std::vector<Poly> polys;
    polys.reserve(static_cast<std::size_t>(n) + 1);
    polys.push_back(Poly::constant(1));
    if (n >= 1) {
        TruncSeries dser = series_reverse(op_.indicator(n));
        // p_m = m! sum_{k=1..m} [t^m](d^k) / k! * x^k
        TruncSeries dpow = dser;
        std::vector<std::vector<Rational>> pw;  // pw[k-1][m] = [t^m] d^k
        for (int k = 1; k <= n; ++k) {
            pw.push_back(dpow.coeffs());
            if (k < n) dpow = dpow * dser;
        }
        Rational mfact(1);
        for (int m = 1; m <= n; ++m) {
            mfact *= m;
            std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
            Rational kfact(1);
            for (int k = 1; k <= m; ++k) {
                kfact *= k;
                c[static_cast<std::size_t>(k)] = mfact / kfact * pw[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m)];
            }
            polys.emplace_back(std::move(c));
        }
    }
    cache_->polys = std::move(polys);
    return cache_->polys[static_cast<std::size_t>(n)];
}

BasicSequence basic_sequence(const OperatorSpec& delta_op, int n_max) {
    BasicSequence bs(delta_op);
    bs.at(n_max);
    return bs;
}

TruncSeries expand_in_delta(const OperatorSpec& s, const OperatorSpec& d, int n_max) {
    BasicSequence bs(d);  // throws NotDeltaOperator
    std::vector<Rational> c(static_cast<std::size_t>(n_max) + 1);
    Rational kfact(1);
    for (int k = 0; k <= n_max; ++k) {
        if (k > 0) kfact *= k;
        c[static_cast<std::size_t>(k)] = apply(s, bs.at(k))(0) / kfact;
    }
    return TruncSeries(std::move(c));
}

Poly right_inverse_apply(const OperatorSpec& d, const Poly& p) {
    BasicSequence bs(d);
    if (p.is_zero()) return {};
    int n = p.degree();
    Poly result;
    Poly cur = p;  // d^i p
    Rational ifact(1);
    for (int i = 0; i <= n; ++i) {
        if (i > 0) ifact *= i;
        Rational a = cur(0) / ifact;  // coefficient of p_i in the expansion of p
        if (a != 0) result += a / (i + 1) * bs.at(i + 1);
        cur = apply(d, cur);
    }
    return result;
}

}  // namespace gonc
