#include "gonc/cli.hpp"

#include "gonc/combinat.hpp"
#include "gonc/enumeration.hpp"
#include "gonc/errors.hpp"
#include "gonc/serialize.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace gonc {

namespace {

Grid parse_grid(const std::string& text) {
    const std::string affine_prefix = "affine:";
    const std::string list_prefix = "list:";
    auto split = [](const std::string& s) {
        std::vector<Rational> out;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            out.push_back(rational_from_string(
                s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    };
    if (text.rfind(affine_prefix, 0) == 0) {
        auto parts = split(text.substr(affine_prefix.size()));
        if (parts.size() != 2) throw ParseError("affine grid needs exactly 'affine:a,b'");
        return Grid::affine(parts[0], parts[1]);
    }
    if (text.rfind(list_prefix, 0) == 0) return Grid::list(split(text.substr(list_prefix.size())));
    throw ParseError("unknown grid '" + text + "' (expected affine:a,b or list:z0,z1,...)");
}

// Bounds are positive integers: either an explicit list or affine a+b*i cut
// at length n.
BoundSpec parse_bounds(const std::string& text, int n, long long universe) {
    const std::string affine_prefix = "affine:";
    const std::string list_prefix = "list:";
    auto to_ll = [](const Rational& q) {
        if (!is_integer(q)) throw ParseError("bounds must be integers, got " + to_string(q));
        return static_cast<long long>(numerator(q));
    };
    Grid g = parse_grid(text);
    std::vector<long long> b;
    if (g.is_affine()) {
        if (n < 0) throw ParseError("affine bounds need --n");
        for (int i = 0; i < n; ++i) b.push_back(to_ll(g.node(i)));
    } else {
        for (const auto& node : g.nodes()) b.push_back(to_ll(node));
        if (n >= 0 && n != static_cast<int>(b.size()))
            throw ParseError("--n disagrees with the bounds list length");
    }
    return BoundSpec(std::move(b), universe);
}

std::string series_to_string(const TruncSeries& f) {
    std::string body = poly_to_string(Poly(f.coeffs()), "t");
    return body + " + O(t^" + std::to_string(f.order() + 1) + ")";
}

void emit_poly(std::ostream& out, const std::string& format, const std::string& label,
               const Poly& p, Json header) {
    if (format == "json") {
        header["coeffs"] = to_json(p);
        out << header.dump() << "\n";
    } else if (format == "latex") {
        out << label << " = " << to_latex(p) << "\n";
    } else {
        out << label << " = " << poly_to_string(p) << "\n";
    }
}

struct CaseRun {
    int total = 0;
    int failed = 0;

    void record(std::ostream& out, const std::string& name, const CheckReport& report) {
        ++total;
        if (report.ok) {
            out << "ok " << name << "\n";
        } else {
            ++failed;
            out << "FAIL " << name << ": " << report.detail << "\n";
        }
    }
};

int enforce_degree_cap(int n, int max_n) {
    if (n > max_n)
        throw ParseError("n = " + std::to_string(n) + " exceeds the degree cap " +
                         std::to_string(max_n) + " (raise it with --max-n)");
    return n;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact delta-operator calculus, Goncarov interpolation bases, and"
                 " order-statistics enumeration over the rationals"};
    app.require_subcommand(1);

    std::string op_text = "D", in_text = "D", grid_text, bounds_text, format = "human";
    std::string route, suite, oracle, method = "goncarov";
    std::string a_text = "0", b_text = "1", xi_text;
    int n = -1, nmax = -1, max_n = 16;
    long long universe = 0;
    bool check_closed_form = false;
    Caps caps = Caps::from_env();

    auto add_common = [&](CLI::App* cmd, bool with_grid) {
        cmd->add_option("--op", op_text, "operator preset")->required();
        if (with_grid) cmd->add_option("--grid", grid_text, "affine:a,b or list:z0,z1,...")->required();
        cmd->add_option("--format", format, "human, json, or latex")
            ->check(CLI::IsMember({"human", "json", "latex"}));
        cmd->add_option("--max-n", max_n, "degree cap (default 16)");
    };

    CLI::App* basic = app.add_subcommand("basic", "basic polynomial p_n of a delta operator");
    add_common(basic, false);
    basic->add_option("--n", n, "index of the polynomial");
    basic->add_option("--nmax", nmax, "print p_0..p_nmax instead");

    CLI::App* gonc_cmd = app.add_subcommand("goncarov", "Goncarov basis polynomial t_n");
    add_common(gonc_cmd, true);
    gonc_cmd->add_option("--n", n, "index of the polynomial")->required();
    gonc_cmd->add_option("--route", route, "cross-check against another route")
        ->check(CLI::IsMember({"det", "partition"}));

    CLI::App* abel = app.add_subcommand("abel", "closed form on the arithmetic grid a+b*i");
    add_common(abel, false);
    abel->add_option("--a", a_text, "grid offset")->required();
    abel->add_option("--b", b_text, "grid step")->required();
    abel->add_option("--n", n, "index of the polynomial")->required();
    abel->add_flag("--check", check_closed_form, "cross-check against the recursion route");

    CLI::App* count = app.add_subcommand("count", "count structures with bounded order statistics");
    add_common(count, false);
    count->add_option("--bounds", bounds_text, "affine:a,b (with --n) or list:1,2,...")->required();
    count->add_option("--n", n, "number of bounds for affine specs");
    count->add_option("--universe", universe, "label universe size x (default: largest bound)");
    count->add_option("--method", method, "how to compute the count")
        ->check(CLI::IsMember({"goncarov", "brute", "closed-form"}));
    count->add_option("--oracle", oracle, "cross-check against a brute-force scan")
        ->check(CLI::IsMember({"brute"}));
    count->add_option("--partition-cap", caps.partition_max_n, "ordered-partition cap override");
    count->add_option("--brute-cap", caps.brute_max_states, "brute-force state cap override");

    CLI::App* verify = app.add_subcommand("verify", "run an identity suite and report per case");
    add_common(verify, true);
    verify->add_option("--suite", suite, "identity suite")
        ->required()
        ->check(CLI::IsMember({"biortho", "diff-rel", "shift", "binomial", "perturb", "integral", "appell"}));
    verify->add_option("--nmax", nmax, "largest index checked")->required();

    CLI::App* expand = app.add_subcommand("expand", "expand an operator in powers of a delta operator");
    add_common(expand, false);
    expand->add_option("--in", in_text, "delta operator to expand in")->required();
    expand->add_option("--nmax", nmax, "truncation order")->required();

    std::vector<const char*> argv;
    argv.push_back("gonc");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream buf;
        int code = app.exit(e, buf, buf);
        (code == 0 ? out : err) << buf.str();
        return code == 0 ? 0 : 2;
    }

    OperatorSpec op = parse_operator(op_text);

    if (basic->parsed()) {
        if ((n < 0) == (nmax < 0)) throw ParseError("basic needs exactly one of --n or --nmax");
        int top = enforce_degree_cap(std::max(n, nmax), max_n);
        BasicSequence bs(op);
        for (int m = (n >= 0 ? top : 0); m <= top; ++m) {
            Json header;
            header["operator"] = op.name();
            header["n"] = m;
            emit_poly(out, format, "p_" + std::to_string(m) + "(x)", bs.at(m), std::move(header));
        }
        return 0;
    }

    if (gonc_cmd->parsed()) {
        enforce_degree_cap(n, max_n);
        Grid grid = parse_grid(grid_text);
        Poly tn = goncarov_recursion(op, grid, n);
        if (route == "det") {
            Poly det = goncarov_determinant(op, grid, n);
            if (det != tn) {
                err << "route disagreement: recursion " << poly_to_string(tn) << " vs determinant "
                    << poly_to_string(det) << "\n";
                return 1;
            }
        } else if (route == "partition") {
            Rational c0 = constant_term(op, grid, n, caps);
            if (c0 != tn(Rational(0))) {
                err << "route disagreement: recursion constant term " << to_string(tn(Rational(0)))
                    << " vs ordered-partition formula " << to_string(c0) << "\n";
                return 1;
            }
        }
        Json header;
        header["operator"] = op.name();
        header["grid"] = grid_to_json(grid);
        header["n"] = n;
        if (format == "latex") {
            out << "t_{" << n << "}(x) = " << to_latex(tn) << "\n";
            out << "t_{" << n
                << "} = " << latex_in_basic_basis(basic_basis_coefficients(op, grid, n)) << "\n";
            return 0;
        }
        emit_poly(out, format, "t_" + std::to_string(n) + "(x)", tn, std::move(header));
        return 0;
    }

    if (abel->parsed()) {
        enforce_degree_cap(n, max_n);
        Rational a = rational_from_string(a_text);
        Rational b = rational_from_string(b_text);
        Poly tn = delta_abel(op, a, b, n);
        if (check_closed_form) {
            Poly rec = goncarov_recursion(op, Grid::affine(a, b), n);
            if (rec != tn) {
                err << "route disagreement: closed form " << poly_to_string(tn) << " vs recursion "
                    << poly_to_string(rec) << "\n";
                return 1;
            }
        }
        Json header;
        header["operator"] = op.name();
        header["grid"] = grid_to_json(Grid::affine(a, b));
        header["n"] = n;
        emit_poly(out, format, "t_" + std::to_string(n) + "(x)", tn, std::move(header));
        return 0;
    }

    if (count->parsed()) {
        BoundSpec bounds = parse_bounds(bounds_text, n, universe);
        enforce_degree_cap(bounds.length(), max_n);
        Int result;
        if (method == "goncarov") {
            result = count_bounded(op, bounds);
        } else if (method == "brute") {
            result = brute_force_count_for(op, bounds, caps);
        } else {
            Grid g = parse_grid(bounds_text);
            if (!g.is_affine()) throw ParseError("--method closed-form needs affine bounds");
            long long a = static_cast<long long>(numerator(g.affine_a()));
            long long b = static_cast<long long>(numerator(g.affine_b()));
            int len = bounds.length();
            if (op.name() == "D") result = closed_form_count(CountFamily::classical, a, b, len);
            else if (op.name() == "laguerre") result = closed_form_count(CountFamily::laguerre, a, b, len);
            else if (op.name() == "lambert") result = closed_form_count(CountFamily::inverse_abel, a, b, len);
            else if (op.name() == "touchard") result = closed_form_count(CountFamily::exponential, a, b, len);
            else if (op.name() == "fwd-diff")
                result = factorial(len) * closed_form_count(CountFamily::strict_path, a, b, len);
            else if (op.name() == "bwd-diff")
                result = factorial(len) * closed_form_count(CountFamily::fuss_catalan, a, b, len);
            else throw UnknownFamily("no closed form for operator '" + op.name() + "'");
        }
        if (oracle == "brute") {
            Int brute = brute_force_count_for(op, bounds, caps);
            if (brute != result) {
                err << "oracle disagreement: " << result.str() << " vs brute-force " << brute.str()
                    << "\n";
                return 1;
            }
        }
        if (format == "json") {
            Json j;
            j["operator"] = op.name();
            Json arr = Json::array();
            for (long long b : bounds.bounds()) arr.push_back(b);
            j["bounds"] = arr;
            j["count"] = result.str();
            j["method"] = method == "closed-form" ? "closed-form" : (method == "brute" ? "brute" : "goncarov");
            out << j.dump() << "\n";
        } else {
            out << "count = " << result.str() << "\n";
        }
        return 0;
    }

    if (verify->parsed()) {
        enforce_degree_cap(nmax, max_n);
        Grid grid = parse_grid(grid_text);
        const std::vector<Rational> xis{Rational(1), Rational(-2), Rational(1, 2)};
        CaseRun run;
        if (suite == "biortho") {
            for (int m = 0; m <= nmax; ++m)
                run.record(out, "biortho n=" + std::to_string(m), biorthogonality_check(op, grid, m));
        } else if (suite == "diff-rel") {
            for (int m = 0; m <= nmax; ++m)
                run.record(out, "diff-rel n=" + std::to_string(m),
                           differential_relation_check(op, grid, m));
        } else if (suite == "shift") {
            for (const auto& xi : xis) {
                run.record(out, "translation xi=" + to_string(xi),
                           translation_invariance_check(op, grid, xi, nmax));
                run.record(out, "duality xi=" + to_string(xi), shift_duality_check(op, grid, xi, nmax));
            }
        } else if (suite == "binomial") {
            for (const auto& xi : xis)
                run.record(out, "binomial-expansion xi=" + to_string(xi),
                           binomial_expansion_check(op, grid, xi, nmax));
        } else if (suite == "perturb") {
            for (int k = 0; k <= std::min(nmax, 3); ++k)
                run.record(out, "perturb k=" + std::to_string(k),
                           perturbation_check(op, grid, k, grid.node(k) + 1, nmax));
        } else if (suite == "integral") {
            for (int m = 0; m <= nmax; ++m)
                for (int k = 0; k <= m; ++k)
                    run.record(out, "integral n=" + std::to_string(m) + " k=" + std::to_string(k),
                               integral_formula_check(op, grid, m, k));
        } else if (suite == "appell") {
            run.record(out, "appell N=" + std::to_string(nmax), appell_check(op, grid, nmax));
        }
        out << run.total - run.failed << "/" << run.total << " cases passed\n";
        return run.failed == 0 ? 0 : 1;
    }

    if (expand->parsed()) {
        enforce_degree_cap(nmax, max_n);
        OperatorSpec base = parse_operator(in_text);
        TruncSeries f = expand_in_delta(op, base, nmax);
        if (format == "json") {
            Json j;
            j["operator"] = op.name();
            j["in"] = base.name();
            Json body = to_json(f);
            j["order"] = body["order"];
            j["coeffs"] = body["coeffs"];
            out << j.dump() << "\n";
        } else {
            out << series_to_string(f) << "\n";
        }
        return 0;
    }

    throw ParseError("no subcommand given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InsufficientNodes& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownFamily& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonIntegerResult& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotDeltaOperator& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gonc
