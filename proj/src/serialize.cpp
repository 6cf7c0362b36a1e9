#include "gonc/serialize.hpp"

#include "gonc/errors.hpp"

#include <sstream>

namespace gonc {

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array of rational strings");
    std::vector<Rational> c;
    for (const auto& item : j) c.push_back(rational_from_string(item.get<std::string>()));
    return Poly(std::move(c));
}

Json to_json(const TruncSeries& f) {
    Json j;
    j["order"] = f.order();
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(to_string(c));
    j["coeffs"] = arr;
    return j;
}

TruncSeries series_from_json(const Json& j) {
    int order = j.at("order").get<int>();
    std::vector<Rational> c;
    for (const auto& item : j.at("coeffs")) c.push_back(rational_from_string(item.get<std::string>()));
    if (static_cast<int>(c.size()) != order + 1)
        throw ParseError("series JSON must carry exactly order+1 coefficients");
    return TruncSeries(std::move(c));
}

Json grid_to_json(const Grid& z) {
    Json j;
    if (z.is_affine()) {
        j["kind"] = "affine";
        j["a"] = to_string(z.affine_a());
        j["b"] = to_string(z.affine_b());
    } else {
        j["kind"] = "list";
        Json arr = Json::array();
        for (const auto& node : z.nodes()) arr.push_back(to_string(node));
        j["nodes"] = arr;
    }
    return j;
}

Grid grid_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "affine")
        return Grid::affine(rational_from_string(j.at("a").get<std::string>()),
                            rational_from_string(j.at("b").get<std::string>()));
    if (kind == "list") {
        std::vector<Rational> nodes;
        for (const auto& item : j.at("nodes")) nodes.push_back(rational_from_string(item.get<std::string>()));
        return Grid::list(std::move(nodes));
    }
    throw ParseError("grid JSON kind must be 'affine' or 'list'");
}

namespace {

std::string latex_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    std::string s;
    if (q < 0) s += "-";
    s += "\\frac{" + Int(abs(numerator(q))).str() + "}{" + denominator(q).str() + "}";
    return s;
}

}  // namespace

std::string to_latex(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || k == 0) os << latex_rational(a);
        if (k == 1) os << var;
        if (k > 1) os << var << "^{" << k << "}";
        first = false;
    }
    return os.str();
}

std::string latex_in_basic_basis(const std::vector<Rational>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1) os << latex_rational(a) << " ";
        os << "p_{" << i << "}(x)";
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace gonc
