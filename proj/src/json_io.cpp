#include "dortho/json_io.hpp"

#include "dortho/errors.hpp"

namespace dortho::json {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::vector<Rational> rationals_from(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(rational_from(e));
    return out;
}

Json rationals_to(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational::parse(j.dump());
    throw ParseError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}

Poly poly_from(const Json& j) { return Poly(rationals_from(j, "polynomial")); }

Json to_json(const DiffOperator& J) {
    Json a = Json::array();
    for (const auto& p : J.coeffs()) a.push_back(to_json(p));
    return Json{{"a", a}};
}

DiffOperator operator_from(const Json& j) {
    const Json& a = require(j, "a");
    if (!a.is_array()) throw ParseError("operator key 'a' must be an array of polynomials");
    std::vector<Poly> coeffs;
    for (const auto& p : a) coeffs.push_back(poly_from(p));
    return DiffOperator(std::move(coeffs));
}

Json to_json(const RecurrenceTable& rt) {
    Json j;
    j["d"] = rt.d();
    j["beta"] = rationals_to(rt.betas());
    if (rt.d() == 2) {
        j["alpha"] = rationals_to(rt.gammas()[1]);
        j["gamma"] = rationals_to(rt.gammas()[0]);
    } else {
        Json g = Json::array();
        for (const auto& row : rt.gammas()) g.push_back(rationals_to(row));
        j["gammas"] = g;
    }
    return j;
}

RecurrenceTable table_from(const Json& j) {
    const Json& dj = require(j, "d");
    if (!dj.is_number_integer() || dj.get<int>() < 1) throw ParseError("'d' must be a positive integer");
    const int d = dj.get<int>();
    auto beta = rationals_from(require(j, "beta"), "beta");
    if (d == 2 && j.contains("alpha")) {
        return RecurrenceTable::two_orthogonal(std::move(beta), rationals_from(require(j, "alpha"), "alpha"),
                                               rationals_from(require(j, "gamma"), "gamma"));
    }
    const Json& g = require(j, "gammas");
    if (!g.is_array() || g.size() != static_cast<size_t>(d))
        throw ParseError("'gammas' must hold d = " + std::to_string(d) + " arrays");
    std::vector<std::vector<Rational>> gammas;
    for (const auto& row : g) gammas.push_back(rationals_from(row, "gammas row"));
    return RecurrenceTable(d, std::move(beta), std::move(gammas));
}

Json to_json(const MonicSequence& seq) {
    Json a = Json::array();
    for (const auto& p : seq.polys()) a.push_back(to_json(p));
    return a;
}

Json to_json(const ReportEntry& e) {
    Json j;
    j["identity"] = e.identity;
    j["n"] = e.n;
    if (e.m) j["m"] = *e.m;
    if (e.nu) j["nu"] = *e.nu;
    j["status"] = e.pass ? "pass" : "fail";
    if (!e.pass) {
        j["expect"] = e.expect;
        j["witness"] = to_json(e.residual());
        j["lhs"] = to_json(e.lhs);
        if (e.expect == "== rhs") j["rhs"] = to_json(e.rhs);
    }
    return j;
}

Json to_json(const VerificationReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries()) entries.push_back(to_json(e));
    Json j;
    j["status"] = r.passed() ? "pass" : "fail";
    j["checked"] = r.entries().size();
    j["failed"] = r.failures();
    j["notes"] = r.notes();
    j["entries"] = entries;
    return j;
}

}  // namespace dortho::json
