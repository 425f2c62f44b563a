#include "qcf/json_io.hpp"

namespace qcf {

namespace {

std::string dec(const Integer& z) { return z.get_str(10); }

Integer parse_integer(const Json& j) {
    if (!j.is_string()) throw DomainError("json: coefficients must be decimal strings");
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw DomainError("json: bad integer '" + j.get<std::string>() + "'");
    return z;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("json: missing field '") + key + "'");
    return j.at(key);
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

Json to_json(const LatticeSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(dec(c));
    return {{"denom", s.denom()}, {"floor", s.floor()}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

LatticeSeries series_from_json(const Json& j) {
    std::vector<Integer> coeffs;
    for (const auto& c : field(j, "coeffs")) coeffs.push_back(parse_integer(c));
    return {field(j, "denom").get<Exponent>(), field(j, "floor").get<Exponent>(), field(j, "order").get<Exponent>(),
            std::move(coeffs)};
}

Json to_json(const Monomial& m) { return {{"sign", m.sign}, {"num", m.num}, {"denom", m.denom}}; }

Monomial monomial_from_json(const Json& j) {
    return {field(j, "sign").get<int>(), field(j, "num").get<Exponent>(), field(j, "denom").get<Exponent>()};
}

Json to_json(const ProductSpec& p) {
    Json factors = Json::array();
    for (const auto& f : p.factors)
        factors.push_back({{"a", f.a}, {"m", f.m}, {"power", f.power}, {"sign", f.sign}, {"base_sign", f.base_sign}});
    return {{"denom", p.denom}, {"factors", std::move(factors)}};
}

ProductSpec product_from_json(const Json& j) {
    ProductSpec p{field(j, "denom").get<Exponent>(), {}};
    for (const auto& f : field(j, "factors"))
        p.factors.push_back({field(f, "a").get<Exponent>(), field(f, "m").get<Exponent>(), f.value("power", 1),
                             f.value("sign", 1), f.value("base_sign", 1)});
    p.validate();
    return p;
}

Json to_json(const ThetaSpec& t) { return {{"a", to_json(t.a)}, {"b", to_json(t.b)}}; }

ThetaSpec theta_from_json(const Json& j) {
    ThetaSpec t{monomial_from_json(field(j, "a")), monomial_from_json(field(j, "b"))};
    t.validate();
    return t;
}

Json to_json(const std::optional<Mismatch>& m) {
    if (!m) return nullptr;
    return {{"exp_num", m->exp_num}, {"lhs", dec(m->lhs)}, {"rhs", dec(m->rhs)}};
}

Json to_json(const WindowComparison& c) {
    return {{"denom", c.denom}, {"window", c.window}, {"equal", c.equal()}, {"first_mismatch", to_json(c.first_mismatch)}};
}

Json to_json(const CFCertificate& c) {
    return {{"id", c.id},
            {"order", c.order},
            {"denom", c.denom},
            {"depth", c.depth ? Json(*c.depth) : Json(nullptr)},
            {"status", c.certified ? "certified" : "failed"},
            {"first_mismatch", c.certified ? Json(nullptr) : to_json(c.first_mismatch)},
            {"agreement", c.agreement}};
}

Json to_json(const IdentityReport& r) {
    Json j{{"id", r.id},
           {"lhs", r.lhs_text},
           {"rhs", r.rhs_text},
           {"denom", r.lattice},
           {"order", r.order},
           {"status", r.error ? "error" : pass_fail(r.holds())},
           {"first_mismatch", to_json(r.comparison.first_mismatch)}};
    if (r.error) j["error"] = *r.error;
    return j;
}

Json to_json(const ModularReport& r) {
    return {{"family", r.family == Family::X ? "X" : "Y"},
            {"index", r.index},
            {"n", r.n},
            {"order", r.order},
            {"stated_sign", r.stated_sign},
            {"derived_sign", r.derived_sign},
            {"sign_matches", r.sign_matches},
            {"series", to_json(r.series)},
            {"negated_argument_check",
             r.negated_argument_check ? to_json(*r.negated_argument_check) : Json(nullptr)},
            {"status", pass_fail(r.holds())}};
}

Json to_json(const Dissection& d, bool with_terms) {
    Json zero_terms = Json::array();
    Json terms = Json::array();
    for (const auto& t : d.terms) {
        if (t.vanishes) zero_terms.push_back(t.j);
        if (with_terms)
            terms.push_back({{"j", t.j}, {"shift", t.shift}, {"vanishes", t.vanishes}, {"product", to_json(t.product)}});
    }
    Json j{{"x", d.spec.x},
           {"y", d.spec.y},
           {"z", d.spec.z},
           {"w", d.spec.w},
           {"order", d.identity.window},
           {"term_count", d.terms.size()},
           {"zero_terms", std::move(zero_terms)},
           {"status", pass_fail(d.identity.equal())},
           {"first_mismatch", to_json(d.identity.first_mismatch)}};
    if (with_terms) j["terms"] = std::move(terms);
    return j;
}

Json to_json(const VanishingReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"n", v.n}, {"exponent", v.exponent}, {"coefficient", dec(v.coefficient)}});
    Json per_term = nullptr;
    if (r.per_term)
        per_term = {{"x", r.per_term->spec.x},
                    {"y", r.per_term->spec.y},
                    {"z", r.per_term->spec.z},
                    {"w", r.per_term->spec.w},
                    {"contributing_terms", r.per_term->contributing_terms},
                    {"terms_vanish_on_progression", r.per_term->terms_vanish_on_progression},
                    {"sum_matches_raw", to_json(r.per_term->sum_matches_raw)}};
    return {{"label", r.claim.label},
            {"series", to_json(r.claim.series)},
            {"modulus", r.claim.modulus},
            {"residue", r.claim.residue},
            {"bound", r.claim.bound},
            {"checked", r.checked},
            {"vanishes", r.vanishes()},
            {"routes_agree", r.consistent()},
            {"violations", std::move(violations)},
            {"per_term", std::move(per_term)}};
}

Json to_json(const RowReport& r) {
    Json orientation = nullptr;
    if (r.vanishing_orientation)
        orientation = *r.vanishing_orientation == Orientation::Displayed ? "displayed" : "reciprocal";
    return {{"label", r.row.label},
            {"cf", r.row.cf},
            {"modulus", r.row.modulus},
            {"residue", r.row.residue},
            {"status", r.status},
            {"passed", r.passed()},
            {"vanishing_orientation", std::move(orientation)},
            {"label_consistent", r.label_consistent},
            {"displayed", to_json(r.displayed)},
            {"reciprocal", to_json(r.reciprocal)}};
}

Json to_json(const ColoredPartitionSpec& s) {
    Json classes = Json::array();
    for (const auto& c : s.classes) classes.push_back({{"residue", c.residue}, {"colors", c.colors}});
    return {{"modulus", s.modulus}, {"classes", std::move(classes)}};
}

Json to_json(const PartitionReport& r) {
    auto rows = [](const std::vector<PartitionMismatch>& v) {
        Json out = Json::array();
        for (const auto& m : v) {
            Json counts = Json::array();
            for (const auto& c : m.counts) counts.push_back(dec(c));
            out.push_back({{"n", m.n}, {"counts", std::move(counts)}, {"signed_sum", dec(m.signed_sum)}});
        }
        return out;
    };
    Json series = Json::array();
    for (const auto& s : r.series) series.push_back(to_json(s));
    return {{"name", r.name},
            {"n_max", r.n_max},
            {"threshold", r.threshold},
            {"status", pass_fail(r.holds())},
            {"failures", rows(r.failures)},
            {"below_threshold", rows(r.below_threshold)},
            {"series", std::move(series)}};
}

}  // namespace qcf
