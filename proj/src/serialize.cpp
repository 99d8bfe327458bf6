#include <hypsum/serialize.hpp>

#include <string>

#include <hypsum/error.hpp>

namespace hypsum
{

namespace
{

Rational rational_from_json(const Json &j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

int int_from_json(const Json &j)
{
    if (!j.is_number_integer()) {
        throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
    }
    return j.get<int>();
}

const Json *optional_array(const Json &j, const char *key, bool required)
{
    if (!j.contains(key)) {
        if (required) {
            throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
        }
        return nullptr;
    }
    const Json &v = j.at(key);
    if (!v.is_array()) {
        throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be an array");
    }
    return &v;
}

Json status_json(CheckStatus status)
{
    switch (status) {
        case CheckStatus::Pass:
            return true;
        case CheckStatus::Fail:
            return false;
        case CheckStatus::Skipped:
            break;
    }
    return "skipped";
}

} // namespace

IdentityInstance instance_from_json(const Json &j)
{
    if (!j.is_object()) {
        throw Error(ErrorKind::ParseError, "instance must be a JSON object");
    }
    IdentityInstance inst;
    for (const auto &x : *optional_array(j, "a", true)) {
        inst.a.push_back(rational_from_json(x));
    }
    if (const Json *b = optional_array(j, "b", false)) {
        for (const auto &x : *b) {
            inst.b.push_back(rational_from_json(x));
        }
    }
    if (const Json *m = optional_array(j, "m", false)) {
        for (const auto &x : *m) {
            inst.m.push_back(int_from_json(x));
        }
    }
    for (const auto &x : *optional_array(j, "n", true)) {
        inst.n.push_back(int_from_json(x));
    }
    return inst;
}

Json to_json(const IdentityInstance &inst)
{
    Json out;
    Json a = Json::array();
    for (const auto &x : inst.a) {
        a.push_back(x.to_string());
    }
    Json b = Json::array();
    for (const auto &x : inst.b) {
        b.push_back(x.to_string());
    }
    out["a"] = std::move(a);
    out["b"] = std::move(b);
    out["m"] = inst.m;
    out["n"] = inst.n;
    return out;
}

Json to_json(const DerivedQuantities &d)
{
    Json out;
    out["M"] = d.M;
    out["N"] = d.N;
    out["m_min"] = d.m_min;
    out["n_max"] = d.n_max;
    out["p"] = d.p;
    out["theorem"] = d.theorem == Theorem::One ? 1 : 2;
    return out;
}

Json beta_map_json(const BetaTable &table)
{
    Json out = Json::object();
    for (const auto &[j, value] : table.beta) {
        out[std::to_string(j)] = value.to_string();
    }
    return out;
}

Json to_json(const BetaTable &table)
{
    Json out;
    out["theorem"] = table.theorem == Theorem::One ? 1 : 2;
    out["support"] = {{"low", table.support_low}, {"high", table.support_high}};
    out["beta"] = beta_map_json(table);
    return out;
}

Json to_json(const VerificationReport &report)
{
    Json out;
    out["instance"] = to_json(report.instance);
    out["derived"] = to_json(report.derived);
    out["support"] = {{"low", report.beta.support_low}, {"high", report.beta.support_high}};
    out["beta"] = beta_map_json(report.beta);
    out["checked_up_to"] = report.checked_up_to;
    out["vanishing_ok"] = report.vanishing_ok;
    if (!report.vanishing_detail.empty()) {
        out["vanishing_detail"] = report.vanishing_detail;
    }
    Json checks = Json::object();
    Json details = Json::object();
    for (const auto &c : report.cross_checks) {
        checks[c.name] = status_json(c.status);
        if (c.status == CheckStatus::Fail) {
            details[c.name] = c.detail;
        }
    }
    out["cross_checks"] = std::move(checks);
    if (!details.empty()) {
        out["failure_details"] = std::move(details);
    }
    out["passed"] = report.passed();
    return out;
}

Json to_json(const Lemma1Report &report)
{
    Json out;
    out["p"] = report.p;
    out["degree"] = report.degree;
    Json samples = Json::array();
    for (const auto &s : report.samples) {
        samples.push_back({{"k", s.k}, {"c_minus_one", s.c_minus_one.to_string()}, {"predicted", s.predicted.to_string()}});
    }
    out["samples"] = std::move(samples);
    out["ok"] = true;
    return out;
}

Json to_json(const ResidueCheck &check)
{
    Json out;
    out["k"] = check.k;
    out["residue_sum"] = check.residue_sum.to_string();
    out["c_minus_one"] = check.c_minus_one.to_string();
    out["gamma_sum"] = check.gamma_sum.to_string();
    out["series_coefficient"] = check.series_coefficient.to_string();
    out["degree_ok"] = check.degree_ok;
    out["agree"] = check.agree();
    return out;
}

Json to_json(const BesselReport &report)
{
    Json out;
    out["nu"] = report.nu.to_string();
    out["m"] = report.m_shift;
    out["order"] = report.order;
    out["exact"] = to_json(report.exact);
    out["degree_bound"] = report.degree_bound;
    Json samples = Json::array();
    for (const auto &s : report.samples) {
        samples.push_back({{"x", static_cast<double>(s.x)}, {"scaled_lhs", static_cast<double>(s.scaled)}});
    }
    out["samples"] = std::move(samples);
    out["residual"] = static_cast<double>(report.residual);
    out["scale"] = static_cast<double>(report.scale);
    out["tolerance"] = static_cast<double>(report.tolerance);
    out["numeric_ok"] = report.numeric_ok();
    out["passed"] = report.passed();
    return out;
}

} // namespace hypsum
