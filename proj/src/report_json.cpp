#include "tightsfs/report_json.hpp"

namespace tightsfs {

namespace {

json coefficient_json(const Rational& r)
{
    if (r.is_integer())
        return r.num();
    return r.str();
}

}  // namespace

json report_to_json(const ClassificationReport& r, bool with_vectors)
{
    json j;
    j["invariants"] = json::array();
    for (const auto& f : r.invariants.fibers)
        j["invariants"].push_back({{"p", f.p}, {"q", f.q}});
    j["e0"] = r.e0;
    j["fibers"] = json::array();
    for (const auto& f : r.fibers)
        j["fibers"].push_back({{"p", f.p},
                               {"q", f.q},
                               {"cf", f.cf},
                               {"u", f.u},
                               {"v", f.v},
                               {"boundary_slope", f.boundary_slope.str()},
                               {"solid_torus_count", f.solid_torus_count}});
    j["count_zero_torsion"] = r.count_zero_torsion;
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    j["closed_form"] = r.closed_form;
    j["diagram"] = r.diagram;
    if (with_vectors)
        j["realization_vectors"] = r.realization_vectors;
    j["upper_bound_breakdown"] = {{"s", r.upper_bound_breakdown.s},
                                  {"shirt", r.upper_bound_breakdown.shirt},
                                  {"solid_torus_counts", r.upper_bound_breakdown.solid_torus_counts}};
    j["certificates"] = {{"bounds_equal", r.certificates.bounds_equal},
                         {"distinct_chern", r.certificates.distinct_chern}};
    j["statements"] = r.statements;
    return j;
}

ClassificationReport report_from_json(const json& j)
{
    ClassificationReport r;
    const auto& inv = j.at("invariants");
    if (inv.size() != 4)
        throw error(errc::parse_error, "report needs four invariants");
    for (std::size_t i = 0; i < 4; ++i)
        r.invariants.fibers[i] = {inv[i].at("p").get<i64>(), inv[i].at("q").get<i64>()};
    r.e0 = j.at("e0").get<i64>();
    for (const auto& f : j.at("fibers"))
        r.fibers.push_back({f.at("p").get<i64>(), f.at("q").get<i64>(), f.at("cf").get<std::vector<i64>>(),
                            f.at("u").get<i64>(), f.at("v").get<i64>(),
                            Slope::parse(f.at("boundary_slope").get<std::string>()),
                            f.at("solid_torus_count").get<i64>()});
    r.count_zero_torsion = j.at("count_zero_torsion").get<i64>();
    r.lower_bound = j.at("lower_bound").get<i64>();
    r.upper_bound = j.at("upper_bound").get<i64>();
    r.closed_form = j.at("closed_form").get<i64>();
    r.diagram = j.at("diagram").get<std::string>();
    if (j.contains("realization_vectors"))
        r.realization_vectors = j.at("realization_vectors").get<std::vector<RealizationVector>>();
    const auto& ub = j.at("upper_bound_breakdown");
    r.upper_bound_breakdown = {ub.at("s").get<i64>(), ub.at("shirt").get<i64>(),
                               ub.at("solid_torus_counts").get<std::vector<i64>>()};
    r.certificates = {j.at("certificates").at("bounds_equal").get<bool>(),
                      j.at("certificates").at("distinct_chern").get<bool>()};
    r.statements = j.at("statements").get<std::vector<std::string>>();
    return r;
}

json diagram_to_json(const SurgeryDiagram& d)
{
    json j;
    j["central"] = coefficient_json(d.central.coefficient);
    j["chains"] = json::array();
    for (const auto& ch : d.chains) {
        json c = json::array();
        for (const auto& comp : ch)
            c.push_back(coefficient_json(comp.coefficient));
        j["chains"].push_back(c);
    }
    j["history"] = d.history;
    return j;
}

json sweep_to_json(const SweepSummary& s)
{
    return {{"max_p", s.max_p},   {"fibers", s.fibers}, {"cases", s.cases},
            {"passed", s.passed}, {"failed", s.failed}, {"h1_checks", s.h1_checks},
            {"failures", s.failures}};
}

json audit_to_json(const ShirtAudit& a)
{
    json matched = json::array();
    for (const auto& c : a.matched)
        matched.push_back({{"shirt_class", c.shirt_class},
                           {"shirt_euler", c.shirt_euler},
                           {"positive_bypasses", c.positive_bypasses},
                           {"twist", c.twist},
                           {"euler", c.euler()}});
    json forms = json::array();
    for (const auto& c : a.normal_forms)
        forms.push_back({{"shirt_class", c.shirt_class},
                         {"positive_bypasses", c.positive_bypasses},
                         {"euler", c.euler()}});
    return {{"s", a.s},
            {"raw", a.raw},
            {"sign_matched", a.sign_matched},
            {"classes", a.classes},
            {"matched", matched},
            {"normal_forms", forms}};
}

}  // namespace tightsfs
