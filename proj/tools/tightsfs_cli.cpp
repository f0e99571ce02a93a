// Command line front end: classify, cf, diagram, h1, count, verify.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "tightsfs/classifier.hpp"
#include "tightsfs/continued_fraction.hpp"
#include "tightsfs/convex.hpp"
#include "tightsfs/report_json.hpp"
#include "tightsfs/surgery.hpp"

using namespace tightsfs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUnsupported = 3;

int exit_code_for(const error& e)
{
    switch (e.code()) {
    case errc::unsupported_regime: return kExitUnsupported;
    case errc::overflow:
    case errc::invalid_state: return kExitInternal;
    default: return kExitInvalid;
    }
}

std::string join(const std::vector<i64>& v, const char* sep = ",")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

json explain_json(i64 s)
{
    json j;
    j["pants_cases"] = json::array();
    for (const auto& c : pants_case_analysis()) {
        json e{{"case", c.label}, {"overtwisted", c.overtwisted}};
        if (c.overtwisted)
            e["reason"] = c.reason;
        else
            e["state"] = {{"name", c.state->name}, {"dividing_set", c.state->state.serialize()}};
        j["pants_cases"].push_back(e);
    }
    GluingSummary g = gluing_sweep();
    j["gluing"] = {{"pairs", g.pairs},
                   {"overtwisted_pairs", g.overtwisted_pairs},
                   {"torsion_pairs", g.torsion_pairs}};
    j["shirt_configurations"] = json::array();
    for (std::size_t i = 0; i < g.configurations.size(); ++i) {
        json src = json::array();
        for (const auto& [a, b] : g.sources[i])
            src.push_back(a + "+" + b);
        const auto& c = g.configurations[i];
        j["shirt_configurations"].push_back(
            {{"dividing_set", c.serialize()},
             {"sources", src},
             {"relative_euler_class", relative_euler_class(c)},
             {"solid_torus_filter",
              filter_solid_torus_gluing(c) == filter_result::overtwisted ? "overtwisted" : "tight-candidate"}});
    }
    j["torsion_witness"] = json::array();
    for (const auto& t : g.torsion_classes)
        j["torsion_witness"].push_back(t.serialize());
    j["section_change_classes"] = json::array();
    for (const auto& cls : g.classes) {
        json members = json::array();
        for (const auto& m : cls)
            members.push_back(m.serialize());
        j["section_change_classes"].push_back(
            {{"relative_euler_class", relative_euler_class(cls.front())}, {"members", members}});
    }
    j["shirt_count_audit"] = audit_to_json(shirt_count_audit(s));
    return j;
}

void print_report(const ClassificationReport& r, bool enumerate)
{
    std::cout << "manifold   M(0; " << r.invariants.str() << ")\n"
              << "e0         " << r.e0 << "\n"
              << "count      " << r.count_zero_torsion << " tight contact structures with zero Giroux torsion\n"
              << "lower      " << r.lower_bound << " Legendrian realizations of " << r.diagram
              << (r.certificates.distinct_chern ? ", rotation vectors pairwise distinct" : ", DUPLICATE vectors")
              << "\n"
              << "upper      " << r.upper_bound << " = shirt " << r.upper_bound_breakdown.shirt << " x solid tori "
              << join(r.upper_bound_breakdown.solid_torus_counts, "*") << " (s = " << r.upper_bound_breakdown.s
              << ")\n"
              << "closed     " << r.closed_form << "\n"
              << "bounds     " << (r.certificates.bounds_equal ? "equal" : "DIFFER") << "\n";
    for (std::size_t i = 0; i < r.fibers.size(); ++i) {
        const auto& f = r.fibers[i];
        std::cout << "fiber " << i + 1 << "    -" << f.q << "/" << f.p << "  cf [" << join(f.cf) << "]  (u,v) = ("
                  << f.u << "," << f.v << ")  V slope " << f.boundary_slope.str() << "  count "
                  << f.solid_torus_count << "\n";
    }
    if (enumerate)
        for (const auto& v : r.realization_vectors)
            std::cout << "rot        [" << join(v) << "]\n";
    for (const auto& s : r.statements)
        std::cout << "note       " << s << "\n";
}

void print_explain(const json& j)
{
    std::cout << "\npants cases\n";
    for (const auto& c : j["pants_cases"]) {
        std::cout << "  " << c["case"].get<std::string>() << ": ";
        if (c["overtwisted"].get<bool>())
            std::cout << "overtwisted (" << c["reason"].get<std::string>() << ")\n";
        else
            std::cout << c["state"]["name"].get<std::string>() << "  " << c["state"]["dividing_set"].get<std::string>()
                      << "\n";
    }
    const auto& g = j["gluing"];
    std::cout << "\ngluing " << g["pairs"] << " pairs: " << g["overtwisted_pairs"] << " overtwisted, "
              << g["torsion_pairs"] << " torsion\n";
    int idx = 1;
    for (const auto& c : j["shirt_configurations"]) {
        std::cout << "  picture " << idx++ << "  e = " << c["relative_euler_class"] << "  "
                  << c["solid_torus_filter"].get<std::string>() << "  " << c["dividing_set"].get<std::string>()
                  << "  from";
        for (const auto& s : c["sources"])
            std::cout << " " << s.get<std::string>();
        std::cout << "\n";
    }
    for (const auto& t : j["torsion_witness"])
        std::cout << "  torsion  " << t.get<std::string>() << "\n";
    std::cout << "section change classes\n";
    for (const auto& c : j["section_change_classes"])
        std::cout << "  e = " << c["relative_euler_class"] << "  members " << c["members"].size() << "\n";
    const auto& a = j["shirt_count_audit"];
    std::cout << "shirt count audit s = " << a["s"] << ": raw " << a["raw"] << ", sign matched "
              << a["sign_matched"] << ", classes " << a["classes"] << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tight contact structures with zero Giroux torsion on small Seifert fibered spaces"};
    app.require_subcommand(1);

    std::string fibers, rational;
    bool as_json = false, enumerate = false, explain = false, strict = false;
    int max_p = 9, q_factor = 2;

    auto* classify_cmd = app.add_subcommand("classify", "count and certify tight structures");
    classify_cmd->add_option("fibers", fibers, "four fibers, e.g. -1/2,-1/2,-1/2,-3/5")->required();
    classify_cmd->add_flag("--json", as_json, "machine readable output");
    classify_cmd->add_flag("--enumerate", enumerate, "list realization vectors");
    classify_cmd->add_flag("--explain", explain, "include pants and shirt dividing sets and the shirt audit");

    auto* cf_cmd = app.add_subcommand("cf", "negative continued fraction of a rational");
    cf_cmd->add_option("rational", rational, "negative rational, e.g. -3/5")->required();
    cf_cmd->add_flag("--strict", strict, "require every quotient <= -2");
    cf_cmd->add_flag("--json", as_json, "machine readable output");

    auto* diagram_cmd = app.add_subcommand("diagram", "surgery diagram before and after normalisation");
    diagram_cmd->add_option("fibers", fibers, "four fibers")->required();
    diagram_cmd->add_flag("--json", as_json, "machine readable output");

    auto* h1_cmd = app.add_subcommand("h1", "order of first homology along the surgery pipeline");
    h1_cmd->add_option("fibers", fibers, "four fibers")->required();
    h1_cmd->add_flag("--json", as_json, "machine readable output");

    auto* count_cmd = app.add_subcommand("count", "the count from both bounds and the closed form");
    count_cmd->add_option("fibers", fibers, "four fibers")->required();
    count_cmd->add_flag("--json", as_json, "machine readable output");

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive sweep over small fibers");
    verify_cmd->add_option("--max-p", max_p, "largest p")->check(CLI::Range(1, 30));
    verify_cmd->add_option("--q-factor", q_factor, "q ranges over 1..q_factor*p")->check(CLI::Range(1, 10));
    verify_cmd->add_flag("--json", as_json, "machine readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (classify_cmd->parsed()) {
            ClassificationReport r = classify(fibers);
            if (as_json) {
                json j = report_to_json(r, enumerate);
                if (explain)
                    j["explain"] = explain_json(r.upper_bound_breakdown.s);
                std::cout << j.dump(2) << "\n";
            } else {
                print_report(r, enumerate);
                if (explain)
                    print_explain(explain_json(r.upper_bound_breakdown.s));
            }
        } else if (cf_cmd->parsed()) {
            Rational r = Rational::parse(rational);
            NegContinuedFraction c = neg_cf(r, strict ? cf_mode::strict : cf_mode::relaxed);
            Rational back = eval_cf(c);
            if (as_json) {
                json j{{"input", r.str()}, {"mode", strict ? "strict" : "relaxed"}, {"cf", c.coeffs},
                       {"value", back.str()}};
                if (r.num() < 0 && r.num() != -1 && r.den() > 1) {
                    // also report convergents when r = -q/p with p >= 2
                    Convergents cv = convergents(neg_cf(r));
                    j["convergents"] = {{"p", cv.p}, {"q", cv.q}, {"u", cv.u}, {"v", cv.v}};
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << r.str() << " = [" << join(c.coeffs) << "]\n";
            }
        } else if (diagram_cmd->parsed()) {
            SeifertInvariants inv = parse_and_normalize(fibers);
            std::vector<SurgeryDiagram> stages;
            normalize_diagram(inv, [&](const SurgeryDiagram& d) { stages.push_back(d); });
            if (as_json) {
                json j{{"initial", diagram_to_json(stages.front())}, {"final", diagram_to_json(stages.back())},
                       {"stages", json::array()}};
                for (const auto& d : stages)
                    j["stages"].push_back(d.str());
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& d : stages)
                    std::cout << d.str() << "   " << d.history.back() << "\n";
            }
        } else if (h1_cmd->parsed()) {
            SeifertInvariants inv = parse_and_normalize(fibers);
            std::vector<i64> orders;
            SurgeryDiagram last = normalize_diagram(inv, [&](const SurgeryDiagram& d) { orders.push_back(h1_order(d)); });
            SmithForm snf = smith_normal_form(presentation_matrix(last));
            std::vector<i64> diag;
            for (std::size_t i = 0; i < snf.D.size(); ++i)
                diag.push_back(snf.D[i][i]);
            i64 snf_order = h1_order_snf(last);
            if (as_json) {
                std::cout << json{{"h1_order", snf_order}, {"stages", orders}, {"smith_diagonal", diag}}.dump(2)
                          << "\n";
            } else {
                std::cout << "h1 order " << snf_order << "\nstages   " << join(orders) << "\nsmith    "
                          << join(diag) << "\n";
            }
        } else if (count_cmd->parsed()) {
            SeifertInvariants inv = parse_and_normalize(fibers);
            UpperBound ub = upper_bound(inv);
            i64 lower = stein_structure_count(normalize_diagram(inv));
            i64 closed = closed_form_count(inv);
            if (as_json)
                std::cout << json{{"count", closed}, {"lower_bound", lower}, {"upper_bound", ub.count},
                                  {"closed_form", closed}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << closed << "\n";
            if (lower != ub.count || lower != closed)
                return kExitInternal;
        } else if (verify_cmd->parsed()) {
            auto t0 = std::chrono::steady_clock::now();
            SweepSummary s = verify_sweep(max_p, q_factor);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (as_json) {
                json j = sweep_to_json(s);
                j["seconds"] = secs;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "fibers " << s.fibers << ", cases " << s.cases << ", passed " << s.passed
                          << ", failed " << s.failed << ", h1 checks " << s.h1_checks << ", " << secs << " s\n";
                for (const auto& f : s.failures)
                    std::cout << "  " << f << "\n";
            }
            return s.failed == 0 ? kExitOk : kExitInternal;
        }
    } catch (const error& e) {
        std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
