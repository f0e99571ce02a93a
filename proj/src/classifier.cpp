#include "tightsfs/classifier.hpp"

#include <map>

#include "tightsfs/surgery.hpp"

namespace tightsfs {

namespace {

const std::vector<std::string>& fixed_statements()
{
    static const std::vector<std::string> s{
        "Stein fillable: every counted structure is obtained by Legendrian surgery on one realization vector "
        "of the integral diagram.",
        "Torsion family: for each positive integer n there is a tight structure with Giroux torsion n, built "
        "from the torsion gluing of the two pants; these are not part of the count.",
        "Structures with positive Giroux torsion on these manifolds are not weakly fillable.",
    };
    return s;
}

void require_supported(i64 e0)
{
    if (e0 > -4)
        throw error(errc::unsupported_regime, unsupported_regime_message(e0));
}

}  // namespace

std::string unsupported_regime_message(i64 e0)
{
    return "e0 = " + std::to_string(e0) +
           " > -4. The Legendrian surgery lower bound and the convex surface upper bound do not "
           "match for e0 > -4, so this case is left open.";
}

UpperBound upper_bound(const SeifertInvariants& inv)
{
    inv.validate();
    require_supported(euler_number(inv));
    UpperBound ub;
    i64 s = 0;
    i64 solid = 1;
    for (const auto& f : inv.fibers) {
        FiberData fd = fiber_data(f);
        s += maximize_twisting(fd).y();
        i64 c = solid_torus_count(normalized_boundary_slope(fd));
        ub.breakdown.solid_torus_counts.push_back(c);
        solid = checked_mul(solid, c);
    }
    ub.breakdown.s = s;
    ub.breakdown.shirt = shirt_count(s);
    ub.count = checked_mul(ub.breakdown.shirt, solid);
    return ub;
}

ClassificationReport classify(const SeifertInvariants& inv)
{
    inv.validate();
    ClassificationReport r;
    r.invariants = inv;
    r.e0 = euler_number(inv);
    require_supported(r.e0);

    UpperBound ub = upper_bound(inv);
    for (std::size_t i = 0; i < 4; ++i) {
        FiberData fd = fiber_data(inv.fibers[i]);
        r.fibers.push_back({fd.p, fd.q, fd.cf.coeffs, fd.u, fd.v, normalized_boundary_slope(fd),
                            ub.breakdown.solid_torus_counts[i]});
    }
    LowerBound lb = tightsfs::lower_bound(inv);
    r.lower_bound = lb.count;
    r.upper_bound = ub.count;
    r.closed_form = closed_form_count(inv);
    r.diagram = lb.diagram.str();
    r.realization_vectors = std::move(lb.vectors);
    r.upper_bound_breakdown = ub.breakdown;
    r.certificates.bounds_equal = r.lower_bound == r.upper_bound && r.upper_bound == r.closed_form;
    r.certificates.distinct_chern = lb.pairwise_distinct;
    r.count_zero_torsion = r.lower_bound;
    r.statements = fixed_statements();
    if (!r.certificates.bounds_equal)
        throw error(errc::invalid_state, "bounds disagree for " + inv.str() + ": lower " +
                                             std::to_string(r.lower_bound) + ", upper " +
                                             std::to_string(r.upper_bound) + ", closed form " +
                                             std::to_string(r.closed_form));
    return r;
}

SeifertInvariants parse_and_normalize(const std::string& fibers)
{
    auto coeffs = parse_coefficients(fibers);
    require_supported(euler_number(coeffs));
    return normalize(coeffs);
}

ClassificationReport classify(const std::string& fibers)
{
    return classify(parse_and_normalize(fibers));
}

namespace {

struct FiberCache {
    Fiber fiber;
    i64 floor_neg = 0;   // floor(-q/p)
    i64 floor_pos = 0;   // floor(q/p)
    i64 tail = 1;        // prod_{j>=1} (a_j + 1)
    i64 solid = 0;
};

}  // namespace

SweepSummary verify_sweep(int max_p, int q_factor, bool check_h1)
{
    SweepSummary sum;
    sum.max_p = max_p;
    std::vector<FiberCache> fibers;
    for (i64 p = 2; p <= max_p; ++p)
        for (i64 q = 1; q <= q_factor * p; ++q) {
            if (gcd(p, q) != 1) continue;
            FiberData fd = fiber_data(p, q);
            FiberCache c;
            c.fiber = {p, q};
            c.floor_neg = fd.cf.coeffs[0];
            c.floor_pos = maximize_twisting(fd).y();
            for (std::size_t j = 1; j < fd.cf.coeffs.size(); ++j)
                c.tail *= fd.cf.coeffs[j] + 1;
            c.solid = solid_torus_count(normalized_boundary_slope(fd));
            fibers.push_back(c);
        }
    sum.fibers = static_cast<i64>(fibers.size());

    std::map<i64, i64> shirt_cache;
    auto shirt = [&](i64 s) {
        auto it = shirt_cache.find(s);
        if (it != shirt_cache.end()) return it->second;
        return shirt_cache[s] = shirt_count(s);
    };

    auto record_failure = [&](const std::string& why) {
        ++sum.failed;
        if (sum.failures.size() < 20)
            sum.failures.push_back(why);
    };

    std::size_t n = fibers.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                for (std::size_t l = k; l < n; ++l) {
                    const FiberCache* fc[4] = {&fibers[i], &fibers[j], &fibers[k], &fibers[l]};
                    SeifertInvariants inv;
                    i64 e0 = 0, s = 0, tails = 1, solid = 1;
                    for (int t = 0; t < 4; ++t) {
                        inv.fibers[t] = fc[t]->fiber;
                        e0 += fc[t]->floor_neg;
                        s += fc[t]->floor_pos;
                        tails *= fc[t]->tail;
                        solid *= fc[t]->solid;
                    }
                    if (e0 > -4) continue;
                    ++sum.cases;
                    try {
                        i64 closed = (e0 + 1) * tails;
                        if (closed < 0) closed = -closed;
                        i64 upper = shirt(s) * solid;
                        i64 h1_first = -1;
                        bool h1_ok = true;
                        SurgeryDiagram d = normalize_diagram(inv, [&](const SurgeryDiagram& stage) {
                            if (!check_h1) return;
                            ++sum.h1_checks;
                            i64 h = h1_order(stage);
                            if (h1_first < 0) h1_first = h;
                            else if (h != h1_first) h1_ok = false;
                        });
                        i64 lower = stein_structure_count(d);
                        if (lower != upper || upper != closed || !h1_ok) {
                            record_failure(inv.str() + ": lower " + std::to_string(lower) + ", upper " +
                                           std::to_string(upper) + ", closed " + std::to_string(closed) +
                                           (h1_ok ? "" : ", h1 changed along the pipeline"));
                            continue;
                        }
                        ++sum.passed;
                    } catch (const error& e) {
                        record_failure(inv.str() + ": " + e.what());
                    }
                }
    return sum;
}

}  // namespace tightsfs
