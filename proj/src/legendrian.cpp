#include "tightsfs/legendrian.hpp"

#include <set>

namespace tightsfs {

bool LegendrianUnknotRealization::is_valid() const
{
    if (tb > -1)
        return false;
    i64 bound = -tb - 1;
    return rot >= -bound && rot <= bound && ((rot - tb - 1) % 2 == 0);
}

std::vector<i64> realizations(i64 framing)
{
    if (framing >= -1)
        throw error(errc::framing_too_large,
                    "framing " + std::to_string(framing) + " leaves no Legendrian unknot with tb = framing + 1");
    std::vector<i64> out;
    for (i64 r = framing + 2; r <= -framing - 2; r += 2)
        out.push_back(r);
    return out;
}

i64 realization_count(i64 framing)
{
    if (framing >= -1)
        throw error(errc::framing_too_large,
                    "framing " + std::to_string(framing) + " leaves no Legendrian unknot with tb = framing + 1");
    return -framing - 1;
}

namespace {

std::vector<i64> integral_framings(const SurgeryDiagram& d)
{
    if (!d.is_integral())
        throw error(errc::not_integral, "Stein structures need an integral diagram");
    std::vector<i64> out;
    for (const auto& c : d.components())
        out.push_back(c.coefficient.num());
    return out;
}

}  // namespace

std::vector<RealizationVector> enumerate_stein_structures(const SurgeryDiagram& d)
{
    std::vector<std::vector<i64>> choices;
    for (i64 f : integral_framings(d))
        choices.push_back(realizations(f));
    std::vector<RealizationVector> out{{}};
    for (const auto& opts : choices) {
        std::vector<RealizationVector> next;
        next.reserve(out.size() * opts.size());
        for (const auto& prefix : out)
            for (i64 r : opts) {
                next.push_back(prefix);
                next.back().push_back(r);
            }
        out = std::move(next);
    }
    return out;
}

i64 stein_structure_count(const SurgeryDiagram& d)
{
    i64 n = 1;
    for (i64 f : integral_framings(d))
        n = checked_mul(n, realization_count(f));
    return n;
}

LowerBound lower_bound(const SeifertInvariants& inv)
{
    i64 e0 = euler_number(inv);
    if (e0 > -4)
        throw error(errc::unsupported_regime, "bounds do not match for e0 > -4");
    LowerBound lb;
    lb.diagram = normalize_diagram(inv);
    lb.vectors = enumerate_stein_structures(lb.diagram);
    lb.count = static_cast<i64>(lb.vectors.size());
    std::set<RealizationVector> seen(lb.vectors.begin(), lb.vectors.end());
    lb.pairwise_distinct = seen.size() == lb.vectors.size();
    return lb;
}

i64 closed_form_count(const SeifertInvariants& inv)
{
    i64 n = euler_number(inv) + 1;
    for (const auto& f : inv.fibers) {
        auto cf = neg_cf(f.coefficient());
        for (std::size_t j = 1; j < cf.coeffs.size(); ++j)
            n = checked_mul(n, cf.coeffs[j] + 1);
    }
    return n < 0 ? -n : n;
}

}  // namespace tightsfs
