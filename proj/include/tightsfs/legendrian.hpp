#pragma once

#include <vector>

#include "tightsfs/seifert.hpp"
#include "tightsfs/surgery.hpp"

namespace tightsfs {

struct LegendrianUnknotRealization {
    i64 tb = -1;
    i64 rot = 0;

    bool is_valid() const;
};

// One rotation number per component, ordered like SurgeryDiagram::components();
// tb of each component is its framing + 1.
using RealizationVector = std::vector<i64>;

// Rotation numbers of Legendrian unknots with tb = framing + 1, ascending.
std::vector<i64> realizations(i64 framing);
i64 realization_count(i64 framing);

std::vector<RealizationVector> enumerate_stein_structures(const SurgeryDiagram& d);
i64 stein_structure_count(const SurgeryDiagram& d);

struct LowerBound {
    i64 count = 0;
    std::vector<RealizationVector> vectors;
    bool pairwise_distinct = false;
    SurgeryDiagram diagram;
};

LowerBound lower_bound(const SeifertInvariants& inv);

// |(e0 + 1) * prod_i prod_{j >= 1} (a_j^i + 1)|
i64 closed_form_count(const SeifertInvariants& inv);

}  // namespace tightsfs
