#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tightsfs/rational.hpp"
#include "tightsfs/seifert.hpp"

namespace tightsfs {

struct Component {
    int id = 0;
    Rational coefficient;

    bool is_integral() const { return coefficient.is_integer(); }
    friend bool operator==(const Component&, const Component&) = default;
};

// Star-shaped diagram of unknots: a central component linked once with the
// root of each chain; consecutive chain members are linked once.
struct SurgeryDiagram {
    Component central;
    std::vector<std::vector<Component>> chains;  // root to leaf
    std::vector<std::string> history;

    bool is_integral() const;
    std::size_t size() const;
    // central first, then chains in order, root to leaf
    std::vector<Component> components() const;
    std::vector<std::pair<int, int>> edges() const;
    int next_id() const;
    std::string str() const;
};

SurgeryDiagram seifert_to_diagram(const SeifertInvariants& inv);

// Twist along a chain-terminal component with coefficient p/q: it becomes
// p/(q + k p) and its neighbour's coefficient changes by k.
SurgeryDiagram rolfsen_twist(const SurgeryDiagram& d, int id, i64 k);

// Replaces a chain-terminal coefficient r < -1 by the chain of its
// expansion with all quotients <= -2.
SurgeryDiagram slam_dunk_expand(const SurgeryDiagram& d, int id);

// Full normalisation: |a0| twists with k = -1 on every meridian, then slam
// dunks on each non-integral terminal. on_stage sees every intermediate
// diagram including the first and last.
SurgeryDiagram normalize_diagram(const SeifertInvariants& inv,
                                 const std::function<void(const SurgeryDiagram&)>& on_stage = {});

using IntMatrix = std::vector<std::vector<i64>>;

IntMatrix presentation_matrix(const SurgeryDiagram& d);

struct SmithForm {
    IntMatrix D, U, V;  // D = U * M * V
};

SmithForm smith_normal_form(const IntMatrix& m);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// Order of H1 of the surgered manifold; 0 when infinite.
i64 h1_order(const SurgeryDiagram& d);
// Same quantity from the Smith normal form of the integral expansion.
i64 h1_order_snf(const SurgeryDiagram& d);

// Replaces every non-integral terminal by an integral chain using
// floor-based expansions (valid for either sign).
SurgeryDiagram integral_expansion(const SurgeryDiagram& d);

}  // namespace tightsfs
