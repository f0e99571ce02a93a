#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightsfs/rational.hpp"
#include "tightsfs/seifert.hpp"

namespace tightsfs {

// ---- Honda counts -------------------------------------------------------

i64 solid_torus_count(const Slope& boundary_slope);

struct AnnulusCount {
    bool holonomy_family = false;  // non-rotative: a Z-indexed family
    i64 count = 0;
};

AnnulusCount toric_annulus_count(const Slope& s0, const Slope& s1);

Slope edge_rounding_slope(const std::vector<Slope>& face_slopes, i64 corner_count,
                          const Rational& corner_correction);

// Integer slope floor(q/p) reached on the fibered side after all bypasses.
Slope maximize_twisting(const FiberData& f);

// ---- Dividing sets ------------------------------------------------------

enum class surface_kind { disc, annulus, pants, shirt };

const char* surface_name(surface_kind s);

struct Region {
    int sign = 1;                // +1 or -1
    std::vector<int> holes;      // boundary circles disjoint from the dividing set
    std::vector<int> segments;   // boundary segments, indexed by their starting slot
};

// Combinatorial dividing set on a planar surface. Boundary b owns the slots
// [offset(b), offset(b) + slots[b]) in cyclic order; segment s runs from
// slot s to the next slot on the same boundary. arcs[s] is the slot joined
// to s. Closed curves are stored by the pair of regions they separate.
struct DividingSetState {
    surface_kind surface = surface_kind::pants;
    int boundary_count = 0;
    std::vector<int> slots;
    std::vector<int> arcs;
    std::vector<Region> regions;
    std::vector<std::pair<int, int>> curves;
    int twist = 0;

    int slot_count() const;
    int offset(int boundary) const;
    int boundary_of_slot(int slot) const;
    int next_slot(int slot) const;
    int prev_slot(int slot) const;

    // Face boundary cycles: lists of segments traversed around each face.
    std::vector<std::vector<int>> face_cycles() const;
    int region_of_segment(int seg) const;
    int region_of_hole(int hole) const;
    int euler_characteristic(int region) const;

    // Throws errc::invalid_state describing the first violated invariant.
    void validate() const;
    bool has_disc_curve() const;

    std::string serialize() const;
};

bool detect_bypass(const DividingSetState& state, int boundary_index);

// Holes on the far side of closed curve c as seen from its first region.
std::vector<int> curve_side_holes(const DividingSetState& state, std::size_t c);

// Counts of closed curves per isotopy class, keyed by the sorted hole set of
// the side not containing hole 0.
std::map<std::vector<int>, int> parallel_closed_curves(const DividingSetState& state);

// Canonical form under the given hole permutations (identity if empty).
std::string canonical_key(const DividingSetState& state,
                          const std::vector<std::vector<int>>& hole_perms = {});

// ---- Pants and shirt states ---------------------------------------------

struct SignedFactorization {
    std::array<int, 3> signs{};
};

struct PantsState {
    std::string name;  // A, B, B', C, C', D, D', E, E'
    std::array<Slope, 3> boundary_slopes{Slope(0, 1), Slope(0, 1), Slope(-1, 1)};
    std::optional<SignedFactorization> factorization;
    DividingSetState state;
};

struct PantsCandidate {
    std::string label;
    bool overtwisted = false;
    std::string reason;
    std::optional<PantsState> state;
};

// Every case considered, including the overtwisted ones with reasons.
std::vector<PantsCandidate> pants_case_analysis();
std::vector<PantsState> enumerate_pants_states();
DividingSetState mirror(const DividingSetState& s);

enum class shirt_kind { zero_torsion, torsion, overtwisted };

struct ShirtOutcome {
    shirt_kind kind = shirt_kind::overtwisted;
    std::string reason;
    DividingSetState state;  // the glued dividing set, also for rejected outcomes
};

ShirtOutcome glue_pants_pair(const PantsState& a, const PantsState& b);

// Permutations of the shirt holes (a0, a1, b0, b1) that swap holes within
// a pants; shirt pictures are drawn up to these.
std::vector<std::vector<int>> shirt_picture_symmetries();

enum class filter_result { tight_candidate, overtwisted };
filter_result filter_solid_torus_gluing(const DividingSetState& shirt);

i64 relative_euler_class(const DividingSetState& state);

// Exchanges the roles of the two pants halves of a shirt.
DividingSetState swap_halves(const DividingSetState& shirt);
std::string section_change_normal_form(const DividingSetState& shirt);
bool section_change_equivalent(const DividingSetState& a, const DividingSetState& b);

struct GluingSummary {
    int pairs = 0;
    int overtwisted_pairs = 0;
    int torsion_pairs = 0;
    std::vector<DividingSetState> configurations;  // distinct zero-torsion pictures
    std::vector<std::vector<std::pair<std::string, std::string>>> sources;
    std::vector<DividingSetState> torsion_classes;
    std::vector<DividingSetState> survivors;          // after the solid torus filter
    std::vector<std::vector<DividingSetState>> classes;  // section-change classes
};

GluingSummary gluing_sweep();

struct ShirtCandidate {
    int shirt_class = 0;     // index into GluingSummary::classes
    i64 shirt_euler = 0;
    i64 positive_bypasses = 0;  // j in 0..s for the 0 -> s annulus
    int twist = 0;
    i64 euler() const;
    i64 s = 0;
};

struct ShirtAudit {
    i64 s = 0;
    i64 raw = 0;
    i64 sign_matched = 0;
    i64 classes = 0;
    std::vector<ShirtCandidate> matched;
    std::vector<ShirtCandidate> normal_forms;
};

ShirtAudit shirt_count_audit(i64 s);
i64 shirt_count(i64 s);

}  // namespace tightsfs
