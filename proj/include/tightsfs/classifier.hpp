#pragma once

#include <string>
#include <vector>

#include "tightsfs/convex.hpp"
#include "tightsfs/legendrian.hpp"
#include "tightsfs/seifert.hpp"

namespace tightsfs {

struct FiberReport {
    i64 p = 0, q = 0;
    std::vector<i64> cf;
    i64 u = 0, v = 1;
    Slope boundary_slope;
    i64 solid_torus_count = 0;

    friend bool operator==(const FiberReport&, const FiberReport&) = default;
};

struct UpperBoundBreakdown {
    i64 s = 0;
    i64 shirt = 0;
    std::vector<i64> solid_torus_counts;

    friend bool operator==(const UpperBoundBreakdown&, const UpperBoundBreakdown&) = default;
};

struct UpperBound {
    i64 count = 0;
    UpperBoundBreakdown breakdown;
};

struct Certificates {
    bool bounds_equal = false;
    bool distinct_chern = false;

    friend bool operator==(const Certificates&, const Certificates&) = default;
};

struct ClassificationReport {
    SeifertInvariants invariants;
    i64 e0 = 0;
    std::vector<FiberReport> fibers;
    i64 count_zero_torsion = 0;
    i64 lower_bound = 0;
    i64 upper_bound = 0;
    i64 closed_form = 0;
    std::string diagram;
    std::vector<RealizationVector> realization_vectors;
    UpperBoundBreakdown upper_bound_breakdown;
    Certificates certificates;
    std::vector<std::string> statements;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

// Message used for every e0 > -4 rejection.
std::string unsupported_regime_message(i64 e0);

UpperBound upper_bound(const SeifertInvariants& inv);

// Throws errc::unsupported_regime for e0 > -4 and errc::invalid_state if the
// two bounds disagree.
ClassificationReport classify(const SeifertInvariants& inv);

// Parses the fiber grammar, rejects e0 > -4 before any fiber normalisation,
// then classifies.
SeifertInvariants parse_and_normalize(const std::string& fibers);
ClassificationReport classify(const std::string& fibers);

struct SweepSummary {
    int max_p = 0;
    i64 fibers = 0;
    i64 cases = 0;
    i64 passed = 0;
    i64 failed = 0;
    i64 h1_checks = 0;
    std::vector<std::string> failures;  // first few only
};

// All sorted 4-tuples of fibers with p <= max_p, 1 <= q <= q_factor * p,
// gcd(p, q) = 1 and e0 <= -4. Each case checks lower = upper = closed form
// and, when check_h1 is set, h1 invariance along the surgery pipeline.
SweepSummary verify_sweep(int max_p, int q_factor = 2, bool check_h1 = true);

}  // namespace tightsfs
