#pragma once

#include <vector>

#include "tightsfs/rational.hpp"

namespace tightsfs {

enum class cf_mode { relaxed, strict };

// [a0, a1, ..., am] evaluating to a0 - 1/(a1 - 1/(... - 1/am)).
struct NegContinuedFraction {
    std::vector<i64> coeffs;

    bool is_valid() const;
    friend bool operator==(const NegContinuedFraction&, const NegContinuedFraction&) = default;
};

NegContinuedFraction neg_cf(const Rational& r, cf_mode mode = cf_mode::relaxed);
Rational eval_cf(const NegContinuedFraction& cf);

struct Convergents {
    std::vector<i64> p;
    std::vector<i64> q;
    i64 u = 0;
    i64 v = 1;
};

// For cf representing -q/p: p_j = -a_j p_{j-1} - p_{j-2} with seeds
// p_{-2} = -1, p_{-1} = 0, and the same recursion for q_j seeded 0, 1.
Convergents convergents(const NegContinuedFraction& cf);

}  // namespace tightsfs
