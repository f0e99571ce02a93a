#pragma once

#include <array>
#include <string>
#include <vector>

#include "tightsfs/continued_fraction.hpp"
#include "tightsfs/rational.hpp"

namespace tightsfs {

// Exceptional fiber with Seifert coefficient -q/p.
struct Fiber {
    i64 p = 2;
    i64 q = 1;

    Rational coefficient() const { return Rational(-q, p); }
    friend bool operator==(const Fiber&, const Fiber&) = default;
    friend auto operator<=>(const Fiber&, const Fiber&) = default;
};

void validate_fiber(const Fiber& f);

struct SeifertInvariants {
    std::array<Fiber, 4> fibers;

    void validate() const;
    std::string str() const;
    friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

struct FiberData {
    i64 p = 0, q = 0;
    NegContinuedFraction cf;  // of -q/p, relaxed mode
    Convergents conv;
    i64 u = 0, v = 1;
    UnimodularMap attaching;  // (p u; q v)
};

i64 euler_number(const SeifertInvariants& inv);
i64 euler_number(const std::array<Rational, 4>& coefficients);

FiberData fiber_data(i64 p, i64 q);
inline FiberData fiber_data(const Fiber& f) { return fiber_data(f.p, f.q); }

// Dividing slope on the boundary of the solid torus V_i once the ambient
// slope on the fibered side is floor(q/p): -(q + (a0+1)p)/(v + (a0+1)u).
Slope normalized_boundary_slope(const FiberData& f);

std::vector<i64> section_change(const std::vector<i64>& slopes, const std::vector<i64>& shifts);

// Comma separated signed fractions, e.g. "-1/2,-1/2,-1/2,-3/5". Each entry
// must have denominator >= 2 coprime to a nonzero numerator; the sign is not
// constrained here, so unnormalized inputs can be inspected.
std::array<Rational, 4> parse_coefficients(const std::string& text);

// Moves integral parts so every fiber has q >= 1. Inputs already of that
// form are returned unchanged. Requires euler_number(coefficients) <= -4.
SeifertInvariants normalize(const std::array<Rational, 4>& coefficients);

}  // namespace tightsfs
