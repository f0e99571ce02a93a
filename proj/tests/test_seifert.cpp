#include <vector>

#include "test_util.hpp"
#include "tightsfs/seifert.hpp"

using namespace tightsfs;

namespace {

SeifertInvariants inv(Fiber a, Fiber b, Fiber c, Fiber d) { return SeifertInvariants{{a, b, c, d}}; }

// Image of the integer slope floor(q/p) under the inverse attaching map.
Slope pulled_back_slope(const FiberData& f)
{
    return act(f.attaching.inverse(), Slope(f.q / f.p, 1));
}

}  // namespace

TEST_SUITE("seifert") {

TEST_CASE("fiber validation") {
    CHECK_NOTHROW(validate_fiber({2, 1}));
    CHECK_NOTHROW(validate_fiber({5, 13}));
    CHECK_ERRC(validate_fiber({1, 1}), errc::invalid_fiber);
    CHECK_ERRC(validate_fiber({2, 0}), errc::invalid_fiber);
    CHECK_ERRC(validate_fiber({4, 2}), errc::invalid_fiber);
    CHECK(inv({2, 1}, {2, 1}, {2, 1}, {5, 3}).str() == "-1/2,-1/2,-1/2,-3/5");
}

TEST_CASE("euler_number examples") {
    CHECK(euler_number(inv({2, 1}, {2, 1}, {2, 1}, {2, 1})) == -4);
    CHECK(euler_number(inv({2, 1}, {2, 1}, {2, 1}, {5, 3})) == -4);
    CHECK(euler_number(inv({2, 7}, {2, 1}, {2, 1}, {2, 1})) == -7);
    CHECK(euler_number(std::array<Rational, 4>{Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}) ==
          -3);
}

TEST_CASE("fiber_data (2,1)") {
    FiberData f = fiber_data(2, 1);
    CHECK(f.cf.coeffs == std::vector<i64>{-1, -2});
    CHECK(f.u == 1);
    CHECK(f.v == 1);
    CHECK(f.attaching == UnimodularMap(2, 1, 1, 1));
}

TEST_CASE("fiber_data (5,3)") {
    FiberData f = fiber_data(5, 3);
    CHECK(f.cf.coeffs == std::vector<i64>{-1, -3, -2});
    CHECK(5 * f.v - 3 * f.u == 1);
    CHECK(f.u == 3);
    CHECK(f.v == 2);
}

TEST_CASE("fiber_data (2,7)") {
    FiberData f = fiber_data(2, 7);
    CHECK(f.cf.coeffs == std::vector<i64>{-4, -2});
    CHECK(f.attaching.det() == 1);
    // -4 - 1/(-2) = -7/2 by hand
    CHECK(Rational(-4) + Rational(1, 2) == Rational(-7, 2));
    CHECK_ERRC(fiber_data(4, 2), errc::invalid_fiber);
}

TEST_CASE("normalized boundary slopes") {
    // (2,1): -(1 + 0)/(1 + 0); the denominator does not vanish with (u,v) = (1,1)
    CHECK(normalized_boundary_slope(fiber_data(2, 1)) == Slope(-1, 1));
    CHECK(normalized_boundary_slope(fiber_data(5, 3)) == Slope(-3, 2));
    CHECK(normalized_boundary_slope(fiber_data(2, 7)) == Slope(-1, 1));
    CHECK(normalized_boundary_slope(fiber_data(3, 1)) == Slope(-1, 1));
    for (auto [p, q] : std::vector<std::pair<i64, i64>>{{2, 1}, {5, 3}, {2, 7}, {3, 1}, {7, 10}, {9, 17}}) {
        FiberData f = fiber_data(p, q);
        CHECK(normalized_boundary_slope(f) == pulled_back_slope(f));
    }
}

TEST_CASE("section_change examples") {
    CHECK(section_change({0, 0, 0, 0}, {0, 0, 0, 0}) == std::vector<i64>{0, 0, 0, 0});
    CHECK(section_change({2, 0, 0, 0}, {-1, 1, 0, 0}) == std::vector<i64>{1, 1, 0, 0});
    // floor(q_i/p_i) = (3, 0, 1, 2) moved onto the first slot
    CHECK(section_change({3, 0, 1, 2}, {3, 0, -1, -2}) == std::vector<i64>{6, 0, 0, 0});
    CHECK_ERRC(section_change({0, 0, 0, 0}, {1, 0, 0, 0}), errc::bad_shift);
    CHECK_ERRC(section_change({0, 0, 0}, {0, 0, 0}), errc::bad_shift);
}

TEST_CASE("coefficient parsing") {
    auto c = parse_coefficients("-1/2,-1/2, -1/2 ,-3/5");
    CHECK(c[3] == Rational(-3, 5));
    CHECK(normalize(c) == inv({2, 1}, {2, 1}, {2, 1}, {5, 3}));
    CHECK_ERRC(parse_coefficients("-1/2,-1/2,-1/2"), errc::parse_error);
    CHECK_ERRC(parse_coefficients("-1/2,-1/2,-1/2,-1/2,-1/2"), errc::parse_error);
    CHECK_ERRC(parse_coefficients("-1/2,-1/2,-1/2,-2"), errc::parse_error);
    CHECK_ERRC(parse_coefficients("-1/2,-1/2,-1/2,-2/4"), errc::invalid_fiber);
    CHECK_ERRC(parse_coefficients("-1/2,-1/2,-1/2,-1/1"), errc::invalid_fiber);
    CHECK_ERRC(parse_coefficients("-1/2,-1/2,-1/2,0/3"), errc::invalid_fiber);
    CHECK_ERRC(parse_coefficients("-1/2,-1/2,-1/2,a/3"), errc::parse_error);
}

TEST_CASE("normalize moves integer parts onto the first fiber") {
    auto c = parse_coefficients("1/2,-1/2,-1/2,-7/2");
    CHECK(euler_number(c) == -6);
    SeifertInvariants n = normalize(c);
    CHECK(n == inv({2, 5}, {2, 1}, {2, 1}, {2, 1}));
    CHECK(euler_number(n) == -6);
    Rational before(0), after(0);
    for (int i = 0; i < 4; ++i) {
        before += c[i];
        after += n.fibers[i].coefficient();
    }
    CHECK(before == after);
    CHECK_ERRC(normalize(parse_coefficients("-1/2,-1/2,-1/2,1/2")), errc::unsupported_regime);
}

}  // TEST_SUITE
