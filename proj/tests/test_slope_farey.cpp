#include <limits>
#include <utility>
#include <vector>

#include "test_util.hpp"
#include "tightsfs/continued_fraction.hpp"
#include "tightsfs/rational.hpp"

using namespace tightsfs;

namespace {

// Independent evaluation: multiply the matrices (a -1; 1 0) left to right
// and read the value off the first column.
std::pair<long long, long long> matrix_eval(const std::vector<i64>& cf)
{
    long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (i64 a : cf) {
        long long n00 = m00 * a + m01, n01 = -m00;
        long long n10 = m10 * a + m11, n11 = -m10;
        m00 = n00; m01 = n01; m10 = n10; m11 = n11;
    }
    if (m10 < 0) { m00 = -m00; m10 = -m10; }
    return {m00, m10};
}

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("arithmetic and ordering") {
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-3, 5).floor() == -1);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(-5, 2).reciprocal() == Rational(-2, 5));
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(-3, 5).str() == "-3/5");
    CHECK_ERRC(Rational(1, 0), errc::division_by_zero);
    CHECK_ERRC(Rational::parse("1/0"), errc::parse_error);
    CHECK_ERRC(Rational::parse("x/2"), errc::parse_error);
}

TEST_CASE("checked arithmetic overflows loudly") {
    const i64 big = std::numeric_limits<i64>::max();
    CHECK_ERRC(checked_add(big, 1), errc::overflow);
    CHECK_ERRC(checked_mul(big / 2 + 1, 2), errc::overflow);
    CHECK_ERRC(checked_neg(std::numeric_limits<i64>::min()), errc::overflow);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(gcd(-12, 18) == 6);
}

TEST_CASE("slopes are canonical") {
    CHECK(Slope(2, -4) == Slope(-1, 2));
    CHECK(Slope(5, 0) == Slope::infinity());
    CHECK(Slope(-3, 0) == Slope::infinity());
    CHECK(Slope::parse("inf").is_infinite());
    CHECK(Slope::parse("-5/2") == Slope(-5, 2));
    CHECK(Slope(-1, 2).str() == "-1/2");
    CHECK(Slope::infinity().str() == "inf");
    CHECK_ERRC(Slope(0, 0), errc::invalid_slope);
}

}  // TEST_SUITE

TEST_SUITE("continued fractions") {

TEST_CASE("neg_cf examples") {
    CHECK(neg_cf(Rational(-1, 2)).coeffs == std::vector<i64>{-1, -2});
    CHECK(neg_cf(Rational(-4)).coeffs == std::vector<i64>{-4});
    CHECK(neg_cf(Rational(-3, 5)).coeffs == std::vector<i64>{-1, -3, -2});
    CHECK(neg_cf(Rational(-5, 3), cf_mode::strict).coeffs == std::vector<i64>{-2, -3});
    CHECK(neg_cf(Rational(-1, 3)).coeffs == std::vector<i64>{-1, -2, -2});
    CHECK(neg_cf(Rational(-7, 2)).coeffs == std::vector<i64>{-4, -2});
    CHECK(neg_cf(Rational(-5, 2), cf_mode::strict).coeffs == std::vector<i64>{-3, -2});
}

TEST_CASE("neg_cf examples agree with an independent evaluator") {
    for (auto [n, d] : std::vector<std::pair<i64, i64>>{{-1, 2}, {-4, 1}, {-3, 5}, {-5, 3}, {-1, 3}, {-7, 2}}) {
        auto cf = neg_cf(Rational(n, d)).coeffs;
        CHECK(matrix_eval(cf) == std::pair<long long, long long>{n, d});
    }
}

TEST_CASE("neg_cf errors") {
    CHECK_ERRC(neg_cf(Rational(0)), errc::non_negative_input);
    CHECK_ERRC(neg_cf(Rational(1, 2)), errc::non_negative_input);
    CHECK_ERRC(neg_cf(Rational(-1, 2), cf_mode::strict), errc::strict_mode_impossible);
    CHECK_ERRC(neg_cf(Rational(-1), cf_mode::strict), errc::strict_mode_impossible);
    CHECK(neg_cf(Rational(-1)).coeffs == std::vector<i64>{-1});
}

TEST_CASE("eval_cf examples") {
    CHECK(eval_cf({{-1, -2}}) == Rational(-1, 2));
    CHECK(eval_cf({{-4}}) == Rational(-4));
    CHECK(eval_cf({{-1, -3, -2}}) == Rational(-3, 5));
    CHECK_ERRC(eval_cf({{}}), errc::invalid_continued_fraction);
    CHECK_ERRC(eval_cf({{-1, -1}}), errc::invalid_continued_fraction);
    CHECK_ERRC(eval_cf({{0, -2}}), errc::invalid_continued_fraction);
}

TEST_CASE("convergents") {
    auto c = convergents({{-1, -2}});
    CHECK(c.p == std::vector<i64>{1, 2});
    CHECK(c.q == std::vector<i64>{1, 1});
    CHECK(c.u == 1);
    CHECK(c.v == 1);
    CHECK(c.p.back() * c.v - c.u * c.q.back() == 1);

    auto single = convergents({{-4}});
    CHECK(single.p == std::vector<i64>{1});
    CHECK(single.q == std::vector<i64>{4});
    CHECK(single.u == 0);
    CHECK(single.v == 1);
    CHECK(single.p.back() * single.v - single.u * single.q.back() == 1);

    auto c3 = convergents({{-1, -3, -2}});
    CHECK(c3.p.back() == 5);
    CHECK(c3.q.back() == 3);
    CHECK(5 * c3.v - 3 * c3.u == 1);
}

}  // TEST_SUITE

TEST_SUITE("slope action") {

TEST_CASE("act examples") {
    UnimodularMap a(2, -1, 1, 0);
    for (i64 n = -10; n <= 10; ++n) {
        if (n == 0) continue;
        // s = 1/n is the vector (n, 1); n/(2n-1) by hand
        CHECK(act(a, Slope(1, n)) == Slope(n, 2 * n - 1));
    }
    CHECK(act(a, Slope::infinity()) == Slope(0, 1));
    CHECK(act(UnimodularMap(), Slope(-5, 3)) == Slope(-5, 3));
    CHECK(act(UnimodularMap(), Slope::infinity()) == Slope::infinity());
    CHECK_ERRC(UnimodularMap(2, 0, 0, 1), errc::not_normalizable);
}

TEST_CASE("farey neighbors") {
    CHECK(farey_neighbors(Slope(0, 1), Slope::infinity()));
    CHECK(farey_neighbors(Slope(-1, 1), Slope(-1, 2)));
    CHECK_FALSE(farey_neighbors(Slope(1, 3), Slope(3, 1)));
    CHECK_FALSE(farey_neighbors(Slope(0, 1), Slope(0, 1)));
}

TEST_CASE("to_horizontal sends the vector to (1, 0)") {
    for (auto [x, y] : std::vector<std::pair<i64, i64>>{{1, 0}, {0, 1}, {2, 1}, {5, -3}, {7, 4}, {1, -1}}) {
        UnimodularMap m = to_horizontal(x, y);
        CHECK(m.a * x + m.b * y == 1);
        CHECK(m.c * x + m.d * y == 0);
    }
}

}  // TEST_SUITE
