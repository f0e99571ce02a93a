#include <algorithm>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "tightsfs/legendrian.hpp"

using namespace tightsfs;

namespace {

SeifertInvariants inv(Fiber a, Fiber b, Fiber c, Fiber d) { return SeifertInvariants{{a, b, c, d}}; }

// Rotation numbers reachable from the max-tb unknot (tb -1, rot 0) by
// stabilizations, each lowering tb by one and moving rot by one.
std::vector<i64> stabilization_oracle(i64 tb)
{
    std::set<i64> rots{0};
    for (i64 t = -1; t > tb; --t) {
        std::set<i64> next;
        for (i64 r : rots) {
            next.insert(r - 1);
            next.insert(r + 1);
        }
        rots = next;
    }
    return {rots.begin(), rots.end()};
}

}  // namespace

TEST_SUITE("legendrian") {

TEST_CASE("realizations examples") {
    CHECK(realizations(-2) == std::vector<i64>{0});
    CHECK(realizations(-4) == std::vector<i64>{-2, 0, 2});
    CHECK(realizations(-3) == std::vector<i64>{-1, 1});
    CHECK(realization_count(-4) == 3);
    CHECK_ERRC(realizations(-1), errc::framing_too_large);
    CHECK_ERRC(realizations(0), errc::framing_too_large);
    CHECK_ERRC(realization_count(3), errc::framing_too_large);
}

TEST_CASE("realizations agree with the stabilization oracle") {
    for (i64 framing = -2; framing >= -15; --framing) {
        auto r = realizations(framing);
        CHECK(r == stabilization_oracle(framing + 1));
        CHECK(realization_count(framing) == static_cast<i64>(r.size()));
        for (i64 rot : r)
            CHECK(LegendrianUnknotRealization{framing + 1, rot}.is_valid());
    }
    CHECK_FALSE(LegendrianUnknotRealization{0, 0}.is_valid());
    CHECK_FALSE(LegendrianUnknotRealization{-2, 0}.is_valid());
    CHECK_FALSE(LegendrianUnknotRealization{-3, 3}.is_valid());
}

TEST_CASE("enumerate_stein_structures examples") {
    SurgeryDiagram d = normalize_diagram(inv({2, 1}, {2, 1}, {2, 1}, {2, 1}));
    auto v = enumerate_stein_structures(d);
    std::set<RealizationVector> got(v.begin(), v.end());
    CHECK(got == std::set<RealizationVector>{{-2, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {2, 0, 0, 0, 0}});

    SurgeryDiagram e = normalize_diagram(inv({2, 1}, {2, 1}, {2, 1}, {5, 3}));
    CHECK(e.str() == "(-4; -2 | -2 | -2 | -3,-2)");
    CHECK(enumerate_stein_structures(e).size() == 6);
    CHECK(stein_structure_count(e) == 3 * 1 * 1 * 1 * 2 * 1);

    SurgeryDiagram single;
    single.central = {0, Rational(-2)};
    CHECK(enumerate_stein_structures(single) == std::vector<RealizationVector>{{0}});

    SurgeryDiagram rational = seifert_to_diagram(inv({5, 3}, {2, 1}, {2, 1}, {2, 1}));
    CHECK_ERRC(enumerate_stein_structures(rational), errc::not_integral);
}

TEST_CASE("lower_bound examples") {
    LowerBound a = lower_bound(inv({2, 1}, {2, 1}, {2, 1}, {2, 1}));
    CHECK(a.count == 3);
    CHECK(a.pairwise_distinct);
    CHECK(a.diagram.str() == "(-4; -2 | -2 | -2 | -2)");

    LowerBound b = lower_bound(inv({2, 1}, {2, 1}, {2, 1}, {5, 3}));
    CHECK(b.count == 6);
    // |-3| * |(-3+1)(-2+1)| by hand
    CHECK(b.count == 3 * 2);

    LowerBound c = lower_bound(inv({2, 7}, {2, 1}, {2, 1}, {2, 1}));
    CHECK(c.count == 6);
    CHECK(c.pairwise_distinct);
}

TEST_CASE("closed form") {
    CHECK(closed_form_count(inv({2, 1}, {2, 1}, {2, 1}, {2, 1})) == 3);
    CHECK(closed_form_count(inv({2, 1}, {2, 1}, {2, 1}, {5, 3})) == 6);
    CHECK(closed_form_count(inv({2, 7}, {2, 1}, {2, 1}, {2, 1})) == 6);
    // -1/3 = [-1, -2, -2]: tail (-1)(-1), so |(-4+1)| * 1
    CHECK(closed_form_count(inv({2, 1}, {2, 1}, {2, 1}, {3, 1})) == 3);
    CHECK(lower_bound(inv({2, 1}, {2, 1}, {2, 1}, {3, 1})).count == 3);
}

}  // TEST_SUITE
