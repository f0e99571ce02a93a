#include <cstdlib>
#include <vector>

#include "test_util.hpp"
#include "tightsfs/surgery.hpp"

using namespace tightsfs;

namespace {

SeifertInvariants inv(Fiber a, Fiber b, Fiber c, Fiber d) { return SeifertInvariants{{a, b, c, d}}; }

SurgeryDiagram star(i64 central, std::vector<std::vector<i64>> chains)
{
    SurgeryDiagram d;
    d.central = {0, Rational(central)};
    int id = 1;
    for (const auto& ch : chains) {
        d.chains.emplace_back();
        for (i64 c : ch)
            d.chains.back().push_back({id++, Rational(c)});
    }
    return d;
}

// Cofactor expansion; fine for the small matrices used here.
i64 laplace_det(const IntMatrix& m)
{
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    i64 det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IntMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<i64> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        det += ((j % 2) ? -1 : 1) * m[0][j] * laplace_det(minor);
    }
    return det;
}

// |H1| of M(0; -q1/p1, ..., -q4/p4) is |prod p_i * sum q_i/p_i|.
i64 seifert_h1(const SeifertInvariants& s)
{
    Rational sum(0);
    i64 prod = 1;
    for (const auto& f : s.fibers) {
        sum += Rational(f.q, f.p);
        prod *= f.p;
    }
    Rational r = sum * Rational(prod);
    REQUIRE(r.is_integer());
    return std::llabs(r.num());
}

}  // namespace

TEST_SUITE("surgery") {

TEST_CASE("seifert_to_diagram") {
    SurgeryDiagram d = seifert_to_diagram(inv({2, 1}, {2, 1}, {2, 1}, {2, 1}));
    CHECK(d.central.coefficient == Rational(0));
    REQUIRE(d.chains.size() == 4);
    for (const auto& ch : d.chains) {
        REQUIRE(ch.size() == 1);
        CHECK(ch[0].coefficient == Rational(2));
    }
    SurgeryDiagram e = seifert_to_diagram(inv({5, 3}, {2, 1}, {2, 1}, {2, 1}));
    CHECK(e.chains[0][0].coefficient == Rational(5, 3));
    CHECK(e.str() == "(0; 5/3 | 2 | 2 | 2)");
}

TEST_CASE("rolfsen_twist examples") {
    SurgeryDiagram d = seifert_to_diagram(inv({2, 1}, {2, 1}, {2, 1}, {2, 1}));
    SurgeryDiagram t = rolfsen_twist(d, 1, -1);
    CHECK(t.chains[0][0].coefficient == Rational(-2));
    CHECK(t.central.coefficient == Rational(-1));
    for (int id = 2; id <= 4; ++id)
        t = rolfsen_twist(t, id, -1);
    CHECK(t.str() == "(-4; -2 | -2 | -2 | -2)");

    SurgeryDiagram e = seifert_to_diagram(inv({5, 3}, {2, 1}, {2, 1}, {2, 1}));
    SurgeryDiagram te = rolfsen_twist(e, 1, -1);
    CHECK(te.chains[0][0].coefficient == Rational(-5, 2));
    CHECK(te.central.coefficient == Rational(-1));
    CHECK(h1_order(te) == h1_order(e));

    CHECK_ERRC(rolfsen_twist(d, 1, 0), errc::invalid_state);
    CHECK_ERRC(rolfsen_twist(d, 0, -1), errc::not_rational);
    CHECK_ERRC(rolfsen_twist(d, 9, -1), errc::invalid_state);
}

TEST_CASE("slam_dunk_expand examples") {
    SurgeryDiagram d = rolfsen_twist(seifert_to_diagram(inv({5, 3}, {2, 1}, {2, 1}, {2, 1})), 1, -1);
    SurgeryDiagram s = slam_dunk_expand(d, 1);
    REQUIRE(s.chains[0].size() == 2);
    CHECK(s.chains[0][0].coefficient == Rational(-3));
    CHECK(s.chains[0][1].coefficient == Rational(-2));
    CHECK(s.chains[0][1].id == 5);
    CHECK(h1_order(s) == h1_order(d));

    SurgeryDiagram integral = star(-4, {{-2}, {-2}, {-2}, {-2}});
    CHECK_ERRC(slam_dunk_expand(integral, 1), errc::integer_already);
    SurgeryDiagram half = star(-1, {{-1}});
    half.chains[0][0].coefficient = Rational(-1, 2);
    CHECK_ERRC(slam_dunk_expand(half, 1), errc::expansion_impossible);
}

TEST_CASE("presentation_matrix examples") {
    IntMatrix m = presentation_matrix(star(-4, {{-2}, {-2}, {-2}, {-2}}));
    REQUIRE(m.size() == 5);
    std::vector<i64> diag;
    for (std::size_t i = 0; i < 5; ++i)
        diag.push_back(m[i][i]);
    CHECK(diag == std::vector<i64>{-4, -2, -2, -2, -2});
    for (std::size_t i = 1; i < 5; ++i) {
        CHECK(m[0][i] == 1);
        CHECK(m[i][0] == 1);
    }
    CHECK(presentation_matrix(star(-1, {})) == IntMatrix{{-1}});
    CHECK(presentation_matrix(star(-2, {{-2}})) == IntMatrix{{-2, 1}, {1, -2}});
    SurgeryDiagram rational = star(0, {{2}});
    rational.chains[0][0].coefficient = Rational(5, 3);
    CHECK_ERRC(presentation_matrix(rational), errc::not_integral);
}

TEST_CASE("h1_order examples") {
    SurgeryDiagram d = star(-4, {{-2}, {-2}, {-2}, {-2}});
    CHECK(h1_order(d) == 32);
    CHECK(h1_order_snf(d) == 32);
    // Schur complement: det = 16 * (-4 + 4/2) = -32
    CHECK(std::llabs(laplace_det(presentation_matrix(d))) == 32);
    CHECK(h1_order(star(-1, {})) == 1);
    CHECK(h1_order(star(1, {})) == 1);
    CHECK(h1_order(star(-2, {{-2}})) == 3);
    CHECK(h1_order_snf(star(-2, {{-2}})) == 3);
    CHECK(h1_order(star(0, {})) == 0);
    CHECK(h1_order_snf(star(0, {})) == 0);
    // S^1 x S^2 # L(2,1): the zero pivot path falls back to the SNF
    CHECK(h1_order(star(-1, {{-1}})) == h1_order_snf(star(-1, {{-1}})));
}

TEST_CASE("normalize_diagram reproduces the integral plumbing") {
    CHECK(normalize_diagram(inv({2, 1}, {2, 1}, {2, 1}, {2, 1})).str() == "(-4; -2 | -2 | -2 | -2)");
    CHECK(normalize_diagram(inv({5, 3}, {2, 1}, {2, 1}, {2, 1})).str() == "(-4; -3,-2 | -2 | -2 | -2)");
    CHECK(normalize_diagram(inv({2, 7}, {2, 1}, {2, 1}, {2, 1})).str() == "(-7; -2 | -2 | -2 | -2)");
    CHECK(normalize_diagram(inv({3, 1}, {2, 1}, {2, 1}, {2, 1})).str() == "(-4; -2,-2 | -2 | -2 | -2)");
}

TEST_CASE("h1_order is stable along the pipeline and matches the Seifert formula") {
    for (const auto& s : {inv({2, 1}, {2, 1}, {2, 1}, {2, 1}), inv({5, 3}, {2, 1}, {2, 1}, {2, 1}),
                          inv({2, 7}, {3, 1}, {5, 2}, {7, 3}), inv({3, 1}, {3, 1}, {3, 1}, {3, 1})}) {
        i64 expected = seifert_h1(s);
        int stages = 0;
        normalize_diagram(s, [&](const SurgeryDiagram& d) {
            ++stages;
            CHECK(h1_order(d) == expected);
            CHECK(h1_order_snf(d) == expected);
        });
        CHECK(stages >= 5);
    }
}

TEST_CASE("smith normal form reconstructs") {
    IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    SmithForm s = smith_normal_form(m);
    CHECK(matmul(matmul(s.U, m), s.V) == s.D);
    CHECK(s.D[0][0] == 2);
    CHECK(s.D[1][1] == 6);
    CHECK(s.D[2][2] == 12);
    CHECK(std::llabs(laplace_det(s.U)) == 1);
    CHECK(std::llabs(laplace_det(s.V)) == 1);
}

}  // TEST_SUITE
