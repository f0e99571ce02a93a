#include "tightsfs/surgery.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tightsfs/continued_fraction.hpp"

namespace tightsfs {

bool SurgeryDiagram::is_integral() const
{
    if (!central.is_integral())
        return false;
    for (const auto& ch : chains)
        for (const auto& c : ch)
            if (!c.is_integral())
                return false;
    return true;
}

std::size_t SurgeryDiagram::size() const
{
    std::size_t n = 1;
    for (const auto& ch : chains)
        n += ch.size();
    return n;
}

std::vector<Component> SurgeryDiagram::components() const
{
    std::vector<Component> out{central};
    for (const auto& ch : chains)
        out.insert(out.end(), ch.begin(), ch.end());
    return out;
}

std::vector<std::pair<int, int>> SurgeryDiagram::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (const auto& ch : chains) {
        int prev = central.id;
        for (const auto& c : ch) {
            out.emplace_back(prev, c.id);
            prev = c.id;
        }
    }
    return out;
}

int SurgeryDiagram::next_id() const
{
    int m = central.id;
    for (const auto& ch : chains)
        for (const auto& c : ch)
            m = std::max(m, c.id);
    return m + 1;
}

std::string SurgeryDiagram::str() const
{
    std::ostringstream os;
    os << "(" << central.coefficient.str() << ";";
    for (std::size_t i = 0; i < chains.size(); ++i) {
        os << (i ? " | " : " ");
        for (std::size_t j = 0; j < chains[i].size(); ++j)
            os << (j ? "," : "") << chains[i][j].coefficient.str();
    }
    os << ")";
    return os.str();
}

SurgeryDiagram seifert_to_diagram(const SeifertInvariants& inv)
{
    inv.validate();
    SurgeryDiagram d;
    d.central = {0, Rational(0)};
    int id = 1;
    for (const auto& f : inv.fibers)
        d.chains.push_back({{id++, Rational(f.p, f.q)}});
    d.history.push_back("seifert_to_diagram " + inv.str());
    return d;
}

namespace {

// Locate a chain-terminal component; returns chain index or throws.
std::size_t terminal_chain(const SurgeryDiagram& d, int id)
{
    for (std::size_t i = 0; i < d.chains.size(); ++i) {
        const auto& ch = d.chains[i];
        for (std::size_t j = 0; j < ch.size(); ++j) {
            if (ch[j].id != id)
                continue;
            if (j + 1 != ch.size())
                throw error(errc::not_rational, "component " + std::to_string(id) + " is chain-internal");
            return i;
        }
    }
    if (d.central.id == id)
        throw error(errc::not_rational, "the central component is not chain-terminal");
    throw error(errc::invalid_state, "no component with id " + std::to_string(id));
}

std::vector<i64> floor_expansion(const Rational& r)
{
    std::vector<i64> out;
    i64 n = r.num(), d = r.den();
    while (true) {
        i64 a = floor_div(n, d);
        out.push_back(a);
        i64 rem = checked_sub(checked_mul(a, d), n);
        if (rem == 0)
            return out;
        n = -d;
        d = -rem;
    }
}

}  // namespace

SurgeryDiagram rolfsen_twist(const SurgeryDiagram& d, int id, i64 k)
{
    if (k == 0)
        throw error(errc::invalid_state, "rolfsen twist with k = 0");
    std::size_t ci = terminal_chain(d, id);
    SurgeryDiagram out = d;
    auto& ch = out.chains[ci];
    Component& c = ch.back();
    i64 p = c.coefficient.num(), q = c.coefficient.den();
    i64 nq = checked_add(q, checked_mul(k, p));
    if (nq == 0)
        throw error(errc::invalid_state, "rolfsen twist would produce an infinite coefficient");
    c.coefficient = Rational(p, nq);
    Component& nb = ch.size() >= 2 ? ch[ch.size() - 2] : out.central;
    nb.coefficient += Rational(k);
    out.history.push_back("rolfsen_twist " + std::to_string(id) + " k=" + std::to_string(k));
    return out;
}

SurgeryDiagram slam_dunk_expand(const SurgeryDiagram& d, int id)
{
    std::size_t ci = terminal_chain(d, id);
    const Component& c = d.chains[ci].back();
    if (c.is_integral())
        throw error(errc::integer_already, "component " + std::to_string(id) + " already integral");
    if (c.coefficient >= Rational(-1))
        throw error(errc::expansion_impossible,
                    "coefficient " + c.coefficient.str() + " has no expansion with quotients <= -2");
    NegContinuedFraction cf = neg_cf(c.coefficient, cf_mode::strict);
    SurgeryDiagram out = d;
    auto& ch = out.chains[ci];
    int nid = d.next_id();
    ch.back().coefficient = Rational(cf.coeffs[0]);
    for (std::size_t j = 1; j < cf.coeffs.size(); ++j)
        ch.push_back({nid++, Rational(cf.coeffs[j])});
    out.history.push_back("slam_dunk_expand " + std::to_string(id));
    return out;
}

SurgeryDiagram normalize_diagram(const SeifertInvariants& inv,
                                 const std::function<void(const SurgeryDiagram&)>& on_stage)
{
    SurgeryDiagram d = seifert_to_diagram(inv);
    if (on_stage) on_stage(d);
    for (std::size_t i = 0; i < 4; ++i) {
        const Fiber& f = inv.fibers[i];
        i64 twists = -floor_div(-f.q, f.p);
        int id = d.chains[i].back().id;
        for (i64 t = 0; t < twists; ++t) {
            d = rolfsen_twist(d, id, -1);
            if (on_stage) on_stage(d);
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        const Component& c = d.chains[i].back();
        if (c.is_integral())
            continue;
        d = slam_dunk_expand(d, c.id);
        if (on_stage) on_stage(d);
    }
    return d;
}

IntMatrix presentation_matrix(const SurgeryDiagram& d)
{
    if (!d.is_integral())
        throw error(errc::not_integral, "presentation matrix needs an integral diagram");
    auto comps = d.components();
    std::size_t n = comps.size();
    IntMatrix m(n, std::vector<i64>(n, 0));
    std::vector<int> ids;
    for (const auto& c : comps)
        ids.push_back(c.id);
    auto index = [&](int id) {
        return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
    };
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = comps[i].coefficient.num();
    for (auto [a, b] : d.edges()) {
        std::size_t i = index(a), j = index(b);
        m[i][j] = m[j][i] = 1;
    }
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b)
{
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix out(n, std::vector<i64>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] = checked_add(out[i][j], checked_mul(a[i][l], b[l][j]));
        }
    return out;
}

namespace {

IntMatrix identity(std::size_t n)
{
    IntMatrix m(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, i64 f)
{
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = checked_add(m[dst][j], checked_mul(f, m[src][j]));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, i64 f)
{
    for (auto& row : m)
        row[dst] = checked_add(row[dst], checked_mul(f, row[src]));
}

// Quotient rounded to the nearest integer, so remainders stay within half
// the pivot and the transforms grow slowly.
i64 round_div(i64 a, i64 b)
{
    i64 q = floor_div(a, b);
    i64 r = a - q * b;
    if (2 * std::llabs(r) > std::llabs(b))
        q += 1;
    return q;
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (auto& row : m)
        std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    SmithForm s{m, identity(rows), identity(cols)};
    IntMatrix& D = s.D;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // pivot: smallest nonzero magnitude in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D[i][j] != 0 && (pi == rows || std::llabs(D[i][j]) < std::llabs(D[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        std::swap(D[t], D[pi]);
        std::swap(s.U[t], s.U[pi]);
        swap_cols(D, t, pj);
        swap_cols(s.V, t, pj);

        bool done = false;
        while (!done) {
            done = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (D[i][t] == 0) continue;
                i64 q = round_div(D[i][t], D[t][t]);
                add_row(D, i, t, -q);
                add_row(s.U, i, t, -q);
                if (D[i][t] != 0) {
                    std::swap(D[t], D[i]);
                    std::swap(s.U[t], s.U[i]);
                    done = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (D[t][j] == 0) continue;
                i64 q = round_div(D[t][j], D[t][t]);
                add_col(D, j, t, -q);
                add_col(s.V, j, t, -q);
                if (D[t][j] != 0) {
                    swap_cols(D, t, j);
                    swap_cols(s.V, t, j);
                    done = false;
                }
            }
            if (!done) continue;
            // divisibility of the trailing block by the pivot
            for (std::size_t i = t + 1; i < rows && done; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        add_row(D, t, i, 1);
                        add_row(s.U, t, i, 1);
                        done = false;
                        break;
                    }
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : s.U[t]) x = -x;
        }
    }
    return s;
}

SurgeryDiagram integral_expansion(const SurgeryDiagram& d)
{
    if (!d.central.is_integral())
        throw error(errc::not_integral, "central coefficient must be integral");
    SurgeryDiagram out = d;
    int nid = d.next_id();
    for (auto& ch : out.chains) {
        for (std::size_t j = 0; j + 1 < ch.size(); ++j)
            if (!ch[j].is_integral())
                throw error(errc::not_integral, "only chain-terminal components may be rational");
        if (ch.empty() || ch.back().is_integral())
            continue;
        auto coeffs = floor_expansion(ch.back().coefficient);
        ch.back().coefficient = Rational(coeffs[0]);
        for (std::size_t j = 1; j < coeffs.size(); ++j)
            ch.push_back({nid++, Rational(coeffs[j])});
    }
    return out;
}

i64 h1_order_snf(const SurgeryDiagram& d)
{
    SmithForm s = smith_normal_form(presentation_matrix(integral_expansion(d)));
    i64 order = 1;
    for (std::size_t i = 0; i < s.D.size(); ++i) {
        if (s.D[i][i] == 0)
            return 0;
        order = checked_mul(order, std::llabs(s.D[i][i]));
    }
    return order;
}

// For coefficients p_i/q_i the relations p_i m_i + q_i sum_{j~i} m_j = 0
// present H1, so |H1| = |prod q_i * det W| with W the weighted adjacency
// matrix carrying p_i/q_i on the diagonal. det W is computed by stripping
// chains from their leaves.
i64 h1_order(const SurgeryDiagram& d)
{
    Rational det(1);
    Rational dens(1);
    Rational centre = d.central.coefficient;
    dens = dens * Rational(d.central.coefficient.den());
    for (const auto& ch : d.chains) {
        Rational x;
        for (std::size_t j = ch.size(); j-- > 0;) {
            const Rational& w = ch[j].coefficient;
            dens = dens * Rational(w.den());
            x = (j + 1 == ch.size()) ? w : w - x.reciprocal();
            if (x.num() == 0)
                return h1_order_snf(d);
            det = det * x;
        }
        if (!ch.empty())
            centre -= x.reciprocal();
    }
    det = det * centre * dens;
    if (!det.is_integer())
        throw error(errc::invalid_state, "homology order computation produced a fraction");
    return det.abs().num();
}

}  // namespace tightsfs
