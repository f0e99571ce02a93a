#include "tightsfs/convex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "tightsfs/continued_fraction.hpp"

namespace tightsfs {

// ---- Honda counts -------------------------------------------------------

namespace {

// |(r0+1)...(r_{k-1}+1) r_k| for the strict expansion of a slope < -1.
i64 honda_product(const Rational& slope)
{
    auto cf = neg_cf(slope, cf_mode::strict);
    i64 n = cf.coeffs.back();
    for (std::size_t i = 0; i + 1 < cf.coeffs.size(); ++i)
        n = checked_mul(n, cf.coeffs[i] + 1);
    return n < 0 ? -n : n;
}

}  // namespace

i64 solid_torus_count(const Slope& s)
{
    if (s.y() == 1 || s.y() == -1)
        return 1;
    if (s.y() == 0)
        throw error(errc::invalid_slope, "slope 0 is the meridian");
    if (s.y() > 0)
        throw error(errc::invalid_slope, "non-negative slope " + s.str() + " outside the 1/n convention");
    // Meridional twists shift x/y by integers; move it into (-1, 0).
    Rational r(s.x(), s.y());
    Rational shifted = r - Rational(r.floor() + 1);
    return honda_product(shifted.reciprocal());
}

AnnulusCount toric_annulus_count(const Slope& s0, const Slope& s1)
{
    AnnulusCount out;
    // Integer pair (0, s): a stack of s basic slices, or a collar when s = 0.
    if (s0 == Slope(0, 1) && !s1.is_infinite() && s1.x() == 1 && s1.y() >= 0) {
        out.count = s1.y() + 1;
        return out;
    }
    if (s0 == s1) {
        out.holonomy_family = true;
        return out;
    }
    UnimodularMap m = to_horizontal(s0.x(), s0.y());
    i64 a = checked_add(checked_mul(m.a, s1.x()), checked_mul(m.b, s1.y()));
    i64 b = checked_add(checked_mul(m.c, s1.x()), checked_mul(m.d, s1.y()));
    if (b == 0)
        throw error(errc::not_normalizable, "boundary slopes are not distinct");
    if (b < 0) {
        a = -a;
        b = -b;
    }
    // Shear fixing s0 so that a lies in [-b, -1]; then s0 -> -1 and
    // s1 -> -(b - a)/(-a) < -1.
    i64 a2 = a % b;
    if (a2 < 0) a2 += b;
    a2 -= b;
    out.count = honda_product(Rational(-(b - a2), -a2));
    return out;
}

Slope edge_rounding_slope(const std::vector<Slope>& face_slopes, i64 corner_count,
                          const Rational& corner_correction)
{
    Rational total(0);
    for (const auto& s : face_slopes)
        total += s.value();
    total -= Rational(corner_count) * corner_correction;
    return Slope(total);
}

Slope maximize_twisting(const FiberData& f)
{
    return Slope(floor_div(f.q, f.p), 1);
}

// ---- Dividing sets ------------------------------------------------------

const char* surface_name(surface_kind s)
{
    switch (s) {
    case surface_kind::disc: return "disc";
    case surface_kind::annulus: return "annulus";
    case surface_kind::pants: return "pants";
    case surface_kind::shirt: return "shirt";
    }
    return "?";
}

int DividingSetState::slot_count() const
{
    return std::accumulate(slots.begin(), slots.end(), 0);
}

int DividingSetState::offset(int boundary) const
{
    return std::accumulate(slots.begin(), slots.begin() + boundary, 0);
}

int DividingSetState::boundary_of_slot(int slot) const
{
    int acc = 0;
    for (int b = 0; b < boundary_count; ++b) {
        acc += slots[b];
        if (slot < acc)
            return b;
    }
    throw error(errc::invalid_state, "slot out of range");
}

int DividingSetState::next_slot(int slot) const
{
    int b = boundary_of_slot(slot);
    int off = offset(b);
    return off + (slot - off + 1) % slots[b];
}

int DividingSetState::prev_slot(int slot) const
{
    int b = boundary_of_slot(slot);
    int off = offset(b);
    return off + (slot - off + slots[b] - 1) % slots[b];
}

std::vector<std::vector<int>> DividingSetState::face_cycles() const
{
    int n = slot_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cyc.push_back(cur);
            cur = arcs[next_slot(cur)];
        }
        out.push_back(cyc);
    }
    return out;
}

int DividingSetState::region_of_segment(int seg) const
{
    for (std::size_t r = 0; r < regions.size(); ++r)
        for (int s : regions[r].segments)
            if (s == seg)
                return static_cast<int>(r);
    return -1;
}

int DividingSetState::region_of_hole(int hole) const
{
    for (std::size_t r = 0; r < regions.size(); ++r)
        for (int h : regions[r].holes)
            if (h == hole)
                return static_cast<int>(r);
    return -1;
}

int DividingSetState::euler_characteristic(int region) const
{
    const Region& r = regions[region];
    int components = static_cast<int>(r.holes.size());
    for (const auto& cyc : face_cycles())
        if (region_of_segment(cyc.front()) == region)
            ++components;
    for (auto [u, v] : curves)
        if (u == region || v == region)
            ++components;
    return 2 - components;
}

namespace {

void fail(const std::string& why) { throw error(errc::invalid_state, why); }

std::vector<std::vector<int>> region_graph(const DividingSetState& s, int skip_curve = -1)
{
    std::vector<std::vector<int>> adj(s.regions.size());
    for (int slot = 0; slot < s.slot_count(); ++slot) {
        int u = s.region_of_segment(s.prev_slot(slot));
        int v = s.region_of_segment(slot);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (std::size_t c = 0; c < s.curves.size(); ++c) {
        if (static_cast<int>(c) == skip_curve) continue;
        auto [u, v] = s.curves[c];
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<bool> reachable(const std::vector<std::vector<int>>& adj, int start)
{
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return seen;
}

}  // namespace

void DividingSetState::validate() const
{
    if (static_cast<int>(slots.size()) != boundary_count)
        fail("slot list does not match boundary count");
    for (int k : slots)
        if (k < 0 || k % 2 != 0)
            fail("each boundary needs an even number of endpoints");
    int n = slot_count();
    if (static_cast<int>(arcs.size()) != n)
        fail("arc pairing does not cover every endpoint");
    for (int s = 0; s < n; ++s)
        if (arcs[s] < 0 || arcs[s] >= n || arcs[s] == s || arcs[arcs[s]] != s)
            fail("arc pairing is not a fixed-point-free involution");

    std::vector<int> seg_count(n, 0);
    std::vector<int> hole_count(boundary_count, 0);
    for (const auto& r : regions) {
        if (r.sign != 1 && r.sign != -1)
            fail("region signs must be +1 or -1");
        for (int s : r.segments) {
            if (s < 0 || s >= n) fail("segment out of range");
            ++seg_count[s];
        }
        for (int h : r.holes) {
            if (h < 0 || h >= boundary_count || slots[h] != 0)
                fail("only boundaries without endpoints can be holes of a region");
            ++hole_count[h];
        }
    }
    for (int s = 0; s < n; ++s)
        if (seg_count[s] != 1) fail("every boundary segment lies in exactly one region");
    for (int b = 0; b < boundary_count; ++b)
        if (slots[b] == 0 && hole_count[b] != 1) fail("every endpoint-free boundary lies in exactly one region");

    for (const auto& cyc : face_cycles()) {
        int r = region_of_segment(cyc.front());
        for (int s : cyc)
            if (region_of_segment(s) != r)
                fail("a face boundary cycle is split between regions");
    }
    for (int s = 0; s < n; ++s)
        if (regions[region_of_segment(prev_slot(s))].sign == regions[region_of_segment(s)].sign)
            fail("signs do not alternate across an arc");
    for (auto [u, v] : curves) {
        if (u < 0 || v < 0 || u >= static_cast<int>(regions.size()) || v >= static_cast<int>(regions.size()) || u == v)
            fail("closed curve must separate two distinct regions");
        if (regions[u].sign == regions[v].sign)
            fail("signs do not alternate across a closed curve");
    }

    int chi_total = 0;
    for (std::size_t r = 0; r < regions.size(); ++r) {
        int chi = euler_characteristic(static_cast<int>(r));
        if (chi > 1) fail("region without boundary");
        chi_total += chi;
    }
    if (chi_total != 2 - boundary_count + n / 2)
        fail("region Euler characteristics are inconsistent with a planar embedding");
    if (!regions.empty()) {
        auto seen = reachable(region_graph(*this), 0);
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            fail("regions do not form a connected surface");
    }
}

bool DividingSetState::has_disc_curve() const
{
    for (std::size_t r = 0; r < regions.size(); ++r) {
        if (!regions[r].holes.empty() || !regions[r].segments.empty())
            continue;
        int touching = 0;
        for (auto [u, v] : curves)
            if (u == static_cast<int>(r) || v == static_cast<int>(r))
                ++touching;
        if (touching == 1)
            return true;
    }
    return false;
}

std::string DividingSetState::serialize() const
{
    std::ostringstream os;
    os << surface_name(surface) << " arcs=[";
    for (std::size_t i = 0; i < arcs.size(); ++i)
        os << (i ? "," : "") << arcs[i];
    os << "] slots=[";
    for (std::size_t i = 0; i < slots.size(); ++i)
        os << (i ? "," : "") << slots[i];
    os << "] regions=[";
    for (std::size_t r = 0; r < regions.size(); ++r) {
        os << (r ? " " : "") << (regions[r].sign > 0 ? '+' : '-') << "{";
        for (std::size_t i = 0; i < regions[r].holes.size(); ++i)
            os << (i ? "," : "") << "h" << regions[r].holes[i];
        for (std::size_t i = 0; i < regions[r].segments.size(); ++i)
            os << ((i || !regions[r].holes.empty()) ? "," : "") << "s" << regions[r].segments[i];
        os << "}";
    }
    os << "] curves=[";
    for (std::size_t c = 0; c < curves.size(); ++c)
        os << (c ? "," : "") << curves[c].first << "-" << curves[c].second;
    os << "] twist=" << twist;
    return os.str();
}

bool detect_bypass(const DividingSetState& state, int boundary_index)
{
    for (const auto& cyc : state.face_cycles()) {
        if (cyc.size() != 1 || state.boundary_of_slot(cyc[0]) != boundary_index)
            continue;
        if (state.euler_characteristic(state.region_of_segment(cyc[0])) == 1)
            return true;
    }
    return false;
}

namespace {

// Boundary circles met by the regions in `side`.
std::vector<int> side_boundaries(const DividingSetState& s, const std::vector<bool>& side)
{
    std::set<int> out;
    for (std::size_t r = 0; r < s.regions.size(); ++r) {
        if (!side[r]) continue;
        for (int h : s.regions[r].holes) out.insert(h);
        for (int seg : s.regions[r].segments) out.insert(s.boundary_of_slot(seg));
    }
    return {out.begin(), out.end()};
}

}  // namespace

std::vector<int> curve_side_holes(const DividingSetState& state, std::size_t c)
{
    auto adj = region_graph(state, static_cast<int>(c));
    return side_boundaries(state, reachable(adj, state.curves[c].second));
}

std::map<std::vector<int>, int> parallel_closed_curves(const DividingSetState& state)
{
    std::map<std::vector<int>, int> out;
    std::vector<int> all(state.boundary_count);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t c = 0; c < state.curves.size(); ++c) {
        auto side = curve_side_holes(state, c);
        if (std::find(side.begin(), side.end(), 0) != side.end()) {
            std::vector<int> other;
            std::set_difference(all.begin(), all.end(), side.begin(), side.end(), std::back_inserter(other));
            side = other;
        }
        ++out[side];
    }
    return out;
}

namespace {

std::string region_label(const Region& r, const std::vector<int>& perm)
{
    std::vector<int> holes;
    for (int h : r.holes)
        holes.push_back(perm.empty() ? h : perm[h]);
    std::sort(holes.begin(), holes.end());
    std::vector<int> segs = r.segments;
    std::sort(segs.begin(), segs.end());
    std::ostringstream os;
    os << (r.sign > 0 ? '+' : '-') << "h";
    for (int h : holes) os << h << '.';
    os << "s";
    for (int s : segs) os << s << '.';
    return os.str();
}

std::string encode_tree(const std::vector<std::string>& labels, const std::vector<std::vector<int>>& adj,
                        int u, int parent)
{
    std::vector<std::string> kids;
    for (int v : adj[u])
        if (v != parent)
            kids.push_back(encode_tree(labels, adj, v, u));
    std::sort(kids.begin(), kids.end());
    std::string out = "(" + labels[u];
    for (const auto& k : kids) out += k;
    return out + ")";
}

std::string canonical_under(const DividingSetState& s, const std::vector<int>& perm)
{
    std::size_t n = s.regions.size();
    std::vector<std::string> labels;
    for (const auto& r : s.regions)
        labels.push_back(region_label(r, perm));
    // Closed curves form a forest on the regions; encode each tree from its
    // best root.
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : s.curves) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> comp(n, -1);
    std::vector<std::string> trees;
    for (std::size_t r = 0; r < n; ++r) {
        if (comp[r] != -1) continue;
        auto seen = reachable(adj, static_cast<int>(r));
        std::string best;
        for (std::size_t u = 0; u < n; ++u) {
            if (!seen[u]) continue;
            comp[u] = static_cast<int>(r);
            std::string e = encode_tree(labels, adj, static_cast<int>(u), -1);
            if (best.empty() || e < best) best = e;
        }
        trees.push_back(best);
    }
    std::sort(trees.begin(), trees.end());
    std::string out;
    for (const auto& t : trees) out += t;
    return out;
}

}  // namespace

std::string canonical_key(const DividingSetState& state, const std::vector<std::vector<int>>& hole_perms)
{
    std::ostringstream head;
    head << surface_name(state.surface) << "|";
    for (int k : state.slots) head << k << ",";
    head << "|";
    for (int a : state.arcs) head << a << ",";
    head << "|t" << state.twist << "|";
    std::string best = canonical_under(state, {});
    for (const auto& p : hole_perms) {
        for (int b = 0; b < state.boundary_count; ++b)
            if (p[b] != b && state.slots[b] != 0)
                throw error(errc::invalid_state, "hole permutations may only move endpoint-free boundaries");
        best = std::min(best, canonical_under(state, p));
    }
    return head.str() + best;
}

// ---- Pants states -------------------------------------------------------

namespace {

struct Side {
    std::vector<int> holes;
    std::vector<int> enclosed;  // holes inside one nested closed curve
};

// Pants with holes 0, 1 (slope 0, no endpoints) and boundary 2 (slope -1)
// carrying one dividing arc. Segment 0 lies on the positive side.
DividingSetState make_pants(const Side& plus, const Side& minus)
{
    DividingSetState s;
    s.surface = surface_kind::pants;
    s.boundary_count = 3;
    s.slots = {0, 0, 2};
    s.arcs = {1, 0};
    s.regions.push_back({+1, plus.holes, {0}});
    s.regions.push_back({-1, minus.holes, {1}});
    if (!plus.enclosed.empty()) {
        s.regions.push_back({-1, plus.enclosed, {}});
        s.curves.emplace_back(0, static_cast<int>(s.regions.size()) - 1);
    }
    if (!minus.enclosed.empty()) {
        s.regions.push_back({+1, minus.enclosed, {}});
        s.curves.emplace_back(1, static_cast<int>(s.regions.size()) - 1);
    }
    s.validate();
    return s;
}

PantsState named(const std::string& name, const DividingSetState& st,
                 std::optional<SignedFactorization> f = std::nullopt)
{
    PantsState p;
    p.name = name;
    p.state = st;
    p.factorization = f;
    return p;
}

std::string sign_text(const std::vector<int>& signs)
{
    std::string out = "(";
    for (std::size_t i = 0; i < signs.size(); ++i)
        out += std::string(i ? "," : "") + (signs[i] > 0 ? "+" : "-");
    return out + ")";
}

}  // namespace

DividingSetState mirror(const DividingSetState& s)
{
    DividingSetState m = s;
    for (auto& r : m.regions)
        r.sign = -r.sign;
    m.twist = -m.twist;
    return m;
}

std::vector<PantsCandidate> pants_case_analysis()
{
    std::vector<PantsCandidate> out;
    const Side none{}, both{{0, 1}, {}}, first{{0}, {}}, second{{1}, {}};

    // Case 1: no boundary-parallel arc. Both sign configurations of the
    // split dividing set give the same structure.
    out.push_back({"case1 split", false, "two sign configurations, one structure",
                   named("A", make_pants(first, second))});

    // Case 2A: bypass present, three basic slices with signs (L1, L2, L3).
    for (int m = 0; m < 8; ++m) {
        std::array<int, 3> sg{(m & 4) ? 1 : -1, (m & 2) ? 1 : -1, (m & 1) ? 1 : -1};
        SignedFactorization f{sg};
        std::string label = "case2A " + sign_text({sg[0], sg[1], sg[2]});
        if (sg[0] == sg[1] && sg[1] == sg[2]) {
            out.push_back({label, true, "all three basic slices share a sign", std::nullopt});
            continue;
        }
        // The odd slice out decides the pattern: L3 alone gives B, L1 alone
        // gives C, L2 alone gives D; the global sign is that of L3.
        std::string base;
        Side plus, minus;
        if (sg[0] == sg[1]) {
            base = "B";
            plus = both; minus = none;
        } else if (sg[1] == sg[2]) {
            base = "C";
            plus = first; minus = second;
        } else {
            base = "D";
            plus = first; minus = second;
        }
        DividingSetState st = make_pants(plus, minus);
        std::string name = base;
        if (sg[2] < 0) {
            name += "'";
            st = mirror(st);
        }
        out.push_back({label, false, "", named(name, st, f)});
    }

    // Case 2B: the pattern on the complementary pants is fixed up to its
    // sign; the two slices of the inner layer must agree with each other
    // and be opposite to it.
    for (int outer : {+1, -1})
        for (int m = 0; m < 4; ++m) {
            int s1 = (m & 2) ? 1 : -1, s2 = (m & 1) ? 1 : -1;
            std::string label = "case2B outer " + std::string(outer > 0 ? "+" : "-") + " " + sign_text({s1, s2});
            if (s1 != s2) {
                out.push_back({label, true, "mixed signs force too much radial twisting", std::nullopt});
                continue;
            }
            if (s1 == outer) {
                out.push_back({label, true, "layer sign matches the outer sign, giving an overtwisted disc",
                               std::nullopt});
                continue;
            }
            DividingSetState st = make_pants(none, Side{{}, {0, 1}});
            std::string name = "E";
            if (outer < 0) {
                st = mirror(st);
                name += "'";
            }
            out.push_back({label, false, "", named(name, st)});
        }
    return out;
}

std::vector<PantsState> enumerate_pants_states()
{
    std::vector<PantsState> out;
    for (auto& c : pants_case_analysis())
        if (!c.overtwisted)
            out.push_back(*c.state);
    static const std::vector<std::string> order{"A", "B", "B'", "C", "C'", "D", "D'", "E", "E'"};
    std::sort(out.begin(), out.end(), [&](const PantsState& a, const PantsState& b) {
        return std::find(order.begin(), order.end(), a.name) < std::find(order.begin(), order.end(), b.name);
    });
    return out;
}

// ---- Gluing -------------------------------------------------------------

namespace {

constexpr int kShirtHoles = 4;

// Copy the regions of `p` reachable from `root` through closed curves into
// `shirt`, merging `root` itself into the shirt region `target`.
void copy_side(const DividingSetState& p, int root, int hole_offset, DividingSetState& shirt, int target)
{
    std::function<void(int, int, int)> walk = [&](int pr, int sr, int parent) {
        for (int h : p.regions[pr].holes)
            shirt.regions[sr].holes.push_back(h + hole_offset);
        for (auto [u, v] : p.curves) {
            int other = (u == pr) ? v : (v == pr ? u : -1);
            if (other < 0 || other == parent) continue;
            shirt.regions.push_back({p.regions[other].sign, {}, {}});
            int nr = static_cast<int>(shirt.regions.size()) - 1;
            shirt.curves.emplace_back(sr, nr);
            walk(other, nr, pr);
        }
    };
    walk(root, target, -1);
}

int side_region(const DividingSetState& p, int sign)
{
    for (int seg = 0; seg < p.slot_count(); ++seg) {
        int r = p.region_of_segment(seg);
        if (p.regions[r].sign == sign)
            return r;
    }
    throw error(errc::invalid_state, "pants state has no region of the requested sign on its glued boundary");
}

bool is_half_pair(const std::vector<int>& side)
{
    return side == std::vector<int>{0, 1} || side == std::vector<int>{2, 3};
}

}  // namespace

std::vector<std::vector<int>> shirt_picture_symmetries()
{
    return {{0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}};
}

// The toric annulus between the glued boundaries passes through slope
// infinity, so the arc of each pants closes up with the arc of the other
// into one curve separating both positive sides from both negative sides.
ShirtOutcome glue_pants_pair(const PantsState& a, const PantsState& b)
{
    ShirtOutcome out;
    DividingSetState& s = out.state;
    s.surface = surface_kind::shirt;
    s.boundary_count = kShirtHoles;
    s.slots.assign(kShirtHoles, 0);
    s.twist = a.state.twist + b.state.twist;
    s.regions.push_back({+1, {}, {}});
    s.regions.push_back({-1, {}, {}});
    s.curves.emplace_back(0, 1);
    copy_side(a.state, side_region(a.state, +1), 0, s, 0);
    copy_side(b.state, side_region(b.state, +1), 2, s, 0);
    copy_side(a.state, side_region(a.state, -1), 0, s, 1);
    copy_side(b.state, side_region(b.state, -1), 2, s, 1);
    s.validate();

    int parallel = 0, boundary_parallel = 0;
    for (std::size_t c = 0; c < s.curves.size(); ++c) {
        auto side = curve_side_holes(s, c);
        if (side.empty() || side.size() == kShirtHoles) {
            out.reason = "a closed dividing curve bounds a disc";
            return out;
        }
        if (side.size() == 2 && !is_half_pair(side)) {
            out.reason = "a dividing curve separates holes of the same pants and meets the gluing torus essentially";
            return out;
        }
        if (side.size() == 2)
            ++parallel;
        else
            ++boundary_parallel;
    }
    if (parallel >= 3) {
        out.kind = shirt_kind::torsion;
        out.reason = "three parallel curves along the gluing torus carry a full twist";
        return out;
    }
    if (parallel >= 1 && boundary_parallel >= 1) {
        out.reason = "a boundary-parallel curve next to a torus-parallel curve yields a bypass along the gluing torus";
        return out;
    }
    out.kind = shirt_kind::zero_torsion;
    return out;
}

filter_result filter_solid_torus_gluing(const DividingSetState& shirt)
{
    for (std::size_t c = 0; c < shirt.curves.size(); ++c) {
        auto side = curve_side_holes(shirt, c);
        if (side.size() == 1 || side.size() + 1 == static_cast<std::size_t>(shirt.boundary_count))
            return filter_result::overtwisted;
    }
    return filter_result::tight_candidate;
}

namespace {
// Orientation convention fixed so that the picture built from B and E has
// relative Euler class -2.
constexpr int kEulerOrientation = 1;
}  // namespace

i64 relative_euler_class(const DividingSetState& state)
{
    i64 e = 0;
    for (std::size_t r = 0; r < state.regions.size(); ++r)
        e += state.regions[r].sign * state.euler_characteristic(static_cast<int>(r));
    return kEulerOrientation * e;
}

DividingSetState swap_halves(const DividingSetState& shirt)
{
    if (shirt.surface != surface_kind::shirt)
        throw error(errc::invalid_state, "swap_halves needs a shirt state");
    DividingSetState out = shirt;
    for (auto& r : out.regions)
        for (auto& h : r.holes)
            h = (h + 2) % kShirtHoles;
    return out;
}

// A half twist across the incompressible annulus exchanges the two halves
// of the shirt. Twists are rewritten away one at a time, then the state is
// compared up to that exchange.
std::string section_change_normal_form(const DividingSetState& shirt)
{
    DividingSetState s = shirt;
    while (s.twist != 0) {
        int t = s.twist > 0 ? s.twist - 1 : s.twist + 1;
        s = swap_halves(s);
        s.twist = t;
    }
    auto syms = shirt_picture_symmetries();
    return std::min(canonical_key(s, syms), canonical_key(swap_halves(s), syms));
}

bool section_change_equivalent(const DividingSetState& a, const DividingSetState& b)
{
    return section_change_normal_form(a) == section_change_normal_form(b);
}

GluingSummary gluing_sweep()
{
    GluingSummary g;
    auto states = enumerate_pants_states();
    auto syms = shirt_picture_symmetries();
    std::vector<std::string> keys, torsion_keys;
    for (const auto& a : states)
        for (const auto& b : states) {
            ++g.pairs;
            ShirtOutcome o = glue_pants_pair(a, b);
            if (o.kind == shirt_kind::overtwisted) {
                ++g.overtwisted_pairs;
                continue;
            }
            if (o.kind == shirt_kind::torsion) {
                ++g.torsion_pairs;
                std::string k = section_change_normal_form(o.state);
                if (std::find(torsion_keys.begin(), torsion_keys.end(), k) == torsion_keys.end()) {
                    torsion_keys.push_back(k);
                    g.torsion_classes.push_back(o.state);
                }
                continue;
            }
            std::string k = canonical_key(o.state, syms);
            auto it = std::find(keys.begin(), keys.end(), k);
            if (it == keys.end()) {
                keys.push_back(k);
                g.configurations.push_back(o.state);
                g.sources.push_back({{a.name, b.name}});
            } else {
                g.sources[it - keys.begin()].emplace_back(a.name, b.name);
            }
        }
    // Picture order: tight candidates first (Euler class 0, then -2, then 2),
    // then the ones with a boundary-parallel curve.
    auto rank = [](const DividingSetState& st) {
        i64 e = relative_euler_class(st);
        int bp = filter_solid_torus_gluing(st) == filter_result::overtwisted ? 1 : 0;
        return std::make_pair(bp, e == 0 ? 0 : (e < 0 ? 1 : 2));
    };
    std::vector<std::size_t> order(g.configurations.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return rank(g.configurations[x]) < rank(g.configurations[y]);
    });
    GluingSummary sorted = g;
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted.configurations[i] = g.configurations[order[i]];
        sorted.sources[i] = g.sources[order[i]];
    }
    g = std::move(sorted);

    std::vector<std::string> class_keys;
    for (const auto& c : g.configurations) {
        if (filter_solid_torus_gluing(c) == filter_result::overtwisted)
            continue;
        g.survivors.push_back(c);
        std::string k = section_change_normal_form(c);
        auto it = std::find(class_keys.begin(), class_keys.end(), k);
        if (it == class_keys.end()) {
            class_keys.push_back(k);
            g.classes.push_back({c});
        } else {
            g.classes[it - class_keys.begin()].push_back(c);
        }
    }
    // deterministic order: by relative Euler class
    std::stable_sort(g.classes.begin(), g.classes.end(), [](const auto& x, const auto& y) {
        return relative_euler_class(x.front()) < relative_euler_class(y.front());
    });
    return g;
}

// ---- Shirt count --------------------------------------------------------

i64 ShirtCandidate::euler() const
{
    return shirt_euler + 2 * positive_bypasses - s;
}

namespace {

const GluingSummary& cached_sweep()
{
    static const GluingSummary g = gluing_sweep();
    return g;
}

// Signs of the region at hole 0 offered by the members of a class.
std::set<int> offered_signs(const std::vector<DividingSetState>& cls)
{
    std::set<int> out;
    for (const auto& st : cls)
        out.insert(st.regions[st.region_of_hole(0)].sign);
    return out;
}

}  // namespace

// Hole 0 carries the boundary of slope s after the section change; the
// toric annulus from 0 to s has j positive and s - j negative bypasses. Its
// region next to the shirt is positive, and may also be taken negative
// when no negative bypass is present.
ShirtAudit shirt_count_audit(i64 s)
{
    if (s < 0)
        throw error(errc::invalid_state, "shirt_count needs s >= 0");
    const GluingSummary& g = cached_sweep();
    ShirtAudit a;
    a.s = s;
    i64 annuli = toric_annulus_count(Slope(0, 1), Slope(s, 1)).count;
    a.raw = checked_mul(static_cast<i64>(g.classes.size()), annuli);

    std::vector<i64> class_euler;
    for (const auto& cls : g.classes)
        class_euler.push_back(relative_euler_class(cls.front()));

    for (std::size_t c = 0; c < g.classes.size(); ++c) {
        auto offered = offered_signs(g.classes[c]);
        for (i64 j = 0; j < annuli; ++j) {
            bool ok = offered.count(+1) || (j == s && offered.count(-1));
            if (!ok) continue;
            ShirtCandidate cand;
            cand.shirt_class = static_cast<int>(c);
            cand.shirt_euler = class_euler[c];
            cand.positive_bypasses = j;
            cand.s = s;
            // A single-signed class with a positive bypass is the same signed
            // pair plus half twist form of the section change move.
            cand.twist = (offered.size() == 1 && j >= 1 && class_euler[c] < 0) ? 1 : 0;
            a.matched.push_back(cand);
        }
    }
    a.sign_matched = static_cast<i64>(a.matched.size());

    std::set<std::pair<int, i64>> seen;
    for (ShirtCandidate cand : a.matched) {
        while (cand.twist != 0) {
            // same signed pair + half twist -> mixed pair: Euler class of the
            // shirt rises by 2, one positive bypass is traded away
            i64 target = cand.shirt_euler + 2;
            auto it = std::find(class_euler.begin(), class_euler.end(), target);
            if (it == class_euler.end())
                throw error(errc::invalid_state, "section change rewrite has no target class");
            cand.shirt_class = static_cast<int>(it - class_euler.begin());
            cand.shirt_euler = target;
            cand.positive_bypasses -= 1;
            cand.twist -= 1;
        }
        if (seen.insert({cand.shirt_class, cand.positive_bypasses}).second)
            a.normal_forms.push_back(cand);
    }
    a.classes = static_cast<i64>(a.normal_forms.size());
    return a;
}

i64 shirt_count(i64 s)
{
    return shirt_count_audit(s).classes;
}

}  // namespace tightsfs
