#include "tightsfs/seifert.hpp"

#include <sstream>

namespace tightsfs {

void validate_fiber(const Fiber& f)
{
    if (f.p < 2 || f.q < 1)
        throw error(errc::invalid_fiber, "fiber requires p >= 2 and q >= 1, got -" +
                                             std::to_string(f.q) + "/" + std::to_string(f.p));
    if (gcd(f.p, f.q) != 1)
        throw error(errc::invalid_fiber, "fiber -" + std::to_string(f.q) + "/" +
                                             std::to_string(f.p) + " is not reduced");
}

void SeifertInvariants::validate() const
{
    for (const auto& f : fibers)
        validate_fiber(f);
}

std::string SeifertInvariants::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        if (i) os << ',';
        os << '-' << fibers[i].q << '/' << fibers[i].p;
    }
    return os.str();
}

i64 euler_number(const SeifertInvariants& inv)
{
    i64 e = 0;
    for (const auto& f : inv.fibers)
        e += floor_div(-f.q, f.p);
    return e;
}

i64 euler_number(const std::array<Rational, 4>& coefficients)
{
    i64 e = 0;
    for (const auto& r : coefficients)
        e = checked_add(e, r.floor());
    return e;
}

FiberData fiber_data(i64 p, i64 q)
{
    validate_fiber({p, q});
    FiberData fd;
    fd.p = p;
    fd.q = q;
    fd.cf = neg_cf(Rational(-q, p));
    fd.conv = convergents(fd.cf);
    fd.u = fd.conv.u;
    fd.v = fd.conv.v;
    if (fd.conv.p.back() != p || fd.conv.q.back() != q)
        throw error(errc::invalid_fiber, "convergents do not reproduce the fiber");
    fd.attaching = UnimodularMap(p, fd.u, q, fd.v);
    if (fd.attaching.det() != 1)
        throw error(errc::invalid_fiber, "attaching map has determinant != 1");
    return fd;
}

Slope normalized_boundary_slope(const FiberData& f)
{
    i64 k = f.cf.coeffs[0] + 1;  // equals -floor(q/p)
    i64 y = -checked_add(f.q, checked_mul(k, f.p));
    i64 x = checked_add(f.v, checked_mul(k, f.u));
    return Slope(y, x);
}

std::vector<i64> section_change(const std::vector<i64>& slopes, const std::vector<i64>& shifts)
{
    if (slopes.size() != 4 || shifts.size() != 4)
        throw error(errc::bad_shift, "section change needs four slopes and four shifts");
    i64 total = 0;
    for (i64 s : shifts)
        total = checked_add(total, s);
    if (total != 0)
        throw error(errc::bad_shift, "section change shifts must sum to zero");
    std::vector<i64> out(4);
    for (int i = 0; i < 4; ++i)
        out[i] = checked_add(slopes[i], shifts[i]);
    return out;
}

std::array<Rational, 4> parse_coefficients(const std::string& text)
{
    std::array<Rational, 4> out;
    std::size_t count = 0, start = 0;
    while (true) {
        auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (count == 4)
            throw error(errc::parse_error, "expected exactly four fibers in '" + text + "'");
        auto slash = item.find('/');
        if (slash == std::string::npos)
            throw error(errc::parse_error, "fiber '" + item + "' must have the form -q/p");
        Rational n = Rational::parse(item.substr(0, slash));
        Rational d = Rational::parse(item.substr(slash + 1));
        if (!n.is_integer() || !d.is_integer() || d.num() < 2 || n.num() == 0 ||
            gcd(n.num(), d.num()) != 1)
            throw error(errc::invalid_fiber, "fiber '" + item + "' needs p >= 2 and gcd(q, p) = 1");
        out[count++] = Rational(n.num(), d.num());
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (count != 4)
        throw error(errc::parse_error, "expected exactly four fibers in '" + text + "'");
    return out;
}

SeifertInvariants normalize(const std::array<Rational, 4>& coefficients)
{
    SeifertInvariants inv;
    bool already = true;
    for (std::size_t i = 0; i < 4; ++i) {
        inv.fibers[i] = {coefficients[i].den(), -coefficients[i].num()};
        if (inv.fibers[i].q < 1)
            already = false;
    }
    if (already)
        return inv;
    i64 e0 = euler_number(coefficients);
    if (e0 > -4)
        throw error(errc::unsupported_regime, "cannot normalize input with e0 = " + std::to_string(e0));
    for (std::size_t i = 0; i < 4; ++i) {
        const Rational& r = coefficients[i];
        // fractional part in (-1, 0): r - (floor(r) + 1)
        i64 q = -checked_sub(r.num(), checked_mul(r.floor() + 1, r.den()));
        inv.fibers[i] = {r.den(), q};
    }
    inv.fibers[0].q = checked_add(inv.fibers[0].q, checked_mul(-(e0 + 4), inv.fibers[0].p));
    inv.validate();
    return inv;
}

}  // namespace tightsfs
