#include "tightsfs/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace tightsfs {

const char* errc_name(errc code)
{
    switch (code) {
    case errc::overflow: return "Overflow";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::parse_error: return "ParseError";
    case errc::non_negative_input: return "NonNegativeInput";
    case errc::strict_mode_impossible: return "StrictModeImpossible";
    case errc::invalid_continued_fraction: return "InvalidContinuedFraction";
    case errc::invalid_fiber: return "InvalidFiber";
    case errc::bad_shift: return "BadShift";
    case errc::not_rational: return "NotRational";
    case errc::integer_already: return "IntegerAlready";
    case errc::expansion_impossible: return "ExpansionImpossible";
    case errc::not_integral: return "NotIntegral";
    case errc::framing_too_large: return "FramingTooLarge";
    case errc::invalid_slope: return "InvalidSlope";
    case errc::not_normalizable: return "NotNormalizable";
    case errc::invalid_state: return "InvalidState";
    case errc::unsupported_regime: return "UnsupportedRegime";
    }
    return "Unknown";
}

i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw error(errc::overflow, "integer overflow in addition");
    return r;
}

i64 checked_sub(i64 a, i64 b)
{
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw error(errc::overflow, "integer overflow in subtraction");
    return r;
}

i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw error(errc::overflow, "integer overflow in multiplication");
    return r;
}

i64 checked_neg(i64 a) { return checked_sub(0, a); }

i64 gcd(i64 a, i64 b)
{
    return std::gcd(a, b);
}

i64 floor_div(i64 a, i64 b)
{
    if (b == 0)
        throw error(errc::division_by_zero, "division by zero");
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Rational::Rational(i64 n, i64 d)
{
    if (d == 0)
        throw error(errc::division_by_zero, "zero denominator");
    if (d < 0) {
        n = checked_neg(n);
        d = checked_neg(d);
    }
    i64 g = gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::reciprocal() const
{
    if (num_ == 0)
        throw error(errc::division_by_zero, "reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::operator-() const
{
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

// Cross-reduce before multiplying to keep intermediates small.
Rational operator+(const Rational& a, const Rational& b)
{
    i64 g = gcd(a.den_, b.den_);
    i64 da = a.den_ / g;
    i64 n = checked_add(checked_mul(a.num_, b.den_ / g), checked_mul(b.num_, da));
    return Rational(n, checked_mul(da, b.den_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    i64 g1 = gcd(a.num_, b.den_);
    i64 g2 = gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const
{
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

i64 parse_int(std::string_view s, const std::string& whole)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw error(errc::parse_error, "cannot parse integer in '" + whole + "'");
    return v;
}

}  // namespace

Rational Rational::parse(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text, text));
    std::string_view sv(text);
    i64 n = parse_int(sv.substr(0, slash), text);
    i64 d = parse_int(sv.substr(slash + 1), text);
    if (d == 0)
        throw error(errc::parse_error, "zero denominator in '" + text + "'");
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Slope::Slope(i64 y, i64 x)
{
    if (x == 0 && y == 0)
        throw error(errc::invalid_slope, "slope vector (0, 0)");
    if (x == 0) {
        y_ = 1;
        x_ = 0;
        return;
    }
    if (x < 0) {
        x = checked_neg(x);
        y = checked_neg(y);
    }
    i64 g = gcd(x, y);
    y_ = y / g;
    x_ = x / g;
}

Rational Slope::value() const
{
    if (is_infinite())
        throw error(errc::division_by_zero, "infinite slope has no rational value");
    return Rational(y_, x_);
}

std::string Slope::str() const
{
    if (is_infinite())
        return "inf";
    return value().str();
}

Slope Slope::parse(const std::string& text)
{
    if (text == "inf" || text == "infinity" || text == "1/0")
        return infinity();
    return Slope(Rational::parse(text));
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

UnimodularMap::UnimodularMap(i64 a_, i64 b_, i64 c_, i64 d_)
    : a(a_), b(b_), c(c_), d(d_)
{
    i64 dt = det();
    if (dt != 1 && dt != -1)
        throw error(errc::not_normalizable, "matrix is not unimodular");
}

UnimodularMap UnimodularMap::inverse() const
{
    i64 dt = det();
    return UnimodularMap(dt * d, -dt * b, -dt * c, dt * a);
}

UnimodularMap operator*(const UnimodularMap& l, const UnimodularMap& r)
{
    return UnimodularMap(
        checked_add(checked_mul(l.a, r.a), checked_mul(l.b, r.c)),
        checked_add(checked_mul(l.a, r.b), checked_mul(l.b, r.d)),
        checked_add(checked_mul(l.c, r.a), checked_mul(l.d, r.c)),
        checked_add(checked_mul(l.c, r.b), checked_mul(l.d, r.d)));
}

Slope act(const UnimodularMap& m, const Slope& s)
{
    i64 x = checked_add(checked_mul(m.a, s.x()), checked_mul(m.b, s.y()));
    i64 y = checked_add(checked_mul(m.c, s.x()), checked_mul(m.d, s.y()));
    return Slope::from_vector(x, y);
}

bool farey_neighbors(const Slope& s, const Slope& t)
{
    i64 det = checked_sub(checked_mul(s.y(), t.x()), checked_mul(t.y(), s.x()));
    return det == 1 || det == -1;
}

UnimodularMap to_horizontal(i64 x, i64 y)
{
    // Extended Euclid: s*x + t*y = 1.
    i64 old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r == -1) {
        old_s = -old_s;
        old_t = -old_t;
    } else if (old_r != 1) {
        throw error(errc::not_normalizable, "vector is not primitive");
    }
    return UnimodularMap(old_s, old_t, -y, x);
}

}  // namespace tightsfs
