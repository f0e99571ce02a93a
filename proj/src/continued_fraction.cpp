#include "tightsfs/continued_fraction.hpp"

namespace tightsfs {

bool NegContinuedFraction::is_valid() const
{
    if (coeffs.empty() || coeffs[0] > -1)
        return false;
    for (std::size_t j = 1; j < coeffs.size(); ++j)
        if (coeffs[j] > -2)
            return false;
    return true;
}

NegContinuedFraction neg_cf(const Rational& r, cf_mode mode)
{
    if (r >= Rational(0))
        throw error(errc::non_negative_input, "continued fraction input must be negative: " + r.str());
    if (mode == cf_mode::strict && r.floor() == -1)
        throw error(errc::strict_mode_impossible,
                    "no expansion with all quotients <= -2 exists for " + r.str());

    NegContinuedFraction cf;
    // Work on n/d directly: n/d = a - 1/(d/(a d - n)).
    i64 n = r.num(), d = r.den();
    while (true) {
        i64 a = floor_div(n, d);
        cf.coeffs.push_back(a);
        i64 rem = checked_sub(checked_mul(a, d), n);
        if (rem == 0)
            break;
        // next value is d / (a d - n), with a d - n in (-d, 0)
        n = -d;
        d = -rem;
    }
    return cf;
}

Rational eval_cf(const NegContinuedFraction& cf)
{
    if (!cf.is_valid())
        throw error(errc::invalid_continued_fraction, "continued fraction violates coefficient bounds");
    // Track value as n/d from the tail.
    i64 n = cf.coeffs.back(), d = 1;
    for (std::size_t k = cf.coeffs.size() - 1; k-- > 0;) {
        // a - d/n = (a n - d)/n
        i64 nn = checked_sub(checked_mul(cf.coeffs[k], n), d);
        d = n;
        n = nn;
    }
    return Rational(n, d);
}

Convergents convergents(const NegContinuedFraction& cf)
{
    Convergents c;
    i64 p2 = -1, p1 = 0, q2 = 0, q1 = 1;
    for (i64 a : cf.coeffs) {
        i64 p = checked_sub(checked_mul(-a, p1), p2);
        i64 q = checked_sub(checked_mul(-a, q1), q2);
        c.p.push_back(p);
        c.q.push_back(q);
        p2 = p1; p1 = p;
        q2 = q1; q1 = q;
    }
    c.u = p2;
    c.v = q2;
    return c;
}

}  // namespace tightsfs
