#include "curvetop/interval.hpp"

namespace curvetop {

Interval Interval::operator*(const Interval& o) const {
    Dyadic p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    return Interval(min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4)));
}

Interval interval_add(const Interval& a, const Interval& b) { return a + b; }
Interval interval_sub(const Interval& a, const Interval& b) { return a - b; }
Interval interval_mul(const Interval& a, const Interval& b) { return a * b; }

Dyadic Ball::center_mag_upper(long prec) const {
    Dyadic s = cre * cre + cim * cim;
    return Dyadic::sqrt(s, prec, +1);
}

Dyadic Ball::center_mag_lower(long prec) const {
    Dyadic s = cre * cre + cim * cim;
    return Dyadic::sqrt(s, prec, -1);
}

Ball Ball::round(long prec) const {
    Dyadic re_lo = cre.round_down(prec), im_lo = cim.round_down(prec);
    Dyadic err = (cre - re_lo) + (cim - im_lo);  // coarse but safe center shift bound
    return Ball(re_lo, im_lo, (rad + err).round_up(prec));
}

Ball Ball::mul(const Ball& o, long prec) const {
    // (c1 + e1)(c2 + e2): center product, radius |c1| r2 + |c2| r1 + r1 r2
    Dyadic re = cre * o.cre - cim * o.cim;
    Dyadic im = cre * o.cim + cim * o.cre;
    Dyadic r;
    bool need_r = !rad.is_zero() || !o.rad.is_zero();
    if (need_r) {
        Dyadic m1 = center_mag_upper(prec), m2 = o.center_mag_upper(prec);
        r = m1 * o.rad + m2 * rad + rad * o.rad;
    }
    Ball out(re, im, r);
    return out.round(prec);
}

Dyadic Ball::center_dist_upper(const Ball& a, const Ball& b, long prec) {
    Dyadic dr = a.cre - b.cre, di = a.cim - b.cim;
    return Dyadic::sqrt(dr * dr + di * di, prec, +1);
}

} // namespace curvetop
