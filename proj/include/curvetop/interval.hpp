#ifndef CURVETOP_INTERVAL_HPP
#define CURVETOP_INTERVAL_HPP

#include "curvetop/dyadic.hpp"

#include <optional>
#include <vector>

namespace curvetop {

/// Closed real interval [lo, hi] with dyadic endpoints.
struct Interval {
    Dyadic lo, hi;

    Interval() = default;
    Interval(Dyadic v) : lo(v), hi(v) {}
    Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    }
    static Interval point(const Dyadic& v) { return Interval(v); }

    bool is_point() const { return lo == hi; }
    Dyadic width() const { return hi - lo; }
    Dyadic mid() const { return (lo + hi).mul_pow2(-1); }
    Dyadic mag() const { return max(lo.abs(), hi.abs()); }      // sup |x|
    Dyadic mig() const {                                         // inf |x|
        if (contains_zero()) return Dyadic();
        return min(lo.abs(), hi.abs());
    }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Dyadic& v) const { return lo <= v && v <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool overlaps(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
    /// Certified sign: -1, 0 (only for the point 0), +1, or nullopt if straddling.
    std::optional<int> sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        if (lo.is_zero() && hi.is_zero()) return 0;
        return std::nullopt;
    }

    Interval operator-() const { return Interval(-hi, -lo); }
    Interval operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }
    Interval operator-(const Interval& o) const { return *this + (-o); }
    Interval operator*(const Interval& o) const;
    Interval mul_pow2(long e) const { return Interval(lo.mul_pow2(e), hi.mul_pow2(e)); }

    /// Outward rounding to at most prec mantissa bits per endpoint.
    Interval round_out(long prec) const { return Interval(lo.round_down(prec), hi.round_up(prec)); }

    Interval hull(const Interval& o) const { return Interval(min(lo, o.lo), max(hi, o.hi)); }
    /// Distance between two disjoint intervals (0 if they overlap).
    Dyadic gap(const Interval& o) const {
        if (hi < o.lo) return o.lo - hi;
        if (o.hi < lo) return lo - o.hi;
        return Dyadic();
    }
};

/// Complex ball: center cre + i*cim, radius rad >= 0.
struct Ball {
    Dyadic cre, cim, rad;

    Ball() = default;
    Ball(Dyadic re, Dyadic im, Dyadic r = Dyadic())
        : cre(std::move(re)), cim(std::move(im)), rad(std::move(r)) {}
    static Ball exact_real(const Dyadic& v) { return Ball(v, Dyadic()); }
    static Ball from_interval(const Interval& iv) {
        return Ball(iv.mid(), Dyadic(), iv.width().mul_pow2(-1));
    }

    bool is_exact() const { return rad.is_zero(); }
    /// Upper bound on |center|.
    Dyadic center_mag_upper(long prec = 64) const;
    /// Lower bound on |center|.
    Dyadic center_mag_lower(long prec = 64) const;
    Dyadic mag_upper(long prec = 64) const { return center_mag_upper(prec) + rad; }
    /// max(0, |center| - rad) lower bound.
    Dyadic mig_lower(long prec = 64) const {
        Dyadic m = center_mag_lower(prec) - rad;
        return m.sign() > 0 ? m : Dyadic();
    }
    bool contains_zero_possibly(long prec = 64) const { return mig_lower(prec).is_zero(); }

    Ball operator-() const { return Ball(-cre, -cim, rad); }
    Ball operator+(const Ball& o) const { return Ball(cre + o.cre, cim + o.cim, rad + o.rad); }
    Ball operator-(const Ball& o) const { return *this + (-o); }
    Ball mul(const Ball& o, long prec) const;
    Ball add_round(const Ball& o, long prec) const { return (*this + o).round(prec); }
    Ball round(long prec) const;
    Ball conj() const { return Ball(cre, -cim, rad); }

    /// Upper bound on the distance between the centers of two balls.
    static Dyadic center_dist_upper(const Ball& a, const Ball& b, long prec = 64);
};

/// Exact product of real intervals (tightest dyadic enclosure).
Interval interval_add(const Interval& a, const Interval& b);
Interval interval_sub(const Interval& a, const Interval& b);
Interval interval_mul(const Interval& a, const Interval& b);

} // namespace curvetop

#endif
