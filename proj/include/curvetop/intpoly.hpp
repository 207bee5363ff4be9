#ifndef CURVETOP_INTPOLY_HPP
#define CURVETOP_INTPOLY_HPP

#include "curvetop/interval.hpp"

#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

namespace curvetop {

mpz_class pow_mpz(const mpz_class& b, unsigned long e);

/// Dense univariate polynomial over Z. coeff(i) is the coefficient of X^i.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c) { if (c != 0) c_.assign(1, mpz_class(c)); }
    explicit IntPoly(const mpz_class& c) { if (c != 0) c_.assign(1, c); }
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly x(long k = 1) {
        std::vector<mpz_class> v(k + 1);
        v[k] = 1;
        return IntPoly(std::move(v));
    }
    static IntPoly monomial(const mpz_class& a, long k) {
        std::vector<mpz_class> v(k + 1);
        v[k] = a;
        return IntPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; }  // -1 for zero
    const mpz_class& coeff(long i) const {
        static const mpz_class z0 = 0;
        return (i < 0 || i >= (long)c_.size()) ? z0 : c_[i];
    }
    const mpz_class& lc() const { return c_.back(); }
    /// Lowest-index nonzero coefficient (tail coefficient); 0 for the zero polynomial.
    const mpz_class& tcoeff() const;
    long tdeg() const;  // index of tcoeff; -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly mul_xk(long k) const;
    IntPoly derivative() const;
    /// f^[i] = f^(i)/i! ; integer coefficients.
    IntPoly taylor_coefficient(long i) const;

    mpz_class eval(const mpz_class& v) const;
    mpq_class eval(const mpq_class& r) const;
    /// Exact evaluation at a dyadic point.
    Dyadic eval(const Dyadic& v) const;
    /// Enclosure of f over a real interval, endpoints rounded outward to prec bits.
    Interval eval(const Interval& iv, long prec) const;
    /// Enclosure of f over a complex ball.
    Ball eval(const Ball& b, long prec) const;
    /// Numerator of f(p/q) * q^deg for p/q in lowest terms.
    mpz_class eval_scaled(const mpz_class& p, const mpz_class& q) const;

    /// gcd of |coefficients| (positive), 0 for the zero polynomial.
    mpz_class content() const;
    IntPoly primitive_part() const;
    /// Primitive part with positive leading coefficient.
    IntPoly normalized() const;

    /// Quotient when o exactly divides *this (over Q with integer result); throws otherwise.
    IntPoly exact_div(const IntPoly& o) const;
    bool try_divide(const IntPoly& o, IntPoly& quotient) const;
    IntPoly divexact_scalar(const mpz_class& s) const;

    /// Euclidean division over Q is avoided; pseudo-remainder lc(o)^(da-db+1) * this mod o.
    IntPoly pseudo_rem(const IntPoly& o) const;

    /// Primitive positive-lc gcd.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);
    /// Yun decomposition: list of (g_i, i), f = unit * content * prod g_i^i.
    std::vector<std::pair<IntPoly, int>> square_free_decomposition() const;
    IntPoly square_free_part() const;

    /// Cauchy bound C(f) = sum_{q<=i<=n} |a_i / a_n| ; every root has |z| < C(f).
    mpq_class cauchy_bound() const;
    /// Smallest e such that 2^e >= C(f).
    long cauchy_bound_log2() const;

    mpz_class length() const;   // sum |a_i|
    mpz_class norm_sq() const;  // sum a_i^2
    long magnitude_tau() const; // smallest t with max |a_i| < 2^t (>=1)

    /// p(X + 1), integer Taylor shift.
    IntPoly shift1() const;
    /// p(X + c) for integer c.
    IntPoly shift(const mpz_class& c) const;
    /// 2^(n*e) * p(X / 2^e) when e >= 0: scales roots by 2^e.
    IntPoly scale_up(long e) const;
    /// p(2^e * X) cleared: roots scaled by 2^-e.
    IntPoly scale_down(long e) const;
    /// X^n p(1/X).
    IntPoly reverse() const;
    /// p(-X).
    IntPoly negate_var() const;
    /// Positive integer multiple of p(a + w*X) for dyadic a, w.
    IntPoly compose_affine(const Dyadic& a, const Dyadic& w) const;

    long sign_variations() const;

    std::string to_string(const std::string& var = "X") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

inline IntPoly operator*(const mpz_class& s, const IntPoly& p) { return p * s; }

} // namespace curvetop

#endif
