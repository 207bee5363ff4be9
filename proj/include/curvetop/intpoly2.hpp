#ifndef CURVETOP_INTPOLY2_HPP
#define CURVETOP_INTPOLY2_HPP

#include "curvetop/intpoly.hpp"

#include <tuple>

namespace curvetop {

/// Dense bivariate polynomial over Z, stored as a vector of Y-coefficients:
/// F = f_0(X) + f_1(X) Y + ... + f_dy(X) Y^dy.
class IntPoly2 {
public:
    IntPoly2() = default;
    explicit IntPoly2(const IntPoly& x_poly) { if (!x_poly.is_zero()) fy_.assign(1, x_poly); }
    explicit IntPoly2(std::vector<IntPoly> y_coeffs) : fy_(std::move(y_coeffs)) { trim(); }
    IntPoly2(long c) { if (c != 0) fy_.assign(1, IntPoly(c)); }

    static IntPoly2 x() { return IntPoly2(IntPoly::x()); }
    static IntPoly2 y() { return IntPoly2(std::vector<IntPoly>{IntPoly(), IntPoly(1)}); }
    static IntPoly2 from_terms(const std::vector<std::tuple<long, long, mpz_class>>& terms);

    bool is_zero() const { return fy_.empty(); }
    long deg_y() const { return (long)fy_.size() - 1; }
    long deg_x() const;
    long total_degree() const;
    bool is_constant() const { return deg_y() <= 0 && deg_x() <= 0; }

    const IntPoly& y_coeff(long j) const {
        static const IntPoly z;
        return (j < 0 || j >= (long)fy_.size()) ? z : fy_[j];
    }
    const IntPoly& lc_y() const { return fy_.back(); }
    const std::vector<IntPoly>& y_view() const { return fy_; }
    std::vector<IntPoly> x_view() const;  // coefficient of X^i as element of Z[Y]
    IntPoly lc_x() const;                 // leading coefficient w.r.t. X, in Z[Y]
    mpz_class coeff(long i, long j) const { return y_coeff(j).coeff(i); }

    IntPoly2 operator-() const;
    IntPoly2 operator+(const IntPoly2& o) const;
    IntPoly2 operator-(const IntPoly2& o) const;
    IntPoly2 operator*(const IntPoly2& o) const;
    IntPoly2 operator*(const mpz_class& s) const;
    bool operator==(const IntPoly2& o) const { return fy_ == o.fy_; }
    bool operator!=(const IntPoly2& o) const { return !(*this == o); }

    IntPoly2 partial_x() const;
    IntPoly2 partial_y() const;
    /// F^[k] = (1/k!) d^k F / dY^k.
    IntPoly2 taylor_y(long k) const;
    /// Truncation F_l = sum_{j<=l} f_j(X) Y^j.
    IntPoly2 truncate_y(long l) const;
    IntPoly2 transpose() const;  // swap X and Y
    /// X -> X + s*Y.
    IntPoly2 shear_x(long s) const;

    mpq_class eval(const mpq_class& x, const mpq_class& y) const;
    /// q^deg_x * F(p/q, Y) as an integer polynomial in Y.
    IntPoly specialize_x(const mpq_class& x) const;
    /// Enclosure over a pair of real intervals.
    Interval eval(const Interval& x, const Interval& y, long prec) const;
    Ball eval(const Ball& x, const Ball& y, long prec) const;

    /// gcd of the Y-coefficients (primitive, positive lc): the vertical-line content c(X).
    IntPoly content_y() const;
    /// Divide by an X-only polynomial that divides every Y-coefficient.
    IntPoly2 divexact_xpoly(const IntPoly& c) const;
    /// gcd of the X-coefficients, as a polynomial in Y (horizontal-line content).
    IntPoly content_x() const;
    /// Divide by a Y-only polynomial.
    IntPoly2 divexact_ypoly(const IntPoly& d) const;

    /// Resultant w.r.t. Y at formal degrees (coefficients in Z[X]).
    static IntPoly resultant_y(const IntPoly2& f, const IntPoly2& g);
    static IntPoly resultant_x(const IntPoly2& f, const IntPoly2& g);
    /// Principal subresultant coefficients w.r.t. Y: sr_0..sr_min(deg).
    static std::vector<IntPoly> subres_y(const IntPoly2& f, const IntPoly2& g);
    /// Disc_Y(f) with lc_Y(f) * Disc = Res_Y(f, dF/dY); Disc of deg_y<=1 is 1.
    static IntPoly disc_y(const IntPoly2& f);
    static IntPoly disc_x(const IntPoly2& f);

    long magnitude_tau() const;
    std::string to_string() const;

private:
    void trim() {
        while (!fy_.empty() && fy_.back().is_zero()) fy_.pop_back();
    }
    std::vector<IntPoly> fy_;
};

inline IntPoly2 operator*(const mpz_class& s, const IntPoly2& p) { return p * s; }

} // namespace curvetop

#endif
