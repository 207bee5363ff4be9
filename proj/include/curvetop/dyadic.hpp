#ifndef CURVETOP_DYADIC_HPP
#define CURVETOP_DYADIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace curvetop {

/// Exact dyadic number man * 2^exp with arbitrary-precision mantissa.
/// Canonical form: man is odd, or man == 0 and exp == 0.
class Dyadic {
public:
    Dyadic() : man_(0), exp_(0) {}
    Dyadic(long v) : man_(v), exp_(0) { normalize(); }
    explicit Dyadic(const mpz_class& m) : man_(m), exp_(0) { normalize(); }
    Dyadic(mpz_class m, long e) : man_(std::move(m)), exp_(e) { normalize(); }

    static Dyadic pow2(long e) { return Dyadic(mpz_class(1), e); }

    const mpz_class& mantissa() const { return man_; }
    long exponent() const { return exp_; }
    bool is_zero() const { return man_ == 0; }
    int sign() const { return sgn(man_); }

    Dyadic operator-() const { return Dyadic(-man_, exp_, no_normalize{}); }
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic& operator+=(const Dyadic& o) { *this = *this + o; return *this; }
    Dyadic& operator-=(const Dyadic& o) { *this = *this - o; return *this; }
    Dyadic& operator*=(const Dyadic& o) { *this = *this * o; return *this; }

    Dyadic mul_pow2(long e) const {
        if (is_zero()) return Dyadic();
        return Dyadic(man_, exp_ + e, no_normalize{});
    }
    Dyadic abs() const { return sign() < 0 ? -*this : *this; }

    int cmp(const Dyadic& o) const;
    bool operator==(const Dyadic& o) const { return man_ == o.man_ && exp_ == o.exp_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const { return cmp(o) < 0; }
    bool operator<=(const Dyadic& o) const { return cmp(o) <= 0; }
    bool operator>(const Dyadic& o) const { return cmp(o) > 0; }
    bool operator>=(const Dyadic& o) const { return cmp(o) >= 0; }

    /// Number of bits of |man|; 0 for zero.
    size_t bitlength() const { return man_ == 0 ? 0 : mpz_sizeinbase(man_.get_mpz_t(), 2); }
    long bitsize() const { return (long)bitlength() + 64; }

    /// floor(log2 |x|) for x != 0.
    long log2_floor() const { return (long)bitlength() - 1 + exp_; }
    /// ceil(log2 |x|); requires x != 0.
    long log2_ceil() const;

    /// Round to at most prec mantissa bits, toward -inf / +inf.
    Dyadic round_down(long prec) const { return rounded(prec, -1); }
    Dyadic round_up(long prec) const { return rounded(prec, +1); }

    /// Nearest value a/2^k <= x (resp. >=) with denominator 2^k.
    Dyadic floor_to_exp(long e) const { return snapped(e, -1); }
    Dyadic ceil_to_exp(long e) const { return snapped(e, +1); }

    /// Directed-rounding division at the given precision.
    static Dyadic div(const Dyadic& a, const Dyadic& b, long prec, int dir);

    /// sqrt with directed rounding (x >= 0).
    static Dyadic sqrt(const Dyadic& x, long prec, int dir);

    double to_double() const;
    /// Exact decimal representation (dyadics have finite decimal expansions).
    std::string to_decimal() const;
    std::string to_string() const;  // "man*2^exp" debug form

    mpq_class to_mpq() const;

private:
    struct no_normalize {};
    Dyadic(mpz_class m, long e, no_normalize) : man_(std::move(m)), exp_(e) {}
    void normalize();
    Dyadic rounded(long prec, int dir) const;
    Dyadic snapped(long e, int dir) const;

    mpz_class man_;
    long exp_;
};

inline Dyadic abs(const Dyadic& d) { return d.abs(); }
Dyadic max(const Dyadic& a, const Dyadic& b);
Dyadic min(const Dyadic& a, const Dyadic& b);

} // namespace curvetop

#endif
