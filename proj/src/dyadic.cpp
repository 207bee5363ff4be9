#include "curvetop/dyadic.hpp"

#include <cmath>
#include <sstream>

namespace curvetop {

void Dyadic::normalize() {
    if (man_ == 0) { exp_ = 0; return; }
    unsigned long tz = mpz_scan1(man_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
        exp_ += (long)tz;
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long e = std::min(exp_, o.exp_);
    mpz_class a = man_, b = o.man_;
    if (exp_ > e) mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), exp_ - e);
    if (o.exp_ > e) mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), o.exp_ - e);
    return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
    if (is_zero() || o.is_zero()) return Dyadic();
    // products of odd mantissas stay odd
    return Dyadic(man_ * o.man_, exp_ + o.exp_, no_normalize{});
}

int Dyadic::cmp(const Dyadic& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // same nonzero sign: compare magnitudes via log2 first
    long la = log2_floor(), lb = o.log2_floor();
    if (la != lb) {
        int mag = la < lb ? -1 : 1;
        return sa > 0 ? mag : -mag;
    }
    Dyadic d = *this - o;
    return d.sign();
}

long Dyadic::log2_ceil() const {
    size_t bl = bitlength();
    // |man| == 2^(bl-1) exactly iff popcount == 1
    if (mpz_popcount(man_.get_mpz_t()) == 1) return (long)bl - 1 + exp_;
    return (long)bl + exp_;
}

Dyadic Dyadic::rounded(long prec, int dir) const {
    if (is_zero()) return *this;
    long bl = (long)bitlength();
    if (bl <= prec) return *this;
    long k = bl - prec;
    mpz_class q;
    if (dir < 0)
        mpz_fdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), k);
    else
        mpz_cdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), k);
    return Dyadic(q, exp_ + k);
}

Dyadic Dyadic::snapped(long e, int dir) const {
    if (is_zero()) return *this;
    if (exp_ >= e) return *this;
    long k = e - exp_;
    mpz_class q;
    if (dir < 0)
        mpz_fdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), k);
    else
        mpz_cdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), k);
    return Dyadic(q, e);
}

Dyadic Dyadic::div(const Dyadic& a, const Dyadic& b, long prec, int dir) {
    if (b.is_zero()) throw std::domain_error("Dyadic::div by zero");
    if (a.is_zero()) return Dyadic();
    // scale a so the quotient carries ~prec+2 significant bits
    long shift = prec + 2 + (long)b.bitlength() - (long)a.bitlength();
    if (shift < 0) shift = 0;
    mpz_class num = a.man_;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), shift);
    mpz_class q;
    if (dir < 0)
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.man_.get_mpz_t());
    else
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.man_.get_mpz_t());
    return Dyadic(q, a.exp_ - b.exp_ - shift);
}

Dyadic Dyadic::sqrt(const Dyadic& x, long prec, int dir) {
    if (x.sign() < 0) throw std::domain_error("Dyadic::sqrt of negative");
    if (x.is_zero()) return Dyadic();
    // write x = m * 2^e with e even and m carrying >= 2*prec+4 bits
    mpz_class m = x.man_;
    long e = x.exp_;
    long want = 2 * prec + 4;
    long extra = want - (long)x.bitlength();
    if (extra < 0) extra = 0;
    if ((e - extra) % 2 != 0) extra += 1;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), extra);
    e -= extra;
    mpz_class s, r;
    mpz_sqrtrem(s.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    if (dir > 0 && r != 0) s += 1;
    return Dyadic(s, e / 2);
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    Dyadic r = rounded(53, sign() > 0 ? -1 : +1);
    double m = r.man_.get_d();
    long e = r.exp_;
    while (e > 300) { m *= 0x1p300; e -= 300; }
    while (e < -300) { m *= 0x1p-300; e += 300; }
    return m * std::pow(2.0, (double)e);
}

std::string Dyadic::to_decimal() const {
    if (is_zero()) return "0";
    if (exp_ >= 0) {
        mpz_class v = man_;
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), exp_);
        return v.get_str();
    }
    // man / 2^k = man*5^k / 10^k
    long k = -exp_;
    mpz_class five = 5, p;
    mpz_pow_ui(p.get_mpz_t(), five.get_mpz_t(), (unsigned long)k);
    mpz_class v = man_ * p;
    mpz_class av;
    mpz_abs(av.get_mpz_t(), v.get_mpz_t());
    std::string digits = av.get_str();
    std::string s = v < 0 ? "-" : "";
    if ((long)digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    s += digits;
    return s;
}

std::string Dyadic::to_string() const {
    std::ostringstream os;
    os << man_.get_str() << "*2^" << exp_;
    return os.str();
}

mpq_class Dyadic::to_mpq() const {
    mpq_class q(man_);
    if (exp_ >= 0) {
        mpz_class num = man_;
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), exp_);
        return mpq_class(num);
    }
    mpz_class den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), -exp_);
    q = mpq_class(man_, den);
    q.canonicalize();
    return q;
}

Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }
Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }

} // namespace curvetop
