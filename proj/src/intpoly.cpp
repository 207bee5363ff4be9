#include "curvetop/intpoly.hpp"

#include <sstream>

namespace curvetop {

namespace {
mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}
} // namespace

const mpz_class& IntPoly::tcoeff() const {
    static const mpz_class z0 = 0;
    for (const auto& a : c_)
        if (a != 0) return a;
    return z0;
}

long IntPoly::tdeg() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return (long)i;
    return -1;
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    if (s == 0) return IntPoly();
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::mul_xk(long k) const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> v(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (degree() <= 0) return IntPoly();
    std::vector<mpz_class> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * (long)i;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::taylor_coefficient(long i) const {
    if (i < 0) throw std::invalid_argument("taylor_coefficient: negative index");
    if (i > degree()) return IntPoly();
    std::vector<mpz_class> v(c_.size() - i);
    for (long j = i; j <= degree(); ++j) v[j - i] = c_[j] * binom(j, i);
    return IntPoly(std::move(v));
}

mpz_class IntPoly::eval(const mpz_class& v) const {
    mpz_class r = 0;
    for (long i = degree(); i >= 0; --i) r = r * v + c_[i];
    return r;
}

mpq_class IntPoly::eval(const mpq_class& r) const {
    mpq_class acc = 0;
    for (long i = degree(); i >= 0; --i) acc = acc * r + mpq_class(c_[i]);
    acc.canonicalize();
    return acc;
}

Dyadic IntPoly::eval(const Dyadic& v) const {
    Dyadic acc;
    for (long i = degree(); i >= 0; --i) acc = acc * v + Dyadic(c_[i]);
    return acc;
}

Interval IntPoly::eval(const Interval& iv, long prec) const {
    Interval acc{Dyadic(), Dyadic()};
    for (long i = degree(); i >= 0; --i) {
        Interval ci(Dyadic(c_[i]));
        acc = ((acc * iv) + ci).round_out(prec);
    }
    return acc;
}

Ball IntPoly::eval(const Ball& b, long prec) const {
    Ball acc;
    for (long i = degree(); i >= 0; --i) {
        acc = acc.mul(b, prec) + Ball::exact_real(Dyadic(c_[i]));
        acc = acc.round(prec);
    }
    return acc;
}

mpz_class IntPoly::eval_scaled(const mpz_class& p, const mpz_class& q) const {
    // sum a_i p^i q^(n-i)
    long n = degree();
    if (n < 0) return 0;
    mpz_class acc = 0;
    for (long i = n; i >= 0; --i) acc = acc * p + c_[i] * pow_mpz(q, n - i);
    return acc;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& a : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    return divexact_scalar(content());
}

IntPoly IntPoly::normalized() const {
    IntPoly p = primitive_part();
    if (!p.is_zero() && p.lc() < 0) p = -p;
    return p;
}

IntPoly IntPoly::divexact_scalar(const mpz_class& s) const {
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
    return IntPoly(std::move(v));
}

bool IntPoly::try_divide(const IntPoly& o, IntPoly& quotient) const {
    if (o.is_zero()) return false;
    if (is_zero()) { quotient = IntPoly(); return true; }
    long dq = degree() - o.degree();
    if (dq < 0) return false;
    // divide over Q, then verify integrality of the remainderless quotient
    std::vector<mpq_class> rem(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) rem[i] = mpq_class(c_[i]);
    std::vector<mpq_class> q(dq + 1);
    mpq_class lcq{o.lc()};
    for (long k = dq; k >= 0; --k) {
        mpq_class t = rem[k + o.degree()] / lcq;
        t.canonicalize();
        q[k] = t;
        if (t != 0)
            for (long j = 0; j <= o.degree(); ++j) {
                rem[k + j] -= t * mpq_class(o.coeff(j));
                rem[k + j].canonicalize();
            }
    }
    for (auto& r : rem)
        if (r != 0) return false;
    std::vector<mpz_class> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) return false;
        qi[i] = q[i].get_num();
    }
    quotient = IntPoly(std::move(qi));
    return true;
}

IntPoly IntPoly::exact_div(const IntPoly& o) const {
    IntPoly q;
    if (!try_divide(o, q)) throw std::domain_error("IntPoly::exact_div: not divisible");
    return q;
}

IntPoly IntPoly::pseudo_rem(const IntPoly& o) const {
    if (o.is_zero()) throw std::domain_error("pseudo_rem by zero");
    long da = degree(), db = o.degree();
    if (da < db) return *this;
    IntPoly r = *this;
    const mpz_class& d = o.lc();
    for (long k = da - db; k >= 0;) {
        if (r.degree() == db + k) {
            mpz_class c = r.lc();
            r = r * d - o.mul_xk(k) * c;
            long nk = r.degree() - db;
            k = std::min(k - 1, nk);
        } else {
            k = r.degree() - db;
        }
        if (r.is_zero() || r.degree() < db) break;
    }
    return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0,0)");
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    IntPoly f = a.normalized(), g = b.normalized();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = f.pseudo_rem(g);
        f = g;
        g = r.is_zero() ? IntPoly() : r.normalized();
    }
    return f.normalized();
}

std::vector<std::pair<IntPoly, int>> IntPoly::square_free_decomposition() const {
    if (is_zero()) throw std::domain_error("square_free_decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly a = normalized();
    if (a.degree() == 0) return out;
    IntPoly d = a.derivative();
    IntPoly u = gcd(a, d);
    IntPoly v = a.exact_div(u);    // product of distinct factors
    IntPoly w = d.exact_div(u);
    int i = 1;
    while (v.degree() > 0) {
        IntPoly s = w - v.derivative();
        IntPoly g = s.is_zero() ? v : gcd(v, s);
        if (g.degree() > 0) out.emplace_back(g.normalized(), i);
        v = v.exact_div(g);
        w = s.is_zero() ? IntPoly() : s.exact_div(g);
        ++i;
        if (v.degree() == 0) break;
    }
    return out;
}

IntPoly IntPoly::square_free_part() const {
    if (is_zero()) throw std::domain_error("square_free_part of zero");
    IntPoly a = normalized();
    if (a.degree() == 0) return IntPoly(1);
    IntPoly u = gcd(a, a.derivative());
    return a.exact_div(u).normalized();
}

mpq_class IntPoly::cauchy_bound() const {
    if (is_zero()) throw std::domain_error("cauchy_bound of zero");
    mpz_class num = 0;
    mpz_class den = abs(lc());
    long q = tdeg();
    for (long i = q; i <= degree(); ++i) num += abs(coeff(i));
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

long IntPoly::cauchy_bound_log2() const {
    mpq_class c = cauchy_bound();
    // smallest e with 2^e >= c
    mpz_class num = c.get_num(), den = c.get_den();
    long e = 0;
    mpz_class p = den;
    while (p < num) { p *= 2; ++e; }
    return e;
}

mpz_class IntPoly::length() const {
    mpz_class s = 0;
    for (const auto& a : c_) s += abs(a);
    return s;
}

mpz_class IntPoly::norm_sq() const {
    mpz_class s = 0;
    for (const auto& a : c_) s += a * a;
    return s;
}

long IntPoly::magnitude_tau() const {
    size_t t = 1;
    for (const auto& a : c_)
        if (a != 0) t = std::max(t, mpz_sizeinbase(a.get_mpz_t(), 2) + 1);
    return (long)t;
}

IntPoly IntPoly::shift1() const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> v = c_;
    long n = degree();
    for (long i = 0; i < n; ++i)
        for (long j = n - 1; j >= i; --j) v[j] += v[j + 1];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shift(const mpz_class& c) const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> v = c_;
    long n = degree();
    for (long i = 0; i < n; ++i)
        for (long j = n - 1; j >= i; --j) v[j] += c * v[j + 1];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_up(long e) const {
    // 2^(n e) p(X / 2^e): a_i <- a_i * 2^(e (n-i))
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> v(c_.size());
    long n = degree();
    for (long i = 0; i <= n; ++i) {
        v[i] = c_[i];
        mpz_mul_2exp(v[i].get_mpz_t(), v[i].get_mpz_t(), (unsigned long)(e * (n - i)));
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_down(long e) const {
    // p(2^e X): a_i <- a_i * 2^(e i)
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        v[i] = c_[i];
        mpz_mul_2exp(v[i].get_mpz_t(), v[i].get_mpz_t(), (unsigned long)(e * i));
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reverse() const {
    std::vector<mpz_class> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negate_var() const {
    std::vector<mpz_class> v = c_;
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::compose_affine(const Dyadic& a, const Dyadic& w) const {
    // p(a + w X) = sum_i (sum_j a_j C(j,i) a^(j-i)) w^i X^i, cleared to Z by a 2-power
    long n = degree();
    if (n < 0) return IntPoly();
    const mpz_class& am = a.mantissa();
    long as = a.exponent();
    const mpz_class& wm = w.mantissa();
    long ws = w.exponent();
    long K = n * (std::max(0L, -as) + std::max(0L, -ws));
    std::vector<mpz_class> apow(n + 1), wpow(n + 1);
    apow[0] = 1;
    wpow[0] = 1;
    for (long k = 1; k <= n; ++k) {
        apow[k] = apow[k - 1] * am;
        wpow[k] = wpow[k - 1] * wm;
    }
    std::vector<mpz_class> v(n + 1);
    for (long i = 0; i <= n; ++i) {
        mpz_class acc = 0;
        for (long j = i; j <= n; ++j) {
            long e = as * (j - i) + ws * i + K;
            mpz_class t = c_[j] * binom(j, i) * apow[j - i] * wpow[i];
            mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), (unsigned long)e);
            acc += t;
        }
        v[i] = acc;
    }
    return IntPoly(std::move(v));
}

long IntPoly::sign_variations() const {
    long v = 0;
    int last = 0;
    for (const auto& a : c_) {
        int s = sgn(a);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        mpz_class aa = abs(a);
        if (aa != 1 || i == 0) os << aa.get_str();
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

mpz_class pow_mpz(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

} // namespace curvetop
