#include "curvetop/realroots.hpp"

#include <stdexcept>

namespace curvetop {

long variations01(const IntPoly& g) {
    return g.reverse().shift1().sign_variations();
}

namespace {

// Descartes bound on the number of roots in the open dyadic interval (a, b).
long count_open(const IntPoly& f, const Dyadic& a, const Dyadic& b) {
    return variations01(f.compose_affine(a, b - a));
}

struct Isolator {
    const IntPoly& f;
    std::vector<RootInterval> out;

    void node(const IntPoly& g, const Dyadic& lo, const Dyadic& hi, int depth) {
        if (depth > 8000) throw std::runtime_error("real root isolation: depth cap exceeded");
        long v = variations01(g);
        if (v == 0) return;
        if (v == 1) {
            out.push_back(RootInterval{Interval(lo, hi), false, 0});
            return;
        }
        Dyadic m = (lo + hi).mul_pow2(-1);
        IntPoly gl = g.scale_up(1);  // 2^n g(X/2)
        IntPoly gr = gl.shift1();    // 2^n g((X+1)/2)
        node(gl, lo, m, depth + 1);
        if (gr.coeff(0) == 0)        // g(1/2) == 0: the midpoint is a root
            out.push_back(RootInterval{Interval(m, m), true, 0});
        node(gr, m, hi, depth + 1);
    }
};

} // namespace

std::vector<RootInterval> isolate_real_sqfree(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("isolate_real_sqfree: zero polynomial");
    if (f.degree() == 0) return {};
    long tz = f.tdeg();
    IntPoly g = f;
    if (tz > 0) {
        std::vector<mpz_class> v(f.coeffs().begin() + tz, f.coeffs().end());
        g = IntPoly(std::move(v));
    }
    std::vector<RootInterval> out;
    if (g.degree() > 0) {
        long e = g.cauchy_bound_log2();
        Dyadic B = Dyadic::pow2(e);

        IntPoly gneg = g.negate_var();
        Isolator neg{gneg};
        neg.node(gneg.scale_down(e), Dyadic(0), B, 0);
        for (auto it = neg.out.rbegin(); it != neg.out.rend(); ++it)
            out.push_back(RootInterval{Interval(-it->hi(), -it->lo()), it->exact, 0});

        if (tz > 0) out.push_back(RootInterval{Interval(Dyadic(0), Dyadic(0)), true, 0});

        Isolator pos{g};
        pos.node(g.scale_down(e), Dyadic(0), B, 0);
        for (auto& r : pos.out) out.push_back(r);
    } else if (tz > 0) {
        out.push_back(RootInterval{Interval(Dyadic(0), Dyadic(0)), true, 0});
    }

    // establish sign invariants: for non-exact intervals, f(lo) != 0 with exactly
    // one root inside; a dyadic root can sit at an endpoint after splits
    for (auto& r : out) {
        if (r.exact) continue;
        Dyadic lo = r.lo(), hi = r.hi();
        int slo = f.eval(lo).sign();
        if (slo == 0) {
            Dyadic step = (hi - lo).mul_pow2(-2);
            for (;;) {
                Dyadic t = lo + step;
                int st = f.eval(t).sign();
                if (st == 0) {  // hit the isolated root exactly
                    r.iv = Interval(t, t);
                    r.exact = true;
                    r.sign_lo = 0;
                    break;
                }
                if (count_open(f, t, hi) == 1) {
                    r.iv = Interval(t, hi);
                    r.sign_lo = st;
                    break;
                }
                step = step.mul_pow2(-1);
            }
        } else {
            r.sign_lo = slo;
        }
    }
    return out;
}

void refine_step(const IntPoly& f, RootInterval& r) {
    if (r.exact) return;
    Dyadic m = r.iv.mid();
    int sm = f.eval(m).sign();
    if (sm == 0) {
        r.iv = Interval(m, m);
        r.exact = true;
        r.sign_lo = 0;
        return;
    }
    if (sm == r.sign_lo)
        r.iv = Interval(m, r.iv.hi);
    else
        r.iv = Interval(r.iv.lo, m);
}

void refine_below(const IntPoly& f, RootInterval& r, const Dyadic& target) {
    if (target.sign() <= 0) throw std::invalid_argument("refine_below: nonpositive target");
    IntPoly df = f.derivative();
    while (!r.exact && !(r.width() < target)) {
        bool newton_ok = false;
        long prec = std::max<long>(64, 2 * std::max(0L, -target.log2_floor()) + 64);
        Interval div = df.eval(r.iv, prec);
        if (!div.contains_zero()) {
            // interval Newton: m - f(m)/f'(iv)
            Dyadic m = r.iv.mid();
            Dyadic fm = f.eval(m);
            Dyadic q1 = Dyadic::div(fm, div.lo, prec, -1), q2 = Dyadic::div(fm, div.lo, prec, +1);
            Dyadic q3 = Dyadic::div(fm, div.hi, prec, -1), q4 = Dyadic::div(fm, div.hi, prec, +1);
            Dyadic qlo = min(min(q1, q2), min(q3, q4));
            Dyadic qhi = max(max(q1, q2), max(q3, q4));
            Interval cand(m - qhi, m - qlo);
            if (r.iv.contains(cand) && cand.width() < r.width().mul_pow2(-1)) {
                int s_lo = f.eval(cand.lo).sign();
                int s_hi = f.eval(cand.hi).sign();
                if (s_lo == 0 || s_hi == 0) {
                    Dyadic root = s_lo == 0 ? cand.lo : cand.hi;
                    r.iv = Interval(root, root);
                    r.exact = true;
                    r.sign_lo = 0;
                    return;
                }
                if (s_lo != s_hi) {
                    r.iv = cand;
                    r.sign_lo = s_lo;
                    newton_ok = true;
                }
            }
        }
        if (!newton_ok) refine_step(f, r);
    }
}

} // namespace curvetop
