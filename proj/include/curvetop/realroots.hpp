#ifndef CURVETOP_REALROOTS_HPP
#define CURVETOP_REALROOTS_HPP

#include "curvetop/intpoly.hpp"

#include <vector>

namespace curvetop {

/// Isolating interval for one real root of a square-free polynomial.
/// Either a point (exact dyadic root) or an open interval with a sign change.
struct RootInterval {
    Interval iv;
    bool exact = false;
    int sign_lo = 0;  // sign of f(lo); sign of f(hi) is -sign_lo

    const Dyadic& lo() const { return iv.lo; }
    const Dyadic& hi() const { return iv.hi; }
    Dyadic width() const { return iv.width(); }
};

/// All real roots of a square-free f, sorted increasing, pairwise disjoint.
std::vector<RootInterval> isolate_real_sqfree(const IntPoly& f);

/// Halve the width at least once (no-op on point roots).
void refine_step(const IntPoly& f, RootInterval& r);

/// Refine until width < target (quadratic Newton steps with bisection fallback).
void refine_below(const IntPoly& f, RootInterval& r, const Dyadic& target);

/// Number of sign variations of (X+1)^n g(1/(X+1)): Descartes bound on (0,1).
long variations01(const IntPoly& g);

} // namespace curvetop

#endif
