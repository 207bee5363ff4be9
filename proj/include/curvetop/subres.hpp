#ifndef CURVETOP_SUBRES_HPP
#define CURVETOP_SUBRES_HPP

#include "curvetop/intpoly.hpp"

#include <stdexcept>
#include <vector>

namespace curvetop {

mpz_class pow_mpz(const mpz_class& b, unsigned long e);

/// Ring operations used by the determinant machinery, specialized for Z and Z[X].
template <class T>
struct ring;

template <>
struct ring<mpz_class> {
    static mpz_class zero() { return mpz_class(0); }
    static bool is_zero(const mpz_class& a) { return a == 0; }
    static mpz_class neg(const mpz_class& a) { return -a; }
    static mpz_class sub_mul_div(const mpz_class& ad, const mpz_class& p, const mpz_class& b,
                                 const mpz_class& c, const mpz_class& prev) {
        // (ad*p - b*c) / prev, division exact
        mpz_class num = ad * p - b * c;
        if (prev == 1) return num;
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        return q;
    }
};

template <>
struct ring<IntPoly> {
    static IntPoly zero() { return IntPoly(); }
    static bool is_zero(const IntPoly& a) { return a.is_zero(); }
    static IntPoly neg(const IntPoly& a) { return -a; }
    static IntPoly sub_mul_div(const IntPoly& ad, const IntPoly& p, const IntPoly& b,
                               const IntPoly& c, const IntPoly& prev) {
        IntPoly num = ad * p - b * c;
        if (prev.degree() == 0 && prev.coeff(0) == 1) return num;
        return num.exact_div(prev);
    }
};

/// Fraction-free Bareiss determinant; destroys m. Entries over Z or Z[X].
template <class T>
T det_bareiss(std::vector<std::vector<T>> m) {
    using R = ring<T>;
    const size_t n = m.size();
    if (n == 0) return T(1);
    int sign = 1;
    T prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (R::is_zero(m[k][k])) {
            size_t swap_row = k + 1;
            while (swap_row < n && R::is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return R::zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = R::sub_mul_div(m[i][j], m[k][k], m[i][k], m[k][j], prev);
            m[i][k] = R::zero();
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return sign < 0 ? R::neg(det) : det;
}

/// Cofactor-expansion determinant; test oracle only (exponential).
template <class T>
T det_cofactor(const std::vector<std::vector<T>>& m) {
    using R = ring<T>;
    const size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T acc = R::zero();
    for (size_t c = 0; c < n; ++c) {
        if (R::is_zero(m[0][c])) continue;
        std::vector<std::vector<T>> sub(n - 1);
        for (size_t i = 1; i < n; ++i) {
            sub[i - 1].reserve(n - 1);
            for (size_t j = 0; j < n; ++j)
                if (j != c) sub[i - 1].push_back(m[i][j]);
        }
        T term = m[0][c] * det_cofactor(sub);
        if (c % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

/// Coefficient accessor with zero padding; a is indexed by degree.
template <class T>
const T& coeff_or_zero(const std::vector<T>& a, long i) {
    static const T z{};
    return (i < 0 || i >= (long)a.size()) ? z : a[i];
}

/// The (na+nb-2k) x (na+nb-2k) matrix whose determinant is the k-th principal
/// subresultant coefficient of (A, B) at formal degrees na, nb.
template <class T>
std::vector<std::vector<T>> subres_matrix(const std::vector<T>& a, long na,
                                          const std::vector<T>& b, long nb, long k) {
    long m = na + nb - 2 * k;
    std::vector<std::vector<T>> mat(m, std::vector<T>(m));
    for (long i = 0; i < nb - k; ++i)
        for (long j = 0; j < m; ++j) mat[i][j] = coeff_or_zero(a, na - j + i);
    for (long i = 0; i < na - k; ++i)
        for (long j = 0; j < m; ++j) mat[nb - k + i][j] = coeff_or_zero(b, nb - j + i);
    return mat;
}

/// Resultant at formal degrees (full Sylvester determinant).
template <class T>
T resultant_formal(const std::vector<T>& a, long na, const std::vector<T>& b, long nb) {
    if (na < 0 || nb < 0) throw std::domain_error("resultant of zero polynomial");
    return det_bareiss(subres_matrix(a, na, b, nb, 0));
}

/// Principal subresultant coefficients sr_0..sr_min(na,nb) at formal degrees.
template <class T>
std::vector<T> subres_principal(const std::vector<T>& a, long na, const std::vector<T>& b,
                                long nb) {
    long kmax = std::min(na, nb);
    std::vector<T> out;
    out.reserve(kmax + 1);
    for (long k = 0; k <= kmax; ++k) out.push_back(det_bareiss(subres_matrix(a, na, b, nb, k)));
    return out;
}

} // namespace curvetop

#endif
