#include "curvetop/intpoly2.hpp"
#include "curvetop/subres.hpp"

#include <sstream>

namespace curvetop {

IntPoly2 IntPoly2::from_terms(const std::vector<std::tuple<long, long, mpz_class>>& terms) {
    long dy = 0;
    for (const auto& [i, j, c] : terms) dy = std::max(dy, j);
    std::vector<std::vector<mpz_class>> grid(dy + 1);
    for (const auto& [i, j, c] : terms) {
        if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
        auto& row = grid[j];
        if ((long)row.size() <= i) row.resize(i + 1);
        row[i] += c;
    }
    std::vector<IntPoly> fy(dy + 1);
    for (long j = 0; j <= dy; ++j) fy[j] = IntPoly(std::move(grid[j]));
    return IntPoly2(std::move(fy));
}

long IntPoly2::deg_x() const {
    long d = -1;
    for (const auto& f : fy_) d = std::max(d, f.degree());
    return d;
}

long IntPoly2::total_degree() const {
    long d = -1;
    for (long j = 0; j < (long)fy_.size(); ++j)
        if (!fy_[j].is_zero()) d = std::max(d, fy_[j].degree() + j);
    return d;
}

std::vector<IntPoly> IntPoly2::x_view() const {
    long dx = deg_x();
    std::vector<std::vector<mpz_class>> grid(dx + 1);
    for (long i = 0; i <= dx; ++i) grid[i].resize(fy_.size());
    for (long j = 0; j < (long)fy_.size(); ++j)
        for (long i = 0; i <= fy_[j].degree(); ++i) grid[i][j] = fy_[j].coeff(i);
    std::vector<IntPoly> out(dx + 1);
    for (long i = 0; i <= dx; ++i) out[i] = IntPoly(std::move(grid[i]));
    return out;
}

IntPoly IntPoly2::lc_x() const {
    auto xv = x_view();
    return xv.empty() ? IntPoly() : xv.back();
}

IntPoly2 IntPoly2::operator-() const {
    std::vector<IntPoly> v(fy_.size());
    for (size_t j = 0; j < fy_.size(); ++j) v[j] = -fy_[j];
    return IntPoly2(std::move(v));
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const {
    std::vector<IntPoly> v(std::max(fy_.size(), o.fy_.size()));
    for (size_t j = 0; j < v.size(); ++j) v[j] = y_coeff(j) + o.y_coeff(j);
    return IntPoly2(std::move(v));
}

IntPoly2 IntPoly2::operator-(const IntPoly2& o) const { return *this + (-o); }

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const {
    if (is_zero() || o.is_zero()) return IntPoly2();
    std::vector<IntPoly> v(fy_.size() + o.fy_.size() - 1);
    for (size_t i = 0; i < fy_.size(); ++i) {
        if (fy_[i].is_zero()) continue;
        for (size_t j = 0; j < o.fy_.size(); ++j) {
            if (o.fy_[j].is_zero()) continue;
            v[i + j] = v[i + j] + fy_[i] * o.fy_[j];
        }
    }
    return IntPoly2(std::move(v));
}

IntPoly2 IntPoly2::operator*(const mpz_class& s) const {
    if (s == 0) return IntPoly2();
    std::vector<IntPoly> v(fy_.size());
    for (size_t j = 0; j < fy_.size(); ++j) v[j] = fy_[j] * s;
    return IntPoly2(std::move(v));
}

IntPoly2 IntPoly2::partial_x() const {
    std::vector<IntPoly> v(fy_.size());
    for (size_t j = 0; j < fy_.size(); ++j) v[j] = fy_[j].derivative();
    return IntPoly2(std::move(v));
}

IntPoly2 IntPoly2::partial_y() const {
    if (fy_.size() <= 1) return IntPoly2();
    std::vector<IntPoly> v(fy_.size() - 1);
    for (size_t j = 1; j < fy_.size(); ++j) v[j - 1] = fy_[j] * mpz_class((long)j);
    return IntPoly2(std::move(v));
}

IntPoly2 IntPoly2::taylor_y(long k) const {
    if (k < 0) throw std::invalid_argument("taylor_y: negative index");
    if (k > deg_y()) return IntPoly2();
    std::vector<IntPoly> v(fy_.size() - k);
    for (long j = k; j < (long)fy_.size(); ++j) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), j, k);
        v[j - k] = fy_[j] * b;
    }
    return IntPoly2(std::move(v));
}

IntPoly2 IntPoly2::truncate_y(long l) const {
    if (l < 0) return IntPoly2();
    std::vector<IntPoly> v(fy_.begin(), fy_.begin() + std::min<size_t>(l + 1, fy_.size()));
    return IntPoly2(std::move(v));
}

IntPoly2 IntPoly2::transpose() const {
    return IntPoly2(x_view());
}

IntPoly2 IntPoly2::shear_x(long s) const {
    // substitute X -> X + s Y
    IntPoly2 X = IntPoly2::x() + IntPoly2::y() * mpz_class(s);
    auto xv = x_view();
    IntPoly2 acc;
    for (long i = (long)xv.size() - 1; i >= 0; --i) {
        IntPoly2 dterm;
        if (!xv[i].is_zero()) {
            std::vector<IntPoly> dy(xv[i].degree() + 1);
            for (long j = 0; j <= xv[i].degree(); ++j) dy[j] = IntPoly(xv[i].coeff(j));
            dterm = IntPoly2(std::move(dy));
        }
        acc = acc * X + dterm;
    }
    return acc;
}

mpq_class IntPoly2::eval(const mpq_class& x, const mpq_class& y) const {
    mpq_class acc = 0;
    for (long j = deg_y(); j >= 0; --j) acc = acc * y + fy_[j].eval(x);
    acc.canonicalize();
    return acc;
}

IntPoly IntPoly2::specialize_x(const mpq_class& x) const {
    mpz_class p = x.get_num(), q = x.get_den();
    long dx = deg_x();
    std::vector<mpz_class> v(fy_.size());
    for (size_t j = 0; j < fy_.size(); ++j) {
        // q^dx * f_j(p/q) = eval_scaled * q^(dx - deg f_j)
        mpz_class t = fy_[j].is_zero() ? mpz_class(0) : fy_[j].eval_scaled(p, q);
        if (!fy_[j].is_zero()) t *= pow_mpz(q, dx - fy_[j].degree());
        v[j] = t;
    }
    return IntPoly(std::move(v));
}

Interval IntPoly2::eval(const Interval& x, const Interval& y, long prec) const {
    Interval acc{Dyadic(), Dyadic()};
    for (long j = deg_y(); j >= 0; --j)
        acc = ((acc * y) + fy_[j].eval(x, prec)).round_out(prec);
    return acc;
}

Ball IntPoly2::eval(const Ball& x, const Ball& y, long prec) const {
    Ball acc;
    for (long j = deg_y(); j >= 0; --j)
        acc = (acc.mul(y, prec) + fy_[j].eval(x, prec)).round(prec);
    return acc;
}

IntPoly IntPoly2::content_y() const {
    if (is_zero()) return IntPoly();
    IntPoly g;
    for (const auto& f : fy_) {
        if (f.is_zero()) continue;
        g = g.is_zero() ? f.normalized() : IntPoly::gcd(g, f);
        if (g.degree() == 0) break;
    }
    // keep integer content out: primitive convention
    return g.normalized();
}

IntPoly2 IntPoly2::divexact_xpoly(const IntPoly& c) const {
    std::vector<IntPoly> v(fy_.size());
    for (size_t j = 0; j < fy_.size(); ++j)
        v[j] = fy_[j].is_zero() ? IntPoly() : fy_[j].exact_div(c);
    return IntPoly2(std::move(v));
}

IntPoly IntPoly2::content_x() const {
    auto xv = x_view();
    IntPoly g;
    for (const auto& f : xv) {
        if (f.is_zero()) continue;
        g = g.is_zero() ? f.normalized() : IntPoly::gcd(g, f);
        if (g.degree() == 0) break;
    }
    return g.normalized();
}

IntPoly2 IntPoly2::divexact_ypoly(const IntPoly& d) const {
    // divide the X-view coefficients by d(Y), then transpose back
    auto xv = x_view();
    std::vector<IntPoly> v(xv.size());
    for (size_t i = 0; i < xv.size(); ++i)
        v[i] = xv[i].is_zero() ? IntPoly() : xv[i].exact_div(d);
    return IntPoly2(std::move(v)).transpose();
}

IntPoly IntPoly2::resultant_y(const IntPoly2& f, const IntPoly2& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant_y of zero polynomial");
    return resultant_formal(f.fy_, f.deg_y(), g.fy_, g.deg_y());
}

IntPoly IntPoly2::resultant_x(const IntPoly2& f, const IntPoly2& g) {
    return resultant_y(f.transpose(), g.transpose());
}

std::vector<IntPoly> IntPoly2::subres_y(const IntPoly2& f, const IntPoly2& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("subres_y of zero polynomial");
    return subres_principal(f.fy_, f.deg_y(), g.fy_, g.deg_y());
}

IntPoly IntPoly2::disc_y(const IntPoly2& f) {
    long dy = f.deg_y();
    if (dy < 1) throw std::domain_error("disc_y needs deg_y >= 1");
    if (dy == 1) return IntPoly(1);
    IntPoly2 fp = f.partial_y();
    std::vector<IntPoly> fpv = fp.y_view();
    IntPoly res = resultant_formal(f.fy_, dy, fpv, dy - 1);
    return res.exact_div(f.lc_y());
}

IntPoly IntPoly2::disc_x(const IntPoly2& f) {
    return disc_y(f.transpose());
}

long IntPoly2::magnitude_tau() const {
    long t = 1;
    for (const auto& f : fy_)
        if (!f.is_zero()) t = std::max(t, f.magnitude_tau());
    return t;
}

std::string IntPoly2::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long j = deg_y(); j >= 0; --j) {
        if (fy_[j].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << fy_[j].to_string("x") << ")";
        if (j > 0) {
            os << "*y";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

} // namespace curvetop
