#include "exactalg/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace dahazeta::exactalg {

UniRealPoly::UniRealPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniRealPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniRealPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniRealPoly UniRealPoly::operator+(const UniRealPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniRealPoly(std::move(r));
}

UniRealPoly UniRealPoly::operator-(const UniRealPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniRealPoly(std::move(r));
}

UniRealPoly UniRealPoly::operator*(const UniRealPoly& o) const {
    if (is_zero() || o.is_zero()) return UniRealPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return UniRealPoly(std::move(r));
}

UniRealPoly UniRealPoly::operator*(const Rat& k) const {
    if (k == 0) return UniRealPoly();
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= k;
    return UniRealPoly(std::move(r));
}

Rat UniRealPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double UniRealPoly::eval_double(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + rat_to_double(*it);
    return r;
}

UniRealPoly UniRealPoly::derivative() const {
    if (c_.size() <= 1) return UniRealPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
    return UniRealPoly(std::move(r));
}

std::pair<UniRealPoly, UniRealPoly> UniRealPoly::divmod(const UniRealPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {UniRealPoly(), *this};
    std::vector<Rat> quot(degree() - dd + 1, Rat(0));
    for (int k = degree(); k >= dd; --k) {
        Rat f = rem[k] / d.c_.back();
        if (f == 0) continue;
        quot[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
    }
    return {UniRealPoly(std::move(quot)), UniRealPoly(std::move(rem))};
}

std::optional<UniRealPoly> UniRealPoly::divide_exact(const UniRealPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UniRealPoly UniRealPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

UniRealPoly UniRealPoly::primitive() const {
    if (is_zero()) return *this;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& x : c_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(x));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(x));
    }
    Rat scale(den_lcm, num_gcd);
    if (leading() < 0) scale = -scale;
    return *this * scale;
}

std::string UniRealPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        Rat aa = a < 0 ? -a : a;
        if (aa != 1 || i == 0) os << rat_str(aa);
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniRealPoly gcd(const UniRealPoly& a, const UniRealPoly& b) {
    UniRealPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        x = std::move(y);
        y = std::move(r);
        // keep coefficients small
        if (!y.is_zero()) y = y.primitive();
    }
    return x.is_zero() ? x : x.monic();
}

UniRealPoly squarefree_part(const UniRealPoly& p) {
    if (p.degree() <= 0) return p.primitive();
    UniRealPoly g = gcd(p, p.derivative());
    auto q = p.divide_exact(g);
    return q->primitive();
}

UniRealPoly uni_from_laurent(const LaurentPoly& p, const std::string& var) {
    if (p.vars().size() != 1 || p.vars()[0] != var) {
        // allow multivariate carrier with all other variables dead
        for (size_t i = 0; i < p.vars().size(); ++i)
            if (p.vars()[i] != var && p.max_exp(p.vars()[i]) != p.min_exp(p.vars()[i]))
                throw std::invalid_argument("uni_from_laurent: live extra variable");
    }
    int vi = p.var_index(var);
    if (vi < 0) throw std::invalid_argument("uni_from_laurent: unknown variable");
    Rat mn = p.min_exp(var);
    if (mn < 0) throw std::invalid_argument("uni_from_laurent: negative exponents (shift first)");
    long dmax = rat_to_long(p.max_exp(var), "uni_from_laurent degree");
    std::vector<Rat> c(dmax + 1, Rat(0));
    for (const auto& [e, k] : p.terms()) {
        long d = rat_to_long(e[vi], "uni_from_laurent exponent");
        c[d] += k;
    }
    return UniRealPoly(std::move(c));
}

LaurentPoly uni_to_laurent(const UniRealPoly& p, const std::string& var) {
    LaurentPoly out({var});
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) out.add_term({Rat(i)}, p.coeff(i));
    return out;
}

// ---- resultant of two t-polynomials with Q[q] coefficients (Bareiss) ----

namespace {

using QP = UniRealPoly;  // polynomial in q

QP qp_divide_exact(const QP& a, const QP& b) {
    auto r = a.divide_exact(b);
    if (!r) throw std::logic_error("Bareiss: inexact division");
    return *r;
}

// determinant of a square matrix over Q[q], fraction-free Bareiss
QP det_bareiss(std::vector<std::vector<QP>> m) {
    size_t n = m.size();
    if (n == 0) return QP::constant(1);
    QP prev = QP::constant(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        // pivot
        if (m[k][k].is_zero()) {
            size_t s = k + 1;
            while (s < n && m[s][k].is_zero()) ++s;
            if (s == n) return QP();  // singular
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                QP num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = qp_divide_exact(num, prev);
            }
        prev = m[k][k];
    }
    return sign < 0 ? m[n - 1][n - 1] * Rat(-1) : m[n - 1][n - 1];
}

}  // namespace

UniRealPoly discriminant_t(const LaurentPoly& p, const std::string& qvar, const std::string& tvar) {
    // collect t-coefficients as Q[q] polynomials
    auto texps = p.exponents_of(tvar);
    if (texps.empty()) throw std::domain_error("discriminant_t: zero polynomial");
    long dt = rat_to_long(texps.back(), "discriminant_t t-degree");
    long mt = rat_to_long(texps.front(), "discriminant_t t-valuation");
    if (mt < 0) throw std::domain_error("discriminant_t: negative t-exponents");
    if (dt < 1) throw std::domain_error("discriminant_t: t-degree < 1");
    std::vector<QP> a(dt + 1);  // a[i] = coeff of t^i, polynomial in q
    for (long i = 0; i <= dt; ++i) {
        LaurentPoly ci = p.coeff_of(tvar, Rat(i));
        a[i] = ci.is_zero() ? QP() : uni_from_laurent(ci, qvar);
    }
    // derivative
    std::vector<QP> b(dt);
    for (long i = 1; i <= dt; ++i) b[i - 1] = a[i] * Rat(Int(i));
    long db = dt - 1;
    while (db >= 0 && b[db].is_zero()) --db;
    if (db < 0) throw std::domain_error("discriminant_t: derivative vanishes");

    // Sylvester matrix of sizes (dt + db)
    size_t n = dt + db;
    std::vector<std::vector<QP>> m(n, std::vector<QP>(n));
    for (long r = 0; r < db; ++r)
        for (long i = 0; i <= dt; ++i) m[r][r + dt - i] = a[i];
    for (long r = 0; r < dt; ++r)
        for (long i = 0; i <= db; ++i) m[db + r][r + db - i] = b[i];
    QP res = det_bareiss(std::move(m));
    if (res.is_zero()) return QP();  // degenerate (multiple roots identically)
    QP disc = qp_divide_exact(res, a[dt]);
    long d = dt;
    if (((d * (d - 1)) / 2) % 2 == 1) disc = disc * Rat(-1);
    return disc.primitive();
}

// ---- real root isolation (sign-variation bisection on dyadic intervals) ----

namespace {

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// number of sign variations of P((a+b x)/(1+x)) * (1+x)^deg  on (0, inf),
// which bounds the number of roots of P in (a, b)
int descartes_count(const UniRealPoly& p, const Rat& a, const Rat& b) {
    int n = p.degree();
    // q(x) = (1+x)^n * p((a + b x)/(1 + x)); compute by two shifts/scales:
    // p_ab(x) = p(a + (b-a) x) on (0,1), then x -> x/(1+x) mapping to (0,inf):
    // q(x) = (1+x)^n * p_ab(x/(1+x)) = sum c_i x^i (1+x)^{n-i}
    std::vector<Rat> c(n + 1, Rat(0));
    // Taylor shift: p(a + y), then scale y = (b-a)x
    std::vector<Rat> sh(p.coeffs());
    // shift by a: synthetic division repeated
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) sh[j] += a * sh[j + 1];
    Rat scale = b - a, pw = 1;
    for (int i = 0; i <= n; ++i) {
        c[i] = sh[i] * pw;
        pw *= scale;
    }
    // expand sum c_i x^i (1+x)^(n-i)
    std::vector<Rat> q(n + 1, Rat(0));
    std::vector<Rat> binom(n + 1, Rat(0));
    for (int i = 0; i <= n; ++i) {
        if (c[i] == 0) continue;
        // (1+x)^(n-i) coefficients
        binom.assign(n + 1, Rat(0));
        binom[0] = 1;
        for (int k = 0; k < n - i; ++k)
            for (int j = k + 1; j >= 1; --j) binom[j] += binom[j - 1];
        for (int j = 0; j + i <= n; ++j) q[i + j] += c[i] * binom[j];
    }
    int var = 0, last = 0;
    for (int i = 0; i <= n; ++i) {
        int s = sign_of(q[i]);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

void isolate_rec(const UniRealPoly& p, const Rat& a, const Rat& b, std::vector<Interval>& out,
                 int depth) {
    if (depth > 20000) throw std::runtime_error("isolate_real_roots: recursion depth exceeded");
    int v = descartes_count(p, a, b);
    if (v == 0) return;
    if (v == 1) {
        out.push_back({a, b});
        return;
    }
    Rat m = (a + b) / 2;
    if (p.eval(m) == 0) out.push_back({m, m});
    isolate_rec(p, a, m, out, depth + 1);
    isolate_rec(p, m, b, out, depth + 1);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const UniRealPoly& p, const Rat& lo, const Rat& hi) {
    if (p.degree() < 0) throw std::domain_error("isolate_real_roots: zero polynomial");
    UniRealPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) throw std::domain_error("isolate_real_roots: input not squarefree");
    std::vector<Interval> out;
    if (p.degree() == 0 || lo >= hi) return out;
    Rat a = lo, b = hi;
    // endpoints must not be roots; nudge inward by tiny dyadic steps
    Rat eps = (b - a) / 4096;
    while (p.eval(a) == 0) a += eps;  // open interval: endpoint roots excluded
    while (p.eval(b) == 0) b -= eps;
    isolate_rec(p, a, b, out, 0);
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

Interval refine_root(const UniRealPoly& p, Interval iv, const Rat& width) {
    if (iv.lo == iv.hi) return iv;
    int slo = sign_of(p.eval(iv.lo));
    if (slo == 0) return {iv.lo, iv.lo};
    while (iv.hi - iv.lo > width) {
        Rat m = (iv.lo + iv.hi) / 2;
        int sm = sign_of(p.eval(m));
        if (sm == 0) return {m, m};
        if (sm == slo) iv.lo = m;
        else iv.hi = m;
    }
    return iv;
}

}  // namespace dahazeta::exactalg
