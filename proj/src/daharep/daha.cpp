#include "daharep/daha.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dahazeta::daharep {

using rootdata::Weight;

Context::Context(int rank) : n(rank), qs(2 * (rank + 1)) {
    if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("Context: rank out of range");
    ured.resize(n);
    uinv.resize(n);
    comega.resize(n + 1);
    for (int r = 1; r <= n; ++r) {
        auto u = rootdata::u_r_perm(r, n);
        ured[r - 1] = rootdata::reduced_word(u);
        uinv[r - 1] = rootdata::perm_inverse(u);
        // (omega_r, omega_r)/2 * qs = r(n+1-r)
        comega[r] = static_cast<int32_t>(r * (n + 1 - r));
    }
}

namespace {

// s_i on omega-coordinates inside a key (i = 1..n)
inline void reflect_key(XKey& k, int i, int n) {
    int16_t li = k.x[i - 1];
    if (i >= 2) k.x[i - 2] = static_cast<int16_t>(k.x[i - 2] + li);
    if (i < n) k.x[i] = static_cast<int16_t>(k.x[i] + li);
    k.x[i - 1] = static_cast<int16_t>(-li);
}

// b -> b + j*alpha_i on omega-coordinates
inline void add_alpha(XKey& k, int i, int j, int n) {
    if (i >= 2) k.x[i - 2] = static_cast<int16_t>(k.x[i - 2] - j);
    k.x[i - 1] = static_cast<int16_t>(k.x[i - 1] + 2 * j);
    if (i < n) k.x[i] = static_cast<int16_t>(k.x[i] - j);
}

// b -> b + j*theta (theta = highest root)
inline void add_theta(XKey& k, int j, int n) {
    if (n == 1) {
        k.x[0] = static_cast<int16_t>(k.x[0] + 2 * j);
    } else {
        k.x[0] = static_cast<int16_t>(k.x[0] + j);
        k.x[n - 1] = static_cast<int16_t>(k.x[n - 1] + j);
    }
}

}  // namespace

XPoly apply_T(const Context& c, int i, const XPoly& v, int sign) {
    const int n = c.n;
    std::vector<XTerm> out;
    out.reserve(v.size() * 2);
    const bool affine = (i == 0);
    for (const auto& [k, coef] : v.terms()) {
        // pairing with the simple (affine) root
        long kk;
        if (affine) {
            long btheta = 0;
            for (int j = 0; j < n; ++j) btheta += k.x[j];
            if (n == 1) btheta = k.x[0];
            kk = -btheta;  // (b, alpha_0) = -(b, theta)
        } else {
            kk = k.x[i - 1];
        }

        // reflection part: t^{1/2} s_i(X_b)
        XKey rk = k;
        rk.te += 1;
        if (affine) {
            long btheta = -kk;
            add_theta(rk, static_cast<int>(kk), n);  // b - (b,theta)theta
            rk.qe += static_cast<int32_t>(btheta * c.qs);  // q^{(b,theta)}
        } else {
            reflect_key(rk, i, n);
        }
        out.emplace_back(rk, coef);

        // divided-difference string: (t^{1/2}-t^{-1/2}) (X_{a0}-1)^{-1}(s_i-1)
        if (kk > 0) {
            for (long j = 1; j <= kk; ++j) {
                XKey sk = k;
                if (affine) {
                    add_theta(sk, static_cast<int>(j), n);
                    sk.qe -= static_cast<int32_t>(j * c.qs);
                } else {
                    add_alpha(sk, i, static_cast<int>(-j), n);
                }
                sk.te += 1;
                out.emplace_back(sk, -coef);
                sk.te -= 2;
                out.emplace_back(sk, coef);
            }
        } else if (kk < 0) {
            for (long j = 0; j < -kk; ++j) {
                XKey sk = k;
                if (affine) {
                    add_theta(sk, static_cast<int>(-j), n);
                    sk.qe += static_cast<int32_t>(j * c.qs);
                } else {
                    add_alpha(sk, i, static_cast<int>(j), n);
                }
                sk.te += 1;
                out.emplace_back(sk, coef);
                sk.te -= 2;
                out.emplace_back(sk, -coef);
            }
        }
        if (sign < 0) {
            // T^{-1} = T - (t^{1/2} - t^{-1/2})
            XKey sk = k;
            sk.te += 1;
            out.emplace_back(sk, -coef);
            sk.te -= 2;
            out.emplace_back(sk, coef);
        }
    }
    return XPoly(std::move(out));
}

XPoly apply_pi(const Context& c, int r, const XPoly& v, int sign) {
    const int n = c.n;
    const int rr = sign > 0 ? r : n + 1 - r;  // pi_r^{-1} = pi_{n+1-r}
    const auto& ui = c.uinv[rr - 1];
    const int io = n + 1 - rr;  // iota(rr)
    std::vector<XTerm> out;
    out.reserve(v.size());
    for (const auto& [k, coef] : v.terms()) {
        // epsilon-vector of b
        std::vector<long> vv(n + 1, 0);
        for (int j = n - 1; j >= 0; --j) vv[j] = vv[j + 1] + k.x[j];
        long total = std::accumulate(vv.begin(), vv.end(), 0L);
        // scaled (omega_io, b) * qs = 2(n+1) sum_{i<=io} v_i - 2*io*total
        long pref = 0;
        for (int j = 0; j < io; ++j) pref += vv[j];
        long qexp = 2L * (n + 1) * pref - 2L * io * total;
        // permute: result[ui[i]] = v[i]
        std::vector<long> pv(n + 1, 0);
        for (int j = 0; j <= n; ++j) pv[ui[j]] = vv[j];
        XKey nk = k;
        nk.qe += static_cast<int32_t>(qexp);
        for (int j = 0; j < n; ++j) nk.x[j] = static_cast<int16_t>(pv[j] - pv[j + 1]);
        out.emplace_back(nk, coef);
    }
    return XPoly(std::move(out));
}

XPoly apply_Y_omega(const Context& c, int r, const XPoly& v, int sign) {
    const auto& word = c.ured[r - 1];
    XPoly cur = v;
    if (sign > 0) {
        for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_T(c, *it, cur, 1);
        cur = apply_pi(c, r, cur, 1);
    } else {
        cur = apply_pi(c, r, cur, -1);
        for (auto it = word.begin(); it != word.end(); ++it) cur = apply_T(c, *it, cur, -1);
    }
    return cur;
}

XPoly apply_Y(const Context& c, const Weight& b, const XPoly& v) {
    XPoly cur = v;
    for (int r = 1; r <= c.n; ++r) {
        int m = b[r - 1];
        for (int j = 0; j < std::abs(m); ++j) cur = apply_Y_omega(c, r, cur, m > 0 ? 1 : -1);
    }
    return cur;
}

XPoly apply_Y_inv(const Context& c, const Weight& b, const XPoly& v) {
    Weight nb(b);
    for (auto& x : nb) x = -x;
    return apply_Y(c, nb, v);
}

XPoly apply_X(const Context& c, const Weight& b, const XPoly& v) {
    (void)c;
    XPoly r = v;
    r.mul_x(b);
    r.normalize();
    return r;
}

exactalg::LaurentPoly coinvariant(const Context& c, const XPoly& v) {
    exactalg::LaurentPoly out({"q", "t"});
    for (const auto& [k, coef] : v.terms()) {
        long te2 = k.te;
        for (int r = 1; r <= c.n; ++r) te2 -= static_cast<long>(k.x[r - 1]) * r * (c.n + 1 - r);
        out.add_term({Rat(k.qe, c.qs), Rat(te2, 2)}, Rat(coef));
    }
    return out;
}

// ---- tau words ----

std::array<long, 4> tau_word_matrix(const TauWord& w) {
    std::array<long, 4> m{1, 0, 0, 1};
    for (TauLetter l : w) {
        std::array<long, 4> g;
        switch (l) {
            case TauLetter::Plus: g = {1, 1, 0, 1}; break;
            case TauLetter::PlusInv: g = {1, -1, 0, 1}; break;
            case TauLetter::Minus: g = {1, 0, 1, 1}; break;
            case TauLetter::MinusInv: g = {1, 0, -1, 1}; break;
            default: throw std::logic_error("tau_word_matrix: bad letter");
        }
        m = {m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3],
             m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3]};
    }
    return m;
}

TauWord gamma_lift(long r, long s) {
    if (r == 0 && s == 0) throw std::invalid_argument("gamma_lift: zero column");
    if (r < 0) { r = -r; s = -s; }  // same element of PSL(2,Z)
    if (std::gcd(std::abs(r), std::abs(s)) != 1)
        throw std::invalid_argument("gamma_lift: gcd(r,s) != 1");
    TauWord w;
    while (s < 0) {  // peel tau_-^{-1} from the left
        w.push_back(TauLetter::MinusInv);
        s += r;
        if (r == 0) throw std::invalid_argument("gamma_lift: r = 0 with negative s");
    }
    if (r == 0) return {TauLetter::Minus, TauLetter::PlusInv, TauLetter::Minus};  // column (0,1)
    while (!(r == 1 && s == 0)) {
        if (r > s) {
            w.push_back(TauLetter::Plus);
            r -= s;
        } else {
            w.push_back(TauLetter::Minus);
            s -= r;
        }
    }
    return w;
}

OpWord image_word(const Context& c, const TauWord& core, int r, int sign) {
    OpWord w;
    w.fac.push_back({false, r, sign});
    const int32_t cr = c.comega[r];
    for (auto it = core.rbegin(); it != core.rend(); ++it) {
        std::vector<OpFactor> nf;
        nf.reserve(w.fac.size() * 2);
        for (const OpFactor& f : w.fac) {
            switch (*it) {
                case TauLetter::Minus:
                    if (!f.is_y && f.sign > 0) {
                        nf.push_back({true, f.r, 1});
                        nf.push_back(f);
                        w.qe += cr;
                    } else if (!f.is_y) {
                        nf.push_back(f);
                        nf.push_back({true, f.r, -1});
                        w.qe -= cr;
                    } else {
                        nf.push_back(f);
                    }
                    break;
                case TauLetter::MinusInv:
                    if (!f.is_y && f.sign > 0) {
                        nf.push_back({true, f.r, -1});
                        nf.push_back(f);
                        w.qe -= cr;
                    } else if (!f.is_y) {
                        nf.push_back(f);
                        nf.push_back({true, f.r, 1});
                        w.qe += cr;
                    } else {
                        nf.push_back(f);
                    }
                    break;
                case TauLetter::Plus:
                    if (f.is_y && f.sign > 0) {
                        nf.push_back({false, f.r, 1});
                        nf.push_back(f);
                        w.qe -= cr;
                    } else if (f.is_y) {
                        nf.push_back(f);
                        nf.push_back({false, f.r, -1});
                        w.qe += cr;
                    } else {
                        nf.push_back(f);
                    }
                    break;
                case TauLetter::PlusInv:
                    if (f.is_y && f.sign > 0) {
                        nf.push_back({false, f.r, -1});
                        nf.push_back(f);
                        w.qe += cr;
                    } else if (f.is_y) {
                        nf.push_back(f);
                        nf.push_back({false, f.r, 1});
                        w.qe -= cr;
                    } else {
                        nf.push_back(f);
                    }
                    break;
            }
        }
        w.fac = std::move(nf);
    }
    return w;
}

// ---- generic exact q,t-division ----

std::optional<XPoly> divide_qt_exact(const XPoly& num, const XPoly& den) {
    if (den.is_zero()) throw std::domain_error("divide_qt_exact: zero divisor");
    // group numerator terms by X-monomial (keys sorted: group by x)
    std::vector<XTerm> terms = num.terms();
    std::stable_sort(terms.begin(), terms.end(),
                     [](const XTerm& a, const XTerm& b) { return XKey::xless(a.first, b.first); });
    // divisor leading term in (qe,te)-lex
    const XTerm* dl = nullptr;
    for (const auto& t : den.terms())
        if (!dl || dl->first < t.first) dl = &t;
    std::vector<XTerm> quot;
    size_t i = 0;
    while (i < terms.size()) {
        size_t j = i;
        while (j < terms.size() && terms[j].first.x == terms[i].first.x) ++j;
        // divide the q,t-polynomial terms[i..j) by den
        std::vector<XTerm> rem(terms.begin() + i, terms.begin() + j);
        std::sort(rem.begin(), rem.end(),
                  [](const XTerm& a, const XTerm& b) { return a.first < b.first; });
        while (!rem.empty()) {
            const XTerm& lead = rem.back();
            if (lead.second % dl->second != 0) return std::nullopt;
            XKey qk = lead.first;
            qk.qe -= dl->first.qe;
            qk.te -= dl->first.te;
            Int qc = lead.second / dl->second;
            quot.emplace_back(qk, qc);
            std::vector<XTerm> sub;
            sub.reserve(rem.size() + den.size());
            sub.insert(sub.end(), rem.begin(), rem.end());
            for (const auto& [dk, dc] : den.terms()) {
                XKey k = qk;
                k.qe += dk.qe;
                k.te += dk.te;
                k.x = lead.first.x;
                sub.emplace_back(k, -qc * dc);
            }
            XPoly folded(std::move(sub));
            rem = folded.terms();
            if (!rem.empty() && !(rem.back().first < lead.first)) return std::nullopt;
        }
        i = j;
    }
    return XPoly(std::move(quot));
}

// ---- E-basis ----

namespace {

// small fraction field over q,t-Laurent polynomials (kept unreduced except
// for cheap exact-division and integer-content collapses)
struct FracQT {
    XPoly num, den;

    static FracQT zero() { return {XPoly(), XPoly::one()}; }
    static FracQT of(XPoly p) { return {std::move(p), XPoly::one()}; }
    bool is_zero() const { return num.is_zero(); }

    void reduce() {
        if (num.is_zero()) { den = XPoly::one(); return; }
        if (auto q = divide_qt_exact(num, den)) {
            num = std::move(*q);
            den = XPoly::one();
            return;
        }
        Int g = 0;
        for (const auto& [k, c] : num.terms()) g = boost::multiprecision::gcd(g, c);
        for (const auto& [k, c] : den.terms()) g = boost::multiprecision::gcd(g, c);
        if (g > 1) {
            auto divall = [&](XPoly& p) {
                for (auto& [k, c] : p.raw()) c /= g;
            };
            divall(num);
            divall(den);
        }
    }
    FracQT operator*(const FracQT& o) const {
        FracQT r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
    FracQT operator-(const FracQT& o) const {
        FracQT r{num * o.den - o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    FracQT operator/(const FracQT& o) const {
        if (o.num.is_zero()) throw std::domain_error("FracQT: division by zero");
        FracQT r{num * o.den, den * o.num};
        r.reduce();
        return r;
    }
};

XKey xonly_key(const Weight& b) {
    XKey k;
    for (size_t i = 0; i < b.size(); ++i) k.x[i] = static_cast<int16_t>(b[i]);
    return k;
}

Weight key_weight(const XKey& k, int n) {
    Weight b(n);
    for (int i = 0; i < n; ++i) b[i] = k.x[i];
    return b;
}

}  // namespace

XPoly EBasis::eigen_char(const Weight& b, int r) {
    // diagonal coefficient of Y_{omega_r} at X_b; a q,t-monomial
    Weight key = b;
    key.push_back(r);  // composite cache key
    auto it = charcache_.find(key);
    if (it != charcache_.end()) return it->second;
    XPoly xb = XPoly::monomial(xonly_key(b), 1);
    XPoly im = apply_Y_omega(ctx_, r, xb, 1);
    XPoly diag;
    for (const auto& [k, c] : im.terms())
        if (k.x == xonly_key(b).x) {
            XKey qt = k;
            qt.x = {};
            diag += XPoly::monomial(qt, c);
        }
    if (diag.size() != 1)
        throw std::logic_error("eigen_char: diagonal entry is not a monomial");
    charcache_.emplace(std::move(key), diag);
    return diag;
}

const FracXPoly& EBasis::E(const Weight& b) {
    auto it = cache_.find(b);
    if (it != cache_.end()) return it->second;

    const int n = ctx_.n;
    // span: all monomials X_c with c_+ in the dominance cone below b_+
    Weight bp = rootdata::dominant_rep(b);
    std::vector<Weight> span;
    for (const auto& d : rootdata::dominance_cone(bp))
        for (const auto& w : rootdata::weyl_orbit(d)) span.push_back(w);
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    auto index_of = [&](const Weight& w) {
        auto p = std::lower_bound(span.begin(), span.end(), w);
        if (p == span.end() || *p != w) return -1L;
        return p - span.begin();
    };
    long bi = index_of(b);
    if (bi < 0) throw std::logic_error("EBasis: weight not in its own span");
    const size_t m = span.size();

    // rows of (Y_r - lambda_r) stacked for r = 1..n, as columns over the span
    std::vector<XPoly> lambda(n + 1);
    for (int r = 1; r <= n; ++r) lambda[r] = eigen_char(b, r);

    // matrix columns: A[r][j] = (Y_r - lambda_r) X_{span[j]} expanded over span
    // assembled into rows on demand during elimination; build dense fractions
    std::vector<std::vector<FracQT>> A;
    A.reserve(n * m);
    for (int r = 1; r <= n; ++r) {
        std::vector<std::vector<FracQT>> cols(m);
        for (size_t j = 0; j < m; ++j) {
            XPoly im = apply_Y_omega(ctx_, r, XPoly::monomial(xonly_key(span[j]), 1), 1);
            XPoly lam = lambda[r];
            // subtract lambda * X_{span[j]}
            XPoly sub = lam;
            sub.mul_x(span[j]);
            sub.normalize();
            im = im - sub;
            cols[j].assign(m, FracQT::zero());
            for (const auto& [k, c] : im.terms()) {
                long idx = index_of(key_weight(k, n));
                if (idx < 0) throw std::logic_error("EBasis: image leaves the span");
                XKey qt = k;
                qt.x = {};
                cols[j][idx].num += XPoly::monomial(qt, c);
            }
        }
        for (size_t row = 0; row < m; ++row) {
            std::vector<FracQT> rowv(m);
            for (size_t j = 0; j < m; ++j) rowv[j] = cols[j][row];
            A.push_back(std::move(rowv));
        }
    }
    // solve A u = 0 with u[bi] = 1: move column bi to RHS
    std::vector<FracQT> rhs(A.size());
    for (size_t i = 0; i < A.size(); ++i) {
        rhs[i] = FracQT::zero() - A[i][bi];
        A[i][bi] = FracQT::zero();
    }
    std::vector<long> cols_order;
    for (size_t j = 0; j < m; ++j)
        if ((long)j != bi) cols_order.push_back(j);
    std::vector<FracQT> u(m, FracQT::zero());
    u[bi] = FracQT::of(XPoly::one());

    size_t rrow = 0;
    std::vector<long> pivot_col_of_row;
    std::vector<size_t> pivot_rows;
    for (long j : cols_order) {
        size_t p = rrow;
        while (p < A.size() && A[p][j].is_zero()) ++p;
        if (p == A.size()) continue;
        std::swap(A[p], A[rrow]);
        std::swap(rhs[p], rhs[rrow]);
        for (size_t i = 0; i < A.size(); ++i) {
            if (i == rrow || A[i][j].is_zero()) continue;
            FracQT f = A[i][j] / A[rrow][j];
            for (long j2 : cols_order)
                if (!A[rrow][j2].is_zero()) A[i][j2] = A[i][j2] - f * A[rrow][j2];
            A[i][j] = FracQT::zero();
            rhs[i] = rhs[i] - f * rhs[rrow];
        }
        pivot_col_of_row.push_back(j);
        pivot_rows.push_back(rrow);
        ++rrow;
    }
    for (size_t k = 0; k < pivot_rows.size(); ++k)
        u[pivot_col_of_row[k]] = rhs[pivot_rows[k]] / A[pivot_rows[k]][pivot_col_of_row[k]];

    // assemble over a common denominator
    XPoly den = XPoly::one();
    for (size_t j = 0; j < m; ++j)
        if (!u[j].is_zero()) den = den * u[j].den;
    FracXPoly out;
    out.den = den;
    for (size_t j = 0; j < m; ++j) {
        if (u[j].is_zero()) continue;
        auto part = divide_qt_exact(den, u[j].den);
        if (!part) throw std::logic_error("EBasis: denominator bookkeeping failed");
        XPoly piece = u[j].num * *part;
        piece.mul_x(span[j]);
        piece.normalize();
        out.num += piece;
    }
    // verify eigen-relations exactly
    for (int r = 1; r <= n; ++r) {
        XPoly lhs = apply_Y_omega(ctx_, r, out.num, 1);
        XPoly rhsv = lambda[r] * out.num;
        if (!(lhs == rhsv)) throw std::logic_error("EBasis: eigenvector verification failed");
    }
    return cache_.emplace(b, std::move(out)).first->second;
}

XPoly EBasis::tau_minus_diag(const XPoly& v, long power) {
    if (v.is_zero() || power == 0) return v;
    const int n = ctx_.n;

    // group support by dominant representative, topologically by dominance
    std::map<Weight, std::vector<size_t>> groups;  // bp -> term indices
    const auto& terms = v.terms();
    for (size_t i = 0; i < terms.size(); ++i)
        groups[rootdata::dominant_rep(key_weight(terms[i].first, n))].push_back(i);
    std::vector<Weight> levels;
    for (const auto& [w, idx] : groups) levels.push_back(w);
    std::sort(levels.begin(), levels.end(), [](const Weight& a, const Weight& b) {
        if (rootdata::dominance_leq(a, b) && a != b) return false;  // a below b: later
        if (rootdata::dominance_leq(b, a) && a != b) return true;
        return a > b;  // arbitrary tiebreak for incomparable
    });
    // The sort above is not a strict weak order for posets; do a topological
    // pass instead: repeatedly take maximal elements.
    std::vector<Weight> order;
    std::set<Weight> remaining(levels.begin(), levels.end());
    while (!remaining.empty()) {
        for (auto it = remaining.begin(); it != remaining.end();) {
            bool maximal = true;
            for (const auto& w : remaining)
                if (w != *it && rootdata::dominance_leq(*it, w)) { maximal = false; break; }
            if (maximal) {
                order.push_back(*it);
                it = remaining.erase(it);
            } else {
                ++it;
            }
        }
    }

    FracQT acc_den = FracQT::of(XPoly::one());
    // result as fraction: num over common den
    XPoly res_num;
    XPoly res_den = XPoly::one();
    // remainder as fraction
    XPoly rem_num = v;
    XPoly rem_den = XPoly::one();

    auto scalar_pow = [&](const Weight& bp, long p) {
        // (q^{-(bp,bp)/2} t^{-(rho,bp)})^p, scaled exponents
        auto vv = rootdata::eps_vector(bp);
        long s = 0, s2 = 0;
        for (long x : std::vector<long>(vv.begin(), vv.end())) { s += x; s2 += x * x; }
        long qe = -((n + 1) * s2 - s * s);  // = -qs*(bp,bp)/2
        long te2 = 0;
        for (int r = 1; r <= n; ++r) te2 -= static_cast<long>(bp[r - 1]) * r * (n + 1 - r);
        XKey k;
        k.qe = static_cast<int32_t>(qe * p);
        k.te = static_cast<int32_t>(te2 * p);
        return XPoly::monomial(k, 1);
    };

    for (const Weight& bp : order) {
        // collect current remainder terms in this orbit
        std::map<Weight, FracQT> want;
        for (const auto& [k, c] : XPoly(rem_num).terms()) {
            Weight w = key_weight(k, n);
            if (rootdata::dominant_rep(w) != bp) continue;
            XKey qt = k;
            qt.x = {};
            auto [it2, fresh] = want.emplace(w, FracQT::zero());
            it2->second.num += XPoly::monomial(qt, c);
        }
        if (want.empty()) continue;
        for (auto& [w, f] : want) f.den = rem_den, f.reduce();

        // solve the in-orbit unitriangular system: want = sum d_c E_c|orbit
        std::vector<Weight> orb;
        for (const auto& [w, f] : want) orb.push_back(w);
        // iterate: also need E_c for weights only appearing through other E's
        // (within the same orbit); collect the full orbit lazily
        std::vector<Weight> full = rootdata::weyl_orbit(bp);
        std::map<Weight, long> oidx;
        for (size_t i = 0; i < full.size(); ++i) oidx[full[i]] = static_cast<long>(i);
        std::vector<FracQT> rhso(full.size(), FracQT::zero());
        for (const auto& [w, f] : want) rhso[oidx[w]] = f;
        // matrix M[e][c] = coeff of X_e in E_c (within the orbit)
        std::vector<std::vector<FracQT>> M(full.size(),
                                           std::vector<FracQT>(full.size(), FracQT::zero()));
        for (size_t cidx = 0; cidx < full.size(); ++cidx) {
            const FracXPoly& e = E(full[cidx]);
            for (const auto& [k, c] : e.num.terms()) {
                Weight w = key_weight(k, n);
                auto f = oidx.find(w);
                if (f == oidx.end()) continue;  // lower level
                XKey qt = k;
                qt.x = {};
                M[f->second][cidx].num += XPoly::monomial(qt, c);
            }
            for (auto& row : M) {
                if (!row[cidx].is_zero()) { row[cidx].den = e.den; row[cidx].reduce(); }
            }
        }
        // Gaussian solve M d = rhso
        const size_t msz = full.size();
        std::vector<long> piv(msz, -1);
        size_t rrow2 = 0;
        for (size_t col = 0; col < msz && rrow2 < msz; ++col) {
            size_t p = rrow2;
            while (p < msz && M[p][col].is_zero()) ++p;
            if (p == msz) continue;
            std::swap(M[p], M[rrow2]);
            std::swap(rhso[p], rhso[rrow2]);
            for (size_t i = 0; i < msz; ++i) {
                if (i == rrow2 || M[i][col].is_zero()) continue;
                FracQT f = M[i][col] / M[rrow2][col];
                for (size_t j = 0; j < msz; ++j)
                    if (!M[rrow2][j].is_zero()) M[i][j] = M[i][j] - f * M[rrow2][j];
                rhso[i] = rhso[i] - f * rhso[rrow2];
            }
            piv[col] = static_cast<long>(rrow2);
            ++rrow2;
        }
        std::vector<FracQT> d(msz, FracQT::zero());
        for (size_t col = 0; col < msz; ++col)
            if (piv[col] >= 0) d[col] = rhso[piv[col]] / M[piv[col]][col];

        // update remainder and result
        for (size_t cidx = 0; cidx < msz; ++cidx) {
            if (d[cidx].is_zero()) continue;
            const FracXPoly& e = E(full[cidx]);
            // rem -= d * E ; res += d * scalar^power * E
            XPoly dn = d[cidx].num, dd = d[cidx].den * e.den;
            // remainder
            XPoly t1 = dn * e.num;
            XPoly new_rem_num = rem_num * dd - t1 * rem_den;
            XPoly new_rem_den = rem_den * dd;
            rem_num = std::move(new_rem_num);
            rem_den = std::move(new_rem_den);
            FracQT rr{rem_num, rem_den};
            rr.reduce();
            rem_num = rr.num;
            rem_den = rr.den;
            // result
            XPoly t2 = t1 * scalar_pow(bp, power);
            XPoly new_res_num = res_num * dd + t2 * res_den;
            res_den = res_den * dd;
            res_num = std::move(new_res_num);
            FracQT rs{res_num, res_den};
            rs.reduce();
            res_num = rs.num;
            res_den = rs.den;
        }
    }
    if (!rem_num.is_zero()) throw std::logic_error("tau_minus_diag: nonzero remainder");
    auto out = divide_qt_exact(res_num, res_den);
    if (!out) throw std::logic_error("tau_minus_diag: result not integral");
    return *out;
}

// ---- gamma application ----

namespace {

XPoly apply_op_word(const Context& c, const OpWord& w, const XPoly& v) {
    XPoly cur = v;
    for (auto it = w.fac.rbegin(); it != w.fac.rend(); ++it) {
        if (it->is_y) {
            cur = apply_Y_omega(c, it->r, cur, it->sign);
        } else {
            Weight b(c.n, 0);
            b[it->r - 1] = it->sign;
            cur = apply_X(c, b, cur);
        }
    }
    cur.shift_qt(w.qe, 0);
    return cur;
}

struct LeafwiseEngine {
    const Context& ctx;
    std::vector<OpWord> img_pos, img_neg;  // per r = 1..n
    std::map<std::array<int16_t, kMaxRank>, XPoly> memo;

    LeafwiseEngine(const Context& c, const TauWord& core) : ctx(c) {
        img_pos.resize(c.n + 1);
        img_neg.resize(c.n + 1);
        for (int r = 1; r <= c.n; ++r) {
            img_pos[r] = image_word(c, core, r, 1);
            img_neg[r] = image_word(c, core, r, -1);
        }
        memo[{}] = XPoly::one();
    }

    const XPoly& get(const std::array<int16_t, kMaxRank>& x) {
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        // reduce the last nonzero coordinate toward zero (shared prefixes)
        int r = -1;
        for (int i = ctx.n - 1; i >= 0; --i)
            if (x[i] != 0) { r = i; break; }
        std::array<int16_t, kMaxRank> base = x;
        int sgn = x[r] > 0 ? 1 : -1;
        base[r] = static_cast<int16_t>(base[r] - sgn);
        const XPoly& prev = get(base);
        XPoly res = apply_op_word(ctx, sgn > 0 ? img_pos[r + 1] : img_neg[r + 1], prev);
        return memo.emplace(x, std::move(res)).first->second;
    }
};

}  // namespace

XPoly gamma_apply(const Context& c, const TauWord& w, const XPoly& f, EBasis* eb,
                  const GammaOptions& opt) {
    TauWord core = w;
    while (!core.empty() &&
           (core.back() == TauLetter::Plus || core.back() == TauLetter::PlusInv))
        core.pop_back();
    long lead = 0;
    size_t idx = 0;
    while (idx < core.size() &&
           (core[idx] == TauLetter::Minus || core[idx] == TauLetter::MinusInv)) {
        lead += core[idx] == TauLetter::Minus ? 1 : -1;
        ++idx;
    }
    TauWord inner(core.begin() + idx, core.end());

    XPoly g;
    if (inner.empty()) {
        g = f;
    } else {
        LeafwiseEngine eng(c, inner);
        std::vector<XTerm> acc;
        for (const auto& [k, coef] : f.terms()) {
            XPoly part = eng.get(k.x);
            for (auto [pk, pc] : part.terms()) {
                pk.qe += k.qe;
                pk.te += k.te;
                acc.emplace_back(pk, pc * coef);
            }
        }
        g = XPoly(std::move(acc));
    }
    if (lead != 0) {
        bool diag = false;
        if (eb) {
            std::set<Weight> dom;
            size_t cone = 0;
            for (const auto& [k, cc] : g.terms()) {
                Weight b(c.n);
                for (int i = 0; i < c.n; ++i) b[i] = k.x[i];
                dom.insert(rootdata::dominant_rep(b));
            }
            for (const auto& d : dom) cone += rootdata::weyl_orbit(d).size();
            diag = cone <= opt.diag_support_cap;
        }
        if (diag) {
            g = eb->tau_minus_diag(g, lead);
        } else {
            TauWord tw(static_cast<size_t>(std::abs(lead)),
                       lead > 0 ? TauLetter::Minus : TauLetter::MinusInv);
            LeafwiseEngine eng(c, tw);
            std::vector<XTerm> acc;
            for (const auto& [k, coef] : g.terms()) {
                XPoly part = eng.get(k.x);
                for (auto [pk, pc] : part.terms()) {
                    pk.qe += k.qe;
                    pk.te += k.te;
                    acc.emplace_back(pk, pc * coef);
                }
            }
            g = XPoly(std::move(acc));
        }
    }
    return g;
}

XPoly phi_iota_Y(const Context& c, const XPoly& g, const XPoly& v) {
    std::vector<XTerm> acc;
    for (const auto& [k, coef] : g.terms()) {
        Weight b(c.n);
        for (int i = 0; i < c.n; ++i) b[i] = k.x[i];
        Weight ib = rootdata::iota(b);
        XPoly part = apply_Y_inv(c, ib, v);
        for (auto [pk, pc] : part.terms()) {
            pk.qe += k.qe;
            pk.te += k.te;
            acc.emplace_back(pk, pc * coef);
        }
    }
    return XPoly(std::move(acc));
}

}  // namespace dahazeta::daharep
