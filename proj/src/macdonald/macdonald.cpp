#include "macdonald/macdonald.hpp"

#include <algorithm>

namespace dahazeta::macdonald {

using daharep::FracXPoly;
using daharep::XKey;
using daharep::XPoly;
using daharep::XTerm;
using exactalg::LaurentPoly;

Factored Factored::one() { return Factored{LaurentPoly({"q", "t"}, 1), {}}; }

Factored Factored::operator*(const Factored& o) const {
    Factored r;
    r.mono = mono * o.mono;
    r.factors = factors;
    for (const auto& [k, m] : o.factors) {
        r.factors[k] += m;
        if (r.factors[k] == 0) r.factors.erase(k);
    }
    return r;
}

LaurentPoly Factored::expand() const {
    LaurentPoly r = mono;
    for (const auto& [k, m] : factors) {
        if (m < 0) throw std::domain_error("Factored::expand: negative multiplicity");
        LaurentPoly f({"q", "t"}, 1);
        f.add_term({Rat(k.first), Rat(k.second)}, -1);
        for (long i = 0; i < m; ++i) r = r * f;
    }
    return r;
}

std::pair<LaurentPoly, LaurentPoly> Factored::expand_frac() const {
    LaurentPoly num = mono, den({"q", "t"}, 1);
    for (const auto& [k, m] : factors) {
        LaurentPoly f({"q", "t"}, 1);
        f.add_term({Rat(k.first), Rat(k.second)}, -1);
        for (long i = 0; i < std::abs(m); ++i) (m > 0 ? num : den) = (m > 0 ? num : den) * f;
    }
    return {num, den};
}

Engine::Engine(int rank) : ctx_(rank), eb_(ctx_) {}

XPoly Engine::e1_eigenvalue(const Weight& b) const {
    const int n = ctx_.n;
    auto v = rootdata::eps_vector(b);
    long S = 0;
    for (int x : v) S += x;
    std::vector<XTerm> raw;
    for (int i = 1; i <= n + 1; ++i) {
        XKey k;
        // -(eps_i, b) * qs = -(2(n+1) v_i - 2S)
        k.qe = static_cast<int32_t>(-(2L * (n + 1) * v[i - 1] - 2L * S));
        // -(eps_i, rho) * 2 = -(n + 2 - 2i)
        k.te = static_cast<int32_t>(-(n + 2 - 2 * i));
        raw.emplace_back(k, Int(1));
    }
    return XPoly(std::move(raw));
}

namespace {

XPoly orbit_sum(const Weight& b) {
    std::vector<XTerm> raw;
    for (const auto& w : rootdata::weyl_orbit(b)) {
        XKey k;
        for (size_t i = 0; i < w.size(); ++i) k.x[i] = static_cast<int16_t>(w[i]);
        raw.emplace_back(k, Int(1));
    }
    return XPoly(std::move(raw));
}

XPoly apply_e1(const daharep::Context& ctx, const XPoly& v) {
    XPoly out;
    for (int i = 1; i <= ctx.n + 1; ++i) {
        Weight e(ctx.n, 0);
        if (i <= ctx.n) e[i - 1] = 1;
        if (i >= 2) e[i - 2] -= 1;
        out += apply_Y(ctx, e, v);
    }
    return out;
}

// fraction over q,t with the shared helpers from daharep
struct Frac {
    XPoly num, den;
    static Frac zero() { return {XPoly(), XPoly::one()}; }
    static Frac of(XPoly p) { return {std::move(p), XPoly::one()}; }
    bool is_zero() const { return num.is_zero(); }
    void reduce() {
        if (num.is_zero()) { den = XPoly::one(); return; }
        if (auto q = daharep::divide_qt_exact(num, den)) { num = *q; den = XPoly::one(); }
    }
    Frac operator+(const Frac& o) const {
        Frac r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator*(const Frac& o) const {
        Frac r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
    Frac operator/(const Frac& o) const {
        Frac r{num * o.den, den * o.num};
        r.reduce();
        return r;
    }
};

}  // namespace

const MacdonaldPoly& Engine::P(const Weight& b) {
    std::scoped_lock lk(mu_);
    auto it = pcache_.find(b);
    if (it != pcache_.end()) return it->second;
    if (!rootdata::is_dominant(b)) throw std::invalid_argument("P: weight must be dominant");

    const int n = ctx_.n;
    auto cone = rootdata::dominance_cone(b);
    // topological order, maximal (b) first
    std::vector<Weight> order;
    {
        std::vector<Weight> rem = cone;
        while (!rem.empty()) {
            for (auto itr = rem.begin(); itr != rem.end();) {
                bool maximal = true;
                for (const auto& w : rem)
                    if (w != *itr && rootdata::dominance_leq(*itr, w)) { maximal = false; break; }
                if (maximal) { order.push_back(*itr); itr = rem.erase(itr); }
                else ++itr;
            }
        }
    }
    std::map<Weight, size_t> idx;
    for (size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;
    const size_t m = order.size();

    // L(m_mu) expanded over orbit sums: L[mu][nu] as q,t-polynomials
    std::vector<std::vector<XPoly>> L(m, std::vector<XPoly>(m));
    for (size_t j = 0; j < m; ++j) {
        XPoly im = apply_e1(ctx_, orbit_sum(order[j]));
        // collapse to dominant coefficients and verify symmetry
        XPoly check;
        for (const auto& [k, c] : im.terms()) {
            Weight w(n);
            for (int i2 = 0; i2 < n; ++i2) w[i2] = k.x[i2];
            if (!rootdata::is_dominant(w)) continue;
            auto f = idx.find(w);
            if (f == idx.end()) throw std::logic_error("P: image leaves the cone");
            XKey qt = k;
            qt.x = {};
            L[f->second][j] += XPoly::monomial(qt, c);
        }
        for (size_t i2 = 0; i2 < m; ++i2) {
            if (L[i2][j].is_zero()) continue;
            XPoly piece = L[i2][j] * orbit_sum(order[i2]);
            check += piece;
        }
        if (!(check == im)) throw std::logic_error("P: e_1(Y) image is not W-invariant");
    }

    XPoly lambda = L[0][0];  // eigenvalue at b (order[0] == b)
    if (order[0] != b) throw std::logic_error("P: ordering failed");
    std::vector<Frac> u(m, Frac::zero());
    u[0] = Frac::of(XPoly::one());
    for (size_t i2 = 1; i2 < m; ++i2) {
        Frac rhs = Frac::zero();
        for (size_t j = 0; j < i2; ++j)
            if (!L[i2][j].is_zero()) rhs = rhs + Frac::of(L[i2][j]) * u[j];
        XPoly gap = lambda - L[i2][i2];
        if (gap.is_zero())
            throw std::logic_error("P: e_1 eigenvalue collision (tie-break not implemented for this cone)");
        u[i2] = rhs / Frac::of(gap);
    }

    // assemble over a common denominator
    XPoly den = XPoly::one();
    for (size_t i2 = 0; i2 < m; ++i2)
        if (!u[i2].is_zero()) den = den * u[i2].den;
    MacdonaldPoly out;
    out.kind = Kind::P;
    out.b = b;
    out.n = n;
    out.value.den = den;
    for (size_t i2 = 0; i2 < m; ++i2) {
        if (u[i2].is_zero()) continue;
        auto scalefac = daharep::divide_qt_exact(den, u[i2].den);
        if (!scalefac) throw std::logic_error("P: denominator bookkeeping failed");
        out.value.num += (u[i2].num * *scalefac) * orbit_sum(order[i2]);
    }
    // exact verification of the defining eigenproperty
    XPoly lhs = apply_e1(ctx_, out.value.num);
    if (!(lhs == lambda * out.value.num)) throw std::logic_error("P: eigenproperty failed");
    return pcache_.emplace(b, std::move(out)).first->second;
}

Factored Engine::hook(const YoungDiagram& lambda) {
    Factored h = Factored::one();
    for (size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c)
            h.factors[{rootdata::arm(lambda, static_cast<int>(r), c),
                       rootdata::leg(lambda, static_cast<int>(r), c) + 1}] += 1;
    return h;
}

const XPoly& Engine::J(const YoungDiagram& lambda) {
    {
        std::scoped_lock lk(mu_);
        auto it = jcache_.find(lambda);
        if (it != jcache_.end()) return it->second;
    }
    Weight b = rootdata::diagram_weight(lambda, ctx_.n);
    const MacdonaldPoly& p = P(b);
    LaurentPoly hl = hook(lambda).expand();
    XPoly h = daharep::qt_from_laurent(hl, ctx_.n);
    auto j = daharep::divide_qt_exact(h * p.value.num, p.value.den);
    if (!j) throw std::logic_error("J: hook-normalized polynomial is not integral");
    std::scoped_lock lk(mu_);
    return jcache_.emplace(lambda, std::move(*j)).first->second;
}

Factored Engine::j_eval(const YoungDiagram& lambda) const {
    const int n = ctx_.n;
    Weight b = rootdata::diagram_weight(lambda, n);
    Factored f = Factored::one();
    f.mono = LaurentPoly::monomial({"q", "t"}, {Rat(0), -rootdata::rho_pairing(b)}, 1);
    for (int p = 1; p <= n; ++p) {
        int pstar = n - p + 1;
        long rows = pstar <= static_cast<int>(lambda.size()) ? lambda[pstar - 1] : 0;
        for (long j = 0; j < rows; ++j) f.factors[{j, p + 1}] += 1;
    }
    return f;
}

Factored Engine::p_eval_num(const YoungDiagram& lambda) const {
    const int n = ctx_.n;
    Weight b = rootdata::diagram_weight(lambda, n);
    std::vector<long> lam(n + 1, 0);
    for (size_t i = 0; i < lambda.size(); ++i) lam[i] = lambda[i];
    Factored f = Factored::one();
    f.mono = LaurentPoly::monomial({"q", "t"}, {Rat(0), -rootdata::rho_pairing(b)}, 1);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
            for (long mm = 0; mm < lam[i - 1] - lam[j - 1]; ++mm) {
                f.factors[{mm, j - i + 1}] += 1;
                f.factors[{mm, j - i}] -= 1;
            }
    return f;
}

Factored Engine::lcm_evaluations(const std::vector<YoungDiagram>& lams) const {
    if (lams.empty()) throw std::invalid_argument("lcm_evaluations: empty list");
    Factored out = Factored::one();
    for (const auto& l : lams) {
        Factored f = j_eval(l);
        for (const auto& [k, m] : f.factors)
            out.factors[k] = std::max(out.factors[k], m);
    }
    return out;  // monomial part dropped: constant term 1
}

Engine& engine(int rank) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Engine>> reg;
    std::scoped_lock lk(mu);
    auto it = reg.find(rank);
    if (it == reg.end()) it = reg.emplace(rank, std::make_unique<Engine>(rank)).first;
    return *it->second;
}

}  // namespace dahazeta::macdonald
