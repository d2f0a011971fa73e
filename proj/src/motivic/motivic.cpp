#include "motivic/motivic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dahazeta::motivic {

// ---------- semigroups ----------

NumericalSemigroup semigroup_from_generators(const std::vector<long>& gens) {
    if (gens.empty()) throw std::invalid_argument("semigroup: no generators");
    long g = 0;
    for (long x : gens) {
        if (x <= 0) throw std::invalid_argument("semigroup: nonpositive generator");
        g = std::gcd(g, x);
    }
    if (g != 1) throw std::invalid_argument("semigroup: generators not coprime");
    long mult = *std::min_element(gens.begin(), gens.end());
    long bound = 64;
    for (;;) {
        std::vector<char> in(bound + 1, 0);
        in[0] = 1;
        for (long n = 1; n <= bound; ++n)
            for (long x : gens)
                if (n >= x && in[n - x]) { in[n] = 1; break; }
        long lastgap = -1;
        for (long n = 0; n <= bound; ++n)
            if (!in[n]) lastgap = n;
        if (lastgap + 1 + 2 * mult <= bound) {
            NumericalSemigroup s;
            s.conductor = lastgap + 1;
            for (long n = 0; n < s.conductor; ++n)
                if (in[n]) s.elements.insert(n);
                else s.gaps.push_back(n);
            s.delta = static_cast<long>(s.gaps.size());
            // minimal generators
            for (long n = 1; n <= s.conductor + mult; ++n) {
                if (!s.contains(n)) continue;
                bool dec = false;
                for (long m : s.generators)
                    if (n - m > 0 && s.contains(n - m)) { dec = true; break; }
                if (!dec) s.generators.push_back(n);
            }
            return s;
        }
        bound *= 2;
    }
}

bool NumericalSemigroup::gorenstein() const {
    for (long n = 0; n < conductor; ++n)
        if (contains(n) == contains(conductor - 1 - n)) return false;
    return true;
}

NumericalSemigroup semigroup_from_newton(const std::vector<long>& r, const std::vector<long>& s) {
    if (r.size() != s.size() || r.empty()) throw std::invalid_argument("newton: arity");
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i] <= 0 || s[i] <= 0) throw std::invalid_argument("newton: pairs must be positive");
        if (std::gcd(r[i], s[i]) != 1) throw std::invalid_argument("newton: non-coprime pair");
    }
    std::vector<long> a(r.size());
    a[0] = s[0];
    for (size_t i = 1; i < r.size(); ++i) a[i] = a[i - 1] * r[i - 1] * r[i] + s[i];
    std::vector<long> gens;
    long prod = 1;
    for (long x : r) prod *= x;
    gens.push_back(prod);
    for (size_t i = 0; i < r.size(); ++i) {
        long m = a[i];
        for (size_t j = i + 1; j < r.size(); ++j) m *= r[j];
        gens.push_back(m);
    }
    return semigroup_from_generators(gens);
}

// ---------- integer series and the valuation oracle ----------

namespace {

long val_of(const std::vector<Rat>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<long>(i);
    return -1;
}

}  // namespace

NumericalSemigroup valuation_semigroup(const std::vector<ZSeries>& gens, long margin) {
    std::vector<long> vals;
    for (const auto& g : gens) {
        long v = -1;
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) { v = static_cast<long>(i); break; }
        if (v <= 0) throw std::invalid_argument("valuation_semigroup: bad generator");
        vals.push_back(v);
    }
    long mult = *std::min_element(vals.begin(), vals.end());
    long gg = 0;
    for (long v : vals) gg = std::gcd(gg, v);
    if (gg != 1) throw std::invalid_argument("valuation_semigroup: valuations not coprime");

    long N = 32;
    for (;;) {
        // echelon closure of the subalgebra in Q[[z]]/z^N
        std::map<long, std::vector<Rat>> basis;  // leading exponent -> monic vector
        std::vector<std::vector<Rat>> queue;
        auto reduce_insert = [&](std::vector<Rat> v) {
            for (;;) {
                long p = val_of(v);
                if (p < 0) return;
                auto it = basis.find(p);
                if (it == basis.end()) {
                    Rat lead = v[p];
                    for (auto& x : v) x /= lead;
                    basis.emplace(p, v);
                    queue.push_back(std::move(v));
                    return;
                }
                Rat f = v[p];
                for (long i = p; i < N; ++i) v[i] -= f * it->second[i];
            }
        };
        std::vector<Rat> one(N, Rat(0));
        one[0] = 1;
        reduce_insert(std::move(one));
        while (!queue.empty()) {
            auto v = queue.back();
            queue.pop_back();
            for (const auto& g : gens) {
                std::vector<Rat> prod(N, Rat(0));
                for (long i = 0; i < N; ++i) {
                    if (v[i] == 0) continue;
                    for (size_t j = 0; j < g.size() && i + static_cast<long>(j) < N; ++j)
                        if (g[j] != 0) prod[i + j] += v[i] * Rat(g[j]);
                }
                reduce_insert(std::move(prod));
            }
        }
        std::set<long> els;
        for (const auto& [p, v] : basis) els.insert(p);
        // conductor: start of the first run of `mult` consecutive attained values
        long run_start = -1;
        for (long n = 0; n + mult <= N; ++n) {
            bool run = true;
            for (long k = n; k < n + mult; ++k)
                if (!els.count(k)) { run = false; break; }
            if (run) { run_start = n; break; }
        }
        if (run_start >= 0 && run_start + mult + margin + 2 < N) {
            long lastgap = -1;
            for (long n = 0; n < run_start; ++n)
                if (!els.count(n)) lastgap = n;
            NumericalSemigroup s;
            s.conductor = lastgap + 1;
            for (long n = 0; n < s.conductor; ++n)
                if (els.count(n)) s.elements.insert(n);
                else s.gaps.push_back(n);
            s.delta = static_cast<long>(s.gaps.size());
            for (long n = 1; n <= s.conductor + mult; ++n) {
                if (!s.contains(n)) continue;
                bool dec = false;
                for (long m : s.generators)
                    if (n - m > 0 && s.contains(n - m)) { dec = true; break; }
                if (!dec) s.generators.push_back(n);
            }
            return s;
        }
        N *= 2;
        if (N > 8192) throw std::runtime_error("valuation_semigroup: truncation runaway");
    }
}

SingularityRing ring_from_series(std::vector<ZSeries> gens, long extra_margin) {
    SingularityRing r;
    r.generators = std::move(gens);
    r.gamma = valuation_semigroup(r.generators, 2 + extra_margin);
    long maxdeg = 0;
    for (const auto& g : r.generators)
        maxdeg = std::max(maxdeg, static_cast<long>(g.size()) - 1);
    r.trunc = r.gamma.conductor + maxdeg + extra_margin;
    return r;
}

SingularityRing ring_from_literal(const std::string& text, long extra_margin) {
    std::vector<ZSeries> gens;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        LaurentPoly p = exactalg::parse_poly(part, {"z"});
        ZSeries s;
        for (const auto& [e, c] : p.terms()) {
            long d = rat_to_long(e[0], "ring literal exponent");
            if (d < 0) throw std::invalid_argument("ring literal: negative power");
            if (denominator(c) != 1) throw std::invalid_argument("ring literal: non-integer");
            if (static_cast<long>(s.size()) <= d) s.resize(d + 1, 0);
            s[d] = static_cast<long>(numerator(c));
        }
        gens.push_back(std::move(s));
    }
    return ring_from_series(std::move(gens), extra_margin);
}

// ---------- standard Gamma-modules ----------

bool GammaModule::contains(const NumericalSemigroup& g, long n) const {
    if (n < 0) return false;
    if (g.contains(n)) return true;
    return std::binary_search(D.begin(), D.end(), n);
}

std::vector<GammaModule> enumerate_standard_modules(const NumericalSemigroup& g) {
    if (g.delta > 25) throw std::invalid_argument("enumerate_standard_modules: delta cap exceeded");
    std::vector<GammaModule> out;
    const auto& gaps = g.gaps;
    const size_t k = gaps.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
        std::vector<long> D;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t(1) << i)) D.push_back(gaps[i]);
        bool ok = true;
        for (long d : D) {
            for (long m : g.generators) {
                long x = d + m;
                if (g.contains(x) || std::binary_search(D.begin(), D.end(), x)) continue;
                ok = false;
                break;
            }
            if (!ok) break;
        }
        if (!ok) continue;
        GammaModule md;
        md.D = D;
        md.dev = static_cast<long>(D.size());
        for (long n = 0; n < g.conductor; ++n)
            if (!g.contains(n) && !std::binary_search(D.begin(), D.end(), n)) md.gaps.push_back(n);
        out.push_back(std::move(md));
    }
    return out;
}

GammaModule dual_module(const NumericalSemigroup& g, const GammaModule& d) {
    std::vector<long> star;
    long bound = 2 * g.conductor + 2;
    for (long n = 0; n <= bound; ++n) {
        bool ok = true;
        for (long x = 0; x <= g.conductor && ok; ++x) {
            if (!d.contains(g, x)) continue;
            if (!g.contains(n + x)) ok = false;
        }
        if (ok) star.push_back(n);
    }
    if (star.empty()) throw std::logic_error("dual_module: empty dual");
    long m = star.front();
    std::set<long> shifted;
    for (long x : star) shifted.insert(x - m);
    GammaModule out;
    for (long n = 0; n < g.conductor; ++n)
        if (shifted.count(n) && !g.contains(n)) out.D.push_back(n);
    out.dev = static_cast<long>(out.D.size());
    for (long n = 0; n < g.conductor; ++n)
        if (!g.contains(n) && !std::binary_search(out.D.begin(), out.D.end(), n))
            out.gaps.push_back(n);
    return out;
}

long g_delta(const NumericalSemigroup& g, const GammaModule& d, long n) {
    long c = 0;
    for (long m = 1; m < n; ++m)
        if (!d.contains(g, m)) ++c;
    return c;
}

// ---------- finite fields ----------

namespace {

struct GF {
    int q = 2, p = 2, deg = 1;
    std::vector<int> mul, inv;
    explicit GF(int qq) : q(qq) {
        static const std::map<int, std::pair<int, std::vector<int>>> defs = {
            {2, {2, {}}}, {3, {3, {}}}, {5, {5, {}}}, {7, {7, {}}},
            {4, {2, {1, 1, 1}}},     // x^2 + x + 1
            {8, {2, {1, 1, 0, 1}}},  // x^3 + x + 1
            {9, {3, {1, 0, 1}}},     // x^2 + 1
        };
        auto it = defs.find(qq);
        if (it == defs.end()) throw std::invalid_argument("GF: unsupported field size");
        p = it->second.first;
        const auto& modpoly = it->second.second;
        deg = modpoly.empty() ? 1 : static_cast<int>(modpoly.size()) - 1;
        mul.assign(q * q, 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                if (deg == 1) {
                    mul[a * q + b] = (a * b) % p;
                    continue;
                }
                std::vector<int> prod(2 * deg - 1, 0);
                for (int i = 0, aa = a; i < deg; ++i, aa /= p)
                    for (int j = 0, bb = b; j < deg; ++j, bb /= p)
                        prod[i + j] = (prod[i + j] + (aa % p) * (bb % p)) % p;
                for (int i = 2 * deg - 2; i >= deg; --i) {
                    int c = prod[i];
                    if (!c) continue;
                    for (int j = 0; j < deg; ++j)
                        prod[i - deg + j] =
                            ((prod[i - deg + j] - c * modpoly[j]) % p + p * p) % p;
                    prod[i] = 0;
                }
                int enc = 0;
                for (int i = deg - 1; i >= 0; --i) enc = enc * p + prod[i];
                mul[a * q + b] = enc;
            }
        inv.assign(q, 0);
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul[a * q + b] == 1) { inv[a] = b; break; }
    }
    int add(int a, int b) const {
        if (deg == 1) return (a + b) % p;
        int r = 0, m = 1;
        for (int i = 0; i < deg; ++i, m *= p) r += (((a / m) % p + (b / m) % p) % p) * m;
        return r;
    }
    int neg(int a) const {
        if (deg == 1) return (p - a) % p;
        int r = 0, m = 1;
        for (int i = 0; i < deg; ++i, m *= p) r += ((p - (a / m) % p) % p) * m;
        return r;
    }
    int times(int a, int b) const { return mul[a * q + b]; }
    int from_int(long x) const { return static_cast<int>(((x % p) + p) % p); }
};

using Vec = std::vector<int>;

struct RingFq {
    GF F;
    long N;
    std::vector<Vec> gens;              // algebra generators in O/z^N
    std::map<long, Vec> ring_basis;     // echelon basis of R, keyed by valuation

    RingFq(const SingularityRing& ring, int q) : F(q), N(ring.trunc) {
        for (const auto& g : ring.generators) {
            Vec v(N, 0);
            for (size_t i = 0; i < g.size() && static_cast<long>(i) < N; ++i)
                v[i] = F.from_int(g[i]);
            gens.push_back(std::move(v));
        }
        std::vector<Vec> queue;
        Vec one(N, 0);
        one[0] = 1;
        ring_insert(std::move(one), queue);
        while (!queue.empty()) {
            Vec v = queue.back();
            queue.pop_back();
            for (const auto& g : gens) ring_insert(mul(v, g), queue);
        }
    }

    Vec mul(const Vec& a, const Vec& b) const {
        Vec r(N, 0);
        for (long i = 0; i < N; ++i) {
            if (!a[i]) continue;
            for (long j = 0; i + j < N; ++j)
                if (b[j]) r[i + j] = F.add(r[i + j], F.times(a[i], b[j]));
        }
        return r;
    }
    Vec shift(const Vec& a, long k) const {
        Vec r(N, 0);
        for (long i = 0; i + k < N; ++i) r[i + k] = a[i];
        return r;
    }
    Vec reduce_by_ring(Vec v) const {
        for (long i = 0; i < N; ++i) {
            if (!v[i]) continue;
            auto it = ring_basis.find(i);
            if (it == ring_basis.end()) continue;
            int f = v[i];
            for (long j = i; j < N; ++j)
                if (it->second[j]) v[j] = F.add(v[j], F.neg(F.times(f, it->second[j])));
        }
        return v;
    }
    static bool zero(const Vec& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    }

  private:
    void ring_insert(Vec v, std::vector<Vec>& queue) {
        for (;;) {
            long l = -1;
            for (long i = 0; i < N; ++i)
                if (v[i]) { l = i; break; }
            if (l < 0) return;
            auto it = ring_basis.find(l);
            if (it == ring_basis.end()) {
                int f = F.inv[v[l]];
                for (long j = l; j < N; ++j) v[j] = F.times(f, v[j]);
                ring_basis.emplace(l, v);
                queue.push_back(std::move(v));
                return;
            }
            int f = v[l];
            for (long j = l; j < N; ++j)
                if (it->second[j]) v[j] = F.add(v[j], F.neg(F.times(f, it->second[j])));
        }
    }
};

struct ModuleState {
    std::map<long, Vec> basis;  // pivot -> echelon vector

    Vec reduce(const RingFq& R, Vec v) const {
        for (long i = 0; i < R.N; ++i) {
            if (!v[i]) continue;
            auto it = basis.find(i);
            if (it == basis.end()) continue;
            int f = v[i];
            for (long j = i; j < R.N; ++j)
                if (it->second[j]) v[j] = R.F.add(v[j], R.F.neg(R.F.times(f, it->second[j])));
        }
        return v;
    }
};

struct AffineSystem {
    const GF& F;
    int nvars;
    std::vector<std::vector<int>> rows;  // coefficients | rhs

    bool solve(std::vector<int>& part, std::vector<std::vector<int>>& kernel) const {
        std::vector<std::vector<int>> m = rows;
        std::vector<int> pivcol;
        size_t r = 0;
        for (int c = 0; c < nvars && r < m.size(); ++c) {
            size_t p = r;
            while (p < m.size() && m[p][c] == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[p], m[r]);
            int f = F.inv[m[r][c]];
            for (int j = c; j <= nvars; ++j) m[r][j] = F.times(f, m[r][j]);
            for (size_t i = 0; i < m.size(); ++i) {
                if (i == r || m[i][c] == 0) continue;
                int g = m[i][c];
                for (int j = c; j <= nvars; ++j)
                    m[i][j] = F.add(m[i][j], F.neg(F.times(g, m[r][j])));
            }
            pivcol.push_back(c);
            ++r;
        }
        for (size_t i = r; i < m.size(); ++i)
            if (m[i][nvars] != 0) return false;
        part.assign(nvars, 0);
        for (size_t i = 0; i < pivcol.size(); ++i) part[pivcol[i]] = m[i][nvars];
        std::vector<char> ispiv(nvars, 0);
        for (int c : pivcol) ispiv[c] = 1;
        kernel.clear();
        for (int c = 0; c < nvars; ++c) {
            if (ispiv[c]) continue;
            std::vector<int> kk(nvars, 0);
            kk[c] = 1;
            for (size_t i = 0; i < pivcol.size(); ++i) kk[pivcol[i]] = F.neg(m[i][c]);
            kernel.push_back(std::move(kk));
        }
        return true;
    }
};

struct Enumerator {
    const RingFq& R;
    const NumericalSemigroup& g;
    int max_flags;
    long shift_cond;  // if >= 0: require z^shift * M inside R
    CountResult* out;

    std::vector<long> pivots;  // descending, pivots < conductor only
    std::vector<long> moduleD;

    void run(const GammaModule& delta) {
        moduleD = delta.D;
        pivots.clear();
        ModuleState st;
        for (long n = R.N - 1; n >= 0; --n) {
            if (!delta.contains(g, n)) continue;
            if (n >= g.conductor) {
                Vec v(R.N, 0);
                v[n] = 1;
                st.basis[n] = std::move(v);
            } else {
                pivots.push_back(n);
            }
        }
        if (shift_cond >= 0) {
            // forced monomials must satisfy the shift condition too
            for (const auto& [e, v] : st.basis)
                if (!RingFq::zero(R.reduce_by_ring(R.shift(v, shift_cond)))) return;
        }
        dfs(delta, st, 0);
    }

    void dfs(const GammaModule& delta, ModuleState& st, size_t level) {
        if (level == pivots.size()) {
            out->modules[moduleD] += 1;
            if (max_flags > 0) {
                std::vector<long> gvec;
                descend(delta, st, gvec, 0);
            }
            return;
        }
        long d = pivots[level];
        std::vector<long> freepos;
        for (long gp : delta.gaps)
            if (gp > d) freepos.push_back(gp);
        const int nv = static_cast<int>(freepos.size());

        Vec base(R.N, 0);
        base[d] = 1;
        std::vector<Vec> unit(nv);
        for (int m = 0; m < nv; ++m) {
            unit[m].assign(R.N, 0);
            unit[m][freepos[m]] = 1;
        }
        AffineSystem sys{R.F, nv, {}};
        auto add_conditions = [&](const Vec& w0, const std::vector<Vec>& wx) {
            for (long pos = 0; pos < R.N; ++pos) {
                bool any = w0[pos] != 0;
                for (int m = 0; m < nv && !any; ++m) any = wx[m][pos] != 0;
                if (!any) continue;
                std::vector<int> row(nv + 1, 0);
                for (int m = 0; m < nv; ++m) row[m] = wx[m][pos];
                row[nv] = R.F.neg(w0[pos]);
                sys.rows.push_back(std::move(row));
            }
        };
        for (const auto& gen : R.gens) {
            Vec w0 = st.reduce(R, R.mul(gen, base));
            std::vector<Vec> wx(nv);
            for (int m = 0; m < nv; ++m) wx[m] = st.reduce(R, R.mul(gen, unit[m]));
            add_conditions(w0, wx);
        }
        if (shift_cond >= 0) {
            Vec w0 = R.reduce_by_ring(R.shift(base, shift_cond));
            std::vector<Vec> wx(nv);
            for (int m = 0; m < nv; ++m) wx[m] = R.reduce_by_ring(R.shift(unit[m], shift_cond));
            add_conditions(w0, wx);
        }
        std::vector<int> part;
        std::vector<std::vector<int>> kernel;
        if (!sys.solve(part, kernel)) return;
        std::vector<int> ks(kernel.size(), 0);
        for (;;) {
            Vec v = base;
            for (int m = 0; m < nv; ++m) {
                int x = part[m];
                for (size_t kk = 0; kk < kernel.size(); ++kk)
                    if (ks[kk]) x = R.F.add(x, R.F.times(ks[kk], kernel[kk][m]));
                v[freepos[m]] = x;
            }
            st.basis[d] = v;
            dfs(delta, st, level + 1);
            st.basis.erase(d);
            size_t kk = 0;
            while (kk < ks.size()) {
                ks[kk] = (ks[kk] + 1) % R.F.q;
                if (ks[kk] != 0) break;
                ++kk;
            }
            if (kernel.empty() || kk == ks.size()) break;
        }
    }

    // enumerate standardizable flags downward from the built module; gvec
    // holds the removed gaps top-down (descending)
    void descend(const GammaModule& delta, const ModuleState& st, std::vector<long>& gvec,
                 int depth) {
        if (depth > 0) {
            FlagKey key;
            key.D0 = delta.D;
            key.gvec.assign(gvec.rbegin(), gvec.rend());
            out->flags[key] += 1;
        }
        if (depth == max_flags) return;
        long gprev = gvec.empty() ? std::numeric_limits<long>::max() : gvec.back();
        for (long g2 : delta.D) {
            if (g2 <= 0 || g2 >= gprev) continue;
            bool removable = true;
            for (long m : g.generators)
                if (g2 - m >= 0 && delta.contains(g, g2 - m)) { removable = false; break; }
            if (!removable) continue;
            GammaModule d2;
            for (long x : delta.D)
                if (x != g2) d2.D.push_back(x);
            d2.dev = delta.dev - 1;
            d2.gaps = delta.gaps;
            d2.gaps.insert(std::lower_bound(d2.gaps.begin(), d2.gaps.end(), g2), g2);

            std::vector<long> ys;
            for (const auto& [e, v] : st.basis)
                if (e < g2) ys.push_back(e);
            const int nv = static_cast<int>(ys.size());
            const Vec& vg = st.basis.at(g2);

            std::vector<int> yv(nv, 0);
            for (;;) {
                ModuleState stm;
                for (const auto& [e, v] : st.basis) {
                    if (e == g2) continue;
                    Vec w = v;
                    if (e < g2) {
                        int idx = static_cast<int>(std::lower_bound(ys.begin(), ys.end(), e) -
                                                   ys.begin());
                        int y = yv[idx];
                        if (y)
                            for (long j = 0; j < R.N; ++j)
                                if (vg[j]) w[j] = R.F.add(w[j], R.F.times(y, vg[j]));
                    }
                    stm.basis[e] = std::move(w);
                }
                bool closed = true;
                for (const auto& gen : R.gens) {
                    for (const auto& [e, w] : stm.basis) {
                        if (!RingFq::zero(stm.reduce(R, R.mul(gen, w)))) { closed = false; break; }
                    }
                    if (!closed) break;
                }
                if (closed) {
                    gvec.push_back(g2);
                    descend(d2, stm, gvec, depth + 1);
                    gvec.pop_back();
                }
                int kk = 0;
                while (kk < nv) {
                    yv[kk] = (yv[kk] + 1) % R.F.q;
                    if (yv[kk] != 0) break;
                    ++kk;
                }
                if (nv == 0 || kk == nv) break;
            }
        }
    }
};

}  // namespace

CountResult count_modules(const SingularityRing& ring, long q, int max_flags, long shift) {
    CountResult out;
    out.q = q;
    out.shift = shift;
    RingFq R(ring, static_cast<int>(q));
    for (const auto& d : enumerate_standard_modules(ring.gamma)) {
        Enumerator e{R, ring.gamma, max_flags, shift, &out};
        e.run(d);
    }
    return out;
}

long flag_count_formula(const std::vector<long>& gvec, const std::vector<long>& g0) {
    long l = static_cast<long>(gvec.size());
    long n = l * (l - 1) / 2;
    for (long gj : g0)
        for (long gi : gvec)
            if (gi > gj) ++n;
    return n;
}

Interpolated interpolate_counts(const std::vector<CountResult>& counts,
                                const CountResult* holdout) {
    if (counts.empty()) throw std::invalid_argument("interpolate_counts: no data");

    auto fit_points = [&](std::vector<std::pair<Rat, Rat>> pts,
                          std::optional<std::pair<Rat, Rat>> hold) {
        exactalg::UniRealPoly p;
        bool found = false;
        // pure monomial c*q^N first (affine cells give these)
        const auto& [q0, v0] = pts[0];
        for (long N = 0; N <= 64 && !found; ++N) {
            Rat c0 = v0 / rat_pow(q0, N);
            if (c0 < 1) break;
            if (denominator(c0) != 1) continue;
            bool ok = true;
            for (const auto& [qq, vv] : pts)
                if (vv != c0 * rat_pow(qq, N)) { ok = false; break; }
            if (ok) {
                std::vector<Rat> cf(N + 1, Rat(0));
                cf[N] = c0;
                p = exactalg::UniRealPoly(cf);
                found = true;
            }
        }
        if (!found) {
            exactalg::UniRealPoly acc;
            for (size_t i = 0; i < pts.size(); ++i) {
                exactalg::UniRealPoly term = exactalg::UniRealPoly::constant(pts[i].second);
                for (size_t j = 0; j < pts.size(); ++j) {
                    if (j == i) continue;
                    exactalg::UniRealPoly lin({-pts[j].first, Rat(1)});
                    term = term * lin * (Rat(1) / (pts[i].first - pts[j].first));
                }
                acc = acc + term;
            }
            p = acc;
        }
        if (hold && p.eval(hold->first) != hold->second)
            throw std::runtime_error("interpolate_counts: held-out verification failed");
        return p;
    };

    Interpolated out;
    {
        std::set<std::vector<long>> keys;
        for (const auto& c : counts)
            for (const auto& [k, v] : c.modules) keys.insert(k);
        for (const auto& k : keys) {
            std::vector<std::pair<Rat, Rat>> pts;
            for (const auto& c : counts) {
                auto it = c.modules.find(k);
                pts.emplace_back(Rat(c.q), it == c.modules.end() ? Rat(0) : Rat(it->second));
            }
            std::optional<std::pair<Rat, Rat>> hold;
            if (holdout) {
                auto it = holdout->modules.find(k);
                hold = {Rat(holdout->q), it == holdout->modules.end() ? Rat(0) : Rat(it->second)};
            }
            out.modules[k] = fit_points(std::move(pts), hold);
        }
    }
    {
        std::set<FlagKey> keys;
        for (const auto& c : counts)
            for (const auto& [k, v] : c.flags) keys.insert(k);
        for (const auto& k : keys) {
            std::vector<std::pair<Rat, Rat>> pts;
            for (const auto& c : counts) {
                auto it = c.flags.find(k);
                pts.emplace_back(Rat(c.q), it == c.flags.end() ? Rat(0) : Rat(it->second));
            }
            std::optional<std::pair<Rat, Rat>> hold;
            if (holdout) {
                auto it = holdout->flags.find(k);
                hold = {Rat(holdout->q), it == holdout->flags.end() ? Rat(0) : Rat(it->second)};
            }
            out.flags[k] = fit_points(std::move(pts), hold);
        }
    }
    return out;
}

// ---------- zeta ----------

namespace {

LaurentPoly jpoly_to_q(const exactalg::UniRealPoly& j) {
    LaurentPoly out({"q", "t"});
    for (int i = 0; i <= j.degree(); ++i)
        if (j.coeff(i) != 0) out.add_term({Rat(i), Rat(0)}, j.coeff(i));
    return out;
}

}  // namespace

LaurentPoly stohr_L(const NumericalSemigroup& g, const GammaModule& d,
                    const exactalg::UniRealPoly& jcount) {
    LaurentPoly bracket({"q", "t"});
    for (long n = 0; n <= g.conductor + 1; ++n) {
        bool in = d.contains(g, n), prev = n > 0 && d.contains(g, n - 1);
        if (in && !prev) bracket.add_term({Rat(g_delta(g, d, n)), Rat(n)}, 1);
        if (!in && prev) bracket.add_term({Rat(g_delta(g, d, n - 1)), Rat(n)}, -1);
    }
    LaurentPoly pre = LaurentPoly::monomial({"q", "t"}, {Rat(d.dev - g.delta), Rat(d.dev)}, 1);
    LaurentPoly L = pre * jpoly_to_q(jcount) * bracket;
    if (!(substitute(L, "t", Rat(1)) == jpoly_to_q(jcount)))
        throw std::logic_error("stohr_L: L(q, t=1) != |J_Delta|");
    return L;
}

LaurentPoly stohr_L_total(const NumericalSemigroup& g, const Interpolated& itp) {
    LaurentPoly out({"q", "t"});
    for (const auto& d : enumerate_standard_modules(g)) {
        auto it = itp.modules.find(d.D);
        if (it == itp.modules.end()) throw std::logic_error("stohr_L_total: missing |J_Delta|");
        out = out + stohr_L(g, d, it->second);
    }
    return out;
}

LaurentPoly h_mot(const NumericalSemigroup& g, const Interpolated& itp, int max_flags) {
    const std::vector<std::string> qta{"q", "t", "a"};
    LaurentPoly out(qta);
    for (const auto& [D, j] : itp.modules) {
        long dev = static_cast<long>(D.size());
        for (int i = 0; i <= j.degree(); ++i)
            if (j.coeff(i) != 0) out.add_term({Rat(i), Rat(g.delta - dev), Rat(0)}, j.coeff(i));
    }
    for (const auto& [key, j] : itp.flags) {
        long l = static_cast<long>(key.gvec.size());
        if (l > max_flags) continue;
        long dev_top = static_cast<long>(key.D0.size()) + l;
        for (int i = 0; i <= j.degree(); ++i)
            if (j.coeff(i) != 0) out.add_term({Rat(i), Rat(g.delta - dev_top), Rat(l)}, j.coeff(i));
    }
    return out;
}

LaurentPoly flagged_L_ring(const SingularityRing& ring, const std::vector<long>& qs,
                           int max_flags, std::optional<long> holdout_q) {
    const auto& g = ring.gamma;
    const std::vector<std::string> qta{"q", "t", "a"};

    // shift-restricted counts for m = 0..conductor-1, plus the free tail
    std::vector<Interpolated> shifted(g.conductor);
    for (long m = 0; m < g.conductor; ++m) {
        std::vector<CountResult> cs;
        for (long q : qs) cs.push_back(count_modules(ring, q, max_flags, m));
        std::optional<CountResult> hold;
        if (holdout_q) hold = count_modules(ring, *holdout_q, max_flags, m);
        shifted[m] = interpolate_counts(cs, hold ? &*hold : nullptr);
    }
    std::vector<CountResult> free_cs;
    for (long q : qs) free_cs.push_back(count_modules(ring, q, max_flags, -1));
    std::optional<CountResult> free_hold;
    if (holdout_q) free_hold = count_modules(ring, *holdout_q, max_flags, -1);
    Interpolated free_itp = interpolate_counts(free_cs, free_hold ? &*free_hold : nullptr);

    LaurentPoly one({"q", "t"}, 1);
    LaurentPoly t = LaurentPoly::var({"q", "t"}, "t");
    LaurentPoly out(qta);
    auto add_block = [&](const Interpolated& itp, const LaurentPoly& tfactor, long extra_t) {
        for (const auto& [D, j] : itp.modules) {
            long dev = static_cast<long>(D.size());
            LaurentPoly term = jpoly_to_q(j) * tfactor *
                               LaurentPoly::monomial({"q", "t"}, {Rat(0), Rat(extra_t - dev)}, 1);
            out = out + term.with_vars(qta);
        }
        for (const auto& [key, j] : itp.flags) {
            long l = static_cast<long>(key.gvec.size());
            if (l > max_flags) continue;
            long dev_top = static_cast<long>(key.D0.size()) + l;
            LaurentPoly term =
                jpoly_to_q(j) * tfactor *
                LaurentPoly::monomial({"q", "t"}, {Rat(0), Rat(extra_t - dev_top)}, 1);
            LaurentPoly terma = term.with_vars(qta) *
                                LaurentPoly::monomial(qta, {Rat(0), Rat(0), Rat(l)}, 1);
            out = out + terma;
        }
    };
    // cL = (1-t) sum_{m < c} cnt_m t^{m - dev} + sum cnt_free t^{c - dev}
    for (long m = 0; m < g.conductor; ++m) add_block(shifted[m], (one - t) * t.pow(m), 0);
    add_block(free_itp, LaurentPoly::monomial({"q", "t"}, {Rat(0), Rat(g.conductor)}, 1), 0);
    return out;
}

bool functional_equation_check(const NumericalSemigroup& g, const Interpolated& itp) {
    for (const auto& d : enumerate_standard_modules(g)) {
        auto it = itp.modules.find(d.D);
        if (it == itp.modules.end()) return false;
        GammaModule dual = dual_module(g, d);
        auto it2 = itp.modules.find(dual.D);
        if (it2 == itp.modules.end()) return false;
        LaurentPoly L = stohr_L(g, d, it->second);
        LaurentPoly Ld = stohr_L(g, dual, it2->second);
        LaurentPoly image({"q", "t"});
        image.add_term({Rat(-1), Rat(-1)}, 1);
        LaurentPoly lhs = substitute(L, "t", image) *
                          LaurentPoly::monomial({"q", "t"}, {Rat(g.delta), Rat(2 * g.delta)}, 1);
        if (!(lhs == Ld)) return false;
    }
    return true;
}

CrosscheckReport conjecture_crosscheck(const SingularityRing& ring, const Interpolated& itp,
                                       const LaurentPoly& Hsuper, int max_flags,
                                       const std::vector<long>& qs) {
    const auto& g = ring.gamma;
    CrosscheckReport rep;
    LaurentPoly hm = h_mot(g, itp, max_flags);
    LaurentPoly h0 = hm.coeff_of("a", Rat(0));
    LaurentPoly H0 = Hsuper.coeff_of("a", Rat(0));
    rep.h0_match = h0 == H0.with_vars({"q", "t"});
    if (!rep.h0_match) rep.h0_diff = h0 - H0.with_vars({"q", "t"});
    LaurentPoly image({"q", "t"});
    image.add_term({Rat(1), Rat(1)}, 1);
    rep.l_match = substitute(h0, "q", image) == stohr_L_total(g, itp);
    rep.feq = functional_equation_check(g, itp);
    // flagged: H_mot(q,t,a) == cL(q/t, t, a)
    LaurentPoly cl = flagged_L_ring(ring, qs, max_flags);
    LaurentPoly imageqt({"q", "t", "a"});
    imageqt.add_term({Rat(1), Rat(-1), Rat(0)}, 1);  // q -> q/t
    LaurentPoly cls = substitute(cl, "q", imageqt);
    rep.flag_match = cls == hm;
    return rep;
}

}  // namespace dahazeta::motivic
