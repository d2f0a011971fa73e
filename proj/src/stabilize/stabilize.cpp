#include "stabilize/stabilize.hpp"

#include <algorithm>
#include <future>

namespace dahazeta::stabilize {

using linkcalc::LinkPair;

long adeg_prediction(const LinkPair& pair) {
    auto contrib = [](const linkcalc::LinkGraph& g) {
        long total = 0;
        for (const auto& p : g.paths) {
            long boxes = rootdata::diagram_size(p.color);
            if (p.labels.empty()) {
                total += boxes;  // meridian-type path
            } else {
                long c = std::min(std::abs(p.labels[0].first), std::abs(p.labels[0].second));
                for (size_t i = 1; i < p.labels.size(); ++i) c *= std::abs(p.labels[i].first);
                total += c * boxes;
            }
        }
        return total;
    };
    long total = contrib(pair.graph);
    if (pair.prime) total += contrib(*pair.prime);
    rootdata::YoungDiagram un;
    for (const auto& c : pair.all_colors()) un = rootdata::diagram_union(un, c);
    return total - rootdata::diagram_size(un);
}

namespace {

// exact Newton interpolation at nodes x_m = -t^{m+1}: returns H(q,t,a)
LaurentPoly interpolate(const std::vector<LaurentPoly>& values, int mlo) {
    const std::vector<std::string> qt{"q", "t"};
    const std::vector<std::string> qta{"q", "t", "a"};
    const size_t k = values.size();
    std::vector<LaurentPoly> dd = values;  // divided differences, level by level
    for (size_t lev = 1; lev < k; ++lev) {
        for (size_t i = 0; i + lev < k; ++i) {
            // x_{i+lev} - x_i = -t^{mlo+i+lev+1} + t^{mlo+i+1} = t^{mlo+i+1} (1 - t^{lev})
            LaurentPoly den({"q", "t"}, 1);
            den.add_term({Rat(0), Rat(static_cast<long>(lev))}, -1);
            den = den * LaurentPoly::monomial(qt, {Rat(0), Rat(mlo + static_cast<long>(i) + 1)}, 1);
            auto q = (dd[i + 1] - dd[i]).divide_exact(den);
            if (!q) throw std::logic_error("stabilize: divided difference not exact");
            dd[i] = std::move(*q);
        }
        dd.pop_back();
    }
    // H(a) = sum_lev dd_lev * prod_{j<lev} (a - x_{mlo+j})
    LaurentPoly H(qta), basis(qta, 1);
    for (size_t lev = 0; lev < k; ++lev) {
        H = H + dd[lev].with_vars(qta) * basis;
        LaurentPoly lin(qta);
        lin.add_term({Rat(0), Rat(0), Rat(1)}, 1);                        // a
        lin.add_term({Rat(0), Rat(mlo + static_cast<long>(lev) + 1), Rat(0)}, 1);  // + t^{m+1}
        basis = basis * lin;
    }
    return H;
}

}  // namespace

LaurentPoly specialize_rank(const Superpolynomial& H, int m) {
    LaurentPoly a_image({"q", "t", "a"});
    a_image.add_term({Rat(0), Rat(m + 1), Rat(0)}, -1);
    LaurentPoly sp = substitute(H.poly, "a", a_image).with_vars({"q", "t"});
    return exactalg::hat_normalize(sp).poly;
}

Superpolynomial stabilize(const LinkPair& pair, const StabilizeOptions& opt) {
    pair.validate();
    const long d = adeg_prediction(pair);
    if (d < 0) throw std::invalid_argument("stabilize: negative predicted a-degree");
    int m0 = 1;
    for (const auto& c : pair.all_colors()) m0 = std::max(m0, static_cast<int>(c.size()));

    int window = static_cast<int>(d) + 2 + opt.extra_ranks;  // d+1 nodes, 1 held out
    std::vector<LaurentPoly> jds;
    auto compute_range = [&](int lo, int hi) {  // inclusive ranks
        const int stride = std::max(1, opt.max_threads);
        for (int base = lo; base <= hi; base += stride) {
            std::vector<std::future<LaurentPoly>> futs;
            for (int m = base; m <= std::min(hi, base + stride - 1); ++m)
                futs.push_back(std::async(std::launch::async, [&pair, m] {
                    return linkcalc::daha_jones(pair, m).poly;
                }));
            for (auto& f : futs) jds.push_back(f.get());
        }
    };
    compute_range(m0, m0 + window - 1);

    for (int attempt = 0;; ++attempt) {
        // solve on the top d+1 ranks of the window, verify on the ranks below
        int top = static_cast<int>(jds.size()) - 1;                 // index of rank m0+top
        int lo = top - static_cast<int>(d);                         // first node index
        std::vector<LaurentPoly> nodes(jds.begin() + lo, jds.end());
        LaurentPoly H = interpolate(nodes, m0 + lo);  // nodes at ranks m0+lo .. m0+top

        Superpolynomial out;
        out.poly = std::move(H);
        out.adeg = rat_to_long(out.poly.max_exp("a"), "a-degree");
        out.m0 = m0;
        out.mtop = m0 + top;
        out.source = pair;

        bool ok = true;
        // integrality
        for (const auto& [e, c] : out.poly.terms())
            if (denominator(c) != 1) ok = false;
        // held-out verification below the window
        if (ok) {
            out.verified_low = true;
            for (int i = lo - 1; i >= 0 && i >= lo - 2; --i) {
                LaurentPoly sp = specialize_rank(out, m0 + i);
                if (!(sp == jds[i])) {
                    out.verified_low = false;
                    ok = false;
                }
            }
        }
        // H(a=0) must already be hat-normalized
        if (ok) {
            LaurentPoly h0 = out.poly.coeff_of("a", Rat(0));
            auto hn = exactalg::hat_normalize(h0);
            if (!(hn.poly == h0.with_vars({"q", "t"}))) ok = false;
        }
        if (ok) return out;
        if (attempt >= opt.max_retries)
            throw std::runtime_error("stabilize: verification failed for " + pair.name);
        int next = m0 + static_cast<int>(jds.size());
        compute_range(next, next);
    }
}

DualityCertificate duality_check(const LaurentPoly& H) { return duality_check(H, H); }

DualityCertificate duality_check(const LaurentPoly& H, const LaurentPoly& Htr) {
    // swapped(q,t,a) = Htr(1/t, 1/q, a)
    LaurentPoly swapped(H.vars());
    int qi = Htr.var_index("q"), ti = Htr.var_index("t");
    for (const auto& [e, c] : Htr.terms()) {
        exactalg::ExpVec e2 = e;
        e2[qi] = -e[ti];
        e2[ti] = -e[qi];
        swapped.add_term(e2, c);
    }
    DualityCertificate cert;
    if (H.is_zero() || swapped.is_zero()) return cert;
    const auto& [le, lc] = *H.terms().rbegin();
    const auto& [se, sc] = *swapped.terms().rbegin();
    int ai = H.var_index("a");
    Rat qe = le[qi] - se[qi], te = le[ti] - se[ti];
    if (ai >= 0 && le[ai] != se[ai]) return cert;
    Rat ratio = lc / sc;
    if (ratio != 1 && ratio != -1) return cert;
    LaurentPoly mono(H.vars());
    exactalg::ExpVec me(H.vars().size(), Rat(0));
    me[qi] = qe;
    me[ti] = te;
    mono.add_term(me, ratio);
    if (!(swapped * mono == H)) return cert;
    cert.ok = true;
    cert.qexp = qe;
    cert.texp = te;
    cert.sign = ratio == 1 ? 1 : -1;
    return cert;
}

LaurentPoly alexander(const LaurentPoly& H, size_t kappa) {
    LaurentPoly ha = substitute(H, "a", Rat(-1));
    LaurentPoly hq = substitute(ha, "t", LaurentPoly::var(ha.vars(), "q")).with_vars({"q"});
    long e = kappa - (kappa == 1 ? 1 : 0);
    LaurentPoly div({"q"}, 1);
    div.add_term({Rat(1)}, -1);  // 1 - q
    LaurentPoly r = hq;
    for (long i = 0; i < e; ++i) {
        auto d = r.divide_exact(div);
        if (!d) throw std::logic_error("alexander: division by (1-q)^kappa not exact");
        r = std::move(*d);
    }
    return r;
}

LaurentPoly fga1_m(const LaurentPoly& H2col, const LaurentPoly& H2link, long m) {
    const std::vector<std::string> v{"q", "t", "a"};
    LaurentPoly q = LaurentPoly::var(v, "q"), t = LaurentPoly::var(v, "t"),
                a = LaurentPoly::var(v, "a");
    LaurentPoly one(v, 1);
    LaurentPoly qtm = (q * t).pow(m);  // handles negative m as a monomial power
    LaurentPoly A = H2col.with_vars(v), B = H2link.with_vars(v);
    // [(1+aq)((1-q) + (qt)^m q(1-t)) A - (qt)^m q (1-qt) B] / ((1-q)(1-qt))
    LaurentPoly num = (one + a * q) * ((one - q) + qtm * q * (one - t)) * A -
                      qtm * q * (one - q * t) * B;
    LaurentPoly den = (one - q) * (one - q * t);
    auto r = num.divide_exact(den);
    if (!r) throw std::logic_error("fga1_m: recurrence numerator not divisible");
    return *r;
}

FamilyCheck family_series_check(const std::vector<LaurentPoly>& members,
                                const std::vector<long>& genus, const LaurentPoly& closed_num,
                                const LaurentPoly& closed_den, long M) {
    const std::vector<std::string> v{"q", "t", "a", "u"};
    LaurentPoly sum(v);
    for (size_t m = 0; m < members.size(); ++m) {
        long g = genus[m] - genus[0];
        LaurentPoly sh = LaurentPoly::monomial(v, {Rat(0), Rat(-g), Rat(0), Rat(g)}, 1);
        sum = sum + members[m].with_vars(v) * sh;
    }
    LaurentPoly diff = closed_den.with_vars(v) * sum - closed_num.with_vars(v);
    // require vanishing through u^M
    FamilyCheck out;
    out.ok = true;
    for (const auto& [e, c] : diff.terms()) {
        if (e[3] <= Rat(M)) {
            out.ok = false;
            out.difference.add_term(e, c);
        }
    }
    return out;
}

}  // namespace dahazeta::stabilize
