#include "rhscan/rhscan.hpp"

#include <algorithm>
#include <cmath>

namespace dahazeta::rhscan {

using exactalg::Interval;
using exactalg::UniRealPoly;

namespace {

const std::vector<std::string> kQT{"q", "t"};

LaurentPoly qt_substitution(const LaurentPoly& H) {
    LaurentPoly image({"q", "t"});
    image.add_term({Rat(1), Rat(1)}, 1);  // q -> qt
    return substitute(H.with_vars(kQT), "q", image);
}

}  // namespace

std::vector<RHCoefficient> rh_coefficients(const LaurentPoly& H, Flavor flavor, bool self_dual) {
    LaurentPoly work = H;
    // enforce deg_q <= deg_t at a = 0 via the super-duality flip
    LaurentPoly h0 = work.coeff_of("a", Rat(0));
    if (h0.max_exp("q") - h0.min_exp("q") > h0.max_exp("t") - h0.min_exp("t")) {
        LaurentPoly flip(work.vars());
        int qi = work.var_index("q"), ti = work.var_index("t");
        for (const auto& [e, c] : work.terms()) {
            exactalg::ExpVec e2 = e;
            e2[qi] = -e[ti];
            e2[ti] = -e[qi];
            flip.add_term(e2, c);
        }
        work = flip;
    }
    std::vector<RHCoefficient> out;
    long dmax = rat_to_long(work.max_exp("a"), "a-degree");
    for (long i = 0; i <= dmax; ++i) {
        LaurentPoly hi = work.coeff_of("a", Rat(i));
        if (hi.is_zero()) continue;  // skipped with notice
        LaurentPoly rh = qt_substitution(hi);
        if (flavor == Flavor::Sym || flavor == Flavor::Asym) {
            LaurentPoly image({"q", "t"});
            image.add_term({Rat(-1), Rat(-1)}, 1);  // t -> 1/(qt)
            LaurentPoly mirrored = substitute(rh, "t", image);
            rh = flavor == Flavor::Sym ? rh + mirrored : rh - mirrored;
        }
        RHCoefficient c;
        c.i = static_cast<int>(i);
        c.flavor = flavor;
        c.hatH = exactalg::hat_normalize(rh).poly;
        if (c.hatH.coeff({Rat(0), Rat(0)}) != 1)
            throw std::logic_error("rh_coefficients: constant term is not 1");
        out.push_back(std::move(c));
    }
    (void)self_dual;
    return out;
}

std::vector<RHCoefficient> rh_coefficients(const stabilize::Superpolynomial& H,
                                           std::optional<Flavor> flavor) {
    bool self_dual = H.source.colors_transpose_closed();
    Flavor f = flavor.value_or(self_dual ? Flavor::Plain : Flavor::Sym);
    return rh_coefficients(H.poly, f, self_dual);
}

namespace {

UniRealPoly cyclotomic(int d) {
    // Phi_d(t) = (t^d - 1) / prod_{d' | d, d' < d} Phi_{d'}
    static std::map<int, UniRealPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<Rat> c(d + 1, Rat(0));
    c[0] = -1;
    c[d] = 1;
    UniRealPoly r{c};
    for (int dd = 1; dd < d; ++dd)
        if (d % dd == 0) {
            auto q = r.divide_exact(cyclotomic(dd));
            if (!q) throw std::logic_error("cyclotomic: division failed");
            r = *q;
        }
    cache[d] = r;
    return r;
}

}  // namespace

LimitInvariants limit_invariants(const RHCoefficient& c) {
    // t -> t q^{-1/2}, take the minimal q-power coefficient
    LaurentPoly image({"q", "t"});
    image.add_term({Rat(-1, 2), Rat(1)}, 1);
    LaurentPoly sub = substitute(c.hatH.with_vars(kQT), "t", image);
    Rat e = sub.min_exp("q");
    LaurentPoly coeff = sub.coeff_of("q", e);  // polynomial in t
    LimitInvariants out;
    out.strict_limit = (e == 0);
    Rat pi = coeff.min_exp("t");
    out.pi = rat_to_long(pi, "pi");
    Rat lead = coeff.coeff({pi});
    out.sign = lead > 0 ? 1 : -1;
    LaurentPoly Sl(std::vector<std::string>{"t"});
    for (const auto& [ex, cc] : coeff.terms()) Sl.add_term({ex[0] - pi}, cc * out.sign);
    out.S = exactalg::uni_from_laurent(Sl, "t");
    if (out.S.coeff(0) != 1) throw std::logic_error("limit_invariants: S(0) != 1");
    out.sigma2 = out.S.degree();
    long degH = rat_to_long(c.hatH.max_exp("t"), "deg_t");
    out.degree_relation = (2 * out.pi + out.sigma2 == degH);

    // cyclotomic census by trial division
    UniRealPoly rem = out.S;
    for (int d = 1; d <= 2 * std::max(1, rem.degree()); ++d) {
        if (rem.degree() < 1) break;
        UniRealPoly phi = cyclotomic(d);
        if (phi.degree() > rem.degree()) continue;
        int mult = 0;
        for (;;) {
            auto q = rem.divide_exact(phi);
            if (!q) break;
            rem = *q;
            ++mult;
        }
        if (mult) out.cyclotomic.emplace_back(d, mult);
    }
    out.residual = rem;
    if (rem.degree() >= 1) {
        auto rs = exactalg::complex_roots(rem, 1e-11);
        for (const auto& r : rs.roots)
            if (std::abs(std::abs(r.z) - 1.0) > 1e-7) out.residual_nonunimodular += r.multiplicity;
    }
    return out;
}

ZeroReport classify_zeros(const RHCoefficient& c, const Rat& omega, double tol, bool flag_trivial) {
    if (omega <= 0) throw std::invalid_argument("classify_zeros: omega must be positive");
    ZeroReport rep;
    rep.omega = omega;
    LaurentPoly spec = substitute(c.hatH.with_vars(kQT), "q", Rat(1) / omega).with_vars({"t"});
    UniRealPoly p = exactalg::uni_from_laurent(spec, "t");
    rep.roots = exactalg::complex_roots(p, 1e-13);
    double sw = std::sqrt(rat_to_double(omega));
    double w = rat_to_double(omega);

    struct Z {
        std::complex<double> z;
        int mult;
        bool regular;
        bool trivial = false;
    };
    std::vector<Z> zs;
    for (auto& r : rep.roots.roots) {
        bool ambiguous = std::abs(std::abs(r.z) - sw) <= 16 * std::max(rep.roots.residual, 1e-15) * sw;
        std::complex<double> z = r.z;
        if (ambiguous) z = exactalg::polish_exact(p, z, 3);
        bool reg = std::abs(std::abs(z) - sw) <= tol * sw;
        zs.push_back({z, r.multiplicity, reg});
    }
    if (flag_trivial) {
        for (auto& z : zs) {
            if (!z.regular &&
                (std::abs(z.z - std::complex<double>(-1, 0)) < 1e-6 ||
                 std::abs(z.z - std::complex<double>(-w, 0)) < 1e-6 * w)) {
                z.trivial = true;
                rep.trivial += z.mult;
            }
        }
    }
    int irregular = 0;
    for (const auto& z : zs) {
        if (z.regular) rep.regular += z.mult;
        else if (!z.trivial) irregular += z.mult;
    }
    // irregular zeros must pair off under xi -> omega/xi
    std::vector<std::complex<double>> bag;
    for (const auto& z : zs)
        if (!z.regular && !z.trivial)
            for (int k = 0; k < z.mult; ++k) bag.push_back(z.z);
    std::vector<bool> used(bag.size(), false);
    int pairs = 0;
    for (size_t i = 0; i < bag.size(); ++i) {
        if (used[i]) continue;
        double best = 1e300;
        size_t bj = i;
        for (size_t j = 0; j < bag.size(); ++j) {
            if (j == i || used[j]) continue;
            double d = std::abs(bag[i] * bag[j] - w);
            if (d < best) { best = d; bj = j; }
        }
        if (bj != i && best <= 1e-5 * w) {
            used[i] = used[bj] = true;
            ++pairs;
        } else {
            used[i] = true;  // unpaired irregular zero
            rep.paired_ok = false;
            ++pairs;         // count conservatively
        }
    }
    rep.irregular_pairs = pairs;
    return rep;
}

VarpiResult varpi(const RHCoefficient& c, int allowed_pairs, double tol) {
    VarpiResult out;
    out.i = c.i;
    out.allowed_pairs = allowed_pairs;
    UniRealPoly D = exactalg::discriminant_t(c.hatH.with_vars(kQT));
    UniRealPoly Dsf = D.degree() >= 1 ? exactalg::squarefree_part(D) : D;

    // real discriminant roots in q > 0; omega-candidates are their inverses
    struct Cand {
        Rat omega;          // midpoint estimate
        Interval q_iv;      // refined isolating interval in q
    };
    std::vector<Cand> candidates;
    if (Dsf.degree() >= 1) {
        Rat bound = 1;
        for (int i4 = 0; i4 < Dsf.degree(); ++i4) {
            Rat r = abs(Dsf.coeff(i4) / Dsf.leading());
            if (r > bound) bound = r;
        }
        bound += 1;
        for (auto iv : exactalg::isolate_real_roots(Dsf, Rat(0), bound)) {
            iv = exactalg::refine_root(Dsf, iv, Rat(Int(1), Int(1) << 48));
            Rat mid = (iv.lo + iv.hi) / 2;
            if (mid > 0) candidates.push_back({Rat(1) / mid, iv});
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Cand& a, const Cand& b) { return a.omega < b.omega; });
    out.omega_top = candidates.empty() ? 0.0 : rat_to_double(candidates.back().omega);

    auto pairs_at = [&](const Rat& omega) {
        return classify_zeros(c, omega, tol).irregular_pairs;
    };
    auto holds = [&](const Rat& omega) { return pairs_at(omega) <= allowed_pairs; };

    // stability probes past the top candidate
    Rat top = candidates.empty() ? Rat(1) : candidates.back().omega;
    out.pairs_at_top = pairs_at(top * 2);
    {
        int pa = pairs_at(top * 10), pb = pairs_at(top * 100);
        out.stable_pairs = pa == pb ? pb : -1;
    }
    if (!holds(top * 2)) {
        out.conclusive = false;  // status never becomes "holds" in range
        return out;
    }
    // walk down; varpi is the first candidate below which the status breaks
    out.varpi = 0;
    out.conclusive = true;
    for (size_t k = candidates.size(); k-- > 0;) {
        Rat lo = k == 0 ? candidates[k].omega / 2 : candidates[k - 1].omega;
        Rat mid = (lo + candidates[k].omega) / 2;
        if (!holds(mid)) {
            out.varpi = rat_to_double(Rat(2) / (candidates[k].q_iv.lo + candidates[k].q_iv.hi));
            out.varpi_iv = candidates[k].q_iv;
            return out;
        }
    }
    if (!candidates.empty() && !holds(candidates.front().omega / 2))
        out.varpi = rat_to_double(candidates.front().omega);
    return out;
}

}  // namespace dahazeta::rhscan
