#pragma once

// Independent point-counting side: numerical semigroups of unibranch plane
// curve singularities, standard Gamma-modules, brute-force counting of
// standard R-submodules (and standardizable flags) over small finite fields
// with exact q-interpolation, and the ideal-counting zeta functions.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exactalg/exprparse.hpp"
#include "exactalg/laurent.hpp"
#include "exactalg/unipoly.hpp"

namespace dahazeta::motivic {

using exactalg::LaurentPoly;

struct NumericalSemigroup {
    std::vector<long> generators;   // minimal generators
    long conductor = 0;
    long delta = 0;                 // number of gaps
    std::vector<long> gaps;
    std::set<long> elements;        // members below the conductor

    bool contains(long n) const { return n >= conductor || elements.count(n) > 0; }
    bool gorenstein() const;        // gap symmetry n in gaps <=> c-1-n in Gamma
};

NumericalSemigroup semigroup_from_generators(const std::vector<long>& gens);
// Gamma = < r1..rl, a1 r2..rl, a2 r3..rl, ..., al >
NumericalSemigroup semigroup_from_newton(const std::vector<long>& r, const std::vector<long>& s);

// truncated integer power series in z (index = z-power)
using ZSeries = std::vector<long>;

struct SingularityRing {
    std::vector<ZSeries> generators;  // e.g. { z^4, z^6 + z^7 }
    NumericalSemigroup gamma;         // valuation semigroup (computed)
    long trunc = 0;                   // working truncation level
};

// parse "z^4, z^6+z^7" style ring literals
SingularityRing ring_from_literal(const std::string& text, long extra_margin = 2);
SingularityRing ring_from_series(std::vector<ZSeries> gens, long extra_margin = 2);
// valuation oracle: semigroup of z-valuations of the generated algebra
NumericalSemigroup valuation_semigroup(const std::vector<ZSeries>& gens, long margin = 2);

struct GammaModule {
    std::vector<long> D;     // gap-complement: Delta \ Gamma (within [0, conductor))
    long dev = 0;            // delta - |Z+ \ Delta| = |D|
    std::vector<long> gaps;  // Z+ \ Delta below the conductor

    bool contains(const NumericalSemigroup& g, long n) const;
};

// all standard Delta (0 in Delta, Gamma + Delta subset Delta)
std::vector<GammaModule> enumerate_standard_modules(const NumericalSemigroup& g);
// (Delta*)_st for Delta* = { n : n + Delta subset Gamma }
GammaModule dual_module(const NumericalSemigroup& g, const GammaModule& d);
long g_delta(const NumericalSemigroup& g, const GammaModule& d, long n);  // #{m not in Delta, m < n}

// ---- counting over F_q ----

struct FlagKey {
    std::vector<long> D0;    // bottom valuation set (gap-complement in Gamma)
    std::vector<long> gvec;  // gaps added bottom-up, strictly increasing
    bool operator<(const FlagKey& o) const { return std::tie(D0, gvec) < std::tie(o.D0, o.gvec); }
};

struct CountResult {
    long q = 0;
    long shift = -1;  // -1: plain counts; m >= 0: restricted to z^m M subset R
    std::map<std::vector<long>, Int> modules;  // per Delta (gap-complement key)
    std::map<FlagKey, Int> flags;              // standardizable flag counts per shape
};

// brute-force enumeration of standard R-submodules of O; when shift >= 0
// only modules with z^shift M (top module for flags) inside R are counted
CountResult count_modules(const SingularityRing& ring, long q, int max_flags = 0,
                          long shift = -1);

struct Interpolated {
    std::map<std::vector<long>, exactalg::UniRealPoly> modules;  // |J_Delta|(q)
    std::map<FlagKey, exactalg::UniRealPoly> flags;
};
// Lagrange / affine-cell interpolation; verified on a held-out point if given
Interpolated interpolate_counts(const std::vector<CountResult>& counts,
                                const CountResult* holdout = nullptr);

// number of standardizable flags with fixed top module predicted by the
// Nakayama-stratum formula: N = sum_j |{g_i > g0_j}| + l(l-1)/2
long flag_count_formula(const std::vector<long>& gvec, const std::vector<long>& g0);

// ---- zeta functions ----

// L(Delta,q,t) = (1-t) Z(Delta,q,t) by the closed two-sum formula; |J_Delta|
// enters as a polynomial in q. Asserts L(Delta,q,t=1) = |J_Delta|.
LaurentPoly stohr_L(const NumericalSemigroup& g, const GammaModule& d,
                    const exactalg::UniRealPoly& jcount);
LaurentPoly stohr_L_total(const NumericalSemigroup& g, const Interpolated& itp);

// motivic superpolynomial over flags in O: sum a^l t^{dim(O/M_l)}
LaurentPoly h_mot(const NumericalSemigroup& g, const Interpolated& itp, int max_flags);

// flagged ideal zeta: cL(q,t,a) = (1-t) cZ over standardizable flags of
// modules inside R; computed from shift-restricted counts at the listed
// prime powers (tail in closed form), with optional held-out verification
LaurentPoly flagged_L_ring(const SingularityRing& ring, const std::vector<long>& qs,
                           int max_flags, std::optional<long> holdout_q = std::nullopt);

// functional equation: (q t^2)^delta L(Delta, q, 1/(qt)) == L((Delta*)_st, q, t)
bool functional_equation_check(const NumericalSemigroup& g, const Interpolated& itp);

struct CrosscheckReport {
    bool h0_match = false;        // H^0_mot == H(a=0)
    bool l_match = false;         // H^0_mot(q->qt) == L(q,t)
    bool flag_match = false;      // H_mot(q,t,a) == cL(q/t, t, a) up to the flag cap
    bool feq = false;             // functional equation for all standard Delta
    LaurentPoly h0_diff{std::vector<std::string>{"q", "t"}};
};
CrosscheckReport conjecture_crosscheck(const SingularityRing& ring, const Interpolated& itp,
                                       const LaurentPoly& Hsuper, int max_flags,
                                       const std::vector<long>& qs);

}  // namespace dahazeta::motivic
