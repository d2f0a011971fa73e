#pragma once

// The zero-analysis layer: q -> qt substitution and a-coefficient
// extraction, the q->0 limit invariants (sign, t-power, S-polynomial,
// cyclotomic census), zero classification against |xi| = sqrt(omega), and
// the threshold scan over the reduced t-discriminant.

#include <optional>

#include "exactalg/roots.hpp"
#include "stabilize/stabilize.hpp"

namespace dahazeta::rhscan {

using exactalg::LaurentPoly;

enum class Flavor { Plain, Sym, Asym };

struct RHCoefficient {
    int i = 0;
    LaurentPoly hatH{std::vector<std::string>{"q", "t"}};  // hat-normalized H^i(qt,t)
    Flavor flavor = Flavor::Plain;
};

// flavor Sym adds H^i(q, 1/(qt)) before normalizing; `self_dual` selects the
// plain flavor automatically when the color multiset is transpose-closed
std::vector<RHCoefficient> rh_coefficients(const LaurentPoly& H, Flavor flavor, bool self_dual);
std::vector<RHCoefficient> rh_coefficients(const stabilize::Superpolynomial& H,
                                           std::optional<Flavor> flavor = std::nullopt);

struct LimitInvariants {
    int sign = 1;                 // varsigma
    long pi = 0;
    exactalg::UniRealPoly S;      // S(0) = 1
    long sigma2 = 0;              // deg_t S = 2 sigma
    bool strict_limit = false;    // no q-rescaling was needed
    bool degree_relation = false; // 2(pi + sigma) == deg_t hatH
    std::vector<std::pair<int, int>> cyclotomic;  // (d, multiplicity)
    exactalg::UniRealPoly residual;               // non-cyclotomic part
    int residual_nonunimodular = 0;               // numeric count of |z| != 1 roots
};

LimitInvariants limit_invariants(const RHCoefficient& c);

struct ZeroReport {
    Rat omega;
    exactalg::ComplexRootSet roots;
    int regular = 0;
    int irregular_pairs = 0;  // pairs {xi, omega/xi} off the circle, with multiplicity
    int trivial = 0;          // zeros at -1, -omega when flagged
    bool paired_ok = true;    // every irregular zero has its omega/xi partner
};

ZeroReport classify_zeros(const RHCoefficient& c, const Rat& omega, double tol = 1e-9,
                          bool flag_trivial = false);

struct VarpiResult {
    int i = 0;
    bool conclusive = false;
    double varpi = 0;                         // 0 when Weak RH holds for all omega
    std::optional<exactalg::Interval> varpi_iv;
    double omega_top = 0;                     // largest real discriminant root
    int pairs_at_top = 0;                     // irregular pairs just above omega_top
    int stable_pairs = 0;                     // at 10x and 100x omega_top
    int allowed_pairs = 0;
};

VarpiResult varpi(const RHCoefficient& c, int allowed_pairs, double tol = 1e-9);

}  // namespace dahazeta::rhscan
