#pragma once

// The DAHA polynomial representation of type A_n and its projective
// PSL(2,Z) action: Demazure-Lusztig operators, Dunkl operators Y, the
// pi-rotations, tau_- diagonal action on the nonsymmetric eigenbasis,
// leafwise evaluation of lifted gamma-matrices, and the coinvariant.

#include <map>
#include <optional>

#include "daharep/xpoly.hpp"

namespace dahazeta::daharep {

struct Context {
    int n;                                   // rank of A_n
    int qs;                                  // q-exponent scale 2(n+1)
    std::vector<std::vector<int>> ured;      // reduced word of u_r, r = 1..n
    std::vector<rootdata::Perm> uinv;        // u_r^{-1} as permutation
    std::vector<int32_t> comega;             // (omega_r,omega_r)/2, scaled by qs

    explicit Context(int rank);
};

// Demazure-Lusztig operator T_i (i = 0..n) or its inverse (sign = -1)
XPoly apply_T(const Context& c, int i, const XPoly& v, int sign = 1);
// pi_r (sign = +1) or pi_r^{-1} (sign = -1), r = 1..n
XPoly apply_pi(const Context& c, int r, const XPoly& v, int sign = 1);
// Y_{omega_r}^{sign}
XPoly apply_Y_omega(const Context& c, int r, const XPoly& v, int sign);
// Y_b for arbitrary b in the weight lattice (product of the above)
XPoly apply_Y(const Context& c, const rootdata::Weight& b, const XPoly& v);
XPoly apply_Y_inv(const Context& c, const rootdata::Weight& b, const XPoly& v);
// multiplication by X_b
XPoly apply_X(const Context& c, const rootdata::Weight& b, const XPoly& v);

// coinvariant X_b -> t^{-(rho,b)} of a projected element
exactalg::LaurentPoly coinvariant(const Context& c, const XPoly& v);

// ---- lifted PSL(2,Z) words ----

enum class TauLetter : int8_t {
    Plus = 1,      // tau_+
    PlusInv = -1,  // tau_+^{-1}
    Minus = 2,     // tau_-
    MinusInv = -2  // tau_-^{-1}
};
using TauWord = std::vector<TauLetter>;

// 2x2 integer matrix [[a,b],[c,d]] of a word (tau_+ -> [[1,1],[0,1]],
// tau_- -> [[1,0],[1,1]])
std::array<long, 4> tau_word_matrix(const TauWord& w);

// continued-fraction lift with first column (r,s)^tr; gcd(r,s) must be 1
TauWord gamma_lift(long r, long s);

// operator image w(X_{omega_r}^{sign}): scalar q-power and an ordered product
// of X-multiplications and Y-applications (leftmost factor acts last)
struct OpFactor {
    bool is_y;
    int r;
    int sign;
};
struct OpWord {
    int32_t qe = 0;  // scalar exponent, scaled by qs
    std::vector<OpFactor> fac;
};
OpWord image_word(const Context& c, const TauWord& core, int r, int sign);

// ---- nonsymmetric eigenbasis (E-polynomials) ----

// element of Q(q,t)[X]: numerator over a common q,t-denominator
struct FracXPoly {
    XPoly num;
    XPoly den;  // q,t-only, nonzero
};

// exact division of every X-graded piece of `num` by the q,t-polynomial `den`
std::optional<XPoly> divide_qt_exact(const XPoly& num, const XPoly& den);

class EBasis {
  public:
    explicit EBasis(const Context& c) : ctx_(c) {}

    // E_b = X_b + (lower terms), the joint Y-eigenvector
    const FracXPoly& E(const rootdata::Weight& b);

    // the eigencharacter of Y_{omega_r} on E_b, as a q,t-monomial
    XPoly eigen_char(const rootdata::Weight& b, int r);

    // diagonal tau_-^power on the E-expansion of v; exact (integral) result
    XPoly tau_minus_diag(const XPoly& v, long power);

    const Context& ctx() const { return ctx_; }

  private:
    const Context& ctx_;
    std::map<rootdata::Weight, FracXPoly> cache_;
    std::map<rootdata::Weight, XPoly> charcache_;
};

struct GammaOptions {
    // leading tau_- letters go through the E-basis diagonal when the support
    // cone is at most this large, otherwise they are folded into the core
    size_t diag_support_cap = 600;
};

// \hat w(f)(1): trailing tau_+^{+-1} act trivially on X-polynomials, leading
// tau_-^{+-1} act diagonally, the remaining core is expanded leafwise
XPoly gamma_apply(const Context& c, const TauWord& w, const XPoly& f, EBasis* eb = nullptr,
                  const GammaOptions& opt = {});

// apply sum_b c_b Y_{iota(b)}^{-1} (for g = sum_b c_b X_b q^. t^.) to v
XPoly phi_iota_Y(const Context& c, const XPoly& g, const XPoly& v);

}  // namespace dahazeta::daharep
