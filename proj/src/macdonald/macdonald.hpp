#pragma once

// Symmetric Macdonald polynomials P_b of type A_n via the triangular
// eigenproblem for L_{e_1} = e_1(Y) on the orbit-sum basis, the integral
// J-polynomials with their arm/leg hook normalization, and the factored
// evaluation formulas at t^{+-rho}.

#include <map>
#include <mutex>

#include "daharep/daha.hpp"

namespace dahazeta::macdonald {

using rootdata::Weight;
using rootdata::YoungDiagram;
using daharep::XPoly;

// monomial * product of (1 - q^a t^b)^mult with integer multiplicities
struct Factored {
    exactalg::LaurentPoly mono{std::vector<std::string>{"q", "t"}};
    std::map<std::pair<long, long>, long> factors;

    static Factored one();
    Factored operator*(const Factored& o) const;
    exactalg::LaurentPoly expand() const;          // requires mult >= 0
    // numerator/denominator expansion for general multiplicities
    std::pair<exactalg::LaurentPoly, exactalg::LaurentPoly> expand_frac() const;
};

enum class Kind { P, Pcirc, J, E };

struct MacdonaldPoly {
    Kind kind;
    Weight b;
    int n;
    // polynomial with a common q,t denominator; den == 1 for J
    daharep::FracXPoly value;
};

class Engine {
  public:
    explicit Engine(int rank);

    const daharep::Context& ctx() const { return ctx_; }
    daharep::EBasis& ebasis() { return eb_; }

    // symmetric Macdonald polynomial, monic at X_b
    const MacdonaldPoly& P(const Weight& b);
    // integral form J_lambda = h_lambda P_b (checked integral)
    const XPoly& J(const YoungDiagram& lambda);

    // hook normalization prod_box (1 - q^arm t^{leg+1})
    static Factored hook(const YoungDiagram& lambda);

    // closed-form evaluation J_lambda(t^rho), factored; equals the direct
    // coinvariant of J up to nothing (exact identity, verified in tests)
    Factored j_eval(const YoungDiagram& lambda) const;
    // closed-form P_b(t^{-rho}) as a fraction of factored products
    Factored p_eval_num(const YoungDiagram& lambda) const;

    // LCM of J-evaluations, normalized to constant term 1
    Factored lcm_evaluations(const std::vector<YoungDiagram>& lams) const;

    // eigenvalue e_1(q^{-rho_k - b}) used by the triangular solve (exposed
    // for the eigenproperty checks)
    XPoly e1_eigenvalue(const Weight& b) const;

  private:
    daharep::Context ctx_;
    daharep::EBasis eb_;
    std::map<Weight, MacdonaldPoly> pcache_;
    std::map<YoungDiagram, XPoly> jcache_;
    std::mutex mu_;
};

// process-wide engine registry, one per rank
Engine& engine(int rank);

}  // namespace dahazeta::macdonald
