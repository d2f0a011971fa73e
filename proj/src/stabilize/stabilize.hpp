#pragma once

// a-stabilization of the rank family of DAHA-Jones polynomials into
// superpolynomials H(q,t,a), structural checks (super-duality, Alexander
// specialization), the cable-family recurrences, and family series.

#include "linkcalc/linkcalc.hpp"

namespace dahazeta::stabilize {

using exactalg::LaurentPoly;

struct Superpolynomial {
    LaurentPoly poly{std::vector<std::string>{"q", "t", "a"}};
    long adeg = 0;
    int m0 = 1;           // lowest rank used
    int mtop = 0;         // highest rank used
    linkcalc::LinkPair source;
    bool verified_low = false;  // exact match at the held-out lowest rank
};

struct StabilizeOptions {
    int extra_ranks = 0;   // widen the rank window
    int max_retries = 2;
    int max_threads = 2;
    bool verbose = false;
};

long adeg_prediction(const linkcalc::LinkPair& pair);

Superpolynomial stabilize(const linkcalc::LinkPair& pair, const StabilizeOptions& opt = {});

// specialization a = -t^{m+1}, hat-normalized
LaurentPoly specialize_rank(const Superpolynomial& H, int m);

// certificate q^x t^y (+sign) with H(q,t,a) = cert * Htr(1/t, 1/q, a);
// Htr defaults to H itself (transpose-closed colors)
struct DualityCertificate {
    bool ok = false;
    Rat qexp, texp;
    int sign = 1;
};
DualityCertificate duality_check(const LaurentPoly& H);
DualityCertificate duality_check(const LaurentPoly& H, const LaurentPoly& Htr);

// H(q,q,-1)/(1-q)^{kappa - [kappa==1]}; exact division enforced
LaurentPoly alexander(const LaurentPoly& H, size_t kappa);

// cable-family recurrence: from the (2)-colored superpolynomial of gamma_1
// and the uncolored 2-cable superpolynomial, produce the superpolynomial of
// the twisted 2-cable with framing shift m (exact rational identity)
LaurentPoly fga1_m(const LaurentPoly& H2col, const LaurentPoly& H2link, long m);

struct FamilyCheck {
    bool ok = false;
    LaurentPoly difference{std::vector<std::string>{"q", "t", "a", "u"}};
};

// compare sum_{m<=M} (u/t)^{g(m)-g(0)} H_m against num/den exactly through u^M
FamilyCheck family_series_check(const std::vector<LaurentPoly>& members,
                                const std::vector<long>& genus, const LaurentPoly& closed_num,
                                const LaurentPoly& closed_den, long M);

}  // namespace dahazeta::stabilize
