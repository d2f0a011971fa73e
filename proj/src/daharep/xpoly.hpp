#pragma once

// Packed polynomial representation for the DAHA polynomial module: integer
// coefficients, scaled integer q,t-exponents (q-exponents live in
// Z/(2(n+1)), t-exponents in Z/2), and X-monomials in fundamental-weight
// coordinates. Terms are kept sorted and fused; all operations are exact.

#include <array>
#include <cstdint>
#include <cstring>
#include <vector>

#include "base/numbers.hpp"
#include "exactalg/laurent.hpp"
#include "rootdata/rootdata.hpp"

namespace dahazeta::daharep {

inline constexpr int kMaxRank = 12;

struct XKey {
    int32_t qe = 0;  // q-exponent * (2(n+1))
    int32_t te = 0;  // t-exponent * 2
    std::array<int16_t, kMaxRank> x{};  // omega-coordinates of the X-monomial

    friend bool operator==(const XKey& a, const XKey& b) {
        return a.qe == b.qe && a.te == b.te && a.x == b.x;
    }
    friend bool operator<(const XKey& a, const XKey& b) {
        if (a.qe != b.qe) return a.qe < b.qe;
        if (a.te != b.te) return a.te < b.te;
        return a.x < b.x;
    }
    // order on the X-part only (groups equal monomials together)
    static bool xless(const XKey& a, const XKey& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.qe != b.qe) return a.qe < b.qe;
        return a.te < b.te;
    }
};

using XTerm = std::pair<XKey, Int>;

class XPoly {
  public:
    XPoly() = default;
    explicit XPoly(std::vector<XTerm> raw) : t_(std::move(raw)) { normalize(); }

    static XPoly one() {
        return XPoly(std::vector<XTerm>{{XKey{}, Int(1)}});
    }
    static XPoly monomial(const XKey& k, Int c) {
        return XPoly(std::vector<XTerm>{{k, std::move(c)}});
    }

    const std::vector<XTerm>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    void operator+=(const XPoly& o);
    bool operator==(const XPoly& o) const { return t_ == o.t_; }

    void scale_int(const Int& c);
    void shift_qt(int32_t dqe, int32_t dte);  // multiply by q^{dqe/scale} t^{dte/2}
    void mul_x(const rootdata::Weight& b);    // multiply by X_b

    // raw access for operator kernels
    std::vector<XTerm>& raw() { return t_; }
    void normalize();

  private:
    std::vector<XTerm> t_;
};

// conversions: vars {q, t, X1..Xn}; qscale = 2(n+1)
exactalg::LaurentPoly xpoly_to_laurent(const XPoly& p, int n);
XPoly xpoly_from_laurent(const exactalg::LaurentPoly& p, int n);

// q,t-only content (all x == 0 required), as a Laurent polynomial in {q,t}
exactalg::LaurentPoly qt_to_laurent(const XPoly& p, int n);
XPoly qt_from_laurent(const exactalg::LaurentPoly& p, int n);

}  // namespace dahazeta::daharep
