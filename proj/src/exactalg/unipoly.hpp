#pragma once

// Dense univariate polynomials over the rationals, resultants/discriminants
// of bivariate q,t-polynomials via fraction-free Bareiss elimination, and
// exact real-root isolation (Descartes / interval bisection).

#include <optional>
#include <utility>
#include <vector>

#include "base/numbers.hpp"
#include "exactalg/laurent.hpp"

namespace dahazeta::exactalg {

class UniRealPoly {
  public:
    UniRealPoly() = default;
    explicit UniRealPoly(std::vector<Rat> coeffs);  // ascending degree
    static UniRealPoly constant(const Rat& c) { return UniRealPoly({c}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& leading() const;
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    UniRealPoly operator+(const UniRealPoly& o) const;
    UniRealPoly operator-(const UniRealPoly& o) const;
    UniRealPoly operator*(const UniRealPoly& o) const;
    UniRealPoly operator*(const Rat& k) const;
    bool operator==(const UniRealPoly& o) const = default;

    Rat eval(const Rat& x) const;
    double eval_double(double x) const;
    UniRealPoly derivative() const;

    // field division (over Q): returns {quotient, remainder}
    std::pair<UniRealPoly, UniRealPoly> divmod(const UniRealPoly& d) const;
    std::optional<UniRealPoly> divide_exact(const UniRealPoly& d) const;

    UniRealPoly monic() const;
    // integer-primitive form: integral coefficients, content 1, positive leading
    UniRealPoly primitive() const;

    std::string str(const std::string& var = "q") const;

  private:
    std::vector<Rat> c_;
    void trim();
};

UniRealPoly gcd(const UniRealPoly& a, const UniRealPoly& b);  // monic gcd
UniRealPoly squarefree_part(const UniRealPoly& p);            // radical, primitive

// Conversions with single-variable LaurentPoly (integral exponents required;
// negative exponents are shifted out and reported).
UniRealPoly uni_from_laurent(const LaurentPoly& p, const std::string& var);
LaurentPoly uni_to_laurent(const UniRealPoly& p, const std::string& var);

// Exact discriminant of p(q,t) viewed as a polynomial in t over Z[q]:
//   disc = (-1)^{d(d-1)/2} res_t(p, dp/dt) / lc_t(p).
// Returned as a primitive polynomial in q. deg_t(p) must be >= 1.
UniRealPoly discriminant_t(const LaurentPoly& p, const std::string& qvar = "q",
                           const std::string& tvar = "t");

struct Interval {
    Rat lo, hi;  // lo <= hi; lo == hi means an exact rational root
};

// Isolating intervals for the real roots of a squarefree polynomial inside
// (lo, hi); throws if the input is not squarefree.
std::vector<Interval> isolate_real_roots(const UniRealPoly& p, const Rat& lo, const Rat& hi);

// Shrink an isolating interval until hi - lo <= width (sign bisection).
Interval refine_root(const UniRealPoly& p, Interval iv, const Rat& width);

}  // namespace dahazeta::exactalg
