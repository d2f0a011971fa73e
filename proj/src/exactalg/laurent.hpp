#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients
// and rational exponents. This is the universal boundary value type; the
// DAHA evaluation core uses a packed representation (daharep/xpoly.hpp) and
// converts at the edges.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "base/numbers.hpp"

namespace dahazeta::exactalg {

using ExpVec = std::vector<Rat>;

// graded lexicographic on exponent vectors: canonical term order
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    LaurentPoly(std::vector<std::string> vars, const Rat& c);

    static LaurentPoly constant(std::vector<std::string> vars, const Rat& c) {
        return LaurentPoly(std::move(vars), c);
    }
    static LaurentPoly monomial(std::vector<std::string> vars, ExpVec e, const Rat& c);
    // x^1 for the named variable
    static LaurentPoly var(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<ExpVec, Rat, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rat constant_value() const;  // requires constant
    size_t size() const { return terms_.size(); }

    int var_index(const std::string& name) const;  // -1 if absent

    void add_term(const ExpVec& e, const Rat& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly pow(long e) const;  // e >= 0, or monomial/invertible for e < 0

    // exact division; nullopt if not divisible
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    Rat min_exp(const std::string& var) const;
    Rat max_exp(const std::string& var) const;
    Rat coeff(const ExpVec& e) const;

    // coefficient of var^k as a polynomial in the remaining variables
    LaurentPoly coeff_of(const std::string& var, const Rat& k) const;
    std::vector<Rat> exponents_of(const std::string& var) const;  // sorted, unique

    LaurentPoly with_vars(const std::vector<std::string>& newvars) const;

    std::string str() const;

    friend LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

  private:
    std::vector<std::string> vars_;
    std::map<ExpVec, Rat, GradedLex> terms_;
    friend LaurentPoly substitute(const LaurentPoly&, const std::string&, const LaurentPoly&);
};

// substitution var -> image (general polynomial, monomial, or constant)
LaurentPoly substitute(const LaurentPoly& p, const std::string& var, const LaurentPoly& image);
LaurentPoly substitute(const LaurentPoly& p, const std::string& var, const Rat& value);

struct HatNormalized {
    LaurentPoly poly;     // normalized polynomial
    LaurentPoly factor;   // monomial removed, with the rational scale folded in
    int sign = 1;         // -1 if the polynomial was negated
};

// Divide by the minimal monomial in every variable and by the GCD of the
// (integer) coefficients; fix the sign so the minimal pure power of the
// variable `t` (default) has positive coefficient.
HatNormalized hat_normalize(const LaurentPoly& p, const std::string& tvar = "t");

// JSON round trip: {"vars": [...], "terms": [[["e1","e2",...], "c"], ...]}
std::string poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& json_text);

}  // namespace dahazeta::exactalg
