#include "exactalg/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace dahazeta::exactalg {

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
    Rat da = 0, db = 0;
    for (const auto& x : a) da += x;
    for (const auto& x : b) db += x;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars, const Rat& c) : vars_(std::move(vars)) {
    if (c != 0) terms_[ExpVec(vars_.size(), Rat(0))] = c;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, ExpVec e, const Rat& c) {
    LaurentPoly p(std::move(vars));
    if (e.size() != p.vars_.size()) throw std::invalid_argument("monomial: exponent arity");
    if (c != 0) p.terms_[std::move(e)] = c;
    return p;
}

LaurentPoly LaurentPoly::var(std::vector<std::string> vars, const std::string& name) {
    LaurentPoly p(std::move(vars));
    int i = p.var_index(name);
    if (i < 0) throw std::invalid_argument("var: unknown variable " + name);
    ExpVec e(p.vars_.size(), Rat(0));
    e[i] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](const Rat& x) { return x == 0; });
}

Rat LaurentPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("constant_value: not a constant");
    return terms_.begin()->second;
}

int LaurentPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("add_term: exponent arity");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("incompatible variable sets");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_vars(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    require_same_vars(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_vars(*this, o);
    LaurentPoly r(vars_);
    ExpVec e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e == 0) return LaurentPoly(vars_, 1);
    if (e < 0) {
        if (!is_monomial()) throw std::domain_error("pow: negative power of non-monomial");
        const auto& [m, c] = *terms_.begin();
        ExpVec me(m);
        for (auto& x : me) x = -x;
        return monomial(vars_, me, Rat(1) / c).pow(-e);
    }
    LaurentPoly r(vars_, 1), b = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r = r * b;
        b = n > 1 ? b * b : b;
        n >>= 1;
    }
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    require_same_vars(*this, d);
    if (d.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    LaurentPoly rem = *this, quot(vars_);
    const auto& [dl, dc] = *d.terms_.rbegin();  // leading term (graded lex max)
    ExpVec e(vars_.size());
    while (!rem.is_zero()) {
        const auto& [rl, rc] = *rem.terms_.rbegin();
        for (size_t i = 0; i < e.size(); ++i) e[i] = rl[i] - dl[i];
        Rat c = rc / dc;
        LaurentPoly m = monomial(vars_, e, c);
        quot.add_term(e, c);
        LaurentPoly next = rem - m * d;
        // leading term must strictly drop, otherwise not divisible
        if (!next.is_zero()) {
            GradedLex lt;
            if (!lt(next.terms_.rbegin()->first, rl)) return std::nullopt;
        }
        rem = std::move(next);
    }
    return quot;
}

Rat LaurentPoly::min_exp(const std::string& var) const {
    int i = var_index(var);
    if (i < 0 || terms_.empty()) return 0;
    Rat m = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
    return m;
}

Rat LaurentPoly::max_exp(const std::string& var) const {
    int i = var_index(var);
    if (i < 0 || terms_.empty()) return 0;
    Rat m = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
    return m;
}

Rat LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::coeff_of(const std::string& var, const Rat& k) const {
    int i = var_index(var);
    if (i < 0) throw std::invalid_argument("coeff_of: unknown variable");
    std::vector<std::string> nv;
    for (size_t j = 0; j < vars_.size(); ++j)
        if ((int)j != i) nv.push_back(vars_[j]);
    LaurentPoly r(nv);
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        ExpVec ne;
        ne.reserve(nv.size());
        for (size_t j = 0; j < e.size(); ++j)
            if ((int)j != i) ne.push_back(e[j]);
        r.add_term(ne, c);
    }
    return r;
}

std::vector<Rat> LaurentPoly::exponents_of(const std::string& var) const {
    int i = var_index(var);
    std::vector<Rat> out;
    if (i < 0) return out;
    for (const auto& [e, c] : terms_) out.push_back(e[i]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LaurentPoly LaurentPoly::with_vars(const std::vector<std::string>& newvars) const {
    LaurentPoly r(newvars);
    std::vector<int> pos(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i) {
        pos[i] = r.var_index(vars_[i]);
        if (pos[i] < 0) {
            // dropping a variable is allowed only if it never occurs
            for (const auto& [e, c] : terms_)
                if (e[i] != 0) throw std::invalid_argument("with_vars: dropped live variable " + vars_[i]);
        }
    }
    ExpVec ne(newvars.size());
    for (const auto& [e, c] : terms_) {
        std::fill(ne.begin(), ne.end(), Rat(0));
        for (size_t i = 0; i < e.size(); ++i)
            if (pos[i] >= 0) ne[pos[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

LaurentPoly substitute(const LaurentPoly& p, const std::string& var, const LaurentPoly& image) {
    int i = p.var_index(var);
    if (i < 0) throw std::invalid_argument("substitute: unknown variable " + var);
    LaurentPoly img = image.vars() == p.vars() ? image : image.with_vars(p.vars());

    if (img.is_monomial()) {
        const auto& [me, mc] = *img.terms().begin();
        LaurentPoly r(p.vars());
        ExpVec e(p.vars().size());
        for (const auto& [pe, pc] : p.terms()) {
            const Rat& k = pe[i];
            Rat c = pc;
            if (mc != 1) {
                long ki = rat_to_long(k, "substitute: exponent for non-unit monomial image");
                c *= rat_pow(mc, ki);
            }
            for (size_t j = 0; j < e.size(); ++j) e[j] = pe[j] + k * me[j];
            e[i] -= k;  // remove the substituted variable's own exponent
            r.add_term(e, c);
        }
        return r;
    }

    // general image: exponents of var must be nonnegative integers
    LaurentPoly r(p.vars());
    std::map<long, LaurentPoly> powers;
    for (const auto& [pe, pc] : p.terms()) {
        long k = rat_to_long(pe[i], "substitute: exponent with non-monomial image");
        if (k < 0) throw std::domain_error("substitute: negative exponent with non-invertible image");
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, img.pow(k)).first;
        ExpVec base(pe);
        base[i] = 0;
        r = r + LaurentPoly::monomial(p.vars(), base, pc) * it->second;
    }
    return r;
}

LaurentPoly substitute(const LaurentPoly& p, const std::string& var, const Rat& value) {
    return substitute(p, var, LaurentPoly::constant(p.vars(), value));
}

HatNormalized hat_normalize(const LaurentPoly& p, const std::string& tvar) {
    if (p.is_zero()) throw std::domain_error("hat_normalize: zero polynomial");
    const auto& vars = p.vars();
    ExpVec mins(vars.size());
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) { mins = e; first = false; continue; }
        for (size_t i = 0; i < e.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    }
    // rational scale: coefficients become integers with gcd 1
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    Rat scale = Rat(den_lcm, num_gcd);

    LaurentPoly norm(vars);
    ExpVec e(vars.size());
    for (const auto& [pe, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = pe[i] - mins[i];
        norm.add_term(e, c * scale);
    }
    // sign: minimal pure power of tvar must be positive
    int ti = norm.var_index(tvar);
    int sign = 0;
    if (ti >= 0) {
        const ExpVec* best = nullptr;
        for (const auto& [pe, c] : norm.terms()) {
            bool pure = true;
            for (size_t i = 0; i < pe.size(); ++i)
                if ((int)i != ti && pe[i] != 0) { pure = false; break; }
            if (!pure) continue;
            if (!best || pe[ti] < (*best)[ti]) best = &pe;
        }
        if (best) sign = norm.terms().at(*best) > 0 ? 1 : -1;
    }
    if (sign == 0) sign = norm.terms().begin()->second > 0 ? 1 : -1;
    if (sign < 0) norm = -norm;

    HatNormalized out;
    out.poly = std::move(norm);
    out.factor = LaurentPoly::monomial(vars, mins, Rat(1) / scale);
    out.sign = sign;
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool firstTerm = true;
    // print in descending graded-lex order (leading term first)
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = c > 0 ? c : -c;
        if (c < 0)
            os << (firstTerm ? "-" : " - ");
        else if (!firstTerm)
            os << " + ";
        firstTerm = false;
        bool allzero = std::all_of(e.begin(), e.end(), [](const Rat& x) { return x == 0; });
        bool coef_printed = false;
        if (ac != 1 || allzero) {
            os << rat_str(ac);
            coef_printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (coef_printed) os << "*";
            coef_printed = true;
            os << vars_[i];
            if (e[i] != 1) {
                std::string es = rat_str(e[i]);
                if (es.find('/') != std::string::npos || e[i] < 0)
                    os << "^(" << es << ")";
                else
                    os << "^" << es;
            }
        }
    }
    return os.str();
}

std::string poly_to_json(const LaurentPoly& p) {
    nlohmann::json j;
    j["vars"] = p.vars();
    auto& terms = j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json ev = nlohmann::json::array();
        for (const auto& x : e) ev.push_back(rat_str(x));
        terms.push_back({ev, rat_str(c)});
    }
    return j.dump();
}

LaurentPoly poly_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LaurentPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& term : j.at("terms")) {
        ExpVec e;
        for (const auto& x : term.at(0)) e.push_back(parse_rat(x.get<std::string>()));
        p.add_term(e, parse_rat(term.at(1).get<std::string>()));
    }
    return p;
}

}  // namespace dahazeta::exactalg
