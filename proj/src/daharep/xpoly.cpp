#include "daharep/xpoly.hpp"

#include <algorithm>

namespace dahazeta::daharep {

void XPoly::normalize() {
    std::sort(t_.begin(), t_.end(),
              [](const XTerm& a, const XTerm& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t r = 0; r < t_.size();) {
        size_t s = r + 1;
        Int acc = std::move(t_[r].second);
        while (s < t_.size() && t_[s].first == t_[r].first) {
            acc += t_[s].second;
            ++s;
        }
        if (acc != 0) {
            t_[w].first = t_[r].first;
            t_[w].second = std::move(acc);
            ++w;
        }
        r = s;
    }
    t_.resize(w);
}

XPoly XPoly::operator+(const XPoly& o) const {
    std::vector<XTerm> r;
    r.reserve(t_.size() + o.t_.size());
    r.insert(r.end(), t_.begin(), t_.end());
    r.insert(r.end(), o.t_.begin(), o.t_.end());
    return XPoly(std::move(r));
}

void XPoly::operator+=(const XPoly& o) {
    t_.insert(t_.end(), o.t_.begin(), o.t_.end());
    normalize();
}

XPoly XPoly::operator-(const XPoly& o) const {
    std::vector<XTerm> r;
    r.reserve(t_.size() + o.t_.size());
    r.insert(r.end(), t_.begin(), t_.end());
    for (const auto& [k, c] : o.t_) r.emplace_back(k, -c);
    return XPoly(std::move(r));
}

XPoly XPoly::operator*(const XPoly& o) const {
    std::vector<XTerm> r;
    r.reserve(t_.size() * o.t_.size());
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            XKey k = ka;
            k.qe += kb.qe;
            k.te += kb.te;
            for (int i = 0; i < kMaxRank; ++i) k.x[i] = static_cast<int16_t>(k.x[i] + kb.x[i]);
            r.emplace_back(k, ca * cb);
        }
    return XPoly(std::move(r));
}

void XPoly::scale_int(const Int& c) {
    if (c == 0) { t_.clear(); return; }
    for (auto& [k, v] : t_) v *= c;
}

void XPoly::shift_qt(int32_t dqe, int32_t dte) {
    for (auto& [k, v] : t_) {
        k.qe += dqe;
        k.te += dte;
    }
}

void XPoly::mul_x(const rootdata::Weight& b) {
    for (auto& [k, v] : t_)
        for (size_t i = 0; i < b.size(); ++i) k.x[i] = static_cast<int16_t>(k.x[i] + b[i]);
}

exactalg::LaurentPoly xpoly_to_laurent(const XPoly& p, int n) {
    std::vector<std::string> vars{"q", "t"};
    for (int i = 1; i <= n; ++i) vars.push_back("X" + std::to_string(i));
    exactalg::LaurentPoly out(vars);
    int qs = 2 * (n + 1);
    exactalg::ExpVec e(vars.size());
    for (const auto& [k, c] : p.terms()) {
        e[0] = Rat(k.qe, qs);
        e[1] = Rat(k.te, 2);
        for (int i = 0; i < n; ++i) e[2 + i] = Rat(k.x[i]);
        out.add_term(e, Rat(c));
    }
    return out;
}

XPoly xpoly_from_laurent(const exactalg::LaurentPoly& p, int n) {
    int qs = 2 * (n + 1);
    std::vector<XTerm> raw;
    int qi = p.var_index("q"), ti = p.var_index("t");
    std::vector<int> xi(n, -1);
    for (int i = 0; i < n; ++i) xi[i] = p.var_index("X" + std::to_string(i + 1));
    for (const auto& [e, c] : p.terms()) {
        if (denominator(c) != 1)
            throw std::invalid_argument("xpoly_from_laurent: non-integer coefficient");
        XKey k;
        if (qi >= 0) k.qe = static_cast<int32_t>(rat_to_long(e[qi] * qs, "q-exponent"));
        if (ti >= 0) k.te = static_cast<int32_t>(rat_to_long(e[ti] * 2, "t-exponent"));
        for (int i = 0; i < n; ++i)
            if (xi[i] >= 0) k.x[i] = static_cast<int16_t>(rat_to_long(e[xi[i]], "X-exponent"));
        raw.emplace_back(k, Int(numerator(c)));
    }
    return XPoly(std::move(raw));
}

exactalg::LaurentPoly qt_to_laurent(const XPoly& p, int n) {
    exactalg::LaurentPoly out({"q", "t"});
    int qs = 2 * (n + 1);
    for (const auto& [k, c] : p.terms()) {
        if (k.x != std::array<int16_t, kMaxRank>{})
            throw std::domain_error("qt_to_laurent: X-variables still present");
        out.add_term({Rat(k.qe, qs), Rat(k.te, 2)}, Rat(c));
    }
    return out;
}

XPoly qt_from_laurent(const exactalg::LaurentPoly& p, int n) {
    int qs = 2 * (n + 1);
    int qi = p.var_index("q"), ti = p.var_index("t");
    std::vector<XTerm> raw;
    for (const auto& [e, c] : p.terms()) {
        if (denominator(c) != 1)
            throw std::invalid_argument("qt_from_laurent: non-integer coefficient");
        XKey k;
        if (qi >= 0) k.qe = static_cast<int32_t>(rat_to_long(e[qi] * qs, "q-exponent"));
        if (ti >= 0) k.te = static_cast<int32_t>(rat_to_long(e[ti] * 2, "t-exponent"));
        raw.emplace_back(k, Int(numerator(c)));
    }
    return XPoly(std::move(raw));
}

}  // namespace dahazeta::daharep
