#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "daharep/daha.hpp"
#include "exactalg/exprparse.hpp"

using namespace dahazeta;
using namespace dahazeta::daharep;
using rootdata::Weight;

namespace {

XPoly xmono(const Context& c, const Weight& b) {
    XKey k;
    for (size_t i = 0; i < b.size(); ++i) k.x[i] = static_cast<int16_t>(b[i]);
    (void)c;
    return XPoly::monomial(k, 1);
}

XPoly t_half(int pow) {  // t^{pow/2}
    XKey k;
    k.te = pow;
    return XPoly::monomial(k, 1);
}

XPoly random_poly(const Context& c, std::mt19937& gen, int terms = 4, int spread = 2) {
    std::uniform_int_distribution<int> d(-spread, spread);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<XTerm> raw;
    for (int k = 0; k < terms; ++k) {
        XKey key;
        for (int i = 0; i < c.n; ++i) key.x[i] = static_cast<int16_t>(d(gen));
        raw.emplace_back(key, Int(coef(gen)));
    }
    return XPoly(std::move(raw));
}

exactalg::LaurentPoly QTpoly(const std::string& s) {
    return exactalg::parse_poly(s, {"q", "t"});
}

}  // namespace

TEST_CASE("T operators: quadratic relation and braid relations") {
    std::mt19937 gen(17);
    for (int n = 1; n <= 3; ++n) {
        Context c(n);
        for (int i = 0; i <= n; ++i) {
            CHECK(apply_T(c, i, XPoly::one(), 1) == t_half(1));  // T_i(1) = t^{1/2}
            for (int trial = 0; trial < 4; ++trial) {
                XPoly v = random_poly(c, gen);
                // (T - t^{1/2})(T + t^{-1/2}) v = 0
                XPoly tv = apply_T(c, i, v, 1);
                XPoly lhs = apply_T(c, i, tv, 1);
                XPoly t1 = tv;
                t1.shift_qt(0, 1);
                XPoly t2 = v;
                t2.shift_qt(0, 1);
                t2.shift_qt(0, -2);  // t^{-1/2} v handled as shift by -1 in halves
                XPoly want = t1;
                XPoly vneg = v;
                vneg.shift_qt(0, -1);
                XPoly tpos = v;
                tpos.shift_qt(0, 1);
                // T^2 = (t^{1/2} - t^{-1/2}) T + 1
                XPoly rhs = tv;
                XPoly tv_neg = tv;
                tv_neg.shift_qt(0, -1);
                XPoly tv_pos = tv;
                tv_pos.shift_qt(0, 1);
                CHECK(lhs == tv_pos - tv_neg + v);
                // inverse
                CHECK(apply_T(c, i, apply_T(c, i, v, 1), -1) == v);
            }
        }
        // braid T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}
        for (int i = 1; i < n; ++i)
            for (int trial = 0; trial < 3; ++trial) {
                XPoly v = random_poly(c, gen);
                XPoly a = apply_T(c, i, apply_T(c, i + 1, apply_T(c, i, v)));
                XPoly b = apply_T(c, i + 1, apply_T(c, i, apply_T(c, i + 1, v)));
                CHECK(a == b);
            }
    }
}

TEST_CASE("pi operators") {
    std::mt19937 gen(23);
    for (int n = 1; n <= 3; ++n) {
        Context c(n);
        for (int r = 1; r <= n; ++r)
            for (int trial = 0; trial < 4; ++trial) {
                XPoly v = random_poly(c, gen);
                CHECK(apply_pi(c, r, apply_pi(c, r, v, 1), -1) == v);
                // relation (ii): pi_r T_i pi_r^{-1} = T_j when pi_r(alpha_i) = alpha_j
                // verified indirectly through the Y commutativity below
            }
        // pi_1^{n+1} = id up to nothing in PGL terms: pi_1 has order n+1 on X
        XPoly v = random_poly(c, gen);
        XPoly w = v;
        for (int k = 0; k <= n; ++k) w = apply_pi(c, 1, w, 1);
        // order divides n+1 only up to q-powers of central X; check only A_1
        if (n == 1) CHECK(w == v);
    }
}

TEST_CASE("Y operators: commutativity and the eigenvector 1") {
    std::mt19937 gen(29);
    for (int n = 1; n <= 3; ++n) {
        Context c(n);
        // Y_r(1) = t^{(rho, omega_r)} = t^{r(n+1-r)/2}
        for (int r = 1; r <= n; ++r) {
            XPoly y1 = apply_Y_omega(c, r, XPoly::one(), 1);
            CHECK(y1 == t_half(r * (n + 1 - r)));
            XPoly ym = apply_Y_omega(c, r, XPoly::one(), -1);
            CHECK(ym == t_half(-r * (n + 1 - r)));
        }
        for (int r = 1; r <= n; ++r)
            for (int s = r; s <= n; ++s)
                for (int trial = 0; trial < 3; ++trial) {
                    XPoly v = random_poly(c, gen, 3);
                    XPoly a = apply_Y_omega(c, r, apply_Y_omega(c, s, v, 1), 1);
                    XPoly b = apply_Y_omega(c, s, apply_Y_omega(c, r, v, 1), 1);
                    CHECK(a == b);
                    CHECK(apply_Y_omega(c, r, apply_Y_omega(c, r, v, 1), -1) == v);
                }
    }
}

TEST_CASE("DAHA cross relations (iii)-(iv) on random polynomials") {
    std::mt19937 gen(31);
    for (int n = 1; n <= 3; ++n) {
        Context c(n);
        for (int i = 1; i <= n; ++i) {
            // (b, alpha_i) = 1 for b = omega_i: T_i X_b = X_b X_{alpha_i}^{-1} T_i^{-1}
            Weight b(n, 0);
            b[i - 1] = 1;
            Weight alpha(n, 0);
            alpha[i - 1] = 2;
            if (i >= 2) alpha[i - 2] = -1;
            if (i < n) alpha[i] = -1;
            Weight bma(n);
            for (int j = 0; j < n; ++j) bma[j] = b[j] - alpha[j];
            for (int trial = 0; trial < 4; ++trial) {
                XPoly v = random_poly(c, gen, 3);
                XPoly lhs = apply_T(c, i, apply_X(c, b, v), 1);
                XPoly rhs = apply_X(c, bma, apply_T(c, i, v, -1));
                CHECK(lhs == rhs);
            }
            // (b, alpha_i) = 0: commutation
            if (n >= 2) {
                Weight b2(n, 0);
                b2[i == 1 ? 1 : 0] = (i == 1 ? 1 : 1);
                if ((i == 1 && n >= 2) || i > 2) {
                    for (int trial = 0; trial < 3; ++trial) {
                        XPoly v = random_poly(c, gen, 3);
                        CHECK(apply_T(c, i, apply_X(c, b2, v), 1) ==
                              apply_X(c, b2, apply_T(c, i, v, 1)));
                    }
                }
            }
        }
    }
}

TEST_CASE("coinvariant") {
    Context c(1);
    CHECK(coinvariant(c, xmono(c, {1})) == QTpoly("t^(-1/2)"));
    CHECK(coinvariant(c, XPoly::one()) == QTpoly("1"));
    XPoly p = xmono(c, {1}) + xmono(c, {-1});
    CHECK(coinvariant(c, p) == QTpoly("t^(-1/2)+t^(1/2)"));
}

TEST_CASE("gamma lifts") {
    CHECK(gamma_lift(3, 2) == TauWord{TauLetter::Plus, TauLetter::Minus, TauLetter::Minus});
    CHECK(gamma_lift(2, 1) == TauWord{TauLetter::Plus, TauLetter::Minus});
    CHECK(gamma_lift(1, 0).empty());
    for (auto [r, s] : std::vector<std::pair<long, long>>{
             {3, 2}, {2, 3}, {5, 2}, {11, 6}, {2, 13}, {2, -9}, {4, 3}, {1, 1}, {0, 1}}) {
        auto w = gamma_lift(r, s);
        auto m = tau_word_matrix(w);
        CHECK(m[0] == (r < 0 ? -r : r));
        CHECK(m[2] == (r < 0 ? -s : s));
    }
    CHECK_THROWS(gamma_lift(4, 2));
}

TEST_CASE("trefoil coinvariant at rank 1 (pinned by hand)") {
    Context c(1);
    XPoly P = xmono(c, {1}) + xmono(c, {-1});
    XPoly g = gamma_apply(c, gamma_lift(3, 2), P);
    exactalg::LaurentPoly ev = coinvariant(c, g);
    // divide by P(t^{-rho}) = t^{-1/2} + t^{1/2}
    auto quot = ev.divide_exact(QTpoly("t^(-1/2)+t^(1/2)"));
    REQUIRE(quot.has_value());
    auto hat = exactalg::hat_normalize(*quot);
    CHECK(hat.poly == QTpoly("1 + q*t - q*t^2"));
}

TEST_CASE("Hopf link via phi-iota twist at rank 1 (pinned by hand)") {
    Context c(1);
    XPoly J = xmono(c, {1}) + xmono(c, {-1});
    XPoly one_minus_t = XPoly::one() - t_half(2);
    XPoly Jfull = J * one_minus_t;
    XPoly tw = phi_iota_Y(c, Jfull, Jfull);
    exactalg::LaurentPoly ev = coinvariant(c, tw);
    auto quot = ev.divide_exact(QTpoly("1-t^2"));
    REQUIRE(quot.has_value());
    auto hat = exactalg::hat_normalize(*quot);
    CHECK(hat.poly == QTpoly("1 - t + q*t - q*t^2"));
}

TEST_CASE("E-basis at rank 1") {
    Context c(1);
    EBasis eb(c);
    // E_{omega}: X itself
    const auto& e1 = eb.E({1});
    CHECK(divide_qt_exact(e1.num, e1.den).has_value());
    CHECK(*divide_qt_exact(e1.num, e1.den) == xmono(c, {1}));
    // E_{-omega} = X^{-1} + (1-t)/(1-qt) X
    const auto& em = eb.E({-1});
    XPoly den = em.den;
    // coefficient at X^{-1} equals den; coefficient at X: (1-t)/(1-qt)
    XPoly cm1, cp1;
    for (const auto& [k, coef] : em.num.terms()) {
        XKey qt = k;
        qt.x = {};
        if (k.x[0] == -1) cm1 += XPoly::monomial(qt, coef);
        if (k.x[0] == 1) cp1 += XPoly::monomial(qt, coef);
    }
    CHECK(cm1 == den);
    XPoly one_mt = qt_from_laurent(QTpoly("1-t"), 1);
    XPoly one_mqt = qt_from_laurent(QTpoly("1-q*t"), 1);
    CHECK(cp1 * one_mqt == one_mt * cm1);
}

TEST_CASE("tau_minus diagonal action") {
    Context c(1);
    EBasis eb(c);
    // E_omega scales by q^{-1/4} t^{-1/2}
    XPoly v = xmono(c, {1});
    XPoly s = eb.tau_minus_diag(v, 1);
    XKey k;
    k.x[0] = 1;
    k.qe = -1;  // -1/4 scaled by qs = 4
    k.te = -1;
    CHECK(s == XPoly::monomial(k, 1));
    CHECK(eb.tau_minus_diag(XPoly::one(), 5) == XPoly::one());
    // eigenvalue consistency: leafwise tau_- equals the diagonal route
    std::mt19937 gen(37);
    for (int n = 1; n <= 2; ++n) {
        Context cn(n);
        EBasis ebn(cn);
        for (int trial = 0; trial < 4; ++trial) {
            XPoly p = random_poly(cn, gen, 3, 1);
            TauWord tm{TauLetter::Minus};
            GammaOptions opt;
            opt.diag_support_cap = 0;  // force leafwise
            XPoly a = gamma_apply(cn, tm, p, nullptr, opt);
            XPoly b = ebn.tau_minus_diag(p, 1);
            CHECK(a == b);
        }
    }
}

TEST_CASE("braid relation of the projective action") {
    std::mt19937 gen(41);
    for (int n = 1; n <= 2; ++n) {
        Context c(n);
        EBasis eb(c);
        TauWord lhs{TauLetter::Plus, TauLetter::MinusInv, TauLetter::Plus};
        TauWord rhs{TauLetter::MinusInv, TauLetter::Plus, TauLetter::MinusInv};
        for (int trial = 0; trial < 3; ++trial) {
            XPoly v = random_poly(c, gen, 2, 1);
            CHECK(gamma_apply(c, lhs, v, &eb) == gamma_apply(c, rhs, v, &eb));
        }
    }
}

TEST_CASE("lift independence up to monomials") {
    Context c(1);
    XPoly P = xmono(c, {1}) + xmono(c, {-1});
    // two lifts of the (3,2)-column: the standard one, and one padded by the
    // relation (tau_+ tau_-^{-1} tau_+)(tau_-^{... }) keeping the first column
    TauWord w1 = gamma_lift(3, 2);
    TauWord w2 = w1;
    w2.insert(w2.end(), {TauLetter::Plus});  // trailing tau_+ fixes X-polynomials
    EBasis eb(c);
    auto a = exactalg::hat_normalize(coinvariant(c, gamma_apply(c, w1, P, &eb))).poly;
    auto b = exactalg::hat_normalize(coinvariant(c, gamma_apply(c, w2, P, &eb))).poly;
    CHECK(a == b);
}

TEST_CASE("phi-iota inverse check") {
    std::mt19937 gen(43);
    for (int n = 1; n <= 2; ++n) {
        Context c(n);
        std::uniform_int_distribution<int> d(-1, 1);
        for (int trial = 0; trial < 4; ++trial) {
            Weight b(n);
            for (auto& x : b) x = d(gen);
            XPoly v = random_poly(c, gen, 3, 1);
            CHECK(apply_Y_inv(c, b, apply_Y(c, b, v)) == v);
        }
    }
}
