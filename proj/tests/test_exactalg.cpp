#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "exactalg/exprparse.hpp"
#include "exactalg/laurent.hpp"
#include "exactalg/roots.hpp"
#include "exactalg/unipoly.hpp"

using namespace dahazeta;
using namespace dahazeta::exactalg;

namespace {
const std::vector<std::string> QT{"q", "t"};
LaurentPoly P(const std::string& s) { return parse_poly(s, QT); }
}  // namespace

TEST_CASE("poly arithmetic basics") {
    CHECK(P("(1+q*t)*(1-t)") == P("1 - t + q*t - q*t^2"));
    LaurentPoly p = P("1+q*t+2*t^3");
    CHECK(p + LaurentPoly(QT) == p);
    CHECK((p - p).is_zero());
    CHECK_THROWS(p + LaurentPoly({"q"}, 1));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(-3, 3);
    auto rnd = [&] {
        LaurentPoly p(QT);
        for (int k = 0; k < 4; ++k) p.add_term({Rat(d(gen)), Rat(d(gen))}, Rat(d(gen)));
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("substitute") {
    LaurentPoly img({"q", "t"});
    img.add_term({Rat(1), Rat(1)}, 1);  // q t
    CHECK(substitute(P("1+q*t+q^2"), "q", img) == P("1+q*t^2+q^2*t^2"));
    // fixture: the trefoil substitution
    CHECK(substitute(P("1+q*t"), "q", img) == P("1+q*t^2"));
    CHECK(substitute(P("1-t+q*t^2"), "t", P("t")) == P("1-t+q*t^2"));
    // t -> 1/(q t) on a Laurent polynomial
    LaurentPoly inv({"q", "t"});
    inv.add_term({Rat(-1), Rat(-1)}, 1);
    CHECK(substitute(P("1-t+q*t^2"), "t", inv) ==
          P("1 - q^(-1)*t^(-1) + q^(-1)*t^(-2)"));
    // fractional exponents ride along monomial images
    LaurentPoly h({"q", "t"});
    h.add_term({Rat(1, 2), Rat(0)}, 1);
    LaurentPoly ts({"q", "t"});
    ts.add_term({Rat(-1, 2), Rat(1)}, 1);  // t -> t q^{-1/2}
    LaurentPoly r = substitute(h, "q", img);
    CHECK(r.terms().begin()->first[0] == Rat(1, 2));
    CHECK(r.terms().begin()->first[1] == Rat(1, 2));
    CHECK(substitute(P("t^2"), "t", ts) == [&] {
        LaurentPoly e(QT);
        e.add_term({Rat(-1), Rat(2)}, 1);
        return e;
    }());
    CHECK_THROWS(substitute(P("q^(-1)+t"), "q", P("1+t")));
}

TEST_CASE("hat_normalize") {
    auto h = hat_normalize(P("q^2*t^(-1) + q^3"));
    CHECK(h.poly == P("1+q*t"));
    CHECK(h.sign == 1);
    auto h2 = hat_normalize(P("-1 - q*t"));
    CHECK(h2.poly == P("1+q*t"));
    CHECK(h2.sign == -1);
    auto h3 = hat_normalize(parse_poly("1+q*t+a*q", {"q", "t", "a"}));
    CHECK(h3.poly == parse_poly("1+q*t+a*q", {"q", "t", "a"}));
    // idempotence and monomial-scale invariance
    auto h4 = hat_normalize(P("3*q^2*t - 3*t^2*q^2 + 3*q^3*t"));
    CHECK(hat_normalize(h4.poly).poly == h4.poly);
    CHECK(hat_normalize(P("(1+q*t)*(2)*q^(-5)*t^3")).poly == P("1+q*t"));
}

TEST_CASE("json round trip") {
    LaurentPoly p({"q", "t", "a"});
    p.add_term({Rat(1, 2), Rat(-3), Rat(2)}, Rat(7, 3));
    p.add_term({Rat(0), Rat(0), Rat(0)}, 1);
    CHECK(poly_from_json(poly_to_json(p)) == p);
}

TEST_CASE("exact division") {
    auto q = P("(1-t^6)*(1-t^4)").divide_exact(P("1-t^2"));
    REQUIRE(q.has_value());
    CHECK(*q == P("(1+t^2+t^4)*(1-t^4)"));
    CHECK(!P("1+t+t^3").divide_exact(P("1-t")).has_value());
}

TEST_CASE("discriminant") {
    // quadratic oracle b^2 - 4ac by hand
    CHECK(discriminant_t(P("1 - t + q*t^2")) == uni_from_laurent(P("1-4*q").with_vars({"q"}), "q"));
    UniRealPoly d2 = discriminant_t(P("t^2 - q"));
    CHECK(d2 == uni_from_laurent(P("4*q").with_vars({"q"}), "q"));
    CHECK(discriminant_t(P("t^2-2*t+1")).is_zero());
    CHECK_THROWS(discriminant_t(P("1+q")));
    // squarefree part
    UniRealPoly p({Rat(1), Rat(-2), Rat(1)});  // (t-1)^2
    CHECK(squarefree_part(p) == UniRealPoly({Rat(-1), Rat(1)}));
}

TEST_CASE("discriminant vanishes exactly at planted double roots") {
    // p = (t - q)(t - 2q)(t - 1): disc in q has roots where factors collide
    LaurentPoly p = P("(t-q)*(t-2*q)*(t-1)");
    UniRealPoly d = discriminant_t(p);
    // collisions: q=0 (t=q vs t=2q), q=1 (t=q vs 1), q=1/2 (t=2q vs 1)
    CHECK(d.eval(Rat(0)) == 0);
    CHECK(d.eval(Rat(1)) == 0);
    CHECK(d.eval(Rat(1, 2)) == 0);
    CHECK(d.eval(Rat(1, 3)) != 0);
}

TEST_CASE("real root isolation") {
    UniRealPoly p = uni_from_laurent(P("1-4*q").with_vars({"q"}), "q");
    auto iv = isolate_real_roots(p, Rat(0), Rat(1));
    REQUIRE(iv.size() == 1);
    auto r = refine_root(p, iv[0], Rat(1, 1 << 20));
    CHECK(r.lo <= Rat(1, 4));
    CHECK(Rat(1, 4) <= r.hi);

    CHECK(isolate_real_roots(uni_from_laurent(P("q^2+1").with_vars({"q"}), "q"), Rat(0), Rat(1))
              .empty());

    UniRealPoly two = uni_from_laurent(P("(2*q-1)*(3*q-1)").with_vars({"q"}), "q");
    auto iv2 = isolate_real_roots(two, Rat(0), Rat(1));
    REQUIRE(iv2.size() == 2);
    auto a = refine_root(two, iv2[0], Rat(1, 1 << 20));
    auto b = refine_root(two, iv2[1], Rat(1, 1 << 20));
    CHECK(a.lo <= Rat(1, 3));
    CHECK(Rat(1, 3) <= a.hi);
    CHECK(b.lo <= Rat(1, 2));
    CHECK(Rat(1, 2) <= b.hi);

    CHECK_THROWS(isolate_real_roots(UniRealPoly({Rat(1), Rat(-2), Rat(1)}), Rat(0), Rat(2)));
}

TEST_CASE("complex roots") {
    // 1 + t^2/2: roots +- i sqrt(2)
    UniRealPoly p({Rat(1), Rat(0), Rat(1, 2)});
    auto rs = complex_roots(p);
    REQUIRE(rs.roots.size() == 2);
    for (const auto& r : rs.roots) {
        CHECK(std::abs(std::abs(r.z) - std::sqrt(2.0)) < 1e-10);
        CHECK(std::abs(r.z.real()) < 1e-10);
    }
    // 1 - t + t^2/5: real roots, product 5, neither of norm sqrt(5)
    UniRealPoly h({Rat(1), Rat(-1), Rat(1, 5)});
    auto hr = complex_roots(h);
    REQUIRE(hr.roots.size() == 2);
    double prod = (hr.roots[0].z * hr.roots[1].z).real();
    CHECK(prod == doctest::Approx(5.0).epsilon(1e-9));
    for (const auto& r : hr.roots) CHECK(std::abs(std::abs(r.z) - std::sqrt(5.0)) > 0.1);
    // t - 1
    auto one = complex_roots(UniRealPoly({Rat(-1), Rat(1)}));
    REQUIRE(one.roots.size() == 1);
    CHECK(std::abs(one.roots[0].z - std::complex<double>(1, 0)) < 1e-12);
    // multiplicity
    auto dbl = complex_roots(UniRealPoly({Rat(1), Rat(-2), Rat(1)}));
    REQUIRE(dbl.roots.size() == 1);
    CHECK(dbl.roots[0].multiplicity == 2);
}

TEST_CASE("Vieta checks on random polynomials") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> c;
        for (int i = 0; i < 7; ++i) c.emplace_back(d(gen));
        c.push_back(Rat(1 + std::abs(d(gen))));
        UniRealPoly p(c);
        if (p.degree() < 2 || p.coeff(0) == 0) continue;
        auto rs = complex_roots(p);
        std::complex<double> sum = 0, prod = 1;
        int n = 0;
        for (const auto& r : rs.roots) {
            for (int k = 0; k < r.multiplicity; ++k) {
                sum += r.z;
                prod *= r.z;
                ++n;
            }
        }
        REQUIRE(n == p.degree());
        double scale = 1 + std::abs(sum);
        double expect_sum = -rat_to_double(p.coeff(n - 1) / p.leading());
        CHECK(std::abs(sum.real() - expect_sum) < 1e-8 * scale);
        double expect_prod = rat_to_double(p.coeff(0) / p.leading()) * (n % 2 ? -1 : 1);
        CHECK(std::abs(prod.real() - expect_prod) < 1e-8 * (1 + std::abs(prod)));
    }
}

TEST_CASE("parser handles fixture syntax") {
    CHECK(parse_poly("-t^3 * ((1-t^6)/(1-t^2)) * ((1-t^12)/(1-t^2))", {"t"}) ==
          parse_poly("-t^3*(1+t^2+t^4)*(1+t^2+t^4+t^6+t^8+t^10)", {"t"}));
    CHECK(parse_poly("a^2*q^2*t^(-1)", {"q", "t", "a"}).min_exp("t") == Rat(-1));
}
