#include "exactalg/exprparse.hpp"

#include <cctype>
#include <stdexcept>

namespace dahazeta::exactalg {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    const std::vector<std::string>& vars;

    explicit Parser(const std::string& text, const std::vector<std::string>& v)
        : s(text), vars(v) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse_poly: " + msg + " at position " + std::to_string(i));
    }

    Rat number() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected number");
        Int n(s.substr(i, j - i));
        i = j;
        return Rat(n);
    }

    // integer or rational exponent, possibly parenthesized / negative
    Rat exponent() {
        skip();
        if (eat('(')) {
            bool neg = eat('-');
            Rat num = number();
            Rat val = num;
            if (eat('/')) val = num / number();
            if (!eat(')')) fail("expected ) in exponent");
            return neg ? -val : val;
        }
        bool neg = eat('-');
        Rat v = number();
        return neg ? -v : v;
    }

    LaurentPoly atom() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        if (eat('(')) {
            LaurentPoly e = expr();
            if (!eat(')')) fail("expected )");
            return e;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return LaurentPoly::constant(vars, number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            std::string name = s.substr(i, j - i);
            i = j;
            return LaurentPoly::var(vars, name);
        }
        fail("unexpected character");
    }

    LaurentPoly factor() {
        LaurentPoly a = atom();
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            Rat e = exponent();
            if (denominator(e) == 1) {
                a = a.pow(rat_to_long(e));
            } else {
                if (!a.is_monomial()) fail("rational power of non-monomial");
                const auto& [m, c] = *a.terms().begin();
                if (c != 1) fail("rational power of non-unit monomial");
                ExpVec me(m);
                for (auto& x : me) x *= e;
                a = LaurentPoly::monomial(vars, me, 1);
            }
        }
        return a;
    }

    LaurentPoly term() {
        LaurentPoly a = factor();
        for (;;) {
            skip();
            if (i >= s.size()) break;
            char c = s[i];
            if (c == '*') {
                ++i;
                a = a * factor();
            } else if (c == '/') {
                ++i;
                LaurentPoly d = factor();
                auto q = a.divide_exact(d);
                if (!q) fail("inexact division");
                a = *q;
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                a = a * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return a;
    }

    LaurentPoly expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        LaurentPoly a = term();
        if (neg) a = -a;
        for (;;) {
            skip();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                bool minus = s[i] == '-';
                ++i;
                LaurentPoly b = term();
                a = minus ? a - b : a + b;
            } else {
                break;
            }
        }
        return a;
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    Parser p(text, vars);
    LaurentPoly r = p.expr();
    p.skip();
    if (p.i != text.size())
        throw std::invalid_argument("parse_poly: trailing input at position " + std::to_string(p.i));
    return r;
}

}  // namespace dahazeta::exactalg
