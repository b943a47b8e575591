#include "cuspcensus/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace cuspcensus {

namespace {

std::string mono_to_string(const Mono& m) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        uint32_t e = m.e[i];
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += var_name(static_cast<Var>(i));
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += '-';
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string ms = mono_to_string(m);
        if (ms.empty()) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += ms;
        } else {
            out += rat_to_string(a) + "*" + ms;
        }
        first = false;
    }
    return out;
}

namespace {

class Scanner {
public:
    Scanner(const std::string& text, VarSet vars) : s_(text), vars_(vars) {}

    Poly parse() {
        Poly p(vars_);
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
        } else if (peek() == '+') {
            advance();
        }
        parse_term(p, neg);
        skip_ws();
        while (!eof()) {
            char c = peek();
            if (c == '+' || c == '-') {
                advance();
                parse_term(p, c == '-');
                skip_ws();
            } else {
                fail("expected '+' or '-'");
            }
        }
        if (p.vars() == vars_) return p;
        return p;
    }

private:
    // term := coeff ("*" mono)? | mono
    void parse_term(Poly& p, bool negate) {
        skip_ws();
        if (eof()) fail("expected a term");
        Rat coef(1);
        Mono mono;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_rat();
            have_coef = true;
            skip_ws();
            if (peek() == '*') {
                size_t save = pos_, sl = line_, sc = col_;
                advance();
                skip_ws();
                if (is_var(peek())) {
                    mono = parse_mono();
                } else {
                    pos_ = save;
                    line_ = sl;
                    col_ = sc;
                    fail("expected a variable after '*'");
                }
            }
        } else if (is_var(peek())) {
            mono = parse_mono();
        } else {
            fail("expected a coefficient or variable");
        }
        (void)have_coef;
        if (negate) coef = -coef;
        p.add_term(mono, coef);
    }

    Rat parse_rat() {
        Int num = parse_int();
        skip_ws();
        if (peek() == '/') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
            Int den = parse_int();
            if (den == 0) fail("zero denominator");
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }

    Int parse_int() {
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        return Int(digits);
    }

    Mono parse_mono() {
        Mono m;
        for (;;) {
            char c = peek();
            if (!is_var(c)) fail("expected a variable");
            Var v = c == 'x' ? Var::x : (c == 'y' ? Var::y : Var::z);
            if (!vars_.contains(v)) fail(std::string("variable '") + c + "' not allowed here");
            advance();
            uint32_t e = 1;
            skip_ws();
            if (peek() == '^') {
                advance();
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
                Int k = parse_int();
                if (k <= 0 || k > 1000000) fail("exponent out of range");
                e = uint32_t(k.get_ui());
            }
            m[v] += e;
            skip_ws();
            size_t save = pos_, sl = line_, sc = col_;
            if (peek() == '*') {
                advance();
                skip_ws();
                if (is_var(peek())) continue;
                // a '*' followed by a digit belongs to nothing valid here
                pos_ = save;
                line_ = sl;
                col_ = sc;
            }
            break;
        }
        return m;
    }

    static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z'; }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    void advance() {
        if (eof()) return;
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    const std::string& s_;
    VarSet vars_;
    size_t pos_ = 0;
    size_t line_ = 1;
    size_t col_ = 1;
};

}  // namespace

Poly parse_poly(const std::string& text, VarSet vars) {
    Scanner sc(text, vars);
    return sc.parse();
}

}  // namespace cuspcensus
