#include "bsarr/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>

#include "bsarr/errors.hpp"

namespace bsarr {

namespace {

struct Token {
    enum Kind { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) return {Token::End, "", start};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Int, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i_ + 1;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Var, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Plus, "+", start};
            case '-': return {Token::Minus, "-", start};
            case '*': return {Token::Star, "*", start};
            case '^': return {Token::Caret, "^", start};
            case '(': return {Token::LParen, "(", start};
            case ')': return {Token::RParen, ")", start};
            default:
                throw StructuralError("unexpected character '" + std::string(1, c) +
                                      "' at position " + std::to_string(start));
        }
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, std::vector<std::string> vars)
        : text_(text), vars_(std::move(vars)), lex_(text_) {
        advance();
    }

    Poly parse() {
        Poly p = expr();
        expect(Token::End, "end of input");
        return p;
    }

private:
    void advance() { tok_ = lex_.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (tok_.kind != k)
            throw StructuralError("expected " + what + " at position " + std::to_string(tok_.pos) +
                                  " in polynomial '" + text_ + "'");
    }

    Poly expr() {
        Poly p = tok_.kind == Token::Minus ? Poly::zero(vars_) : term_signed();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            Poly t = term();
            p += minus ? -t : t;
        }
        return p;
    }

    Poly term_signed() { return term(); }

    Poly term() {
        Poly p = factor();
        while (tok_.kind == Token::Star) {
            advance();
            p *= factor();
        }
        return p;
    }

    Poly factor() {
        if (tok_.kind == Token::Minus) {
            advance();
            return -factor();
        }
        Poly b = base();
        if (tok_.kind == Token::Caret) {
            advance();
            expect(Token::Int, "integer exponent");
            long e = std::stol(tok_.text);
            advance();
            Poly r = Poly::constant(vars_, Rational(1));
            for (long i = 0; i < e; ++i) r *= b;
            return r;
        }
        return b;
    }

    Poly base() {
        if (tok_.kind == Token::Int) {
            Rational c = Rational::parse(tok_.text);
            advance();
            return Poly::constant(vars_, c);
        }
        if (tok_.kind == Token::Var) {
            auto it = std::find(vars_.begin(), vars_.end(), tok_.text);
            if (it == vars_.end())
                throw StructuralError("unknown variable '" + tok_.text + "' at position " +
                                      std::to_string(tok_.pos));
            int idx = static_cast<int>(it - vars_.begin());
            advance();
            return Poly::variable(vars_, idx);
        }
        if (tok_.kind == Token::LParen) {
            advance();
            Poly p = expr();
            expect(Token::RParen, "')'");
            advance();
            return p;
        }
        throw StructuralError("expected a term at position " + std::to_string(tok_.pos) +
                              " in polynomial '" + text_ + "'");
    }

    const std::string& text_;
    std::vector<std::string> vars_;
    Lexer lex_;
    Token tok_;
};

int canonical_var_rank(const std::string& v) {
    static const char* letters = "xyzw";
    if (v.size() == 1) {
        const char* p = std::strchr(letters, v[0]);
        if (p) return static_cast<int>(p - letters);
    }
    if (v[0] == 'x' && v.size() > 1) return 100 + std::stoi(v.substr(1));
    return 1000;  // anything else sorts last, alphabetically via tie-break
}

}  // namespace

std::vector<std::string> infer_poly_vars(const std::string& text) {
    Lexer lex(text);
    std::set<std::string> seen;
    for (Token t = lex.next(); t.kind != Token::End; t = lex.next())
        if (t.kind == Token::Var) seen.insert(t.text);
    std::vector<std::string> vars(seen.begin(), seen.end());
    std::sort(vars.begin(), vars.end(), [](const std::string& a, const std::string& b) {
        int ra = canonical_var_rank(a), rb = canonical_var_rank(b);
        if (ra != rb) return ra < rb;
        return a < b;
    });
    return vars;
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

Poly parse_poly(const std::string& text) { return parse_poly(text, infer_poly_vars(text)); }

}  // namespace bsarr
