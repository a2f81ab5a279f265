#include "logpois/poly_parse.hpp"

#include <cctype>

namespace logpois {

namespace {

/* recursive descent:
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := atom ('^' nat)?
 *   atom   := number | 'x' | 'y' | '(' expr ')' | '-' factor
 */
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    BiPoly run() {
        BiPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string digits(const char* what) {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw SyntaxError(std::string("expected ") + what, pos_);
        return text_.substr(start, pos_ - start);
    }

    long nat(const char* what) {
        std::string span = digits(what);
        if (span.size() > 4) throw SyntaxError("exponent too large", pos_ - span.size());
        return std::stol(span);
    }

    BiPoly expr() {
        BiPoly p = term();
        while (true) {
            if (consume('+'))
                p += term();
            else if (consume('-'))
                p -= term();
            else
                return p;
        }
    }

    BiPoly term() {
        BiPoly p = factor();
        while (consume('*')) p = p * factor();
        return p;
    }

    BiPoly factor() {
        BiPoly p = atom();
        if (consume('^')) {
            long e = nat("exponent");
            BiPoly r = BiPoly::constant(1);
            for (long k = 0; k < e; ++k) r = r * p;
            return r;
        }
        return p;
    }

    BiPoly atom() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            BiPoly p = expr();
            if (!consume(')')) throw SyntaxError("expected ')'", pos_);
            return p;
        }
        if (c == 'x') {
            ++pos_;
            return BiPoly::var_x();
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::var_y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(digits("number"), 10);
            if (consume('/')) {
                std::size_t at = pos_;
                Integer den(digits("denominator"), 10);
                if (den == 0) throw SyntaxError("zero denominator", at);
                Rational q(num, den);
                q.canonicalize();
                return BiPoly::constant(q);
            }
            return BiPoly::constant(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) throw UnknownVariable(c, pos_);
        throw SyntaxError("expected a term", pos_);
    }
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).run(); }

}  // namespace logpois
