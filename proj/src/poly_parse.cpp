#include "adic/poly_parse.hpp"

#include <cctype>

namespace adic {

namespace {

class PolyParser {
public:
    PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input in polynomial");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw PolyParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial acc = product();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc = acc + product();
            else if (eat('-')) acc = acc - product();
            else break;
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = power();
        while (eat('*')) acc = acc * power();
        return acc;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (eat('^')) {
            unsigned long e = integer_literal();
            Polynomial r = Polynomial::constant(ring_, 1);
            for (unsigned long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(integer_string());
            if (eat('/')) {
                mpz_class den(integer_string());
                return Polynomial::constant(
                    ring_, Scalar::rational(num, den, ring_->field()));
            }
            return Polynomial::constant(ring_, Scalar::rational(num, 1, ring_->field()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name = identifier();
            auto idx = ring_->var_index(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + name + "' in ring " + ring_->str());
            }
            return Polynomial::variable(ring_, *idx);
        }
        fail("expected coefficient, variable or '('");
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected identifier");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string integer_string() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    unsigned long integer_literal() {
        return std::stoul(integer_string());
    }

    RingPtr ring_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    return PolyParser(ring, text).parse();
}

} // namespace adic
