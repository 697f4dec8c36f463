#include "sigcurve/parse.hpp"

#include <cctype>

namespace sigcurve {

namespace {

class Parser {
public:
    Parser(std::string_view s, const RingPtr& r, const std::map<std::string, SparsePoly>& b)
        : src_(s), ring_(r), bind_(b) {}

    SparsePoly run() {
        skip();
        if (at_end()) fail("empty expression");
        SparsePoly p = expr();
        skip();
        if (!at_end()) fail(std::string("unexpected '") + src_[pos_] + "'");
        return p;
    }

private:
    std::string_view src_;
    size_t pos_ = 0;
    const RingPtr& ring_;
    const std::map<std::string, SparsePoly>& bind_;

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    SparsePoly expr() {
        SparsePoly acc = term();
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            SparsePoly t = term();
            if (c == '+')
                acc += t;
            else
                acc -= t;
        }
    }

    bool starts_factor() {
        skip();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '(' || c == '_';
    }

    SparsePoly term() {
        SparsePoly acc = signed_factor();
        for (;;) {
            skip();
            if (peek() == '*') {
                ++pos_;
                acc = acc * signed_factor();
            } else if (starts_factor()) {
                acc = acc * signed_factor();
            } else {
                return acc;
            }
        }
    }

    SparsePoly signed_factor() {
        skip();
        if (peek() == '-') {
            ++pos_;
            return -signed_factor();
        }
        if (peek() == '+') {
            ++pos_;
            return signed_factor();
        }
        return power();
    }

    SparsePoly power() {
        SparsePoly b = atom();
        for (;;) {
            skip();
            if (peek() != '^') return b;
            ++pos_;
            skip();
            size_t at = pos_;
            std::string digits = read_digits();
            if (digits.empty()) fail_at("expected non-negative integer exponent", at);
            if (digits.size() > 6) fail_at("exponent too large", at);
            b = pow(b, unsigned(std::stoul(digits)));
        }
    }

    std::string read_digits() {
        size_t s = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(s, pos_ - s));
    }

    SparsePoly atom() {
        skip();
        size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePoly p = expr();
            skip();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (peek() == '/') {
                ++pos_;
                size_t dat = pos_;
                std::string den = read_digits();
                if (den.empty()) fail_at("expected denominator", dat);
                if (den.find_first_not_of('0') == std::string::npos) fail_at("zero denominator", dat);
                num += "/" + den;
            }
            if (peek() == '.') fail("decimal literals are not supported; use p/q");
            return SparsePoly::constant(ring_, parse_rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t s = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
            std::string id(src_.substr(s, pos_ - s));
            auto it = bind_.find(id);
            if (it != bind_.end()) return it->second;
            int v = ring_->index(id);
            if (v < 0) fail_at("unknown variable '" + id + "'", at);
            return SparsePoly::variable(ring_, v);
        }
        if (at_end()) fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const RingPtr& ring, const std::map<std::string, SparsePoly>& bindings) {
    return Parser(text, ring, bindings).run();
}

RingPtr xy_ring() {
    static const RingPtr r = make_ring({"x", "y"});
    return r;
}

SparsePoly parse_curve(std::string_view text) { return parse_poly(text, xy_ring()); }

}  // namespace sigcurve
