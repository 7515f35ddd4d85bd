#include <cctype>

#include "psci/polyring.hpp"

namespace psci {

ParseError::ParseError(const std::string& msg, int column)
    : std::invalid_argument(msg + " at column " + std::to_string(column)), column_(column) {}

namespace {

class Parser {
public:
    Parser(const std::string& text, const RingSpec& ring) : s_(text), ring_(ring) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ < s_.size()) {
            if (starts_atom()) fail("juxtaposition is not allowed; use '*'");
            fail(std::string("unexpected character '") + s_[pos_] + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, static_cast<int>(pos_) + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool starts_atom() const {
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '(';
    }

    Polynomial expr() {
        skip_ws();
        bool negate = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
            const bool minus = s_[pos_] == '-';
            ++pos_;
            Polynomial rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                acc *= factor();
            } else if (starts_atom()) {
                fail("juxtaposition is not allowed; use '*'");
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected a non-negative integer exponent");
            const std::string digits = read_digits();
            if (digits.size() > 3 || std::stoi(digits) > Monomial::kMaxDegree) fail("exponent too large");
            return pow(base, std::stoi(digits));
        }
        return base;
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(read_digits());
            Integer den = 1;
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                const std::size_t den_pos = pos_;
                den = Integer(read_digits());
                if (den == 0) {
                    pos_ = den_pos;
                    fail("zero denominator");
                }
            }
            Rational q(num, den);
            q.canonicalize();
            return Polynomial::constant(ring_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            const int var = lookup(name);
            if (var < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Polynomial::variable(ring_, var);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    int lookup(const std::string& name) const {
        if (name == "z") return ring_.has_z ? ring_.z() : -1;
        if (name.size() >= 2 && name[0] == 'x' && name[1] != '0') {
            for (std::size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
            if (name.size() > 3) return -1;
            const int i = std::stoi(name.substr(1));
            return (i >= 1 && i <= ring_.nvars) ? i - 1 : -1;
        }
        return -1;
    }

    const std::string& s_;
    RingSpec ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingSpec& ring) { return Parser(text, ring).parse(); }

}  // namespace psci
