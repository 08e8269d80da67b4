#include <cctype>
#include <optional>
#include <string>

#include "galois/errors.hpp"
#include "galois/poly.hpp"
#include "galois/rational.hpp"

namespace galois {

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size()) {
        if (s[i] != '/') return std::nullopt;
        ++i;
        if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i != s.size()) return std::nullopt;
    }
    Rational q;
    // mpq_class::set_str rejects garbage but accepts "1/0"; guard that.
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

std::string to_string(const QPoly& f, const std::string& var) {
    if (f.degree() < 0) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const Rational& c = f[static_cast<size_t>(i)];
        if (is_zero_elem(c)) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (i == 0) {
            out += to_string(mag);
        } else {
            if (!unit) out += to_string(mag) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

// Recursive descent over the grammar
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | power
//   power  := atom ('^' nat)?
//   atom   := rational | 'x' | '(' expr ')'
// Doubled operators like "+ +" are rejected because unary plus is not a
// production.
class PolyParser {
  public:
    explicit PolyParser(const std::string& text) : text_(text) {}

    QPoly run() {
        QPoly result = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return result;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    QPoly expr() {
        QPoly acc = term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                QPoly rhs = term();
                acc = c == '+' ? acc + rhs : acc - rhs;
            } else {
                return acc;
            }
        }
    }

    QPoly term() {
        QPoly acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc = acc * factor();
        }
        return acc;
    }

    QPoly factor() {
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        return power();
    }

    QPoly power() {
        QPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            unsigned long e = natural();
            QPoly acc = QPoly::constant(Rational(1));
            for (unsigned long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    QPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            QPoly inner = expr();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return QPoly({Rational(0), Rational(1)});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return QPoly::constant(rational());
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    unsigned long natural() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected exponent", pos_);
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 3 || std::stoul(digits) > 512)
            throw ParseError("exponent too large", start);
        return std::stoul(digits);
    }

    Rational rational() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        // Look ahead for "/ digits" to form an exact rational literal.
        size_t save = pos_;
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected denominator", pos_);
            std::string den = text_.substr(dstart, pos_ - dstart);
            auto q = parse_rational(digits + "/" + den);
            if (!q) throw ParseError("division by zero in literal", dstart);
            return *q;
        }
        pos_ = save;
        return Rational(digits, 10);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(const std::string& text) { return PolyParser(text).run(); }

}  // namespace galois
