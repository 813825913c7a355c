#include "bimoebius/literal.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace bimo {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    // +1 / -1 consumed as a sign token, 0 when the next token is not a sign.
    int consume_sign() {
        if (consume('+')) return 1;
        if (consume('-')) return -1;
        return 0;
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool at_alpha() const { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

    double lex_number() {
        const std::size_t start = pos_;
        if (!at_digit()) throw ParseError(pos_, "a number");
        while (at_digit()) ++pos_;
        if (peek() == '.') {
            ++pos_;
            if (!at_digit()) throw ParseError(pos_, "a digit after the decimal point");
            while (at_digit()) ++pos_;
        }
        if (peek() == 'e' || peek() == 'E') {
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            if (!at_digit()) throw ParseError(pos_, "an exponent digit");
            while (at_digit()) ++pos_;
        }
        double value = 0.0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) throw OverflowError(start);
        if (ec != std::errc() || ptr != last) throw ParseError(start, "a number");
        return value;
    }

    std::string_view lex_ident() {
        const std::size_t start = pos_;
        while (!at_end() && ident_char(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// Sum of signed cterms accumulated into the (1, i1, i2, j) coordinates.
Bicomplex parse_cartesian(Cursor& cur) {
    std::array<double, 4> x{0.0, 0.0, 0.0, 0.0};
    cur.skip_ws();
    int sign = cur.consume_sign();
    if (sign == 0) sign = 1;
    for (;;) {
        cur.skip_ws();
        double magnitude = 1.0;
        bool have_number = false;
        if (cur.at_digit()) {
            magnitude = cur.lex_number();
            have_number = true;
            cur.skip_ws();
        }
        std::size_t slot = 0;
        if (cur.at_alpha()) {
            const std::size_t at = cur.pos();
            const std::string_view unit = cur.lex_ident();
            if (unit == "i1") slot = 1;
            else if (unit == "i2") slot = 2;
            else if (unit == "j") slot = 3;
            else throw ParseError(at, "a unit: i1, i2 or j");
        } else if (!have_number) {
            throw ParseError(cur.pos(), "a number or a unit");
        }
        x[slot] += sign * magnitude;

        cur.skip_ws();
        sign = cur.consume_sign();
        if (sign == 0) break;
    }
    return Bicomplex::from_reals(x[0], x[1], x[2], x[3]);
}

// Sum of signed terms over (1, i); plain "i" means i1 inside brackets.
Complex parse_complex(Cursor& cur) {
    double re = 0.0, im = 0.0;
    cur.skip_ws();
    int sign = cur.consume_sign();
    if (sign == 0) sign = 1;
    for (;;) {
        cur.skip_ws();
        double magnitude = 1.0;
        bool have_number = false;
        if (cur.at_digit()) {
            magnitude = cur.lex_number();
            have_number = true;
            cur.skip_ws();
        }
        bool imaginary = false;
        if (cur.at_alpha()) {
            const std::size_t at = cur.pos();
            if (cur.lex_ident() != "i") throw ParseError(at, "the imaginary unit i");
            imaginary = true;
        } else if (!have_number) {
            throw ParseError(cur.pos(), "a number or i");
        }
        (imaginary ? im : re) += sign * magnitude;

        cur.skip_ws();
        sign = cur.consume_sign();
        if (sign == 0) break;
    }
    return {re, im};
}

ExtendedComplex parse_extcomplex(Cursor& cur) {
    cur.skip_ws();
    if (cur.at_alpha()) {
        const std::size_t at = cur.pos();
        Cursor probe = cur;
        if (probe.lex_ident() == "inf") {
            cur = probe;
            return ExtendedComplex::infinity();
        }
        if (cur.peek() != 'i') throw ParseError(at, "inf, a number or i");
    }
    return ExtendedComplex(parse_complex(cur));
}

ExtendedBicomplex parse_idempotent(Cursor& cur) {
    cur.consume('[');
    const ExtendedComplex p1 = parse_extcomplex(cur);
    cur.skip_ws();
    if (!cur.consume(',')) throw ParseError(cur.pos(), "','");
    const ExtendedComplex p2 = parse_extcomplex(cur);
    cur.skip_ws();
    if (!cur.consume(']')) throw ParseError(cur.pos(), "']'");
    return {p1, p2};
}

}  // namespace

ExtendedBicomplex parse_literal(std::string_view text) {
    Cursor cur(text);
    cur.skip_ws();
    if (cur.at_end()) throw ParseError(cur.pos(), "a literal");
    try {
        const ExtendedBicomplex result = cur.peek() == '['
                                             ? parse_idempotent(cur)
                                             : ExtendedBicomplex(parse_cartesian(cur));
        cur.skip_ws();
        if (!cur.at_end()) throw ParseError(cur.pos(), "end of input");
        return result;
    } catch (const NonFiniteValue&) {
        // Every token fit in a double but the accumulated value did not.
        throw OverflowError(0);
    }
}

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_complex(Complex value) {
    std::string out = format_double(value.real());
    if (value.imag() != 0.0) {
        out += value.imag() < 0.0 ? '-' : '+';
        out += format_double(std::abs(value.imag()));
        out += 'i';
    }
    return out;
}

namespace {

std::string format_extcomplex(const ExtendedComplex& c) {
    return c.is_infinity() ? "inf" : format_complex(c.value());
}

}  // namespace

std::string format_literal(const ExtendedBicomplex& w, LiteralStyle style) {
    if (style == LiteralStyle::Idempotent)
        return "[" + format_extcomplex(w.p1()) + ", " + format_extcomplex(w.p2()) + "]";
    if (!w.is_finite())
        throw CartesianInfinity("infinite elements have no cartesian rendering");
    return format_literal(w.finite_value(), style);
}

std::string format_literal(const Bicomplex& w, LiteralStyle style) {
    if (style == LiteralStyle::Idempotent) return format_literal(ExtendedBicomplex(w), style);
    const auto x = w.reals();
    static constexpr const char* units[] = {"", "i1", "i2", "j"};
    std::string out = format_double(x[0]);
    for (int k = 1; k < 4; ++k) {
        if (x[k] == 0.0) continue;
        out += x[k] < 0.0 ? '-' : '+';
        out += format_double(std::abs(x[k]));
        out += units[k];
    }
    return out;
}

}  // namespace bimo
