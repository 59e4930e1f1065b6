#include <tdeg/scalar_text.hpp>

#include <cctype>

namespace tdeg {

Rational parse_rational(std::string_view text) {
    EpsScalar s = parse_scalar(text);
    if (!s.is_constant()) throw ParseError("expected a rational constant, got: " + std::string(text));
    return s.as_rational();
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    EpsScalar parse() {
        EpsScalar v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("scalar parse error at offset " + std::to_string(pos_) + ": " + what +
                         " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    EpsScalar expr() {
        EpsScalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    EpsScalar term() {
        EpsScalar v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                EpsScalar d = factor();
                if (d.is_zero()) throw DivisionByZero("division by zero in scalar expression");
                v /= d;
            } else {
                return v;
            }
        }
    }

    EpsScalar factor() {
        bool neg = false;
        for (;;) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        EpsScalar v = power();
        return neg ? -v : v;
    }

    EpsScalar power() {
        EpsScalar base = atom();
        if (!eat('^')) return base;
        long k = signed_int();
        EpsScalar r(Rational(1));
        long n = k < 0 ? -k : k;
        for (long i = 0; i < n; ++i) r *= base;
        if (k < 0) {
            if (r.is_zero()) throw DivisionByZero("zero raised to a negative power");
            r = EpsScalar(Rational(1)) / r;
        }
        return r;
    }

    EpsScalar atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            EpsScalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'e') {
            ++pos_;
            return EpsScalar::eps();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return EpsScalar(Rational(unsigned_int()));
        fail("expected integer, 'e' or '('");
    }

    long signed_int() {
        bool neg = eat('-');
        if (!neg) eat('+');
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000) fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    Integer unsigned_int() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

void append_term(std::string& out, const Rational& coeff, long exp, bool first) {
    Rational a = abs(coeff);
    bool neg = sgn(coeff) < 0;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    bool unit = is_one(a);
    if (exp == 0) {
        out += a.get_str();
        return;
    }
    if (!unit) {
        out += a.get_str();
        out += "*";
    }
    out += "e";
    if (exp != 1) {
        out += "^";
        out += std::to_string(exp);
    }
}

} // namespace

EpsScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string format_poly(const EpsPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long k = 0; k <= p.degree(); ++k) {
        if (tdeg::is_zero(p.coeff(k))) continue;
        append_term(out, p.coeff(k), k, first);
        first = false;
    }
    return out;
}

std::string format_scalar(const EpsScalar& s) {
    std::string num = format_poly(s.num());
    if (s.den() == EpsPoly::one()) return num;
    auto wrap = [](const EpsPoly& p, std::string str) {
        // single monomials with integer coefficient bind fine without parens
        size_t terms = 0;
        for (long k = 0; k <= p.degree(); ++k)
            if (!tdeg::is_zero(p.coeff(k))) ++terms;
        bool simple = terms == 1 && p.coeff(p.low_degree()).get_den() == 1;
        return simple ? str : "(" + str + ")";
    };
    return wrap(s.num(), std::move(num)) + "/" + wrap(s.den(), format_poly(s.den()));
}

} // namespace tdeg
