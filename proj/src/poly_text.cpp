#include "ivpoly/poly_text.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ivpoly {

namespace {

[[noreturn]] void bad(const std::string& why) {
    throw std::invalid_argument("malformed polynomial: " + why);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

IntPoly parse_comma_form(std::string_view text) {
    std::vector<mpz_class> coeffs;
    std::string token;
    std::size_t i = 0;
    while (i <= text.size()) {
        if (i == text.size() || text[i] == ',') {
            if (token.empty()) bad("empty coefficient");
            try {
                coeffs.emplace_back(token);
            } catch (const std::invalid_argument&) {
                bad("'" + token + "' is not an integer");
            }
            token.clear();
            if (i == text.size()) break;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            token += text[i];
        }
        ++i;
    }
    return IntPoly(std::move(coeffs));
}

// Human form: signed terms of shape c, c*X^e, cX^e, X^e, X, with integer c.
IntPoly parse_human_form(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) bad("empty input");

    std::map<std::size_t, mpz_class> terms;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) bad("dangling sign");

        std::string digits;
        while (i < s.size() && is_digit(s[i])) digits += s[i++];
        mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
        if (i < s.size() && s[i] == '*') ++i;

        std::size_t exp = 0;
        if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ed;
                while (i < s.size() && is_digit(s[i])) ed += s[i++];
                if (ed.empty()) bad("'^' without exponent");
                exp = std::stoull(ed);
            }
        } else if (digits.empty()) {
            bad(std::string("unexpected character '") + s[i] + "'");
        }
        terms[exp] += sign * coeff;
    }

    std::vector<mpz_class> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
    for (auto& [e, c] : terms) coeffs[e] = std::move(c);
    return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
    if (text.find('X') != std::string_view::npos || text.find('x') != std::string_view::npos)
        return parse_human_form(text);
    return parse_comma_form(text);
}

std::string emit_poly(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out << ',';
        out << f.coeffs()[i];
    }
    return out.str();
}

std::string pretty_poly(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const mpz_class& c = f.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) out << a;
        if (i > 0) {
            out << 'X';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

}  // namespace ivpoly
