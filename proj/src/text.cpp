#include <holdring/error.hpp>
#include <holdring/text.hpp>

#include <cctype>
#include <string>
#include <vector>

namespace holdring {

    namespace {

        std::string_view trim(std::string_view text) noexcept {
            while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
                text.remove_prefix(1);
            }
            while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
                text.remove_suffix(1);
            }
            return text;
        }

        bool all_digits(std::string_view text) noexcept {
            if (text.empty()) {
                return false;
            }
            for (const char c : text) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    return false;
                }
            }
            return true;
        }

    } // namespace

    std::string format_digit(Digit d, int order) {
        if (d.is_zero()) {
            return "0";
        }
        if (order <= 2) {
            return d.exponent() == 0 ? "1" : "-1";
        }
        return "w^" + std::to_string(d.exponent());
    }

    Digit parse_digit(std::string_view token, int order) {
        token = trim(token);
        if (token == "0") {
            return Digit::zero();
        }
        if (token == "1") {
            return Digit::root(0, order);
        }
        if (token == "-1" && order % 2 == 0) {
            return Digit::root(order / 2, order);
        }
        if (order > 2 || token.starts_with("w")) {
            if (token == "w") {
                return Digit::root(1, order);
            }
            if (token.starts_with("w^") && all_digits(token.substr(2))) {
                const int e = std::stoi(std::string(token.substr(2)));
                if (e < order) {
                    return Digit::root(e, order);
                }
            }
        }
        throw ParseError("invalid digit token '" + std::string(token) + "' for n = " + std::to_string(order));
    }

    std::string format_digits(const DigitString& s, int order) {
        if (s.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += format_digit(s[j], order);
        }
        return out;
    }

    DigitString parse_digits(std::string_view text, int order) {
        text = trim(text);
        std::vector<Digit> digits;
        if (text.empty()) {
            return {};
        }
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            digits.push_back(parse_digit(text.substr(start, comma - start), order));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        return DigitString(std::move(digits));
    }

    std::string format_integer(const Integer& x) { return x.str(); }

    Integer parse_integer(std::string_view text) {
        text = trim(text);
        std::string_view body = text;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
            body.remove_prefix(1);
        }
        if (!all_digits(body)) {
            throw ParseError("invalid integer '" + std::string(text) + "'");
        }
        return Integer(std::string(text));
    }

    std::string format_element(const QuadraticInt& x, const QuadraticOrder& order) {
        if (order.degenerate() || x.b.is_zero()) {
            return x.a.str();
        }
        std::string out;
        if (!x.a.is_zero()) {
            out = x.a.str();
        }
        if (x.b < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        const Integer magnitude = x.b < 0 ? Integer(-x.b) : x.b;
        if (magnitude != 1) {
            out += magnitude.str() + "*";
        }
        out += 'w';
        return out;
    }

    QuadraticInt parse_element(std::string_view text, const QuadraticOrder& order) {
        const std::string_view source = text;
        text = trim(text);
        if (text.empty()) {
            throw ParseError("empty element");
        }
        QuadraticInt value;
        std::size_t pos = 0;
        bool first = true;
        while (pos < text.size()) {
            int sign = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                throw ParseError("expected '+' or '-' in '" + std::string(source) + "'");
            }
            first = false;
            const std::size_t begin = pos;
            while (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
                ++pos;
            }
            std::string term;
            for (const char c : text.substr(begin, pos - begin)) {
                if (!std::isspace(static_cast<unsigned char>(c))) {
                    term += c;
                }
            }
            if (term.empty()) {
                throw ParseError("dangling sign in '" + std::string(source) + "'");
            }
            if (term.back() == 'w') {
                term.pop_back();
                if (!term.empty() && term.back() == '*') {
                    term.pop_back();
                }
                const Integer coefficient = term.empty() ? Integer(1) : parse_integer(term);
                value.b += sign * coefficient;
            } else {
                value.a += sign * parse_integer(term);
            }
        }
        if (!order.contains(value)) {
            throw ParseError("element '" + std::string(source) + "' is not in " + order.description());
        }
        return value;
    }

    DigitString from_exponents(std::initializer_list<int> exponents, int order) {
        std::vector<Digit> digits;
        for (const int e : exponents) {
            digits.push_back(e < 0 ? Digit::zero() : Digit::root(e, order));
        }
        return DigitString(std::move(digits));
    }

    DigitString from_values(std::initializer_list<int> values, int order) {
        std::vector<Digit> digits;
        for (const int v : values) {
            if (v == 0) {
                digits.push_back(Digit::zero());
            } else if (v == 1) {
                digits.push_back(Digit::root(0, order));
            } else if (v == -1 && order % 2 == 0) {
                digits.push_back(Digit::root(order / 2, order));
            } else {
                throw ParseError("digit value " + std::to_string(v) + " not in the alphabet");
            }
        }
        return DigitString(std::move(digits));
    }

} // namespace holdring
