// include/holdring/text.hpp: text forms of digits, digit strings and ring elements.
//
// Digit strings are little-endian and comma separated. For n <= 2 a digit is
// written as its integer value (0, 1, -1); otherwise as "0" or "w^k". The
// empty string prints as "0". Elements of Z[w] use "a+b*w".

#pragma once

#include <holdring/digit.hpp>
#include <holdring/quadratic.hpp>

#include <initializer_list>
#include <string>
#include <string_view>

namespace holdring {

    [[nodiscard]] std::string format_digit(Digit d, int order);
    [[nodiscard]] Digit parse_digit(std::string_view token, int order);

    [[nodiscard]] std::string format_digits(const DigitString& s, int order);
    [[nodiscard]] DigitString parse_digits(std::string_view text, int order);

    [[nodiscard]] std::string format_integer(const Integer& x);
    [[nodiscard]] Integer parse_integer(std::string_view text);

    [[nodiscard]] std::string format_element(const QuadraticInt& x, const QuadraticOrder& order);
    [[nodiscard]] QuadraticInt parse_element(std::string_view text, const QuadraticOrder& order);

    /// Digit strings from exponents, -1 standing for Zero.
    [[nodiscard]] DigitString from_exponents(std::initializer_list<int> exponents, int order);
    /// Digit strings from integer values in {-1, 0, 1} (n <= 2).
    [[nodiscard]] DigitString from_values(std::initializer_list<int> values, int order);

} // namespace holdring
