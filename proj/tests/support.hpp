// tests/support.hpp: doctest printers and small helpers shared by the unit tests.

#pragma once

#include <holdring/catalog.hpp>
#include <holdring/digit.hpp>
#include <holdring/quadratic.hpp>
#include <holdring/text.hpp>

#include <doctest.h>

#include <sstream>
#include <string>

namespace doctest {
    template <>
    struct StringMaker<holdring::DigitString> {
        static String convert(const holdring::DigitString& s) {
            std::ostringstream out;
            out << '[';
            for (std::size_t j = 0; j < s.size(); ++j) {
                out << (j ? "," : "") << s[j].exponent();
            }
            out << "] (exponents)";
            return out.str().c_str();
        }
    };
    template <>
    struct StringMaker<holdring::QuadraticInt> {
        static String convert(const holdring::QuadraticInt& z) {
            return ("(" + holdring::format_integer(z.a) + ", " + holdring::format_integer(z.b) + ")").c_str();
        }
    };
    template <>
    struct StringMaker<holdring::Digit> {
        static String convert(holdring::Digit d) {
            return d.is_zero() ? "Zero" : ("w^" + std::to_string(d.exponent())).c_str();
        }
    };
} // namespace doctest

namespace support {

    inline holdring::DigitString v(std::initializer_list<int> values, int n) { return holdring::from_values(values, n); }
    inline holdring::DigitString e(std::initializer_list<int> exponents, int n) {
        return holdring::from_exponents(exponents, n);
    }
    inline const holdring::SystemBinding& bind(std::string_view name) {
        for (const auto& b : holdring::catalog()) {
            if (b.name() == name) {
                return b;
            }
        }
        if (name == "pseudo") {
            return holdring::pseudo_binding();
        }
        if (name == "binary") {
            return holdring::binary_binding();
        }
        throw std::invalid_argument("no binding " + std::string(name));
    }
    inline const holdring::NumberSystem& sys(std::string_view name) { return bind(name).system(); }

} // namespace support
