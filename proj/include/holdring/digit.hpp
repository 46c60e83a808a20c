// include/holdring/digit.hpp: the pointed monoid mu_{n,+} and finite digit strings.

#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace holdring {

    /// An element of mu_n ∪ {0}: either Zero or the root of unity w^e, with
    /// the exponent e stored reduced to [0, n). The order n is carried by the
    /// surrounding NumberSystem, not by the digit.
    class Digit {
    public:
        constexpr Digit() noexcept = default;

        static constexpr Digit zero() noexcept { return Digit{}; }

        static constexpr Digit root(std::int64_t exponent, int order) noexcept {
            assert(order >= 1);
            std::int64_t reduced = exponent % order;
            if (reduced < 0) {
                reduced += order;
            }
            return Digit(static_cast<int>(reduced));
        }

        [[nodiscard]] constexpr bool is_zero() const noexcept { return code_ < 0; }

        /// Exponent of a Root digit; -1 for Zero.
        [[nodiscard]] constexpr int exponent() const noexcept { return code_; }

        friend constexpr bool operator==(Digit, Digit) noexcept = default;
        friend constexpr auto operator<=>(Digit, Digit) noexcept = default;

    private:
        explicit constexpr Digit(int code) noexcept : code_(code) {}
        int code_ = -1;
    };

    [[nodiscard]] constexpr Digit digit_mul(Digit a, Digit b, int order) noexcept {
        if (a.is_zero() || b.is_zero()) {
            return Digit::zero();
        }
        return Digit::root(a.exponent() + b.exponent(), order);
    }

    // pre: !a.is_zero()
    [[nodiscard]] constexpr Digit digit_inverse(Digit a, int order) noexcept {
        assert(!a.is_zero());
        return Digit::root(-a.exponent(), order);
    }

    /// Finite little-endian digit sequence; position j carries X^j. Always kept
    /// in normal form (no trailing Zero), so the empty string is the unique
    /// representation of 0.
    class DigitString {
    public:
        DigitString() = default;
        explicit DigitString(std::vector<Digit> digits);
        DigitString(std::initializer_list<Digit> digits);

        static DigitString monomial(Digit digit, std::size_t position);

        [[nodiscard]] bool empty() const noexcept { return digits_.empty(); }
        /// Number of stored positions, i.e. degree + 1 (0 for the empty string).
        [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
        /// Highest non-Zero position; nullopt plays the role of -infinity.
        [[nodiscard]] std::optional<std::size_t> degree() const noexcept;

        /// Digit at position j; Zero past the end.
        [[nodiscard]] Digit operator[](std::size_t j) const noexcept {
            return j < digits_.size() ? digits_[j] : Digit::zero();
        }

        [[nodiscard]] std::span<const Digit> digits() const noexcept { return digits_; }

        /// Multiplication by X^k.
        [[nodiscard]] DigitString shifted(std::size_t k) const;
        /// Reduction modulo X^m (keeps positions < m).
        [[nodiscard]] DigitString truncated(std::size_t m) const;
        /// Drops the k lowest positions.
        [[nodiscard]] DigitString dropped(std::size_t k) const;
        /// Positions [0, m) with explicit Zero padding.
        [[nodiscard]] std::vector<Digit> padded(std::size_t m) const;

        friend bool operator==(const DigitString&, const DigitString&) = default;
        friend auto operator<=>(const DigitString&, const DigitString&) = default;

    private:
        void normalize() noexcept;
        std::vector<Digit> digits_;
    };

    /// Digitwise product xi * s_j.
    [[nodiscard]] DigitString scale_string(Digit xi, const DigitString& s, int order);

} // namespace holdring
