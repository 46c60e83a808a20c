// include/holdring/quotient.hpp: arithmetic in R_m = R / X^m R using the hold only.

#pragma once

#include <holdring/digit.hpp>
#include <holdring/number_system.hpp>
#include <holdring/quadratic.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace holdring {

    /// A class of R_m, stored as its unique digit string of degree < m.
    class TruncatedElement {
    public:
        TruncatedElement(DigitString digits, std::size_t m) : digits_(digits.truncated(m)), modulus_(m) {}

        [[nodiscard]] const DigitString& digits() const noexcept { return digits_; }
        [[nodiscard]] std::size_t modulus() const noexcept { return modulus_; }
        [[nodiscard]] std::vector<Digit> padded() const { return digits_.padded(modulus_); }
        [[nodiscard]] bool is_zero() const noexcept { return digits_.empty(); }

        friend bool operator==(const TruncatedElement&, const TruncatedElement&) = default;

    private:
        DigitString digits_;
        std::size_t modulus_;
    };

    /// The finite ring R_m of a number system; (n+1)^m elements.
    class QuotientRing {
    public:
        QuotientRing(NumberSystem sys, std::size_t m);

        [[nodiscard]] const NumberSystem& system() const noexcept { return sys_; }
        [[nodiscard]] std::size_t modulus() const noexcept { return modulus_; }
        /// (n+1)^m, saturating at UINT64_MAX.
        [[nodiscard]] std::uint64_t cardinality() const noexcept;

        [[nodiscard]] TruncatedElement element(const DigitString& s) const { return {s, modulus_}; }
        [[nodiscard]] TruncatedElement zero() const { return {{}, modulus_}; }
        [[nodiscard]] TruncatedElement one() const;

        [[nodiscard]] TruncatedElement add(const TruncatedElement& a, const TruncatedElement& b) const;
        [[nodiscard]] TruncatedElement mul(const TruncatedElement& a, const TruncatedElement& b) const;
        /// The unique w with a + w = 0, solved one position at a time.
        [[nodiscard]] TruncatedElement neg(const TruncatedElement& a) const;
        /// k * a by double-and-add; negative k via neg.
        [[nodiscard]] TruncatedElement times(const TruncatedElement& a, const Integer& k) const;
        [[nodiscard]] TruncatedElement from_integer(const Integer& k) const { return times(one(), k); }
        /// Least k >= 1 with k * a = 0, by repeated addition.
        [[nodiscard]] std::uint64_t additive_order(const TruncatedElement& a) const;
        /// Image in R_{m'} for m' <= m.
        [[nodiscard]] TruncatedElement project(const TruncatedElement& a, std::size_t lower) const;

        /// Calls f on every element, enumerated as base-(n+1) counters.
        template <typename F>
        void for_each_element(F&& f) const;

    private:
        void require_same(const TruncatedElement& a) const;

        NumberSystem sys_;
        std::size_t modulus_;
    };

    struct StructureSignature {
        std::uint64_t cardinality = 0;
        /// additive order -> number of elements of that order
        std::map<std::uint64_t, std::uint64_t> order_histogram;
        /// additive order of 1
        std::uint64_t characteristic = 0;
    };

    inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

    /// Additive-order histogram of R_m by exhaustive enumeration. Orders are
    /// powers of the residue characteristic p, found by repeated
    /// multiplication by p. Throws TooLarge beyond kEnumerationLimit elements.
    [[nodiscard]] StructureSignature structure_probe(const NumberSystem& sys, std::size_t m);

    template <typename F>
    void QuotientRing::for_each_element(F&& f) const {
        const auto digits = sys_.alphabet();
        std::vector<std::size_t> counter(modulus_, 0);
        std::vector<Digit> current(modulus_, Digit::zero());
        while (true) {
            f(TruncatedElement(DigitString(current), modulus_));
            std::size_t pos = 0;
            while (pos < modulus_ && ++counter[pos] == digits.size()) {
                counter[pos] = 0;
                current[pos] = digits[0];
                ++pos;
            }
            if (pos == modulus_) {
                return;
            }
            current[pos] = digits[counter[pos]];
        }
    }

} // namespace holdring
