// include/holdring/number_system.hpp: digit alphabets equipped with a hold map.

#pragma once

#include <holdring/digit.hpp>

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace holdring {

    /// Result of adding two digits: the digit left at the current position and
    /// the carry polynomial that continues at the next one.
    struct HoldPair {
        Digit low;
        DigitString carry;

        friend bool operator==(const HoldPair&, const HoldPair&) = default;
    };

    /// A digit order n together with its hold h: mu_n -> digit strings, where
    /// h(w^e) is the digit string of iota(w^e) + 1. The hold alone determines
    /// addition; the optional embedding of X is used only for bounds and
    /// rendering.
    class NumberSystem {
    public:
        /// holds[e] is h(w^e). Throws InvalidSystem when n+1 is not a prime
        /// power, the table has the wrong size, or a forced constant digit is
        /// violated (n = 1: Zero, n = 2: -1).
        NumberSystem(std::string name, int order, std::vector<DigitString> holds,
                     std::optional<std::complex<double>> embedding = std::nullopt);

        [[nodiscard]] const std::string& name() const noexcept { return name_; }
        [[nodiscard]] int order() const noexcept { return order_; }
        /// q = n + 1, the size of R/XR.
        [[nodiscard]] int residue_field_size() const noexcept { return order_ + 1; }
        [[nodiscard]] const DigitString& hold(Digit xi) const;
        [[nodiscard]] std::span<const DigitString> holds() const noexcept { return holds_; }
        [[nodiscard]] const std::optional<std::complex<double>>& embedding() const noexcept {
            return embedding_;
        }

        /// All n+1 digits: Zero first, then w^0 .. w^{n-1}.
        [[nodiscard]] std::vector<Digit> alphabet() const;

        /// Table lookup for H(xi, eta); see hold_pair().
        [[nodiscard]] const HoldPair& pair(Digit xi, Digit eta) const noexcept {
            return pairs_[index(xi) * static_cast<std::size_t>(order_ + 1) + index(eta)];
        }

        friend bool operator==(const NumberSystem& a, const NumberSystem& b) {
            return a.order_ == b.order_ && a.holds_ == b.holds_;
        }

    private:
        [[nodiscard]] static std::size_t index(Digit d) noexcept {
            return static_cast<std::size_t>(d.exponent() + 1);
        }

        std::string name_;
        int order_;
        std::vector<DigitString> holds_;
        std::optional<std::complex<double>> embedding_;
        std::vector<HoldPair> pairs_;
    };

    /// H(xi, eta): (xi + eta, empty) when xi*eta = 0, otherwise the split of
    /// eta * h(xi / eta) into its constant digit and the remaining carry.
    [[nodiscard]] HoldPair hold_pair(Digit xi, Digit eta, const NumberSystem& sys);

    /// System for Y with Y^m = X: every hold position j moves to m*j.
    [[nodiscard]] NumberSystem extend_by_root(const NumberSystem& sys, std::size_t m);

    /// System for -X (n even): digits at odd positions of each hold are
    /// multiplied by -1.
    [[nodiscard]] NumberSystem negate_generator(const NumberSystem& sys);

    [[nodiscard]] bool is_prime_power(int q) noexcept;
    /// Smallest prime dividing q (q >= 2).
    [[nodiscard]] int smallest_prime_factor(int q) noexcept;

} // namespace holdring
