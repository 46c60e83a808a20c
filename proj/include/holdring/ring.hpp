// include/holdring/ring.hpp: concrete rings realizing a number system:
// the evaluation map, residue digits, exact division by X and greedy encoding.

#pragma once

#include <holdring/digit.hpp>
#include <holdring/number_system.hpp>
#include <holdring/quadratic.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace holdring {

    /// A ring Z or Z[w] with a candidate generator X and an injective
    /// iota: mu_n -> units, given by the image of w^1 (iota(w^k) = root^k).
    class Realization {
    public:
        Realization(QuadraticOrder order, QuadraticInt generator, QuadraticInt root, int digit_order);

        [[nodiscard]] const QuadraticOrder& order() const noexcept { return order_; }
        [[nodiscard]] const QuadraticInt& generator() const noexcept { return generator_; }
        [[nodiscard]] int digit_order() const noexcept { return digit_order_; }
        [[nodiscard]] QuadraticInt iota(Digit d) const;
        /// max |iota(d)| over the alphabet (complex embedding).
        [[nodiscard]] double max_digit_modulus() const;

    private:
        QuadraticOrder order_;
        QuadraticInt generator_;
        int digit_order_;
        std::vector<QuadraticInt> roots_;
    };

    /// A number system together with a ring in which its hold identity
    /// sigma(h(xi)) = iota(xi) + 1 holds exactly.
    class SystemBinding {
    public:
        /// Throws InvalidSystem if the digit orders differ, |N(X)| != n+1 or
        /// the hold identity fails for some xi.
        SystemBinding(NumberSystem system, Realization ring);

        [[nodiscard]] const NumberSystem& system() const noexcept { return system_; }
        [[nodiscard]] const Realization& ring() const noexcept { return ring_; }
        [[nodiscard]] const std::string& name() const noexcept { return system_.name(); }

    private:
        NumberSystem system_;
        Realization ring_;
    };

    [[nodiscard]] QuadraticInt eval_sigma(const DigitString& s, const Realization& ring);

    /// Digits xi (from mu_n) whose hold identity fails in `ring`.
    [[nodiscard]] std::vector<Digit> hold_identity_failures(const NumberSystem& sys, const Realization& ring);

    /// The unique digit alpha with X | z - iota(alpha). Throws NoResidueDigit.
    [[nodiscard]] Digit residue_digit(const QuadraticInt& z, const Realization& ring);

    /// z / X; throws NotDivisible.
    [[nodiscard]] QuadraticInt div_by_X_exact(const QuadraticInt& z, const Realization& ring);

    /// One step of digit extraction: (alpha, (z - iota(alpha)) / X).
    struct DigitStep {
        Digit digit;
        QuadraticInt rest;
    };
    [[nodiscard]] DigitStep extract_digit(const QuadraticInt& z, const Realization& ring);

    /// ceil(log_|X|(|z| + 1)) + 16.
    [[nodiscard]] std::size_t default_encode_cap(const QuadraticInt& z, const Realization& ring);

    /// Greedy low-to-high digit extraction. Throws NonTerminating after
    /// `cap` digits (default_encode_cap when absent) or if the orbit of z
    /// under extraction revisits a non-zero element.
    [[nodiscard]] DigitString encode(const QuadraticInt& z, const Realization& ring,
                                     std::optional<std::size_t> cap = std::nullopt);

    /// Hold table of a realization computed by encoding iota(xi) + 1.
    [[nodiscard]] NumberSystem derive_system(const Realization& ring, std::string name,
                                             std::optional<std::size_t> cap = std::nullopt);

} // namespace holdring
