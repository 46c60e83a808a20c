// include/holdring/carry.hpp: addition and multiplication of digit strings
// computed from the hold map alone.

#pragma once

#include <holdring/digit.hpp>
#include <holdring/number_system.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace holdring {

    /// One pending carry polynomial of the list C(k), consumed from the low end.
    struct PendingList {
        std::vector<Digit> digits;
        std::size_t offset = 0;

        [[nodiscard]] bool exhausted() const noexcept { return offset >= digits.size(); }
        [[nodiscard]] Digit front() const noexcept {
            return exhausted() ? Digit::zero() : digits[offset];
        }
    };

    /// State of the list-of-carries algorithm after k steps: the produced
    /// digits R(k) and the carry list C(k). Lists whose remaining digits are
    /// all Zero are held as a count in `idle_lists`; they enter every fold as
    /// Zero terms, which never change the running digit.
    struct CarryState {
        std::vector<Digit> produced;
        std::vector<PendingList> pending;
        std::uint64_t idle_lists = 0;

        /// |C(k)|, saturating at UINT64_MAX.
        [[nodiscard]] std::uint64_t pending_count() const noexcept;
    };

    /// Step-by-step transcription of the carry-list addition modulo X^m: at
    /// step k the terms a_k, b_k and the first digit of every pending list are
    /// folded left to right with H; each fold emits one new carry list.
    class FaithfulAdder {
    public:
        FaithfulAdder(const DigitString& a, const DigitString& b, std::size_t m, const NumberSystem& sys);

        [[nodiscard]] bool done() const noexcept { return state_.produced.size() >= modulus_; }
        void step();
        void run();
        [[nodiscard]] const CarryState& state() const noexcept { return state_; }
        [[nodiscard]] DigitString result() const;

    private:
        std::vector<Digit> a_;
        std::vector<Digit> b_;
        std::size_t modulus_;
        const NumberSystem* sys_;
        CarryState state_;
    };

    [[nodiscard]] DigitString add_mod_faithful(const DigitString& a, const DigitString& b, std::size_t m,
                                               const NumberSystem& sys);

    /// a + b modulo X^m using a per-position queue of pending digits. Folds
    /// in the same order as FaithfulAdder and returns the same string.
    [[nodiscard]] DigitString add_mod(const DigitString& a, const DigitString& b, std::size_t m,
                                      const NumberSystem& sys);

    /// Default position cap for untruncated operations: deg(a) + deg(b) + 64.
    [[nodiscard]] std::size_t default_cap(const DigitString& a, const DigitString& b) noexcept;

    /// Untruncated a + b. Once the inputs are exhausted the pending-carry
    /// state is tracked relative to the current position; a repeated state
    /// with only Zero digits produced in between means every later digit is
    /// Zero and the finite result is returned. Throws NonTerminating when the
    /// cap is reached or a repeated state with a non-Zero digit shows the
    /// expansion is infinite.
    [[nodiscard]] DigitString add(const DigitString& a, const DigitString& b, const NumberSystem& sys,
                                  std::optional<std::size_t> cap = std::nullopt);

    /// sum_j X^j * (a_j * b), folded with add().
    [[nodiscard]] DigitString mul(const DigitString& a, const DigitString& b, const NumberSystem& sys,
                                  std::optional<std::size_t> cap = std::nullopt);

    [[nodiscard]] DigitString mul_mod(const DigitString& a, const DigitString& b, std::size_t m,
                                      const NumberSystem& sys);

} // namespace holdring
