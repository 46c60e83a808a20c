#include <holdring/error.hpp>
#include <holdring/number_system.hpp>

#include <cmath>
#include <stdexcept>

namespace holdring {

    bool is_prime_power(int q) noexcept {
        if (q < 2) {
            return false;
        }
        const int p = smallest_prime_factor(q);
        while (q % p == 0) {
            q /= p;
        }
        return q == 1;
    }

    int smallest_prime_factor(int q) noexcept {
        for (int p = 2; p * p <= q; ++p) {
            if (q % p == 0) {
                return p;
            }
        }
        return q;
    }

    NumberSystem::NumberSystem(std::string name, int order, std::vector<DigitString> holds,
                               std::optional<std::complex<double>> embedding)
        : name_(std::move(name)), order_(order), holds_(std::move(holds)), embedding_(embedding) {
        if (order_ < 1) {
            throw InvalidSystem(name_ + ": digit order must be positive");
        }
        if (holds_.size() != static_cast<std::size_t>(order_)) {
            throw InvalidSystem(name_ + ": hold table needs exactly n entries");
        }
        if (!is_prime_power(order_ + 1)) {
            throw InvalidSystem(name_ + ": n+1 = " + std::to_string(order_ + 1) + " is not a prime power");
        }
        const bool even = order_ % 2 == 0;
        const bool characteristic_two = smallest_prime_factor(order_ + 1) == 2;
        for (int e = 0; e < order_; ++e) {
            const bool is_minus_one = even ? e == order_ / 2 : (characteristic_two && e == 0);
            const bool empty = holds_[static_cast<std::size_t>(e)].empty();
            if (empty && !is_minus_one) {
                throw InvalidSystem(name_ + ": only the hold of -1 may be empty (w^" + std::to_string(e) + ")");
            }
            if (even && e == order_ / 2 && !empty) {
                throw InvalidSystem(name_ + ": the hold of -1 must be the empty string");
            }
            for (const Digit d : holds_[static_cast<std::size_t>(e)].digits()) {
                if (!d.is_zero() && d.exponent() >= order_) {
                    throw InvalidSystem(name_ + ": hold digit outside the alphabet");
                }
            }
        }
        const Digit constant = holds_[0][0];
        if (order_ == 1 && !constant.is_zero()) {
            throw InvalidSystem(name_ + ": for n = 1 the constant digit of h(1) must be Zero");
        }
        if (order_ == 2 && constant != Digit::root(1, 2)) {
            throw InvalidSystem(name_ + ": for n = 2 the constant digit of h(1) must be -1");
        }

        const auto digits = alphabet();
        pairs_.resize(digits.size() * digits.size());
        for (const Digit xi : digits) {
            for (const Digit eta : digits) {
                HoldPair& entry = pairs_[index(xi) * digits.size() + index(eta)];
                if (xi.is_zero() || eta.is_zero()) {
                    entry = HoldPair{xi.is_zero() ? eta : xi, {}};
                    continue;
                }
                const Digit ratio = digit_mul(xi, digit_inverse(eta, order_), order_);
                const DigitString sum = scale_string(eta, hold(ratio), order_);
                entry = HoldPair{sum[0], sum.dropped(1)};
            }
        }
    }

    const DigitString& NumberSystem::hold(Digit xi) const {
        if (xi.is_zero()) {
            throw std::invalid_argument("hold is defined on mu_n only");
        }
        return holds_[static_cast<std::size_t>(xi.exponent())];
    }

    std::vector<Digit> NumberSystem::alphabet() const {
        std::vector<Digit> out;
        out.reserve(static_cast<std::size_t>(order_ + 1));
        out.push_back(Digit::zero());
        for (int e = 0; e < order_; ++e) {
            out.push_back(Digit::root(e, order_));
        }
        return out;
    }

    HoldPair hold_pair(Digit xi, Digit eta, const NumberSystem& sys) { return sys.pair(xi, eta); }

    NumberSystem extend_by_root(const NumberSystem& sys, std::size_t m) {
        if (m == 0) {
            throw std::invalid_argument("extend_by_root: m must be positive");
        }
        std::vector<DigitString> holds;
        holds.reserve(sys.holds().size());
        for (const DigitString& h : sys.holds()) {
            std::vector<Digit> spread(h.empty() ? 0 : (h.size() - 1) * m + 1, Digit::zero());
            for (std::size_t j = 0; j < h.size(); ++j) {
                spread[j * m] = h[j];
            }
            holds.emplace_back(std::move(spread));
        }
        std::optional<std::complex<double>> embedding;
        if (sys.embedding()) {
            embedding = std::pow(*sys.embedding(), 1.0 / static_cast<double>(m));
        }
        std::string name = m == 1 ? sys.name() : sys.name() + "^(1/" + std::to_string(m) + ")";
        return NumberSystem(std::move(name), sys.order(), std::move(holds), embedding);
    }

    NumberSystem negate_generator(const NumberSystem& sys) {
        const int n = sys.order();
        if (n % 2 != 0) {
            throw std::invalid_argument("negate_generator needs -1 in the alphabet (n even)");
        }
        const Digit minus_one = Digit::root(n / 2, n);
        std::vector<DigitString> holds;
        for (const DigitString& h : sys.holds()) {
            std::vector<Digit> digits(h.digits().begin(), h.digits().end());
            for (std::size_t j = 1; j < digits.size(); j += 2) {
                digits[j] = digit_mul(digits[j], minus_one, n);
            }
            holds.emplace_back(std::move(digits));
        }
        std::optional<std::complex<double>> embedding;
        if (sys.embedding()) {
            embedding = -*sys.embedding();
        }
        return NumberSystem(sys.name() + "-neg", n, std::move(holds), embedding);
    }

} // namespace holdring
