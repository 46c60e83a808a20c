#include <holdring/error.hpp>
#include <holdring/ring.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace holdring {

    Realization::Realization(QuadraticOrder order, QuadraticInt generator, QuadraticInt root, int digit_order)
        : order_(std::move(order)), generator_(std::move(generator)), digit_order_(digit_order) {
        if (digit_order_ < 1) {
            throw std::invalid_argument("realization: digit order must be positive");
        }
        if (!order_.contains(generator_) || !order_.contains(root)) {
            throw std::invalid_argument("realization: elements outside the order");
        }
        roots_.reserve(static_cast<std::size_t>(digit_order_));
        QuadraticInt power(1, 0);
        for (int k = 0; k < digit_order_; ++k) {
            roots_.push_back(power);
            power = order_.mul(power, root);
        }
        if (!(power == QuadraticInt(1, 0))) {
            throw std::invalid_argument("realization: root^n != 1");
        }
        std::set<QuadraticInt> distinct(roots_.begin(), roots_.end());
        if (distinct.size() != roots_.size()) {
            throw std::invalid_argument("realization: iota is not injective on mu_n");
        }
    }

    QuadraticInt Realization::iota(Digit d) const {
        if (d.is_zero()) {
            return {};
        }
        return roots_.at(static_cast<std::size_t>(d.exponent()));
    }

    double Realization::max_digit_modulus() const {
        double best = 0.0;
        for (const auto& r : roots_) {
            best = std::max(best, std::abs(order_.to_complex(r)));
        }
        return best;
    }

    SystemBinding::SystemBinding(NumberSystem system, Realization ring)
        : system_(std::move(system)), ring_(std::move(ring)) {
        if (system_.order() != ring_.digit_order()) {
            throw InvalidSystem(system_.name() + ": digit order of the ring differs from the system");
        }
        if (ring_.order().index(ring_.generator()) != system_.residue_field_size()) {
            throw InvalidSystem(system_.name() + ": |N(X)| must equal n+1");
        }
        if (!hold_identity_failures(system_, ring_).empty()) {
            throw InvalidSystem(system_.name() + ": hold identity sigma(h(xi)) = iota(xi) + 1 fails");
        }
    }

    QuadraticInt eval_sigma(const DigitString& s, const Realization& ring) {
        // Horner from the top digit.
        QuadraticInt value;
        for (std::size_t j = s.size(); j-- > 0;) {
            value = ring.order().mul(value, ring.generator()) + ring.iota(s[j]);
        }
        return value;
    }

    std::vector<Digit> hold_identity_failures(const NumberSystem& sys, const Realization& ring) {
        std::vector<Digit> failures;
        for (int e = 0; e < sys.order(); ++e) {
            const Digit xi = Digit::root(e, sys.order());
            if (!(eval_sigma(sys.hold(xi), ring) == ring.iota(xi) + QuadraticInt(1, 0))) {
                failures.push_back(xi);
            }
        }
        return failures;
    }

    DigitStep extract_digit(const QuadraticInt& z, const Realization& ring) {
        std::optional<DigitStep> found;
        const auto try_digit = [&](Digit d) {
            auto rest = ring.order().divide(z - ring.iota(d), ring.generator());
            if (!rest) {
                return;
            }
            if (found) {
                throw NoResidueDigit("residue digit is not unique: two digits are congruent modulo X");
            }
            found = DigitStep{d, std::move(*rest)};
        };
        try_digit(Digit::zero());
        for (int e = 0; e < ring.digit_order(); ++e) {
            try_digit(Digit::root(e, ring.digit_order()));
        }
        if (!found) {
            throw NoResidueDigit("no digit is congruent to the element modulo X");
        }
        return std::move(*found);
    }

    Digit residue_digit(const QuadraticInt& z, const Realization& ring) { return extract_digit(z, ring).digit; }

    QuadraticInt div_by_X_exact(const QuadraticInt& z, const Realization& ring) {
        auto q = ring.order().divide(z, ring.generator());
        if (!q) {
            throw NotDivisible("element is not divisible by X");
        }
        return std::move(*q);
    }

    std::size_t default_encode_cap(const QuadraticInt& z, const Realization& ring) {
        const double base = std::abs(ring.order().to_complex(ring.generator()));
        const double size = std::abs(ring.order().to_complex(z));
        if (!(base > 1.0)) {
            return 64;
        }
        return static_cast<std::size_t>(std::ceil(std::log(size + 1.0) / std::log(base))) + 16;
    }

    DigitString encode(const QuadraticInt& z, const Realization& ring, std::optional<std::size_t> cap) {
        const std::size_t limit = cap.value_or(default_encode_cap(z, ring));
        std::vector<Digit> digits;
        std::set<QuadraticInt> visited;
        QuadraticInt current = z;
        while (!current.is_zero()) {
            if (digits.size() >= limit) {
                throw NonTerminating("encode: no finite expansion within " + std::to_string(limit) + " digits");
            }
            if (!visited.insert(current).second) {
                throw NonTerminating("encode: digit extraction entered a non-zero cycle");
            }
            auto step = extract_digit(current, ring);
            digits.push_back(step.digit);
            current = std::move(step.rest);
        }
        return DigitString(std::move(digits));
    }

    NumberSystem derive_system(const Realization& ring, std::string name, std::optional<std::size_t> cap) {
        std::vector<DigitString> holds;
        std::optional<std::complex<double>> embedding = ring.order().to_complex(ring.generator());
        for (int e = 0; e < ring.digit_order(); ++e) {
            const QuadraticInt target = ring.iota(Digit::root(e, ring.digit_order())) + QuadraticInt(1, 0);
            holds.push_back(encode(target, ring, cap));
        }
        return NumberSystem(std::move(name), ring.digit_order(), std::move(holds), embedding);
    }

} // namespace holdring
