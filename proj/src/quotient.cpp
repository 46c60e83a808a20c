#include <holdring/carry.hpp>
#include <holdring/error.hpp>
#include <holdring/quotient.hpp>

#include <limits>
#include <stdexcept>

namespace holdring {

    QuotientRing::QuotientRing(NumberSystem sys, std::size_t m) : sys_(std::move(sys)), modulus_(m) {
        if (m == 0) {
            throw std::invalid_argument("quotient ring needs m >= 1");
        }
    }

    std::uint64_t QuotientRing::cardinality() const noexcept {
        const auto q = static_cast<std::uint64_t>(sys_.residue_field_size());
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < modulus_; ++i) {
            if (total > std::numeric_limits<std::uint64_t>::max() / q) {
                return std::numeric_limits<std::uint64_t>::max();
            }
            total *= q;
        }
        return total;
    }

    TruncatedElement QuotientRing::one() const { return element(DigitString{Digit::root(0, sys_.order())}); }

    void QuotientRing::require_same(const TruncatedElement& a) const {
        if (a.modulus() != modulus_) {
            throw std::invalid_argument("element belongs to a different R_m");
        }
    }

    TruncatedElement QuotientRing::add(const TruncatedElement& a, const TruncatedElement& b) const {
        require_same(a);
        require_same(b);
        return element(add_mod(a.digits(), b.digits(), modulus_, sys_));
    }

    TruncatedElement QuotientRing::mul(const TruncatedElement& a, const TruncatedElement& b) const {
        require_same(a);
        require_same(b);
        return element(mul_mod(a.digits(), b.digits(), modulus_, sys_));
    }

    TruncatedElement QuotientRing::neg(const TruncatedElement& a) const {
        require_same(a);
        const auto digits = sys_.alphabet();
        std::vector<Digit> w(modulus_, Digit::zero());
        for (std::size_t k = 0; k < modulus_; ++k) {
            // Positions below k already cancel; pick the digit that clears k.
            bool found = false;
            for (const Digit d : digits) {
                w[k] = d;
                const DigitString partial = add_mod(a.digits(), DigitString(w), k + 1, sys_);
                if (partial.empty()) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw InvalidSystem(sys_.name() + ": no additive inverse digit at position " + std::to_string(k));
            }
        }
        return element(DigitString(std::move(w)));
    }

    TruncatedElement QuotientRing::times(const TruncatedElement& a, const Integer& k) const {
        require_same(a);
        if (k < 0) {
            return neg(times(a, -k));
        }
        TruncatedElement result = zero();
        TruncatedElement base = a;
        Integer remaining = k;
        while (remaining > 0) {
            if ((remaining & 1) != 0) {
                result = add(result, base);
            }
            remaining >>= 1;
            if (remaining > 0) {
                base = add(base, base);
            }
        }
        return result;
    }

    std::uint64_t QuotientRing::additive_order(const TruncatedElement& a) const {
        require_same(a);
        const std::uint64_t limit = cardinality();
        TruncatedElement multiple = a;
        for (std::uint64_t k = 1; k <= limit; ++k) {
            if (multiple.is_zero()) {
                return k;
            }
            multiple = add(multiple, a);
        }
        throw InvalidSystem(sys_.name() + ": additive order exceeds |R_m|; the hold is not additive");
    }

    TruncatedElement QuotientRing::project(const TruncatedElement& a, std::size_t lower) const {
        require_same(a);
        if (lower == 0 || lower > modulus_) {
            throw std::invalid_argument("projection target must satisfy 1 <= m' <= m");
        }
        return TruncatedElement(a.digits(), lower);
    }

    StructureSignature structure_probe(const NumberSystem& sys, std::size_t m) {
        const QuotientRing ring(sys, m);
        StructureSignature out;
        out.cardinality = ring.cardinality();
        if (out.cardinality > kEnumerationLimit) {
            throw TooLarge("structure_probe: |R_m| = " + std::to_string(out.cardinality) + " exceeds " +
                           std::to_string(kEnumerationLimit));
        }
        const int p = smallest_prime_factor(sys.residue_field_size());
        const auto times_p = [&](const TruncatedElement& x) {
            TruncatedElement acc = x;
            for (int i = 1; i < p; ++i) {
                acc = ring.add(acc, x);
            }
            return acc;
        };
        const auto order_of = [&](const TruncatedElement& x) {
            std::uint64_t order = 1;
            TruncatedElement y = x;
            while (!y.is_zero()) {
                y = times_p(y);
                order *= static_cast<std::uint64_t>(p);
                if (order > out.cardinality) {
                    throw InvalidSystem(sys.name() + ": element order exceeds |R_m|");
                }
            }
            return order;
        };
        ring.for_each_element([&](const TruncatedElement& x) { ++out.order_histogram[order_of(x)]; });
        out.characteristic = order_of(ring.one());
        return out;
    }

} // namespace holdring
