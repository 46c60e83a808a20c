// tests/oracles.hpp: reference computations written independently of the
// library's arithmetic: 128-bit lattice arithmetic, brute-force digit
// search, finite abelian group signatures and F_q coefficient sums.

#pragma once

#include <holdring/digit.hpp>
#include <holdring/ring.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

    using i128 = __int128;

    struct Elem {
        i128 a = 0;
        i128 b = 0;
        friend bool operator==(const Elem&, const Elem&) = default;
        friend bool operator<(const Elem& x, const Elem& y) { return x.a < y.a || (x.a == y.a && x.b < y.b); }
    };

    inline i128 to_i128(const holdring::Integer& x) {
        if (x > holdring::Integer(INT64_MAX) || x < holdring::Integer(INT64_MIN)) {
            throw std::overflow_error("oracle: value exceeds 64 bits");
        }
        return static_cast<std::int64_t>(x);
    }

    inline Elem from(const holdring::QuadraticInt& z) { return {to_i128(z.a), to_i128(z.b)}; }

    inline bool same(const Elem& e, const holdring::QuadraticInt& z) { return e == from(z); }

    /// Z[w], w^2 = t w - c, or Z when `integers`.
    struct Ring {
        bool integers = true;
        i128 t = 0;
        i128 c = 0;
        Elem X;
        std::vector<Elem> roots;  // iota(w^e)

        explicit Ring(const holdring::Realization& r) {
            integers = r.order().degenerate();
            t = r.order().trace();
            c = r.order().norm_of_w();
            X = from(r.generator());
            for (int e = 0; e < r.digit_order(); ++e) {
                roots.push_back(from(r.iota(holdring::Digit::root(e, r.digit_order()))));
            }
        }

        [[nodiscard]] Elem add(Elem x, Elem y) const { return {x.a + y.a, x.b + y.b}; }
        [[nodiscard]] Elem mul(Elem x, Elem y) const {
            if (integers) {
                return {x.a * y.a, 0};
            }
            // (a + b w)(p + q w) = ap + (aq + bp) w + bq (t w - c)
            return {x.a * y.a - c * x.b * y.b, x.a * y.b + x.b * y.a + t * x.b * y.b};
        }
        [[nodiscard]] Elem digit(holdring::Digit d) const {
            return d.is_zero() ? Elem{} : roots.at(static_cast<std::size_t>(d.exponent()));
        }
        [[nodiscard]] Elem eval(const holdring::DigitString& s) const {
            Elem value;
            Elem power{1, 0};
            for (std::size_t j = 0; j < s.size(); ++j) {
                value = add(value, mul(digit(s[j]), power));
                power = mul(power, X);
            }
            return value;
        }
    };

    /// Every string of degree <= d, by base-(n+1) counter.
    inline std::vector<holdring::DigitString> all_strings(int n, std::size_t d) {
        std::vector<holdring::DigitString> out;
        std::vector<int> counter(d + 1, 0);
        while (true) {
            std::vector<holdring::Digit> digits;
            for (const int c : counter) {
                digits.push_back(c == 0 ? holdring::Digit::zero() : holdring::Digit::root(c - 1, n));
            }
            out.emplace_back(std::move(digits));
            std::size_t pos = 0;
            while (pos <= d && ++counter[pos] == n + 1) {
                counter[pos++] = 0;
            }
            if (pos > d) {
                return out;
            }
        }
    }

    /// The unique string of degree <= d with value z, by exhaustive search.
    inline std::optional<holdring::DigitString> brute_encode(const Ring& ring, int n, const Elem& z, std::size_t d) {
        std::optional<holdring::DigitString> found;
        for (auto& s : all_strings(n, d)) {
            if (ring.eval(s) == z) {
                if (found) {
                    throw std::logic_error("brute_encode: two strings with one value");
                }
                found = s;
            }
        }
        return found;
    }

    /// Element-order histogram of Z/a_1 x ... x Z/a_k by enumerating the group.
    inline std::map<std::uint64_t, std::uint64_t> group_histogram(const std::vector<std::uint64_t>& factors) {
        std::map<std::uint64_t, std::uint64_t> hist;
        std::vector<std::uint64_t> x(factors.size(), 0);
        while (true) {
            std::uint64_t order = 1;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                order = std::lcm(order, factors[i] / std::gcd(x[i], factors[i]));
            }
            ++hist[order];
            std::size_t pos = 0;
            while (pos < factors.size() && ++x[pos] == factors[pos]) {
                x[pos++] = 0;
            }
            if (pos == factors.size()) {
                return hist;
            }
        }
    }

    inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
        std::uint64_t r = 1;
        while (e-- > 0) {
            r *= b;
        }
        return r;
    }

    /// F_q with q in {2, 3, 4}: elements 0..q-1 as integers (F_4 as 2-bit
    /// vectors over F_2 with a^2 = a + 1), and the generator powers used for
    /// digits w^e.
    struct FiniteField {
        int q;
        std::vector<int> powers;  // g^e as field element

        explicit FiniteField(int q_) : q(q_) {
            if (q == 2) {
                powers = {1};
            } else if (q == 3) {
                powers = {1, 2};
            } else if (q == 4) {
                powers = {1, 2, 3};  // 1, a, a + 1 = a^2
            } else {
                throw std::invalid_argument("FiniteField: q in {2,3,4}");
            }
        }
        [[nodiscard]] int add(int x, int y) const { return q == 4 ? (x ^ y) : (x + y) % q; }
        [[nodiscard]] int value(holdring::Digit d) const {
            return d.is_zero() ? 0 : powers.at(static_cast<std::size_t>(d.exponent()));
        }
        [[nodiscard]] holdring::Digit digit(int v) const {
            if (v == 0) {
                return holdring::Digit::zero();
            }
            for (std::size_t e = 0; e < powers.size(); ++e) {
                if (powers[e] == v) {
                    return holdring::Digit::root(static_cast<int>(e), q - 1);
                }
            }
            throw std::logic_error("FiniteField: not an element");
        }
        /// Coefficient-wise sum: F_q[X] has no carries.
        [[nodiscard]] holdring::DigitString add(const holdring::DigitString& x, const holdring::DigitString& y) const {
            std::vector<holdring::Digit> out;
            for (std::size_t j = 0; j < std::max(x.size(), y.size()); ++j) {
                out.push_back(digit(add(value(x[j]), value(y[j]))));
            }
            return holdring::DigitString(std::move(out));
        }
    };

    inline holdring::DigitString random_string(int n, std::size_t max_degree, std::mt19937_64& rng) {
        std::uniform_int_distribution<std::size_t> len(0, max_degree + 1);
        std::uniform_int_distribution<int> dig(-1, n - 1);
        std::vector<holdring::Digit> digits(len(rng));
        for (auto& d : digits) {
            const int e = dig(rng);
            d = e < 0 ? holdring::Digit::zero() : holdring::Digit::root(e, n);
        }
        return holdring::DigitString(std::move(digits));
    }

} // namespace oracle
