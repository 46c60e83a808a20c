#include <holdring/digit.hpp>

#include <algorithm>

namespace holdring {

    DigitString::DigitString(std::vector<Digit> digits) : digits_(std::move(digits)) { normalize(); }

    DigitString::DigitString(std::initializer_list<Digit> digits) : digits_(digits) { normalize(); }

    DigitString DigitString::monomial(Digit digit, std::size_t position) {
        if (digit.is_zero()) {
            return {};
        }
        std::vector<Digit> digits(position + 1, Digit::zero());
        digits[position] = digit;
        return DigitString(std::move(digits));
    }

    std::optional<std::size_t> DigitString::degree() const noexcept {
        if (digits_.empty()) {
            return std::nullopt;
        }
        return digits_.size() - 1;
    }

    DigitString DigitString::shifted(std::size_t k) const {
        if (digits_.empty() || k == 0) {
            return *this;
        }
        std::vector<Digit> digits(k, Digit::zero());
        digits.insert(digits.end(), digits_.begin(), digits_.end());
        return DigitString(std::move(digits));
    }

    DigitString DigitString::truncated(std::size_t m) const {
        if (m >= digits_.size()) {
            return *this;
        }
        return DigitString(std::vector<Digit>(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(m)));
    }

    DigitString DigitString::dropped(std::size_t k) const {
        if (k >= digits_.size()) {
            return {};
        }
        return DigitString(std::vector<Digit>(digits_.begin() + static_cast<std::ptrdiff_t>(k), digits_.end()));
    }

    std::vector<Digit> DigitString::padded(std::size_t m) const {
        std::vector<Digit> out(m, Digit::zero());
        std::copy_n(digits_.begin(), std::min(m, digits_.size()), out.begin());
        return out;
    }

    void DigitString::normalize() noexcept {
        while (!digits_.empty() && digits_.back().is_zero()) {
            digits_.pop_back();
        }
    }

    DigitString scale_string(Digit xi, const DigitString& s, int order) {
        if (xi.is_zero()) {
            return {};
        }
        std::vector<Digit> out;
        out.reserve(s.size());
        for (const Digit d : s.digits()) {
            out.push_back(digit_mul(xi, d, order));
        }
        return DigitString(std::move(out));
    }

} // namespace holdring
