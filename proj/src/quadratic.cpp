#include <holdring/quadratic.hpp>

#include <cmath>
#include <stdexcept>

namespace holdring {

    double to_double(const Integer& x) { return x.convert_to<double>(); }

    QuadraticOrder QuadraticOrder::integers() { return QuadraticOrder{}; }

    QuadraticOrder::QuadraticOrder(std::int64_t trace, std::int64_t norm, std::string description, int branch)
        : degenerate_(false), trace_(trace), norm_(norm), branch_(branch >= 0 ? 1 : -1),
          description_(std::move(description)) {
        const double disc = static_cast<double>(discriminant());
        if (discriminant() == 0) {
            throw std::invalid_argument("quadratic order: w^2 - t w + c must be separable");
        }
        const std::complex<double> root = std::sqrt(std::complex<double>(disc, 0.0));
        w_ = (static_cast<double>(trace_) + static_cast<double>(branch_) * root) / 2.0;
        if (description_.empty()) {
            description_ = "Z[w], w^2 = " + std::to_string(trace_) + "*w - " + std::to_string(norm_);
        }
    }

    QuadraticInt QuadraticOrder::mul(const QuadraticInt& x, const QuadraticInt& y) const {
        if (degenerate_) {
            return {x.a * y.a, Integer(0)};
        }
        const Integer bb = x.b * y.b;
        return {x.a * y.a - norm_ * bb, x.a * y.b + x.b * y.a + trace_ * bb};
    }

    QuadraticInt QuadraticOrder::pow(QuadraticInt x, unsigned exponent) const {
        QuadraticInt result(1, 0);
        while (exponent > 0) {
            if (exponent & 1U) {
                result = mul(result, x);
            }
            exponent >>= 1U;
            if (exponent > 0) {
                x = mul(x, x);
            }
        }
        return result;
    }

    QuadraticInt QuadraticOrder::conj(const QuadraticInt& x) const {
        if (degenerate_) {
            return x;
        }
        return {x.a + trace_ * x.b, -x.b};
    }

    Integer QuadraticOrder::norm(const QuadraticInt& x) const {
        if (degenerate_) {
            return x.a;
        }
        return x.a * x.a + trace_ * x.a * x.b + norm_ * x.b * x.b;
    }

    Integer QuadraticOrder::index(const QuadraticInt& x) const {
        const Integer n = norm(x);
        return n < 0 ? Integer(-n) : n;
    }

    std::optional<QuadraticInt> QuadraticOrder::divide(const QuadraticInt& z, const QuadraticInt& d) const {
        if (degenerate_) {
            if (d.a.is_zero() || !z.b.is_zero() || z.a % d.a != 0) {
                return std::nullopt;
            }
            return QuadraticInt{z.a / d.a, Integer(0)};
        }
        const Integer n = norm(d);
        if (n.is_zero()) {
            return std::nullopt;
        }
        const QuadraticInt scaled = mul(z, conj(d));
        if (scaled.a % n != 0 || scaled.b % n != 0) {
            return std::nullopt;
        }
        return QuadraticInt{scaled.a / n, scaled.b / n};
    }

    std::complex<double> QuadraticOrder::to_complex(const QuadraticInt& x) const {
        return to_double(x.a) + to_double(x.b) * w_;
    }

} // namespace holdring
