// include/holdring/quadratic.hpp: exact arithmetic in Z and rank-2 orders Z[w].

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace holdring {

    using Integer = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// a + b*w in the basis (1, w) of some order; the order supplies the
    /// multiplication. Elements of Z are those with b = 0.
    struct QuadraticInt {
        Integer a;
        Integer b;

        QuadraticInt() = default;
        QuadraticInt(Integer a_, Integer b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
        QuadraticInt(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}
        QuadraticInt(int a_, int b_ = 0) : a(a_), b(b_) {}

        [[nodiscard]] bool is_zero() const { return a.is_zero() && b.is_zero(); }

        friend bool operator==(const QuadraticInt& x, const QuadraticInt& y) { return x.a == y.a && x.b == y.b; }
        friend bool operator<(const QuadraticInt& x, const QuadraticInt& y) {
            return x.a < y.a || (x.a == y.a && x.b < y.b);
        }
        friend QuadraticInt operator+(const QuadraticInt& x, const QuadraticInt& y) { return {x.a + y.a, x.b + y.b}; }
        friend QuadraticInt operator-(const QuadraticInt& x, const QuadraticInt& y) { return {x.a - y.a, x.b - y.b}; }
        friend QuadraticInt operator-(const QuadraticInt& x) { return {-x.a, -x.b}; }
    };

    /// The order Z[w] with w^2 = t*w - c (minimal polynomial x^2 - t x + c),
    /// or Z itself when degenerate. `branch` picks which complex root w is:
    /// +1 takes (t + sqrt(t^2 - 4c)) / 2 with the principal square root.
    class QuadraticOrder {
    public:
        static QuadraticOrder integers();
        QuadraticOrder(std::int64_t trace, std::int64_t norm, std::string description = {}, int branch = 1);

        [[nodiscard]] bool degenerate() const noexcept { return degenerate_; }
        [[nodiscard]] std::int64_t trace() const noexcept { return trace_; }
        [[nodiscard]] std::int64_t norm_of_w() const noexcept { return norm_; }
        [[nodiscard]] std::int64_t discriminant() const noexcept { return trace_ * trace_ - 4 * norm_; }
        [[nodiscard]] int branch() const noexcept { return branch_; }
        [[nodiscard]] const std::string& description() const noexcept { return description_; }
        [[nodiscard]] std::complex<double> w() const noexcept { return w_; }

        [[nodiscard]] bool contains(const QuadraticInt& x) const { return !degenerate_ || x.b.is_zero(); }
        [[nodiscard]] QuadraticInt mul(const QuadraticInt& x, const QuadraticInt& y) const;
        [[nodiscard]] QuadraticInt pow(QuadraticInt x, unsigned exponent) const;
        [[nodiscard]] QuadraticInt conj(const QuadraticInt& x) const;
        /// Field norm; for Z the element itself.
        [[nodiscard]] Integer norm(const QuadraticInt& x) const;
        /// |R / xR|, i.e. |N(x)| (|x| for Z).
        [[nodiscard]] Integer index(const QuadraticInt& x) const;
        /// z / d when d divides z in the order.
        [[nodiscard]] std::optional<QuadraticInt> divide(const QuadraticInt& z, const QuadraticInt& d) const;
        [[nodiscard]] std::complex<double> to_complex(const QuadraticInt& x) const;

        friend bool operator==(const QuadraticOrder& x, const QuadraticOrder& y) noexcept {
            return x.degenerate_ == y.degenerate_ && x.trace_ == y.trace_ && x.norm_ == y.norm_ &&
                   x.branch_ == y.branch_;
        }

    private:
        QuadraticOrder() = default;

        bool degenerate_ = true;
        std::int64_t trace_ = 0;
        std::int64_t norm_ = 0;
        int branch_ = 1;
        std::string description_ = "Z";
        std::complex<double> w_{0.0, 0.0};
    };

    [[nodiscard]] double to_double(const Integer& x);

} // namespace holdring
