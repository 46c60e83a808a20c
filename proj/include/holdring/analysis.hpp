// include/holdring/analysis.hpp: empirical validation of number systems.

#pragma once

#include <holdring/number_system.hpp>
#include <holdring/quadratic.hpp>
#include <holdring/ring.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace holdring {

    enum class Verdict { valid, invalid, inconclusive };

    [[nodiscard]] std::string_view to_string(Verdict v) noexcept;

    /// Outcome of iterating tau(z) = (z - iota(residue(z))) / X from one start.
    struct Orbit {
        enum class End { zero, cycle, no_residue, step_cap };
        End end = End::zero;
        std::size_t steps = 0;
        /// For End::cycle: the non-zero cycle, rotated to start at its least element.
        std::vector<QuadraticInt> cycle;
    };

    [[nodiscard]] Orbit trace_orbit(const QuadraticInt& z, const Realization& ring, std::size_t step_cap = 10'000);

    struct ValidationReport {
        std::string system;
        /// Hold identity (for bindings) or derivability of the hold (for bare rings).
        bool consistency = false;
        /// Starts whose orbit does not reach 0, smallest shells first (at most kFailureSample kept).
        std::vector<QuadraticInt> witness_failures;
        std::uint64_t failure_count = 0;
        std::vector<std::vector<QuadraticInt>> attractor_cycles;
        Verdict verdict = Verdict::inconclusive;
        std::int64_t requested_bound = 0;
        /// Coefficient box actually scanned; enlarged to cover the absorbing ball.
        std::int64_t effective_bound = 0;
        std::uint64_t witnesses = 0;
        /// Radius D / (min |X_i| - 1) when every embedding of X has modulus > 1.
        std::optional<double> absorbing_radius;

        static constexpr std::size_t kFailureSample = 256;
    };

    /// Runs tau from every start in the box |a|, |b| <= bound (b = 0 for Z).
    /// When X expands in every embedding, all cycles lie in the absorbing
    /// ball, the box is widened to contain it, and "valid" is a proof.
    /// Throws TooLarge for boxes over 25 million points.
    [[nodiscard]] ValidationReport attractor_test(const Realization& ring, std::int64_t bound, std::string name = {});
    [[nodiscard]] ValidationReport attractor_test(const SystemBinding& binding, std::int64_t bound);

    struct QuadraticGenerator {
        std::int64_t trace = 0;
        std::int64_t norm = 0;
        bool rational = false;
        /// Squarefree d with field Q(sqrt(d)); 1 for Q.
        std::int64_t field = 1;
        std::string label;
        Realization ring;
        NumberSystem system;
    };

    struct RejectedCandidate {
        std::int64_t trace = 0;
        std::int64_t norm = 0;
        bool rational = false;
        std::string label;
        Verdict verdict = Verdict::invalid;
    };

    struct SearchResult {
        std::vector<QuadraticGenerator> generators;
        std::vector<RejectedCandidate> rejected;
        /// Sorted distinct fields of the accepted generators.
        [[nodiscard]] std::vector<std::int64_t> fields() const;
    };

    /// Candidates: X = +-(n+1) in Z, and X = w with minimal polynomial
    /// x^2 - b x + (n+1), b^2 < 4(n+1). Each passes if attractor_test says
    /// valid. X and its complex conjugate are one candidate; for n even X and
    /// -X are equivalent and the representative with trace >= 0 is kept.
    [[nodiscard]] SearchResult search_quadratic(int n, std::int64_t bound = 60);

    /// Label such as "(1+sqrt(-11))/2" for the root (b + sqrt(b^2 - 4c)) / 2.
    [[nodiscard]] std::string quadratic_label(std::int64_t trace, std::int64_t norm);
    [[nodiscard]] std::int64_t squarefree_part(std::int64_t d);

    struct DegreeRow {
        std::size_t degree = 0;
        std::int64_t min = 0;
        std::int64_t max = 0;
        friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
    };

    /// Value ranges at X = -2 of {0,1}-strings of each exact degree 0..d_max,
    /// by enumeration. d_max <= 24.
    [[nodiscard]] std::vector<DegreeRow> degree_table(std::size_t d_max);

    /// j(n) = (1/3)(-2)^n - (1/2)(-1)^n + 1/6, exactly.
    [[nodiscard]] Rational negabinary_bound(unsigned n);

    struct CumulativeRow {
        std::size_t degree = 0;
        std::int64_t min = 0;
        std::int64_t max = 0;
        std::uint64_t distinct = 0;
        Rational expected_low;
        Rational expected_high;
        /// distinct values == 2^(d+1) and they fill [min, max]
        bool contiguous = false;
        [[nodiscard]] bool matches() const;
    };

    struct BoundsReport {
        std::int64_t z_max = 0;
        std::uint64_t checked = 0;
        /// z with degree(encode(z)) > log2(3|z| + 2) + 1
        std::vector<std::int64_t> violations;
        /// min over z of bound - degree
        double min_slack = 0.0;
        std::vector<CumulativeRow> cumulative;
        [[nodiscard]] bool ok() const;
    };

    [[nodiscard]] BoundsReport check_bounds(std::int64_t z_max, std::size_t d_max = 12);

    /// log2(3|z| + 2) + 1.
    [[nodiscard]] double negabinary_degree_bound(std::int64_t z) noexcept;

    struct GrowthReport {
        std::size_t trials = 0;
        /// max of degree(z + 1) - degree(z); nullopt if every z + 1 was 0
        std::optional<std::int64_t> max_growth;
        std::optional<std::size_t> allowed_growth;
        std::size_t growth_violations = 0;
        std::size_t side_condition_violations = 0;
        std::vector<DigitString> counterexamples;
    };

    /// Random non-zero strings z of degree <= max_degree; measures the degree
    /// growth of z + 1 computed with the hold. With `side_condition`, each
    /// z + 1 of degree deg(z) + 2 must have its digit at deg(z) + 1 Zero or of
    /// opposite sign to the top digit.
    [[nodiscard]] GrowthReport plus_one_growth(const NumberSystem& sys, std::size_t trials, std::size_t max_degree,
                                               std::uint64_t seed, std::optional<std::size_t> allowed_growth = std::nullopt,
                                               bool side_condition = false);

    /// Known plus-one growth bound and side-condition flag for catalog systems.
    struct GrowthProfile {
        std::size_t allowed_growth;
        bool side_condition;
    };
    [[nodiscard]] std::optional<GrowthProfile> known_growth_profile(std::string_view system_name);

    /// Uniform degree in [0, max_degree], non-Zero top digit, uniform lower digits.
    [[nodiscard]] DigitString random_digit_string(const NumberSystem& sys, std::size_t max_degree, std::mt19937_64& rng);

} // namespace holdring
