#include <holdring/analysis.hpp>
#include <holdring/carry.hpp>
#include <holdring/catalog.hpp>
#include <holdring/error.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace holdring {

    std::string_view to_string(Verdict v) noexcept {
        switch (v) {
        case Verdict::valid:
            return "valid";
        case Verdict::invalid:
            return "invalid";
        case Verdict::inconclusive:
            return "inconclusive";
        }
        return "inconclusive";
    }

    namespace {

        std::vector<QuadraticInt> rotate_to_least(std::vector<QuadraticInt> cycle) {
            const auto least = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), least, cycle.end());
            return cycle;
        }

        // Moduli of X in each embedding (one for Z, two for a quadratic order).
        std::vector<double> generator_moduli(const Realization& ring) {
            const auto& order = ring.order();
            std::vector<double> moduli{std::abs(order.to_complex(ring.generator()))};
            if (!order.degenerate()) {
                moduli.push_back(std::abs(order.to_complex(order.conj(ring.generator()))));
            }
            return moduli;
        }

        double digit_modulus_all_embeddings(const Realization& ring) {
            double best = ring.max_digit_modulus();
            if (!ring.order().degenerate()) {
                for (int e = 0; e < ring.digit_order(); ++e) {
                    const auto r = ring.order().conj(ring.iota(Digit::root(e, ring.digit_order())));
                    best = std::max(best, std::abs(ring.order().to_complex(r)));
                }
            }
            return best;
        }

        // Coefficient bound covering every element with |z| <= r in all embeddings.
        std::int64_t box_for_radius(const Realization& ring, double r) {
            const auto& order = ring.order();
            if (order.degenerate()) {
                return static_cast<std::int64_t>(std::ceil(r));
            }
            const std::complex<double> e1 = order.w();
            const std::complex<double> e2 = order.to_complex(order.conj(QuadraticInt(0, 1)));
            const double b = 2.0 * r / std::abs(e1 - e2);
            const double a = r + b * std::min(std::abs(e1), std::abs(e2));
            return static_cast<std::int64_t>(std::ceil(std::max(a, b)));
        }

        enum class Fate { zero, failed, unknown };

        struct OrbitMemo {
            std::map<QuadraticInt, Fate> fate;
        };

    } // namespace

    Orbit trace_orbit(const QuadraticInt& z, const Realization& ring, std::size_t step_cap) {
        Orbit orbit;
        std::map<QuadraticInt, std::size_t> seen;
        std::vector<QuadraticInt> path;
        QuadraticInt current = z;
        while (!current.is_zero()) {
            if (const auto it = seen.find(current); it != seen.end()) {
                orbit.end = Orbit::End::cycle;
                orbit.cycle = rotate_to_least({path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end()});
                return orbit;
            }
            if (orbit.steps >= step_cap) {
                orbit.end = Orbit::End::step_cap;
                return orbit;
            }
            seen.emplace(current, path.size());
            path.push_back(current);
            try {
                current = extract_digit(current, ring).rest;
            } catch (const NoResidueDigit&) {
                orbit.end = Orbit::End::no_residue;
                return orbit;
            }
            ++orbit.steps;
        }
        orbit.end = Orbit::End::zero;
        return orbit;
    }

    ValidationReport attractor_test(const Realization& ring, std::int64_t bound, std::string name) {
        if (bound < 1) {
            throw std::invalid_argument("attractor_test: bound must be at least 1");
        }
        ValidationReport report;
        report.system = std::move(name);
        report.requested_bound = bound;
        try {
            (void)derive_system(ring, report.system);
            report.consistency = true;
        } catch (const Error&) {
            report.consistency = false;
        }

        const auto moduli = generator_moduli(ring);
        const double min_modulus = *std::min_element(moduli.begin(), moduli.end());
        std::int64_t effective = bound;
        if (min_modulus > 1.0 + 1e-12) {
            const double r = digit_modulus_all_embeddings(ring) / (min_modulus - 1.0);
            report.absorbing_radius = r;
            effective = std::max(effective, box_for_radius(ring, r) + 1);
        }
        const bool degenerate = ring.order().degenerate();
        const double side = 2.0 * static_cast<double>(effective) + 1.0;
        if ((degenerate ? side : side * side) > 25e6) {
            throw TooLarge("attractor_test: coefficient box of bound " + std::to_string(effective) + " is too large");
        }
        report.effective_bound = effective;

        // Orbits contract into the ball when it exists, so a long orbit only
        // arises without contraction; those tend to diverge and get a short cap.
        const std::size_t step_cap = report.absorbing_radius ? 100'000 : 256;

        std::map<QuadraticInt, Fate> fate;
        std::set<std::vector<QuadraticInt>> cycles;
        bool residue_failure = false;
        bool unknown = false;

        auto run = [&](const QuadraticInt& start) {
            ++report.witnesses;
            std::vector<QuadraticInt> path;
            std::map<QuadraticInt, std::size_t> on_path;
            QuadraticInt z = start;
            Fate result = Fate::zero;
            while (true) {
                if (z.is_zero()) {
                    result = Fate::zero;
                    break;
                }
                if (const auto it = fate.find(z); it != fate.end()) {
                    result = it->second;
                    break;
                }
                if (const auto it = on_path.find(z); it != on_path.end()) {
                    cycles.insert(rotate_to_least({path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end()}));
                    result = Fate::failed;
                    break;
                }
                if (path.size() >= step_cap) {
                    result = Fate::unknown;
                    unknown = true;
                    break;
                }
                on_path.emplace(z, path.size());
                path.push_back(z);
                try {
                    z = extract_digit(z, ring).rest;
                } catch (const NoResidueDigit&) {
                    residue_failure = true;
                    result = Fate::failed;
                    break;
                }
            }
            for (const auto& p : path) {
                fate.emplace(p, result);
            }
            if (result != Fate::zero) {
                ++report.failure_count;
                if (report.witness_failures.size() < ValidationReport::kFailureSample) {
                    report.witness_failures.push_back(start);
                }
            }
        };

        // Shells of growing max(|a|, |b|), so small counterexamples come first.
        run(QuadraticInt(0, 0));
        for (std::int64_t s = 1; s <= effective; ++s) {
            if (degenerate) {
                run(QuadraticInt(s, std::int64_t{0}));
                run(QuadraticInt(-s, std::int64_t{0}));
                continue;
            }
            for (std::int64_t t = -s; t <= s; ++t) {
                run(QuadraticInt(s, t));
                run(QuadraticInt(-s, t));
                if (t != -s && t != s) {
                    run(QuadraticInt(t, s));
                    run(QuadraticInt(t, -s));
                }
            }
        }

        report.attractor_cycles.assign(cycles.begin(), cycles.end());
        if (!cycles.empty() || residue_failure) {
            report.verdict = Verdict::invalid;
        } else if (unknown || !report.absorbing_radius) {
            report.verdict = Verdict::inconclusive;
        } else {
            report.verdict = Verdict::valid;
        }
        return report;
    }

    ValidationReport attractor_test(const SystemBinding& binding, std::int64_t bound) {
        auto report = attractor_test(binding.ring(), bound, binding.name());
        report.consistency = hold_identity_failures(binding.system(), binding.ring()).empty();
        return report;
    }

    // ---- quadratic generator search ----

    std::int64_t squarefree_part(std::int64_t d) {
        if (d == 0) {
            throw std::invalid_argument("squarefree_part: zero");
        }
        const std::int64_t sign = d < 0 ? -1 : 1;
        std::int64_t m = d < 0 ? -d : d;
        std::int64_t result = 1;
        for (std::int64_t p = 2; p * p <= m; ++p) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e % 2 == 1) {
                result *= p;
            }
        }
        return sign * result * m;
    }

    std::string quadratic_label(std::int64_t trace, std::int64_t norm) {
        const std::int64_t disc = trace * trace - 4 * norm;
        std::ostringstream out;
        if (trace % 2 == 0) {
            const std::int64_t half = trace / 2;
            if (half != 0) {
                out << half << '+';
            }
            out << "sqrt(" << disc / 4 << ')';
        } else {
            out << '(' << trace << "+sqrt(" << disc << "))/2";
        }
        return out.str();
    }

    std::vector<std::int64_t> SearchResult::fields() const {
        std::set<std::int64_t> distinct;
        for (const auto& g : generators) {
            distinct.insert(g.field);
        }
        return {distinct.begin(), distinct.end()};
    }

    SearchResult search_quadratic(int n, std::int64_t bound) {
        if (n != 1 && n != 2) {
            throw std::invalid_argument("search_quadratic: n must be 1 or 2");
        }
        const std::int64_t c = n + 1;
        const QuadraticInt root = n == 1 ? QuadraticInt(1, 0) : QuadraticInt(-1, 0);
        SearchResult result;

        auto consider = [&](Realization ring, std::int64_t trace, std::int64_t norm, bool rational, std::string label,
                            std::int64_t field) {
            const auto report = attractor_test(ring, bound, label);
            if (report.verdict == Verdict::valid) {
                auto system = derive_system(ring, label);
                result.generators.push_back(QuadraticGenerator{trace, norm, rational, field, std::move(label),
                                                               std::move(ring), std::move(system)});
            } else {
                result.rejected.push_back(RejectedCandidate{trace, norm, rational, std::move(label), report.verdict});
            }
        };

        for (const std::int64_t x : {-c, c}) {
            consider(Realization(QuadraticOrder::integers(), QuadraticInt(x, std::int64_t{0}), root, n), x, 0, true,
                     std::to_string(x), 1);
        }
        for (std::int64_t b = -2 * c; b <= 2 * c; ++b) {
            if (b * b >= 4 * c) {
                continue;
            }
            const std::string label = quadratic_label(b, c);
            QuadraticOrder order(b, c, "x^2-(" + std::to_string(b) + ")x+" + std::to_string(c));
            consider(Realization(order, QuadraticInt(0, 1), root, n), b, c, false, label,
                     squarefree_part(b * b - 4 * c));
        }
        if (n % 2 == 0) {
            // X and -X give equivalent systems; keep the trace >= 0 one.
            std::erase_if(result.generators, [&](const QuadraticGenerator& g) {
                return g.trace < 0 && std::any_of(result.generators.begin(), result.generators.end(),
                                                  [&](const QuadraticGenerator& h) {
                                                      return h.rational == g.rational && h.trace == -g.trace;
                                                  });
            });
        }
        return result;
    }

    // ---- negabinary ----

    std::vector<DegreeRow> degree_table(std::size_t d_max) {
        if (d_max > 24) {
            throw std::invalid_argument("degree_table: d_max must be at most 24");
        }
        std::vector<DegreeRow> rows;
        for (std::size_t d = 0; d <= d_max; ++d) {
            std::int64_t lo = 0;
            std::int64_t hi = 0;
            bool first = true;
            // strings of exact degree d: top digit 1 (or the empty string for d = 0)
            const std::uint64_t count = std::uint64_t{1} << d;
            for (std::uint64_t low = 0; low < count; ++low) {
                const std::uint64_t bits = d == 0 ? low : (low | (std::uint64_t{1} << d));
                for (std::uint64_t variant = 0; variant < (d == 0 ? 2u : 1u); ++variant) {
                    const std::uint64_t b = d == 0 ? variant : bits;
                    std::int64_t value = 0;
                    std::int64_t power = 1;
                    for (std::size_t j = 0; j <= d; ++j) {
                        if ((b >> j) & 1u) {
                            value += power;
                        }
                        power *= -2;
                    }
                    if (first || value < lo) {
                        lo = value;
                    }
                    if (first || value > hi) {
                        hi = value;
                    }
                    first = false;
                }
            }
            rows.push_back({d, lo, hi});
        }
        return rows;
    }

    Rational negabinary_bound(unsigned n) {
        Integer p2 = 1;
        for (unsigned i = 0; i < n; ++i) {
            p2 *= -2;
        }
        const int p1 = n % 2 == 0 ? 1 : -1;
        return Rational(p2, 3) - Rational(p1, 2) + Rational(1, 6);
    }

    bool CumulativeRow::matches() const {
        const Rational lo = std::min(expected_low, expected_high);
        const Rational hi = std::max(expected_low, expected_high);
        return contiguous && Rational(min) == lo && Rational(max) == hi;
    }

    bool BoundsReport::ok() const {
        return violations.empty() &&
               std::all_of(cumulative.begin(), cumulative.end(), [](const CumulativeRow& r) { return r.matches(); });
    }

    double negabinary_degree_bound(std::int64_t z) noexcept {
        const double m = std::abs(static_cast<double>(z));
        return std::log2(3.0 * m + 2.0) + 1.0;
    }

    BoundsReport check_bounds(std::int64_t z_max, std::size_t d_max) {
        if (d_max > 24) {
            throw std::invalid_argument("check_bounds: d_max must be at most 24");
        }
        const auto binding = find_binding("neg2");
        if (!binding) {
            throw std::logic_error("check_bounds: neg2 missing from the catalog");
        }
        BoundsReport report;
        report.z_max = z_max;
        bool first = true;
        for (std::int64_t z = -z_max; z <= z_max; ++z) {
            if (z == 0) {
                continue;
            }
            const auto s = encode(QuadraticInt(z, std::int64_t{0}), binding->ring());
            const double degree = static_cast<double>(*s.degree());
            const double slack = negabinary_degree_bound(z) - degree;
            if (slack < 0.0) {
                report.violations.push_back(z);
            }
            report.min_slack = first ? slack : std::min(report.min_slack, slack);
            first = false;
            ++report.checked;
        }

        for (std::size_t d = 0; d <= d_max; ++d) {
            std::set<std::int64_t> values;
            const std::uint64_t count = std::uint64_t{1} << (d + 1);
            for (std::uint64_t bits = 0; bits < count; ++bits) {
                std::int64_t value = 0;
                std::int64_t power = 1;
                for (std::size_t j = 0; j <= d; ++j) {
                    if ((bits >> j) & 1u) {
                        value += power;
                    }
                    power *= -2;
                }
                values.insert(value);
            }
            CumulativeRow row;
            row.degree = d;
            row.min = *values.begin();
            row.max = *values.rbegin();
            row.distinct = values.size();
            row.contiguous = values.size() == count && static_cast<std::uint64_t>(row.max - row.min + 1) == count;
            row.expected_low = negabinary_bound(static_cast<unsigned>(d + 1));
            row.expected_high = negabinary_bound(static_cast<unsigned>(d + 2));
            report.cumulative.push_back(std::move(row));
        }
        return report;
    }

    // ---- plus-one growth ----

    DigitString random_digit_string(const NumberSystem& sys, std::size_t max_degree, std::mt19937_64& rng) {
        const int n = sys.order();
        std::uniform_int_distribution<std::size_t> degree_dist(0, max_degree);
        std::uniform_int_distribution<int> any_digit(-1, n - 1);
        std::uniform_int_distribution<int> nonzero_digit(0, n - 1);
        const std::size_t degree = degree_dist(rng);
        std::vector<Digit> digits(degree + 1);
        for (std::size_t j = 0; j < degree; ++j) {
            const int e = any_digit(rng);
            digits[j] = e < 0 ? Digit::zero() : Digit::root(e, n);
        }
        digits[degree] = Digit::root(nonzero_digit(rng), n);
        return DigitString(std::move(digits));
    }

    GrowthReport plus_one_growth(const NumberSystem& sys, std::size_t trials, std::size_t max_degree, std::uint64_t seed,
                                 std::optional<std::size_t> allowed_growth, bool side_condition) {
        GrowthReport report;
        report.trials = trials;
        report.allowed_growth = allowed_growth;
        std::mt19937_64 rng(seed);
        const DigitString one{Digit::root(0, sys.order())};
        constexpr std::size_t kSample = 16;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto z = random_digit_string(sys, max_degree, rng);
            const auto sum = add(z, one, sys);
            if (sum.empty()) {
                continue;
            }
            const auto d = static_cast<std::int64_t>(*z.degree());
            const auto growth = static_cast<std::int64_t>(*sum.degree()) - d;
            report.max_growth = report.max_growth ? std::max(*report.max_growth, growth) : growth;
            bool bad = false;
            if (allowed_growth && growth > static_cast<std::int64_t>(*allowed_growth)) {
                ++report.growth_violations;
                bad = true;
            }
            if (side_condition && growth == 2) {
                const Digit top = sum[static_cast<std::size_t>(d + 2)];
                const Digit below = sum[static_cast<std::size_t>(d + 1)];
                if (!below.is_zero() && below == top) {
                    ++report.side_condition_violations;
                    bad = true;
                }
            }
            if (bad && report.counterexamples.size() < kSample) {
                report.counterexamples.push_back(z);
            }
        }
        return report;
    }

    std::optional<GrowthProfile> known_growth_profile(std::string_view system_name) {
        if (system_name == "q11") {
            return GrowthProfile{2, true};
        }
        if (system_name == "one-plus-sqrt-2") {
            return GrowthProfile{3, false};
        }
        return std::nullopt;
    }

} // namespace holdring
