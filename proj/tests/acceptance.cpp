// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "cli.hpp"

#include <holdring/analysis.hpp>
#include <holdring/carry.hpp>
#include <holdring/catalog.hpp>
#include <holdring/error.hpp>
#include <holdring/quotient.hpp>
#include <holdring/render.hpp>
#include <holdring/ring.hpp>
#include <holdring/text.hpp>

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace holdring;

namespace {

    struct Outcome {
        bool pass = false;
        std::string detail;
    };

    struct Criterion {
        int id;
        std::string title;
        double time_limit_s;  // 0: none
        std::function<Outcome()> check;
    };

    const SystemBinding& by_name(std::string_view name) {
        for (const auto& b : catalog()) {
            if (b.name() == name) {
                return b;
            }
        }
        throw std::logic_error("missing binding");
    }

    std::string join(const std::vector<std::string>& parts) {
        std::string out;
        for (const auto& p : parts) {
            out += (out.empty() ? "" : "; ") + p;
        }
        return out;
    }

    Outcome degree_table_check() {
        std::ostringstream out, err;
        const int code = cli::run({"table", "--max", "6", "--json"}, out, err);
        const auto j = nlohmann::json::parse(out.str());
        const std::vector<std::pair<std::int64_t, std::int64_t>> expected{{0, 1},  {-2, -1},  {2, 5},  {-10, -3},
                                                                          {6, 21}, {-42, -11}, {22, 85}};
        bool ok = code == 0 && j.size() == expected.size();
        for (std::size_t i = 0; ok && i < expected.size(); ++i) {
            ok = j[i]["min"] == expected[i].first && j[i]["max"] == expected[i].second;
        }
        return {ok, "rows " + std::to_string(j.size())};
    }

    Outcome search_n1() {
        const auto r = search_quadratic(1, 60);
        std::set<std::string> labels;
        for (const auto& g : r.generators) {
            labels.insert(g.label);
        }
        const bool fields = r.fields() == std::vector<std::int64_t>{-7, -2, -1, 1};
        const bool stated = labels.count("-2") && labels.count("-1+sqrt(-1)") && labels.count("sqrt(-2)") &&
                            labels.count("(-1+sqrt(-7))/2");
        std::vector<std::string> l(labels.begin(), labels.end());
        return {fields && stated, "fields Q(i), Q(sqrt-2), Q(sqrt-7), Q; generators " + join(l)};
    }

    Outcome search_n2() {
        const auto r = search_quadratic(2, 60);
        std::set<std::string> labels;
        for (const auto& g : r.generators) {
            labels.insert(g.label);
        }
        std::set<std::int64_t> rejected_b3;
        for (const auto& c : r.rejected) {
            if (!c.rational && c.norm == 3 && (c.trace == 3 || c.trace == -3)) {
                rejected_b3.insert(c.trace);
            }
        }
        const bool ok = labels == std::set<std::string>{"3", "1+sqrt(-2)", "sqrt(-3)", "(1+sqrt(-11))/2"} &&
                        rejected_b3 == std::set<std::int64_t>{-3, 3};
        std::vector<std::string> l(labels.begin(), labels.end());
        return {ok, "generators " + join(l) + "; b=+-3 rejected: " + std::to_string(rejected_b3.size())};
    }

    Outcome five_in_pseudo() {
        const auto& p = pseudo_binding();
        bool nonterminating = false;
        try {
            (void)encode(QuadraticInt(5, 0), p.ring());
        } catch (const NonTerminating&) {
            nonterminating = true;
        }
        std::vector<std::string> bad;
        for (std::size_t m = 3; m <= 12; ++m) {
            const QuotientRing r(p.system(), m);
            const auto five = r.from_integer(5).digits();
            const auto d = five.degree();
            if (!d || *d != m - 1) {
                bad.push_back("m=" + std::to_string(m) + " has degree " + (d ? std::to_string(*d) : "-inf") +
                              " (digits " + format_digits(five, 2) + ")");
            }
        }
        std::string detail = std::string("encode(5) ") + (nonterminating ? "NonTerminating" : "terminated");
        detail += bad.empty() ? "; degree m-1 for all m in [3,12]" : "; " + join(bad);
        return {nonterminating && bad.empty(), detail};
    }

    Outcome hold_identity() {
        std::size_t failures = 0;
        for (const auto& b : catalog()) {
            const oracle::Ring ring(b.ring());
            const auto& s = b.system();
            for (int e = 0; e < s.order(); ++e) {
                const Digit xi = Digit::root(e, s.order());
                const auto lhs = ring.eval(s.hold(xi));
                const auto rhs = ring.add(ring.digit(xi), oracle::Elem{1, 0});
                failures += lhs == rhs ? 0 : 1;
                failures += eval_sigma(s.hold(xi), b.ring()) == b.ring().iota(xi) + QuadraticInt(1, 0) ? 0 : 1;
            }
        }
        return {failures == 0, std::to_string(catalog().size()) + " bindings, failures " + std::to_string(failures)};
    }

    Outcome oracle_equivalence() {
        std::size_t failures = 0;
        std::size_t pairs = 0;
        std::mt19937_64 rng(6);
        for (const auto& b : catalog()) {
            const auto& s = b.system();
            const oracle::Ring ring(b.ring());
            for (int i = 0; i < 10000; ++i) {
                const auto x = oracle::random_string(s.order(), 10, rng);
                const auto y = oracle::random_string(s.order(), 10, rng);
                const auto sx = eval_sigma(x, b.ring());
                const auto sy = eval_sigma(y, b.ring());
                const auto sum = add(x, y, s);
                const auto prod = mul(x, y, s);
                failures += eval_sigma(sum, b.ring()) == sx + sy ? 0 : 1;
                failures += eval_sigma(prod, b.ring()) == b.ring().order().mul(sx, sy) ? 0 : 1;
                failures += ring.eval(sum) == ring.add(ring.eval(x), ring.eval(y)) ? 0 : 1;
                failures += ring.eval(prod) == ring.mul(ring.eval(x), ring.eval(y)) ? 0 : 1;
                ++pairs;
            }
        }
        return {failures == 0, std::to_string(pairs) + " pairs, failures " + std::to_string(failures)};
    }

    Outcome uniqueness() {
        std::size_t collisions = 0;
        for (const auto& b : catalog()) {
            const int n = b.system().order();
            const std::size_t d = n == 1 ? 8 : (n == 2 ? 5 : 4);
            const oracle::Ring ring(b.ring());
            std::set<oracle::Elem> values;
            const auto strings = oracle::all_strings(n, d);
            for (const auto& s : strings) {
                values.insert(ring.eval(s));
            }
            collisions += strings.size() - values.size();
        }
        return {collisions == 0, "collisions " + std::to_string(collisions)};
    }

    Outcome quotient_structure() {
        std::vector<std::string> bad;
        std::size_t compared = 0;
        const auto expect = [&](const char* name, std::size_t m, const std::vector<std::uint64_t>& group) {
            ++compared;
            if (structure_probe(by_name(name).system(), m).order_histogram != oracle::group_histogram(group)) {
                bad.push_back(std::string(name) + " m=" + std::to_string(m));
            }
        };
        for (std::size_t m = 1; m <= 6; ++m) {
            expect("ternary", m, {oracle::ipow(3, static_cast<unsigned>(m))});
            expect("mu4", m, {oracle::ipow(5, static_cast<unsigned>(m))});
        }
        for (std::size_t m = 1; m <= 8; ++m) {
            expect("q7", m, {oracle::ipow(2, static_cast<unsigned>(m))});
            const auto k = static_cast<unsigned>(m / 2);
            expect("gauss", m, {oracle::ipow(2, m % 2 == 0 ? k : k + 1), oracle::ipow(2, k)});
        }
        for (std::size_t m = 1; m <= 5; ++m) {
            expect("mu6", m, {oracle::ipow(7, static_cast<unsigned>(m))});
        }
        return {bad.empty(), std::to_string(compared) + " signatures" + (bad.empty() ? "" : ", mismatched " + join(bad))};
    }

    Outcome plus_one() {
        const auto q11 = plus_one_growth(by_name("q11").system(), 10000, 12, 9, 2, true);
        const auto q2 = plus_one_growth(by_name("one-plus-sqrt-2").system(), 10000, 12, 9, 3, false);
        const bool ok = q11.growth_violations == 0 && q11.side_condition_violations == 0 && q2.growth_violations == 0;
        return {ok, "sqrt(-11): max growth " + std::to_string(q11.max_growth.value_or(-1)) + ", violations " +
                        std::to_string(q11.growth_violations + q11.side_condition_violations) +
                        "; 1+sqrt(-2): max growth " + std::to_string(q2.max_growth.value_or(-1)) + ", violations " +
                        std::to_string(q2.growth_violations)};
    }

    Outcome negabinary_bounds() {
        const auto r = check_bounds(10000, 12);
        std::size_t matching = 0;
        for (const auto& row : r.cumulative) {
            matching += row.matches() ? 1 : 0;
        }
        std::ostringstream s;
        s << r.checked << " integers, violations " << r.violations.size() << ", min slack " << r.min_slack
          << ", cumulative rows matching " << matching << "/" << r.cumulative.size();
        return {r.ok() && r.checked == 20000 && r.cumulative.size() == 13, s.str()};
    }

    Outcome projective_identity() {
        const auto& s = by_name("neg2").system();
        const DigitString one{Digit::root(0, 1)};
        const DigitString one_plus_x{Digit::root(0, 1), Digit::root(0, 1)};
        std::size_t bad = 0;
        for (std::size_t m = 1; m <= 20; ++m) {
            bad += add_mod(one, one_plus_x, m, s).empty() ? 0 : 1;
            bad += add_mod_faithful(one, one_plus_x, m, s).empty() ? 0 : 1;
        }
        return {bad == 0, "1+1+X = 0 mod X^m for m = 1..20, failures " + std::to_string(bad)};
    }

    std::string slurp(const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    Outcome figures() {
        const auto dir = std::filesystem::temp_directory_path() / "holdring_acceptance";
        std::filesystem::create_directories(dir);
        std::vector<std::string> bad;
        for (const auto& p : figure_presets()) {
            const auto& b = by_name(p.system);
            std::uint64_t expected = 1;
            for (std::size_t i = 0; i <= p.degree; ++i) {
                expected *= static_cast<std::uint64_t>(b.system().order() + 1);
            }
            std::string bytes[2];
            std::uint64_t points = 0;
            std::uint64_t collisions = 1;
            for (int run = 0; run < 2; ++run) {
                const auto path = dir / (p.id + "_" + std::to_string(run) + ".ppm");
                std::ostringstream out, err;
                const int code = cli::run({"tile", "--figure", p.id, "--out", path.string(), "--json"}, out, err);
                if (code != 0) {
                    bad.push_back(p.id + ": exit " + std::to_string(code));
                    break;
                }
                const auto j = nlohmann::json::parse(out.str());
                points = j["points"];
                collisions = j["collisions"];
                bytes[run] = slurp(path);
            }
            if (points != expected || collisions != 0 || bytes[0].empty() || bytes[0] != bytes[1]) {
                bad.push_back(p.id);
            }
        }
        std::filesystem::remove_all(dir);
        return {bad.empty(), std::to_string(figure_presets().size()) + " presets" +
                                 (bad.empty() ? ", counts and bytes match" : ", failed " + join(bad))};
    }

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "degree table, table --max 6", 1.0, degree_table_check},
        {2, "classification n=1", 30.0, search_n1},
        {3, "classification n=2", 60.0, search_n2},
        {4, "invalid hold -1+X+X^2: encode(5) and degree of 5 in R_m", 1.0, five_in_pseudo},
        {5, "hold identity for every catalog binding", 0.0, hold_identity},
        {6, "oracle equivalence of add and mul", 0.0, oracle_equivalence},
        {7, "uniqueness of sigma on bounded degree", 0.0, uniqueness},
        {8, "quotient additive structure", 0.0, quotient_structure},
        {9, "plus-one degree growth", 0.0, plus_one},
        {10, "negabinary degree bound and cumulative ranges", 0.0, negabinary_bounds},
        {11, "1+1+X = 0 in every R_m, m <= 20", 0.0, projective_identity},
        {12, "tile figures: counts and deterministic pixmaps", 0.0, figures},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += "; over time limit";
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "  [" << o.detail << "; "
                  << timing << (c.time_limit_s > 0 ? " < " + std::to_string(static_cast<int>(c.time_limit_s)) + "s" : "")
                  << "]\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
