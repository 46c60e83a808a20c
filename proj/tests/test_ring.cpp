#include "oracles.hpp"
#include "support.hpp"

#include <holdring/carry.hpp>
#include <holdring/error.hpp>
#include <holdring/ring.hpp>

#include <set>

using namespace holdring;
using support::bind;
using support::e;
using support::v;

TEST_SUITE("quadratic") {
    TEST_CASE("multiplication matches 128-bit oracle arithmetic") {
        std::mt19937_64 rng(2);
        std::uniform_int_distribution<int> coef(-1000, 1000);
        for (const auto& b : catalog()) {
            const auto& order = b.ring().order();
            const oracle::Ring ring(b.ring());
            for (int trial = 0; trial < 200; ++trial) {
                const QuadraticInt x(coef(rng), order.degenerate() ? 0 : coef(rng));
                const QuadraticInt y(coef(rng), order.degenerate() ? 0 : coef(rng));
                CHECK(oracle::same(ring.mul(oracle::from(x), oracle::from(y)), order.mul(x, y)));
                CHECK(order.norm(order.mul(x, y)) == order.norm(x) * order.norm(y));
                if (!order.degenerate()) {
                    CHECK(order.mul(x, order.conj(x)) == QuadraticInt(order.norm(x), 0));
                }
                if (!y.is_zero()) {
                    const auto q = order.divide(order.mul(x, y), y);
                    REQUIRE(q.has_value());
                    CHECK(*q == x);
                }
            }
        }
    }

    TEST_CASE("norm, index and powers") {
        const QuadraticOrder gauss(0, 1, "Z[i]");
        CHECK(gauss.norm(QuadraticInt(-1, 1)) == 2);
        CHECK(gauss.pow(QuadraticInt(0, 1), 4) == QuadraticInt(1, 0));
        CHECK(QuadraticOrder::integers().index(QuadraticInt(-2, 0)) == 2);
        CHECK(gauss.discriminant() == -4);
        CHECK(std::abs(gauss.w() - std::complex<double>(0, 1)) < 1e-12);
        CHECK_FALSE(gauss.divide(QuadraticInt(1, 0), QuadraticInt(1, 1)).has_value());
    }
}

TEST_SUITE("ring") {
    TEST_CASE("eval_sigma examples") {
        CHECK(eval_sigma({}, bind("neg2").ring()).is_zero());
        CHECK(eval_sigma(v({1, 1, 1}, 1), bind("neg2").ring()) == QuadraticInt(3, 0));
        CHECK(eval_sigma(v({1, 1}, 1), bind("gauss").ring()) == QuadraticInt(0, 1));
    }

    TEST_CASE("residue_digit examples") {
        CHECK(residue_digit(QuadraticInt(0, 0), bind("ternary").ring()).is_zero());
        CHECK(residue_digit(QuadraticInt(5, 0), bind("ternary").ring()) == Digit::root(1, 2));
        CHECK(residue_digit(QuadraticInt(0, 1), bind("gauss").ring()) == Digit::root(0, 1));
        // Z with X = 4 and digits {0, 1}: 2 and 3 have no residue digit
        const Realization four(QuadraticOrder::integers(), QuadraticInt(4, 0), QuadraticInt(1, 0), 1);
        CHECK_THROWS_AS((void)residue_digit(QuadraticInt(2, 0), four), NoResidueDigit);
    }

    TEST_CASE("div_by_X_exact examples") {
        CHECK(div_by_X_exact(QuadraticInt(6, 0), bind("neg2").ring()) == QuadraticInt(-3, 0));
        CHECK(div_by_X_exact(QuadraticInt(-3, 1), bind("sqrt-3").ring()) == QuadraticInt(1, 1));
        // q7: w^2 = -w - 2, so 2 = w * (-1 - w)
        CHECK(div_by_X_exact(QuadraticInt(2, 0), bind("q7").ring()) == QuadraticInt(-1, -1));
        CHECK_THROWS_AS((void)div_by_X_exact(QuadraticInt(1, 0), bind("neg2").ring()), NotDivisible);
    }

    TEST_CASE("encode examples") {
        CHECK(encode(QuadraticInt(5, 0), bind("neg2").ring()) == v({1, 0, 1}, 1));
        CHECK(encode(QuadraticInt(-2, 0), bind("neg2").ring()) == v({0, 1}, 1));
        CHECK(encode(QuadraticInt(2, 0), bind("ternary").ring()) == v({-1, 1}, 2));
        CHECK(encode(QuadraticInt(0, 0), bind("mu6").ring()).empty());
        CHECK_THROWS_AS((void)encode(QuadraticInt(5, 0), pseudo_binding().ring()), NonTerminating);
        CHECK_THROWS_AS((void)encode(QuadraticInt(-1, 0), binary_binding().ring()), NonTerminating);
        CHECK_THROWS_AS((void)encode(QuadraticInt(1000, 0), bind("neg2").ring(), 3), NonTerminating);
    }

    TEST_CASE("encode cap default") {
        const auto& r = bind("neg2").ring();
        // ceil(log2(1025)) + 16
        CHECK(default_encode_cap(QuadraticInt(1024, 0), r) == 11 + 16);
        CHECK(default_encode_cap(QuadraticInt(0, 0), r) == 16);
    }

    TEST_CASE("round trip encode then eval_sigma for |a|, |b| <= 200") {
        for (const auto& b : catalog()) {
            CAPTURE(b.name());
            const auto& r = b.ring();
            const oracle::Ring ring(r);
            const int bmax = r.order().degenerate() ? 0 : 200;
            std::size_t bad = 0;
            for (int a = -200; a <= 200; ++a) {
                for (int c = -bmax; c <= bmax; ++c) {
                    const QuadraticInt z(a, c);
                    const auto s = encode(z, r);
                    if (!(ring.eval(s) == oracle::Elem{a, c})) {
                        ++bad;
                    }
                }
            }
            CHECK(bad == 0);
        }
    }

    TEST_CASE("digit arithmetic is a homomorphism into each ring") {
        std::mt19937_64 rng(99);
        for (const auto& b : catalog()) {
            CAPTURE(b.name());
            const auto& s = b.system();
            const oracle::Ring ring(b.ring());
            for (int trial = 0; trial < 300; ++trial) {
                const auto x = oracle::random_string(s.order(), 10, rng);
                const auto y = oracle::random_string(s.order(), 10, rng);
                CHECK(ring.eval(add(x, y, s)) == ring.add(ring.eval(x), ring.eval(y)));
                CHECK(ring.eval(mul(x, y, s)) == ring.mul(ring.eval(x), ring.eval(y)));
            }
        }
    }

    TEST_CASE("sigma is injective on bounded degree") {
        for (const auto& b : catalog()) {
            CAPTURE(b.name());
            const int n = b.system().order();
            const std::size_t d = n == 1 ? 8 : (n == 2 ? 5 : 4);
            const oracle::Ring ring(b.ring());
            std::set<oracle::Elem> values;
            const auto strings = oracle::all_strings(n, d);
            for (const auto& s : strings) {
                values.insert(ring.eval(s));
            }
            CHECK(values.size() == strings.size());
            CHECK(strings.size() == oracle::ipow(static_cast<std::uint64_t>(n + 1), static_cast<unsigned>(d + 1)));
        }
    }

    TEST_CASE("negabinary strings of degree d have sign (-1)^d") {
        const oracle::Ring ring(bind("neg2").ring());
        for (const auto& s : oracle::all_strings(1, 12)) {
            if (s.empty()) {
                continue;
            }
            const auto value = ring.eval(s).a;
            CHECK(((*s.degree() % 2 == 0) ? value > 0 : value < 0));
        }
    }

    TEST_CASE("catalog contents") {
        const std::vector<std::string> names{"neg2", "gauss", "sqrt-2", "q7", "ternary", "q11",
                                             "sqrt-3", "one-plus-sqrt-2", "mu3", "mu4", "mu6"};
        REQUIRE(catalog().size() == names.size());
        for (std::size_t i = 0; i < names.size(); ++i) {
            CHECK(catalog()[i].name() == names[i]);
        }
        const auto h = [](std::string_view name, int ex) { return support::sys(name).hold(Digit::root(ex, support::sys(name).order())); };
        CHECK(h("neg2", 0) == v({0, 1, 1}, 1));
        CHECK(h("gauss", 0) == v({0, 0, 1, 1}, 1));
        CHECK(h("sqrt-2", 0) == v({0, 0, 1, 0, 1}, 1));
        CHECK(h("q7", 0) == v({0, 1, 0, 1}, 1));
        CHECK(h("ternary", 0) == v({-1, 1}, 2));
        CHECK(h("q11", 0) == v({-1, 1, -1}, 2));
        CHECK(h("sqrt-3", 0) == v({-1, 0, -1}, 2));
        CHECK(h("one-plus-sqrt-2", 0) == v({-1, -1, 1, -1}, 2));
        CHECK(h("mu3", 0) == e({-1, 0, 0}, 3));
        CHECK(h("mu3", 1) == e({2, 2}, 3));
        CHECK(h("mu3", 2) == e({1, 1}, 3));
        CHECK(h("mu4", 0) == e({1, 3}, 4));
        CHECK(h("mu4", 1) == e({3, 0}, 4));
        CHECK(h("mu4", 2).empty());
        CHECK(h("mu4", 3) == e({2, 3}, 4));
        // mu6 digits are powers of -j^2: w^0 = 1, w^1 = -j^2, w^2 = j, w^3 = -1, w^4 = j^2, w^5 = -j
        CHECK(h("mu6", 0) == e({2, 0}, 6));
        CHECK(h("mu6", 2) == e({1}, 6));
        CHECK(h("mu6", 4) == e({5}, 6));
        CHECK(h("mu6", 5) == e({3, 0}, 6));
        CHECK(h("mu6", 1) == e({4, 1}, 6));
        CHECK(h("mu6", 3).empty());
        CHECK(bind("mu6").ring().iota(Digit::root(2, 6)) == QuadraticInt(0, 1));
    }

    TEST_CASE("every binding satisfies the hold identity and |N(X)| = n + 1") {
        for (const auto& b : catalog()) {
            CAPTURE(b.name());
            CHECK(hold_identity_failures(b.system(), b.ring()).empty());
            CHECK(b.ring().order().index(b.ring().generator()) == b.system().order() + 1);
            CHECK(derive_system(b.ring(), b.name()) == b.system());
        }
        for (const int q : {2, 3, 4}) {
            CHECK(finite_field_system(q).order() == q - 1);
        }
    }

    TEST_CASE("bindings reject a wrong hold or a wrong index") {
        const auto& t = bind("ternary");
        CHECK_THROWS_AS(SystemBinding(NumberSystem("x", 2, {v({-1, -1}, 2), {}}), t.ring()), InvalidSystem);
        const Realization five(QuadraticOrder::integers(), QuadraticInt(5, 0), QuadraticInt(-1, 0), 2);
        CHECK_THROWS_AS(SystemBinding(t.system(), five), InvalidSystem);
        CHECK_THROWS(Realization(QuadraticOrder::integers(), QuadraticInt(3, 0), QuadraticInt(1, 0), 2));
    }
}
