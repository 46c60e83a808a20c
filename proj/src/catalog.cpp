#include <holdring/catalog.hpp>
#include <holdring/error.hpp>
#include <holdring/text.hpp>

#include <stdexcept>

namespace holdring {

    namespace {

        SystemBinding bind(std::string name, int n, std::vector<DigitString> holds, Realization ring) {
            const auto embedding = ring.order().to_complex(ring.generator());
            return SystemBinding(NumberSystem(std::move(name), n, std::move(holds), embedding), std::move(ring));
        }

        std::vector<SystemBinding> build_catalog() {
            const QuadraticOrder z = QuadraticOrder::integers();
            const QuadraticOrder gaussian(0, 1, "Z[i], w = i");
            const QuadraticOrder root_minus_two(0, 2, "Z[sqrt(-2)], w = sqrt(-2)");
            const QuadraticOrder seven(-1, 2, "O(Q(sqrt(-7))), w = (-1+sqrt(-7))/2");
            const QuadraticOrder eleven(1, 3, "O(Q(sqrt(-11))), w = (1+sqrt(-11))/2");
            const QuadraticOrder root_minus_three(0, 3, "Z[sqrt(-3)], w = sqrt(-3)");
            const QuadraticOrder eisenstein(-1, 1, "Z[j], w = j = (-1+sqrt(-3))/2");

            std::vector<SystemBinding> out;
            // Over S (digits {0, 1}).
            out.push_back(bind("neg2", 1, {from_values({0, 1, 1}, 1)}, Realization(z, {-2, 0}, {1, 0}, 1)));
            out.push_back(
                bind("gauss", 1, {from_values({0, 0, 1, 1}, 1)}, Realization(gaussian, {-1, 1}, {1, 0}, 1)));
            out.push_back(bind("sqrt-2", 1, {from_values({0, 0, 1, 0, 1}, 1)},
                               Realization(root_minus_two, {0, 1}, {1, 0}, 1)));
            out.push_back(bind("q7", 1, {from_values({0, 1, 0, 1}, 1)}, Realization(seven, {0, 1}, {1, 0}, 1)));
            // Over S[+-1] (digits {-1, 0, 1}); holds[1] is h(-1) = 0.
            out.push_back(bind("ternary", 2, {from_values({-1, 1}, 2), {}}, Realization(z, {3, 0}, {-1, 0}, 2)));
            out.push_back(
                bind("q11", 2, {from_values({-1, 1, -1}, 2), {}}, Realization(eleven, {0, 1}, {-1, 0}, 2)));
            out.push_back(bind("sqrt-3", 2, {from_values({-1, 0, -1}, 2), {}},
                               Realization(root_minus_three, {0, 1}, {-1, 0}, 2)));
            out.push_back(bind("one-plus-sqrt-2", 2, {from_values({-1, -1, 1, -1}, 2), {}},
                               Realization(root_minus_two, {1, 1}, {-1, 0}, 2)));
            // mu_3 in Z[j]: w^1 = j, w^2 = j^2.
            out.push_back(bind("mu3", 3,
                               {from_exponents({-1, 0, 0}, 3), from_exponents({2, 2}, 3), from_exponents({1, 1}, 3)},
                               Realization(eisenstein, {-2, 0}, {0, 1}, 3)));
            // mu_4 in Z[i]: w^1 = i, w^2 = -1, w^3 = -i.
            out.push_back(bind("mu4", 4,
                               {from_exponents({1, 3}, 4), from_exponents({3, 0}, 4), {}, from_exponents({2, 3}, 4)},
                               Realization(gaussian, {1, 2}, {0, 1}, 4)));
            // mu_6 in Z[j]: w = -j^2 = 1 + j, so w^2 = j, w^3 = -1, w^4 = j^2, w^5 = -j.
            out.push_back(bind("mu6", 6,
                               {from_exponents({2, 0}, 6), from_exponents({4, 1}, 6), from_exponents({1}, 6), {},
                                from_exponents({5}, 6), from_exponents({3, 0}, 6)},
                               Realization(eisenstein, {2, -1}, {1, 1}, 6)));
            return out;
        }

    } // namespace

    const std::vector<SystemBinding>& catalog() {
        static const std::vector<SystemBinding> bindings = build_catalog();
        return bindings;
    }

    NumberSystem finite_field_system(int q) {
        switch (q) {
        case 2:
            return NumberSystem("f2", 1, {DigitString{}});
        case 3:
            return NumberSystem("f3", 2, {from_values({-1}, 2), {}});
        case 4:
            // F_4 = {0, 1, g, g^2} with g^2 = g + 1, w^k <-> g^k.
            return NumberSystem("f4", 3, {DigitString{}, from_exponents({2}, 3), from_exponents({1}, 3)});
        default:
            throw std::invalid_argument("finite_field_system: q must be 2, 3 or 4");
        }
    }

    std::vector<NumberSystem> catalog_systems() {
        std::vector<NumberSystem> out;
        for (const auto& b : catalog()) {
            out.push_back(b.system());
        }
        for (const int q : {2, 3, 4}) {
            out.push_back(finite_field_system(q));
        }
        return out;
    }

    const SystemBinding& pseudo_binding() {
        static const SystemBinding binding = [] {
            const QuadraticOrder order(-1, -3, "Z[w], w^2 = 3 - w, w = (-1-sqrt(13))/2", -1);
            return bind("pseudo", 2, {from_values({-1, 1, 1}, 2), {}}, Realization(order, {0, 1}, {-1, 0}, 2));
        }();
        return binding;
    }

    const SystemBinding& binary_binding() {
        static const SystemBinding binding =
            bind("binary", 1, {from_values({0, 1}, 1)}, Realization(QuadraticOrder::integers(), {2, 0}, {1, 0}, 1));
        return binding;
    }

    std::optional<SystemBinding> find_binding(std::string_view name) {
        for (const auto& b : catalog()) {
            if (b.name() == name) {
                return b;
            }
        }
        if (name == "pseudo") {
            return pseudo_binding();
        }
        if (name == "binary") {
            return binary_binding();
        }
        return std::nullopt;
    }

    std::optional<NumberSystem> find_system(std::string_view name) {
        if (auto b = find_binding(name)) {
            return b->system();
        }
        for (const int q : {2, 3, 4}) {
            auto sys = finite_field_system(q);
            if (sys.name() == name) {
                return sys;
            }
        }
        return std::nullopt;
    }

} // namespace holdring
