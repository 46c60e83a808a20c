// include/holdring/catalog.hpp: the built-in number systems.

#pragma once

#include <holdring/number_system.hpp>
#include <holdring/ring.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace holdring {

    /// Every built-in binding; each was checked against its hold identity on
    /// construction.
    [[nodiscard]] const std::vector<SystemBinding>& catalog();

    /// Carry-free systems of F_q[X], q in {2, 3, 4}; hold(xi) is the digit of
    /// xi + 1 in F_q. They have no quadratic realization.
    [[nodiscard]] NumberSystem finite_field_system(int q);

    /// All built-in systems: the bindings' systems followed by f2, f3, f4.
    [[nodiscard]] std::vector<NumberSystem> catalog_systems();

    /// The hold -1 + X + X^2, realized in Z[w] with w^2 = 3 - w. Its hold
    /// identity holds, but 5 has no finite expansion.
    [[nodiscard]] const SystemBinding& pseudo_binding();

    /// (Z, 2) with digits {0, 1}: negative integers are unreachable.
    [[nodiscard]] const SystemBinding& binary_binding();

    /// Catalog bindings first, then "pseudo" and "binary".
    [[nodiscard]] std::optional<SystemBinding> find_binding(std::string_view name);
    [[nodiscard]] std::optional<NumberSystem> find_system(std::string_view name);

} // namespace holdring
