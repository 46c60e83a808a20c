// include/holdring/serialize.hpp: JSON form of number systems and bindings.
//
//   {"name": "...", "n": 2, "hold": {"0": [-1, 1], "1": []},
//    "embedding": {"re": 3.0, "im": 0.0},
//    "binding": {"order": {"degenerate": false, "t": 1, "c": 3, "branch": 1},
//                "x": ["0", "1"], "root": ["-1", "0"]}}
//
// "embedding" and "binding" are optional. Hold keys are exponents; digits
// follow the text.hpp token rules. Integers inside "binding" are decimal
// strings so that they survive arbitrary size.

#pragma once

#include <holdring/number_system.hpp>
#include <holdring/ring.hpp>

#include <json.hpp>

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace holdring {

    [[nodiscard]] nlohmann::json to_json(const NumberSystem& sys);
    [[nodiscard]] nlohmann::json to_json(const SystemBinding& binding);
    [[nodiscard]] nlohmann::json to_json(const QuadraticOrder& order);

    [[nodiscard]] NumberSystem system_from_json(const nlohmann::json& j);
    /// Binding if the object carries a "binding" member, otherwise nullopt.
    [[nodiscard]] std::optional<SystemBinding> binding_from_json(const nlohmann::json& j);

    /// A catalog file is either one system object or an array of them.
    struct CatalogEntry {
        NumberSystem system;
        std::optional<SystemBinding> binding;
    };
    [[nodiscard]] std::vector<CatalogEntry> load_catalog_file(std::string_view path);

} // namespace holdring
