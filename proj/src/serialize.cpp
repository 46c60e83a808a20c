#include <holdring/error.hpp>
#include <holdring/serialize.hpp>
#include <holdring/text.hpp>

#include <fstream>
#include <string>

namespace holdring {

    using nlohmann::json;

    namespace {

        json digit_tokens(const DigitString& s, int n) {
            json out = json::array();
            for (const Digit d : s.digits()) {
                if (n <= 2) {
                    out.push_back(d.is_zero() ? 0 : (d.exponent() == 0 ? 1 : -1));
                } else {
                    out.push_back(format_digit(d, n));
                }
            }
            return out;
        }

        Digit token_digit(const json& token, int n) {
            if (token.is_number_integer()) {
                return parse_digit(std::to_string(token.get<int>()), n);
            }
            if (token.is_string()) {
                return parse_digit(token.get<std::string>(), n);
            }
            throw ParseError("digit token must be an integer or a string");
        }

        json element_json(const QuadraticInt& x) { return json::array({x.a.str(), x.b.str()}); }

        QuadraticInt element_from(const json& j) {
            if (!j.is_array() || j.size() != 2) {
                throw ParseError("element must be a two-entry array [a, b]");
            }
            const auto part = [](const json& v) {
                return v.is_string() ? parse_integer(v.get<std::string>()) : Integer(v.get<std::int64_t>());
            };
            return {part(j[0]), part(j[1])};
        }

    } // namespace

    json to_json(const NumberSystem& sys) {
        json holds = json::object();
        for (int e = 0; e < sys.order(); ++e) {
            holds[std::to_string(e)] = digit_tokens(sys.holds()[static_cast<std::size_t>(e)], sys.order());
        }
        json out = {{"name", sys.name()}, {"n", sys.order()}, {"hold", holds}};
        if (sys.embedding()) {
            out["embedding"] = {{"re", sys.embedding()->real()}, {"im", sys.embedding()->imag()}};
        }
        return out;
    }

    json to_json(const QuadraticOrder& order) {
        if (order.degenerate()) {
            return {{"degenerate", true}, {"description", order.description()}};
        }
        return {{"degenerate", false},
                {"t", order.trace()},
                {"c", order.norm_of_w()},
                {"branch", order.branch()},
                {"description", order.description()}};
    }

    json to_json(const SystemBinding& binding) {
        json out = to_json(binding.system());
        const Realization& ring = binding.ring();
        out["binding"] = {{"order", to_json(ring.order())},
                          {"x", element_json(ring.generator())},
                          {"root", element_json(ring.iota(Digit::root(1, ring.digit_order())))}};
        return out;
    }

    NumberSystem system_from_json(const json& j) {
        try {
            const int n = j.at("n").get<int>();
            std::vector<DigitString> holds(static_cast<std::size_t>(std::max(n, 0)));
            const json& table = j.at("hold");
            for (auto it = table.begin(); it != table.end(); ++it) {
                const int e = std::stoi(it.key());
                if (e < 0 || e >= n) {
                    throw ParseError("hold exponent " + it.key() + " outside [0, n)");
                }
                std::vector<Digit> digits;
                for (const json& token : it.value()) {
                    digits.push_back(token_digit(token, n));
                }
                holds[static_cast<std::size_t>(e)] = DigitString(std::move(digits));
            }
            std::optional<std::complex<double>> embedding;
            if (j.contains("embedding")) {
                embedding = std::complex<double>(j["embedding"].at("re").get<double>(),
                                                 j["embedding"].value("im", 0.0));
            }
            return NumberSystem(j.at("name").get<std::string>(), n, std::move(holds), embedding);
        } catch (const json::exception& e) {
            throw ParseError(std::string("system JSON: ") + e.what());
        }
    }

    std::optional<SystemBinding> binding_from_json(const json& j) {
        NumberSystem sys = system_from_json(j);
        if (!j.contains("binding")) {
            return std::nullopt;
        }
        try {
            const json& b = j["binding"];
            const json& o = b.at("order");
            QuadraticOrder order = o.value("degenerate", false)
                                       ? QuadraticOrder::integers()
                                       : QuadraticOrder(o.at("t").get<std::int64_t>(), o.at("c").get<std::int64_t>(),
                                                        o.value("description", std::string{}), o.value("branch", 1));
            Realization ring(std::move(order), element_from(b.at("x")), element_from(b.at("root")), sys.order());
            if (!sys.embedding()) {
                sys = NumberSystem(sys.name(), sys.order(), std::vector<DigitString>(sys.holds().begin(), sys.holds().end()),
                                   ring.order().to_complex(ring.generator()));
            }
            return SystemBinding(std::move(sys), std::move(ring));
        } catch (const json::exception& e) {
            throw ParseError(std::string("binding JSON: ") + e.what());
        }
    }

    std::vector<CatalogEntry> load_catalog_file(std::string_view path) {
        std::ifstream in{std::string(path)};
        if (!in) {
            throw IoError("cannot open catalog file '" + std::string(path) + "'");
        }
        json doc;
        try {
            in >> doc;
        } catch (const json::exception& e) {
            throw ParseError(std::string("catalog file: ") + e.what());
        }
        std::vector<CatalogEntry> out;
        const auto add_entry = [&](const json& item) {
            auto binding = binding_from_json(item);
            NumberSystem sys = binding ? binding->system() : system_from_json(item);
            out.push_back(CatalogEntry{std::move(sys), std::move(binding)});
        };
        if (doc.is_array()) {
            for (const json& item : doc) {
                add_entry(item);
            }
        } else {
            add_entry(doc);
        }
        return out;
    }

} // namespace holdring
