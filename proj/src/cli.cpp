#include "cli.hpp"

#include <holdring/analysis.hpp>
#include <holdring/carry.hpp>
#include <holdring/catalog.hpp>
#include <holdring/error.hpp>
#include <holdring/quotient.hpp>
#include <holdring/render.hpp>
#include <holdring/serialize.hpp>
#include <holdring/text.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace holdring::cli {

    namespace {

        using nlohmann::json;

        // Bad user input that is not a flag-grammar error (unknown system, bad digit string).
        struct UsageError : std::runtime_error {
            using std::runtime_error::runtime_error;
        };

        struct Resolved {
            NumberSystem system;
            std::optional<SystemBinding> binding;
        };

        std::vector<CatalogEntry> external_catalog() {
            const char* path = std::getenv("HOLDRING_CATALOG");
            if (path == nullptr || *path == '\0') {
                return {};
            }
            return load_catalog_file(path);
        }

        Resolved resolve(const std::string& name) {
            for (auto& entry : external_catalog()) {
                if (entry.system.name() == name) {
                    return {std::move(entry.system), std::move(entry.binding)};
                }
            }
            if (auto b = find_binding(name)) {
                return {b->system(), std::move(b)};
            }
            if (auto s = find_system(name)) {
                return {std::move(*s), std::nullopt};
            }
            throw UsageError("unknown system '" + name + "' (see `holdring catalog`)");
        }

        const SystemBinding& require_binding(const Resolved& r) {
            if (!r.binding) {
                throw UsageError("system '" + r.system.name() + "' has no ring binding");
            }
            return *r.binding;
        }

        DigitString digits_arg(const std::string& text, const NumberSystem& sys) {
            try {
                return parse_digits(text, sys.order());
            } catch (const ParseError& e) {
                throw UsageError(e.what());
            }
        }

        QuadraticInt element_arg(const std::string& text, const QuadraticOrder& order) {
            try {
                return parse_element(text, order);
            } catch (const ParseError& e) {
                throw UsageError(e.what());
            }
        }

        json digits_json(const DigitString& s, int order) {
            json arr = json::array();
            for (const Digit d : s.digits()) {
                arr.push_back(format_digit(d, order));
            }
            return arr;
        }

        json element_json(const QuadraticInt& z) {
            return json::array({format_integer(z.a), format_integer(z.b)});
        }

        std::string field_label(std::int64_t d) {
            return d == 1 ? "Q" : "Q(sqrt(" + std::to_string(d) + "))";
        }

        struct Options {
            std::string system;
            bool as_json = false;
            std::optional<std::size_t> cap;
            std::uint64_t seed = 1;
        };

        void add_common(CLI::App* cmd, Options& o, bool needs_system) {
            auto* opt = cmd->add_option("--system", o.system, "system name from the catalog");
            if (needs_system) {
                opt->required();
            }
            cmd->add_flag("--json", o.as_json, "structured output");
            cmd->add_option("--cap", o.cap, "digit cap for untruncated operations");
            cmd->add_option("--seed", o.seed, "seed for randomized checks");
        }

        void print_validation(std::ostream& out, const ValidationReport& r, const NumberSystem* sys,
                              const QuadraticOrder& order, const std::optional<GrowthReport>& growth, bool as_json) {
            if (as_json) {
                json j;
                j["system"] = r.system;
                j["consistency"] = r.consistency;
                j["verdict"] = std::string(to_string(r.verdict));
                j["requested_bound"] = r.requested_bound;
                j["effective_bound"] = r.effective_bound;
                j["witnesses"] = r.witnesses;
                j["failure_count"] = r.failure_count;
                j["absorbing_radius"] = r.absorbing_radius ? json(*r.absorbing_radius) : json(nullptr);
                j["witness_failures"] = json::array();
                for (const auto& z : r.witness_failures) {
                    j["witness_failures"].push_back(element_json(z));
                }
                j["attractor_cycles"] = json::array();
                for (const auto& c : r.attractor_cycles) {
                    json cycle = json::array();
                    for (const auto& z : c) {
                        cycle.push_back(element_json(z));
                    }
                    j["attractor_cycles"].push_back(cycle);
                }
                if (growth) {
                    j["plus_one"] = {{"trials", growth->trials},
                                     {"max_growth", growth->max_growth ? json(*growth->max_growth) : json(nullptr)},
                                     {"allowed_growth",
                                      growth->allowed_growth ? json(*growth->allowed_growth) : json(nullptr)},
                                     {"growth_violations", growth->growth_violations},
                                     {"side_condition_violations", growth->side_condition_violations}};
                }
                out << j.dump(2) << '\n';
                return;
            }
            out << "system: " << r.system << '\n';
            out << "consistency: " << (r.consistency ? "ok" : "FAILED") << '\n';
            out << "witnesses: " << r.witnesses << " (bound " << r.requested_bound << ", effective "
                << r.effective_bound << ")\n";
            if (r.absorbing_radius) {
                out << "absorbing radius: " << std::setprecision(6) << *r.absorbing_radius << '\n';
            } else {
                out << "absorbing radius: none (X does not expand in every embedding)\n";
            }
            out << "failures: " << r.failure_count << '\n';
            const std::size_t shown = std::min<std::size_t>(r.witness_failures.size(), 8);
            for (std::size_t i = 0; i < shown; ++i) {
                out << "  " << format_element(r.witness_failures[i], order) << '\n';
            }
            out << "cycles: " << r.attractor_cycles.size() << '\n';
            for (const auto& c : r.attractor_cycles) {
                out << " ";
                for (const auto& z : c) {
                    out << ' ' << format_element(z, order) << " ->";
                }
                out << ' ' << format_element(c.front(), order) << '\n';
            }
            if (growth && sys) {
                out << "plus-one growth: max "
                    << (growth->max_growth ? std::to_string(*growth->max_growth) : std::string("-inf"));
                if (growth->allowed_growth) {
                    out << " (allowed " << *growth->allowed_growth << ")";
                }
                out << ", violations " << growth->growth_violations << ", side-condition violations "
                    << growth->side_condition_violations << " over " << growth->trials << " trials\n";
            }
            out << "verdict: " << to_string(r.verdict) << '\n';
        }

        int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
            CLI::App app{"holdring: number systems defined by a hold"};
            app.name("holdring");
            app.require_subcommand(1);

            Options o;

            // encode
            std::string element_text;
            auto* encode_cmd = app.add_subcommand("encode", "digits of a ring element");
            add_common(encode_cmd, o, true);
            encode_cmd->add_option("element", element_text, "element, e.g. 5 or 1+2*w")->required();

            // decode
            std::string digits_a;
            std::string digits_b;
            auto* decode_cmd = app.add_subcommand("decode", "ring element of a digit string");
            add_common(decode_cmd, o, true);
            decode_cmd->add_option("digits", digits_a, "little-endian digits, e.g. 1,0,1")->required();

            // add / mul
            std::optional<std::size_t> modulus;
            bool faithful = false;
            auto* add_cmd = app.add_subcommand("add", "sum of two digit strings via the hold");
            add_common(add_cmd, o, true);
            add_cmd->add_option("a", digits_a)->required();
            add_cmd->add_option("b", digits_b)->required();
            add_cmd->add_option("--mod", modulus, "reduce modulo X^m");
            add_cmd->add_flag("--faithful", faithful, "use the carry-list algorithm (requires --mod)");
            auto* mul_cmd = app.add_subcommand("mul", "product of two digit strings via the hold");
            add_common(mul_cmd, o, true);
            mul_cmd->add_option("a", digits_a)->required();
            mul_cmd->add_option("b", digits_b)->required();
            mul_cmd->add_option("--mod", modulus, "reduce modulo X^m");

            // quotient
            std::size_t m = 1;
            auto* quotient_cmd = app.add_subcommand("quotient", "additive structure of R/X^m R (JSON)");
            add_common(quotient_cmd, o, true);
            quotient_cmd->add_option("--m", m, "exponent m")->required()->check(CLI::PositiveNumber);

            // validate
            std::int64_t bound = 60;
            bool expect_valid = false;
            std::size_t growth_trials = 0;
            std::size_t growth_degree = 10;
            auto* validate_cmd = app.add_subcommand("validate", "attractor test of a bound system");
            add_common(validate_cmd, o, true);
            validate_cmd->add_option("--bound", bound, "coefficient box")->check(CLI::PositiveNumber);
            validate_cmd->add_flag("--expect-valid", expect_valid, "exit 1 unless the verdict is valid");
            validate_cmd->add_option("--growth-trials", growth_trials, "random z for the z+1 degree-growth check");
            validate_cmd->add_option("--max-degree", growth_degree, "degree of the random z");

            // search
            int search_n = 1;
            auto* search_cmd = app.add_subcommand("search", "quadratic generators for n = 1 or 2");
            add_common(search_cmd, o, false);
            search_cmd->add_option("--n", search_n, "digit order")->required()->check(CLI::IsMember({1, 2}));
            search_cmd->add_option("--bound", bound, "attractor-test box")->check(CLI::PositiveNumber);

            // table
            std::size_t table_max = 6;
            auto* table_cmd = app.add_subcommand("table", "value ranges of negabinary strings by degree");
            add_common(table_cmd, o, false);
            table_cmd->add_option("--max", table_max, "largest degree")->check(CLI::Range(0, 24));

            // bounds
            std::int64_t z_max = 10000;
            std::size_t bounds_degree = 12;
            auto* bounds_cmd = app.add_subcommand("bounds", "negabinary degree bound and cumulative ranges");
            add_common(bounds_cmd, o, false);
            bounds_cmd->add_option("--zmax", z_max, "check 0 < |z| <= zmax")->check(CLI::NonNegativeNumber);
            bounds_cmd->add_option("--degree", bounds_degree, "largest cumulative degree")->check(CLI::Range(0, 24));

            // tile
            std::size_t tile_degree = 0;
            std::string out_path;
            std::size_t width = 800;
            std::size_t height = 800;
            bool zn = false;
            bool cells = false;
            std::string figure;
            auto* tile_cmd = app.add_subcommand("tile", "render sigma of all strings of degree <= d");
            add_common(tile_cmd, o, false);
            tile_cmd->add_option("--degree", tile_degree, "maximal degree d");
            tile_cmd->add_option("--out", out_path, "output file (.ppm or .svg)");
            tile_cmd->add_option("--width", width)->check(CLI::Range(1, 8192));
            tile_cmd->add_option("--height", height)->check(CLI::Range(1, 8192));
            tile_cmd->add_flag("--cells", cells, "draw translates sigma(p) + F instead of points");
            tile_cmd->add_flag("--zn", zn, "draw X^-d (sigma(p) + F)");
            tile_cmd->add_option("--figure", figure, "named preset (see `tile --list`)");
            bool list_figures = false;
            tile_cmd->add_flag("--list", list_figures, "list presets");

            // catalog
            auto* catalog_cmd = app.add_subcommand("catalog", "list systems, or show one as JSON with --system");
            add_common(catalog_cmd, o, false);

            try {
                app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
            } catch (const CLI::CallForHelp&) {
                out << app.help();
                return kExitOk;
            } catch (const CLI::CallForAllHelp&) {
                out << app.help("", CLI::AppFormatMode::All);
                return kExitOk;
            } catch (const CLI::ParseError& e) {
                err << "error: " << e.what() << '\n';
                return kExitUsage;
            }

            if (*encode_cmd) {
                const Resolved r = resolve(o.system);
                const auto& b = require_binding(r);
                const auto z = element_arg(element_text, b.ring().order());
                const auto s = encode(z, b.ring(), o.cap);
                if (o.as_json) {
                    out << json{{"system", r.system.name()}, {"element", element_json(z)},
                                {"digits", digits_json(s, r.system.order())}}
                               .dump()
                        << '\n';
                } else {
                    out << format_digits(s, r.system.order()) << '\n';
                }
                return kExitOk;
            }
            if (*decode_cmd) {
                const Resolved r = resolve(o.system);
                const auto& b = require_binding(r);
                const auto s = digits_arg(digits_a, r.system);
                const auto z = eval_sigma(s, b.ring());
                if (o.as_json) {
                    out << json{{"system", r.system.name()}, {"digits", digits_json(s, r.system.order())},
                                {"element", element_json(z)}}
                               .dump()
                        << '\n';
                } else {
                    out << format_element(z, b.ring().order()) << '\n';
                }
                return kExitOk;
            }
            if (*add_cmd || *mul_cmd) {
                const bool is_add = static_cast<bool>(*add_cmd);
                const Resolved r = resolve(o.system);
                const auto a = digits_arg(digits_a, r.system);
                const auto b = digits_arg(digits_b, r.system);
                if (faithful && !modulus) {
                    throw UsageError("--faithful requires --mod");
                }
                DigitString result;
                if (is_add) {
                    result = modulus ? (faithful ? add_mod_faithful(a, b, *modulus, r.system)
                                                 : add_mod(a, b, *modulus, r.system))
                                     : add(a, b, r.system, o.cap);
                } else {
                    result = modulus ? mul_mod(a, b, *modulus, r.system) : mul(a, b, r.system, o.cap);
                }
                if (o.as_json) {
                    json j{{"system", r.system.name()}, {"op", is_add ? "add" : "mul"},
                           {"a", digits_json(a, r.system.order())}, {"b", digits_json(b, r.system.order())},
                           {"result", digits_json(result, r.system.order())}};
                    j["mod"] = modulus ? json(*modulus) : json(nullptr);
                    out << j.dump() << '\n';
                } else {
                    out << format_digits(result, r.system.order()) << '\n';
                }
                return kExitOk;
            }
            if (*quotient_cmd) {
                const Resolved r = resolve(o.system);
                const auto sig = structure_probe(r.system, m);
                json hist = json::object();
                for (const auto& [order, count] : sig.order_histogram) {
                    hist[std::to_string(order)] = count;
                }
                out << json{{"system", r.system.name()}, {"m", m}, {"cardinality", sig.cardinality},
                            {"characteristic", sig.characteristic}, {"histogram", hist}}
                           .dump(o.as_json ? -1 : 2)
                    << '\n';
                return kExitOk;
            }
            if (*validate_cmd) {
                const Resolved r = resolve(o.system);
                const auto& b = require_binding(r);
                const auto report = attractor_test(b, bound);
                std::optional<GrowthReport> growth;
                if (growth_trials > 0) {
                    const auto profile = known_growth_profile(r.system.name());
                    growth = plus_one_growth(r.system, growth_trials, growth_degree, o.seed,
                                             profile ? std::optional(profile->allowed_growth) : std::nullopt,
                                             profile && profile->side_condition);
                }
                print_validation(out, report, &r.system, b.ring().order(), growth, o.as_json);
                const bool growth_bad =
                    growth && (growth->growth_violations > 0 || growth->side_condition_violations > 0);
                if (expect_valid && (report.verdict != Verdict::valid || growth_bad)) {
                    return kExitDomain;
                }
                return kExitOk;
            }
            if (*search_cmd) {
                const auto result = search_quadratic(search_n, bound);
                if (o.as_json) {
                    json j{{"n", search_n}, {"bound", bound}, {"generators", json::array()},
                           {"rejected", json::array()}};
                    for (const auto& g : result.generators) {
                        json hold = json::object();
                        for (int e = 0; e < search_n; ++e) {
                            hold[std::to_string(e)] = digits_json(g.system.hold(Digit::root(e, search_n)), search_n);
                        }
                        j["generators"].push_back({{"label", g.label}, {"trace", g.trace}, {"norm", g.norm},
                                                   {"rational", g.rational}, {"field", g.field}, {"hold", hold}});
                    }
                    for (const auto& c : result.rejected) {
                        j["rejected"].push_back({{"label", c.label}, {"trace", c.trace}, {"norm", c.norm},
                                                 {"rational", c.rational},
                                                 {"verdict", std::string(to_string(c.verdict))}});
                    }
                    out << j.dump(2) << '\n';
                    return kExitOk;
                }
                out << "generators (n = " << search_n << ", bound " << bound << "):\n";
                for (const auto& g : result.generators) {
                    out << "  X = " << g.label << "  in " << field_label(g.field);
                    if (!g.rational) {
                        out << "  (x^2 - (" << g.trace << ")x + " << g.norm << ")";
                    }
                    out << "  hold(1) = " << format_digits(g.system.hold(Digit::root(0, search_n)), search_n)
                        << '\n';
                }
                out << "fields:";
                for (const auto d : result.fields()) {
                    out << ' ' << field_label(d);
                }
                out << "\nrejected:\n";
                for (const auto& c : result.rejected) {
                    out << "  X = " << c.label << "  " << to_string(c.verdict) << '\n';
                }
                return kExitOk;
            }
            if (*table_cmd) {
                const auto rows = degree_table(table_max);
                if (o.as_json) {
                    json j = json::array();
                    for (const auto& row : rows) {
                        j.push_back({{"degree", row.degree}, {"min", row.min}, {"max", row.max}});
                    }
                    out << j.dump() << '\n';
                } else {
                    out << "degree  min  max\n";
                    for (const auto& row : rows) {
                        out << row.degree << "  " << row.min << "  " << row.max << '\n';
                    }
                }
                return kExitOk;
            }
            if (*bounds_cmd) {
                const auto report = check_bounds(z_max, bounds_degree);
                if (o.as_json) {
                    json rows = json::array();
                    for (const auto& row : report.cumulative) {
                        rows.push_back({{"degree", row.degree}, {"min", row.min}, {"max", row.max},
                                        {"j_low", row.expected_low.str()}, {"j_high", row.expected_high.str()},
                                        {"matches", row.matches()}});
                    }
                    out << json{{"zmax", report.z_max}, {"checked", report.checked},
                                {"violations", report.violations}, {"min_slack", report.min_slack},
                                {"cumulative", rows}, {"ok", report.ok()}}
                               .dump(2)
                        << '\n';
                } else {
                    out << "checked " << report.checked << " integers with 0 < |z| <= " << report.z_max << '\n';
                    out << "degree bound violations: " << report.violations.size() << '\n';
                    out << "min slack: " << std::setprecision(6) << report.min_slack << '\n';
                    out << "degree<=d  min  max  j(d+1)  j(d+2)  match\n";
                    for (const auto& row : report.cumulative) {
                        out << row.degree << "  " << row.min << "  " << row.max << "  " << row.expected_low << "  "
                            << row.expected_high << "  " << (row.matches() ? "yes" : "NO") << '\n';
                    }
                    out << (report.ok() ? "ok" : "FAILED") << '\n';
                }
                return report.ok() ? kExitOk : kExitDomain;
            }
            if (*tile_cmd) {
                if (list_figures) {
                    for (const auto& p : figure_presets()) {
                        out << p.id << "  " << p.system << " d=" << p.degree << (p.cells ? " cells" : " points")
                            << "  " << p.caption << '\n';
                    }
                    return kExitOk;
                }
                if (!figure.empty()) {
                    const auto& presets = figure_presets();
                    const auto it = std::find_if(presets.begin(), presets.end(),
                                                 [&](const FigurePreset& p) { return p.id == figure; });
                    if (it == presets.end()) {
                        throw UsageError("unknown figure '" + figure + "' (see `tile --list`)");
                    }
                    o.system = it->system;
                    tile_degree = it->degree;
                    cells = cells || it->cells;
                }
                if (o.system.empty()) {
                    throw UsageError("tile needs --system or --figure");
                }
                const Resolved r = resolve(o.system);
                const auto& b = require_binding(r);
                const auto cloud = tile_points(b, tile_degree);
                const bool draw_cells = cells || zn;
                std::optional<CellSet> cellset;
                Viewport view;
                TileImage image;
                if (draw_cells) {
                    cellset = tile_cells(cloud, b, zn);
                    view = fit_viewport(*cellset, width, height);
                    image = rasterize(*cellset, view, width, height);
                } else {
                    view = fit_viewport(cloud.points, width, height);
                    image = rasterize(cloud, view, width, height);
                }
                if (!out_path.empty()) {
                    const bool svg = out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".svg";
                    if (svg) {
                        write_text_file(draw_cells ? encode_svg(*cellset, view, width, height)
                                                   : encode_svg(cloud, view, width, height),
                                        out_path);
                    } else {
                        write_ppm(image, out_path);
                    }
                }
                if (o.as_json) {
                    out << json{{"system", cloud.system},
                                {"degree", cloud.degree},
                                {"points", cloud.points.size()},
                                {"collisions", cloud.collisions},
                                {"clipped", image.clipped},
                                {"occupied_pixels", image.occupied()},
                                {"viewport", {view.re_min, view.re_max, view.im_min, view.im_max}},
                                {"out", out_path}}
                               .dump()
                        << '\n';
                } else {
                    out << cloud.system << " d=" << cloud.degree << ": " << cloud.points.size() << " points, "
                        << cloud.collisions << " collisions, " << image.clipped << " clipped, "
                        << image.occupied() << " pixels";
                    if (!out_path.empty()) {
                        out << " -> " << out_path;
                    }
                    out << '\n';
                }
                return kExitOk;
            }
            if (*catalog_cmd) {
                if (!o.system.empty()) {
                    const Resolved r = resolve(o.system);
                    out << (r.binding ? to_json(*r.binding) : to_json(r.system)).dump(2) << '\n';
                    return kExitOk;
                }
                std::vector<Resolved> all;
                for (auto& e : external_catalog()) {
                    all.push_back({std::move(e.system), std::move(e.binding)});
                }
                for (const auto& b : catalog()) {
                    all.push_back({b.system(), b});
                }
                all.push_back({pseudo_binding().system(), pseudo_binding()});
                all.push_back({binary_binding().system(), binary_binding()});
                for (const int q : {2, 3, 4}) {
                    all.push_back({finite_field_system(q), std::nullopt});
                }
                if (o.as_json) {
                    json j = json::array();
                    for (const auto& r : all) {
                        j.push_back(r.binding ? to_json(*r.binding) : to_json(r.system));
                    }
                    out << j.dump(2) << '\n';
                    return kExitOk;
                }
                for (const auto& r : all) {
                    out << std::left << std::setw(18) << r.system.name() << " n=" << r.system.order();
                    if (r.binding) {
                        out << "  X=" << format_element(r.binding->ring().generator(), r.binding->ring().order())
                            << " in " << r.binding->ring().order().description();
                    }
                    out << "  h(1)=" << format_digits(r.system.hold(Digit::root(0, r.system.order())),
                                                      r.system.order())
                        << '\n';
                }
                return kExitOk;
            }
            return kExitUsage;
        }

    } // namespace

    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
        try {
            return dispatch(args, out, err);
        } catch (const UsageError& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kExitDomain;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
    }

} // namespace holdring::cli
