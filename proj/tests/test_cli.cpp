#include "oracles.hpp"
#include "support.hpp"

#include "cli.hpp"

#include <holdring/render.hpp>
#include <holdring/serialize.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace holdring;

namespace {

    struct Result {
        int code;
        std::string out;
        std::string err;
    };

    Result run(std::vector<std::string> args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    struct Golden {
        const char* name;
        std::vector<std::string> args;
    };

    const std::vector<Golden>& goldens() {
        static const std::vector<Golden> list{
            {"encode_neg2_5", {"encode", "--system", "neg2", "5"}},
            {"encode_gauss_json", {"encode", "--system", "gauss", "3-2*w", "--json"}},
            {"decode_mu4", {"decode", "--system", "mu4", "w^1,0,w^3"}},
            {"add_q11", {"add", "--system", "q11", "1", "1"}},
            {"add_mod_faithful", {"add", "--system", "neg2", "1", "1,1", "--mod", "6", "--faithful"}},
            {"mul_neg2", {"mul", "--system", "neg2", "1,1,1", "1,1,1"}},
            {"table_6", {"table", "--max", "6"}},
            {"search_1", {"search", "--n", "1"}},
            {"search_2", {"search", "--n", "2"}},
            {"validate_pseudo", {"validate", "--system", "pseudo", "--bound", "12"}},
            {"validate_q11", {"validate", "--system", "q11", "--bound", "10", "--growth-trials", "500", "--seed", "3"}},
            {"quotient_gauss_3", {"quotient", "--system", "gauss", "--m", "3"}},
            {"bounds_1000", {"bounds", "--zmax", "1000", "--degree", "8"}},
            {"tile_mu6", {"tile", "--figure", "mu6-d2", "--width", "200", "--height", "200"}},
            {"tile_list", {"tile", "--list"}},
            {"catalog", {"catalog"}},
            {"catalog_q7", {"catalog", "--system", "q7"}},
        };
        return list;
    }

    std::string read_file(const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("reference examples") {
        auto r = run({"encode", "--system", "neg2", "5"});
        CHECK(r.code == 0);
        CHECK(r.out == "1,0,1\n");
        r = run({"table", "--max", "6"});
        CHECK(r.code == 0);
        CHECK(r.out.find("6  22  85") != std::string::npos);
        r = run({"search", "--n", "2"});
        CHECK(r.code == 0);
        CHECK(r.out.find("fields: Q(sqrt(-11)) Q(sqrt(-3)) Q(sqrt(-2)) Q\n") != std::string::npos);
    }

    TEST_CASE("golden outputs") {
        const std::filesystem::path dir = HOLDRING_GOLDEN_DIR;
        const bool update = std::getenv("HOLDRING_UPDATE_GOLDEN") != nullptr;
        for (const auto& g : goldens()) {
            CAPTURE(g.name);
            const auto r = run(g.args);
            CHECK(r.code == 0);
            const auto path = dir / (std::string(g.name) + ".txt");
            if (update) {
                std::ofstream(path, std::ios::binary) << r.out;
                continue;
            }
            REQUIRE(std::filesystem::exists(path));
            CHECK(r.out == read_file(path));
        }
    }

    TEST_CASE("exit codes") {
        CHECK(run({}).code == cli::kExitUsage);
        CHECK(run({"frobnicate"}).code == cli::kExitUsage);
        CHECK(run({"encode", "5"}).code == cli::kExitUsage);
        CHECK(run({"encode", "--system", "nosuch", "5"}).code == cli::kExitUsage);
        CHECK(run({"encode", "--system", "neg2", "x+"}).code == cli::kExitUsage);
        CHECK(run({"encode", "--system", "f3", "1"}).code == cli::kExitUsage);
        CHECK(run({"add", "--system", "neg2", "1", "1", "--faithful"}).code == cli::kExitUsage);
        CHECK(run({"encode", "--system", "pseudo", "5"}).code == cli::kExitDomain);
        CHECK(run({"validate", "--system", "binary", "--bound", "5", "--expect-valid"}).code == cli::kExitDomain);
        CHECK(run({"validate", "--system", "binary", "--bound", "5"}).code == cli::kExitOk);
        CHECK(run({"validate", "--system", "mu4", "--bound", "5", "--expect-valid"}).code == cli::kExitOk);
        CHECK(run({"quotient", "--system", "neg2", "--m", "30"}).code == cli::kExitDomain);
        CHECK(run({"tile", "--system", "gauss", "--degree", "30"}).code == cli::kExitDomain);
        CHECK(run({"tile", "--system", "gauss", "--degree", "3", "--out", "/nonexistent/dir/x.ppm"}).code ==
              cli::kExitDomain);
        CHECK(run({"--help"}).code == cli::kExitOk);
    }

    TEST_CASE("text round trip: decode(encode(z)) = z") {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> coef(-5000, 5000);
        for (const auto& b : catalog()) {
            CAPTURE(b.name());
            const auto& order = b.ring().order();
            for (int i = 0; i < 1000; ++i) {
                const QuadraticInt z(coef(rng), order.degenerate() ? 0 : coef(rng));
                const std::string text = format_element(z, order);
                const auto enc = run({"encode", "--system", b.name(), text});
                REQUIRE(enc.code == 0);
                std::string digits = enc.out;
                digits.pop_back();
                const auto dec = run({"decode", "--system", b.name(), digits});
                REQUIRE(dec.code == 0);
                CHECK(dec.out == text + "\n");
            }
        }
    }

    TEST_CASE("tile writes byte-identical files across runs") {
        const auto dir = std::filesystem::temp_directory_path() / "holdring_cli_test";
        std::filesystem::create_directories(dir);
        for (const auto& p : figure_presets()) {
            CAPTURE(p.id);
            const auto a = (dir / (p.id + "_a.ppm")).string();
            const auto b = (dir / (p.id + "_b.ppm")).string();
            REQUIRE(run({"tile", "--figure", p.id, "--width", "256", "--height", "256", "--out", a}).code == 0);
            REQUIRE(run({"tile", "--figure", p.id, "--width", "256", "--height", "256", "--out", b}).code == 0);
            CHECK(read_file(a) == read_file(b));
        }
        const auto svg = (dir / "q11.svg").string();
        REQUIRE(run({"tile", "--system", "q11", "--degree", "3", "--cells", "--out", svg}).code == 0);
        CHECK(read_file(svg).rfind("<svg", 0) == 0);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("external catalog via HOLDRING_CATALOG") {
        const auto dir = std::filesystem::temp_directory_path() / "holdring_cli_catalog";
        std::filesystem::create_directories(dir);
        auto j = to_json(support::bind("ternary"));
        j["name"] = "my-ternary";
        std::ofstream(dir / "cat.json") << nlohmann::json::array({j}).dump();
        ::setenv("HOLDRING_CATALOG", (dir / "cat.json").c_str(), 1);
        auto r = run({"encode", "--system", "my-ternary", "5"});
        CHECK(r.code == 0);
        CHECK(r.out == "-1,-1,1\n");
        r = run({"catalog"});
        CHECK(r.out.rfind("my-ternary", 0) == 0);
        ::setenv("HOLDRING_CATALOG", (dir / "missing.json").c_str(), 1);
        CHECK(run({"encode", "--system", "neg2", "5"}).code == cli::kExitDomain);
        ::unsetenv("HOLDRING_CATALOG");
        std::filesystem::remove_all(dir);
    }
}
