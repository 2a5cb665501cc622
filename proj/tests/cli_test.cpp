#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string tool_path() {
    const char* p = std::getenv("BLOCKFUSE_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args) {
    RunResult res;
    std::string cmd = tool_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("blocks subcommand") {
    SECTION("GF(2)S_3 reports two blocks") {
        RunResult r = run("blocks --group s --degree 3 --prime 2");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["blocks"].size() == 2);
        CHECK(j["group"] == "S_3");
        CHECK(j["field"]["p"] == 2);
        CHECK(j["field"]["m"] == 1);
    }
    SECTION("GF(2)S_4 reports one block") {
        RunResult r = run("blocks --group s --degree 4 --prime 2");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["blocks"].size() == 1);
        CHECK(j["blocks"][0]["defect_order"] == 8);
    }
    SECTION("degree 1 reports the single trivial block") {
        RunResult r = run("blocks --group s --degree 1 --prime 2");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["blocks"].size() == 1);
    }
    SECTION("tsv format") {
        RunResult r = run("blocks --group s --degree 3 --prime 2 --format tsv");
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.find("index\tresidue_degree") != std::string::npos);
    }
}

TEST_CASE("fusion subcommand") {
    SECTION("S_3 principal block at p = 2: S_M verdict with M = {1,2}") {
        RunResult r = run("fusion --group s --degree 3 --prime 2 --block 0");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["verdict"] == "S_M");
        CHECK(j["defect"]["M"] == nlohmann::json::array({1, 2}));
    }
    SECTION("A_5 principal at p = 2: A_M verdict") {
        RunResult r = run("fusion --group a --degree 5 --prime 2 --block 0");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["verdict"] == "A_M");
    }
    SECTION("bad block index is a usage error") {
        RunResult r = run("fusion --group s --degree 3 --prime 2 --block 9");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("verify subcommand") {
    SECTION("vacuous pass at degree 1") {
        RunResult r = run("verify all --degree 1 --prime 2");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["passed"] == true);
    }
    SECTION("expcoef at degree 4") {
        RunResult r = run("verify expcoef --degree 4");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["passed"] == true);
        CHECK(j["cases"].get<long>() > 0);
    }
    SECTION("unknown suite is a usage error") {
        RunResult r = run("verify bogus");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);
    CHECK(run("blocks").exit_code == 2);  // --degree is required
    CHECK(run("blocks --degree 3 --badflag").exit_code == 2);
}

TEST_CASE("cap exceeded maps to exit 3") {
    RunResult r = run("blocks --group s --degree 8 --prime 2 --max-order 100");
    CHECK(r.exit_code == 3);
}

TEST_CASE("determinism: equal config and seed give byte-identical reports") {
    RunResult a = run("blocks --group a --degree 5 --prime 2 --seed 7");
    RunResult b = run("blocks --group a --degree 5 --prime 2 --seed 7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult c = run("fusion --group s --degree 4 --prime 2 --block 0");
    RunResult d = run("fusion --group s --degree 4 --prime 2 --block 0");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("cache round trip reproduces the report byte for byte") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "blockfuse_cache_test";
    fs::remove_all(dir);

    std::string args = "blocks --group s --degree 5 --prime 3 --cache-dir " + dir.string();
    RunResult cold = run(args);
    REQUIRE(cold.exit_code == 0);
    CHECK(fs::exists(dir / "s5_p3.v1.json"));

    RunResult warm = run(args);
    REQUIRE(warm.exit_code == 0);
    CHECK(cold.out == warm.out);

    SECTION("corrupt cache falls back to recomputation") {
        {
            std::ofstream f(dir / "s5_p3.v1.json");
            f << "{ not json";
        }
        RunResult again = run(args);
        REQUIRE(again.exit_code == 0);
        CHECK(again.out == cold.out);
    }
    fs::remove_all(dir);
}

TEST_CASE("environment variable overrides the cache directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "blockfuse_cache_env";
    fs::remove_all(dir);
    std::string cmd = "BLOCKFUSE_CACHE=" + dir.string() + " " + tool_path() +
                      " blocks --group s --degree 3 --prime 2 > /dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(fs::exists(dir / "s3_p2.v1.json"));
    fs::remove_all(dir);
}
