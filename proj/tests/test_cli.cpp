#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed az binary end to end; AZ_BIN_PATH is injected by the
// build.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(AZ_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_dir() {
    auto d = std::filesystem::temp_directory_path() / "az_cli_tests";
    std::filesystem::create_directories(d);
    return d.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::string strip_timestamp(std::string text) {
    auto pos = text.find("\"timestamp\":\"");
    if (pos != std::string::npos) {
        auto end = text.find('"', pos + 13);
        text.erase(pos, end - pos + 1);
    }
    return text;
}

const std::string kCache = " --cache " + temp_dir() + "/cache.jsonl";

}  // namespace

TEST_CASE("seq prints exact values") {
    auto r = run("seq AZ_A 0 1..5" + kCache);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("-3") != std::string::npos);
    CHECK(r.out.find("9") != std::string::npos);
    CHECK(r.out.find("-279") != std::string::npos);
    CHECK(r.out.find("2997") != std::string::npos);

    auto j = run("seq APERY 0..2 --format json" + kCache);
    CHECK(j.exit_code == 0);
    std::istringstream is(j.out);
    std::string line;
    std::vector<std::string> values;
    while (std::getline(is, line))
        values.push_back(nlohmann::json::parse(line).at("value").get<std::string>());
    CHECK(values == std::vector<std::string>{"1", "5", "73"});

    auto b = run("seq B 1 1..2 --format csv" + kCache);
    CHECK(b.exit_code == 0);
    CHECK(b.out.rfind("family,index,n,value\n", 0) == 0);
    CHECK(b.out.find("B,1,1,-3\n") != std::string::npos);
    CHECK(b.out.find("B,1,2,9\n") != std::string::npos);
}

TEST_CASE("seq usage errors exit 2") {
    CHECK(run("seq NOPE 0 1..5").exit_code == 2);
    CHECK(run("seq AZ_A 1..5").exit_code == 2);   // missing index
    CHECK(run("seq B 0 1..5").exit_code == 2);    // j must be >= 1
    CHECK(run("seq AZ_A 0").exit_code == 2);      // missing range
    CHECK(run("seq AZ_A 0 5..1").exit_code == 2); // empty range
}

TEST_CASE("verify exit codes") {
    CHECK(run("verify MAIN_SUPERCONGRUENCE p=5 n=1" + kCache).exit_code == 0);
    CHECK(run("verify THM31_VANISH p=5 i=2 n=1" + kCache).exit_code == 2);  // i >= p/3
    CHECK(run("verify T1 p=7" + kCache).exit_code == 0);
    CHECK(run("verify NO_SUCH_CHECK p=5" + kCache).exit_code == 2);
    CHECK(run("verify MAIN_SUPERCONGRUENCE p=5" + kCache).exit_code == 2);  // missing n
    CHECK(run("verify MORT n=3 y=1/2" + kCache).exit_code == 0);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("verify json output carries the outcome fields") {
    auto r = run("verify GESSEL p=5 j=2 --format json" + kCache);
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("check_id") == "GESSEL");
    CHECK(j.at("passed") == true);
    CHECK(j.at("required_valuation") == 2);
    CHECK(j.at("achieved_valuation") == 2);
    CHECK(j.at("lhs") == "10");
    CHECK(j.at("rhs") == "-5/2");
    CHECK(j.at("params").at("p") == 5);
}

TEST_CASE("scan with explicit grid") {
    auto dir = temp_dir();
    std::string out_file = dir + "/scan1.jsonl";
    auto r = run("scan MAIN_SUPERCONGRUENCE --primes 5,7,11 --n 1..8 --format json --out " +
                 out_file + kCache);
    CHECK(r.exit_code == 0);
    std::istringstream is(slurp(out_file));
    std::string line;
    long outcomes = 0;
    bool meta_seen = false, summary_seen = false;
    while (std::getline(is, line)) {
        auto j = nlohmann::json::parse(line);
        if (j.contains("meta")) {
            meta_seen = true;
        } else if (j.contains("summary")) {
            summary_seen = true;
            CHECK(j["summary"].at("pass") == 24);
            CHECK(j["summary"].at("fail") == 0);
        } else {
            ++outcomes;
            CHECK(j.at("passed") == true);
        }
    }
    CHECK(meta_seen);
    CHECK(summary_seen);
    CHECK(outcomes == 24);
}

TEST_CASE("scan usage errors") {
    CHECK(run("scan NO_SUCH_CHECK").exit_code == 2);
    CHECK(run("scan MAIN_SUPERCONGRUENCE --primes 4").exit_code == 2);   // not prime
    CHECK(run("scan MAIN_SUPERCONGRUENCE --n 9..5").exit_code == 2);     // empty range
    CHECK(run("scan THM31_VANISH --primes 7 --i 5").exit_code == 2);     // hypothesis empties grid
}

TEST_CASE("warm cache reruns are byte-identical modulo timestamp") {
    auto dir = temp_dir();
    std::string cache = dir + "/warm.jsonl";
    std::remove(cache.c_str());
    std::string out1 = dir + "/r1.jsonl", out2 = dir + "/r2.jsonl";
    std::string cmd = "scan T1,T2,T3 --primes 5..13 --format json --cache " + cache + " --out ";
    CHECK(run(cmd + out1).exit_code == 0);
    CHECK(std::filesystem::exists(cache));
    CHECK(run(cmd + out2).exit_code == 0);
    CHECK(strip_timestamp(slurp(out1)) == strip_timestamp(slurp(out2)));
}

TEST_CASE("AZ_CACHE environment variable selects the cache path") {
    auto dir = temp_dir();
    std::string cache = dir + "/env-cache.jsonl";
    std::remove(cache.c_str());
    auto r = run("seq AZ_A 0 1..3", "AZ_CACHE=" + cache);
    CHECK(r.exit_code == 0);
    CHECK(std::filesystem::exists(cache));
    auto text = slurp(cache);
    CHECK(text.find("\"family\":\"AZ_A\"") != std::string::npos);
    CHECK(text.find("\"num\":\"-3\"") != std::string::npos);
}

TEST_CASE("corrupt cache file triggers a warning and a rewrite") {
    auto dir = temp_dir();
    std::string cache = dir + "/corrupt.jsonl";
    {
        std::ofstream out(cache);
        out << "garbage\n";
    }
    std::string out_file = dir + "/r3.jsonl";
    auto r = run("scan GESSEL --primes 5 --j 1..2 --format json --cache " + cache + " --out " +
                 out_file);
    CHECK(r.exit_code == 0);
    auto first_line = slurp(out_file).substr(0, slurp(out_file).find('\n'));
    auto meta = nlohmann::json::parse(first_line);
    REQUIRE(meta.contains("meta"));
    auto warnings = meta["meta"].at("warnings");
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].get<std::string>().find("recomputing") != std::string::npos);
}

TEST_CASE("jobs flag does not change scan results") {
    auto dir = temp_dir();
    std::string o1 = dir + "/j1.csv", o2 = dir + "/j4.csv";
    std::string base = "scan REDUCTION --primes 5 --m 0..1 --n 1..4 --format csv" + kCache;
    CHECK(run(base + " --jobs 1 --out " + o1).exit_code == 0);
    CHECK(run(base + " --jobs 4 --out " + o2).exit_code == 0);
    CHECK(slurp(o1) == slurp(o2));
    CHECK(!slurp(o1).empty());
}
