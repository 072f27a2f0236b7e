#include "az/report.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using az::CheckCase;
using az::CheckOutcome;
using az::ParamMap;
using az::Rat;
using az::Report;

namespace {

Report sample_report() {
    Report r;
    r.meta.timestamp = "2026-01-02T03:04:05Z";
    r.meta.grid = "MAIN_SUPERCONGRUENCE primes 5,7 n 1..2; T1 primes 5..7";
    r.meta.warnings = {"cache unreadable at ./x.jsonl:3 (parse error); recomputing"};
    std::vector<CheckCase> cases = {
        {"MAIN_SUPERCONGRUENCE", ParamMap{{"p", 5}, {"n", 1}}},
        {"MAIN_SUPERCONGRUENCE", ParamMap{{"p", 7}, {"n", 2}}},
        {"T1", ParamMap{{"p", 5}}},
        {"IDH", ParamMap{{"n", 3}}},
        {"GESSEL", ParamMap{{"p", 5}, {"j", 0}}},  // error outcome
        {"HIGHER", ParamMap{{"p", 5}, {"r", 2}, {"n", 1}}},
    };
    r.outcomes = az::run_suite(cases);
    return r;
}

std::string temp_path(const std::string& stem) {
    return (std::filesystem::temp_directory_path() / stem).string();
}

}  // namespace

TEST_CASE("summary counts match outcome tallies") {
    Report r = sample_report();
    auto s = r.summary();
    long pass = 0, fail = 0, err = 0;
    for (const auto& o : r.outcomes) {
        if (o.error)
            ++err;
        else if (o.passed)
            ++pass;
        else
            ++fail;
    }
    CHECK(s.pass == pass);
    CHECK(s.fail == fail);
    CHECK(s.error == err);
    CHECK(s.pass + s.fail + s.error == static_cast<long>(r.outcomes.size()));
    REQUIRE(s.min_achieved.count("MAIN_SUPERCONGRUENCE"));
    CHECK(s.min_achieved.at("MAIN_SUPERCONGRUENCE") == az::Valuation::finite(3));
    CHECK(s.min_achieved.at("IDH").is_infinite());
}

TEST_CASE("jsonl report round-trips byte-for-byte") {
    Report r = sample_report();
    std::string text = az::report_to_jsonl(r);
    Report parsed = az::report_from_jsonl(text);
    CHECK(parsed.meta.timestamp == r.meta.timestamp);
    CHECK(parsed.meta.grid == r.meta.grid);
    CHECK(parsed.meta.warnings == r.meta.warnings);
    CHECK(parsed.outcomes.size() == r.outcomes.size());
    CHECK(az::report_to_jsonl(parsed) == text);
}

TEST_CASE("single outcome json round-trip") {
    Report r = sample_report();
    for (const auto& o : r.outcomes) {
        std::string line = az::outcome_to_json(o);
        CheckOutcome back = az::outcome_from_json(line);
        CHECK(az::outcome_to_json(back) == line);
        CHECK(back.kase.check_id == o.kase.check_id);
        CHECK(back.kase.params == o.kase.params);
        CHECK(back.passed == o.passed);
        CHECK(back.lhs == o.lhs);
        CHECK(back.rhs == o.rhs);
    }
}

TEST_CASE("csv round-trips byte-for-byte, header always present") {
    Report r = sample_report();
    // make quoting paths fire
    r.outcomes[0].note = "contains, comma and \"quotes\"\nand a newline";
    std::string text = az::outcomes_to_csv(r.outcomes);
    CHECK(text.rfind("check_id,part,params,", 0) == 0);
    auto parsed = az::outcomes_from_csv(text);
    CHECK(parsed.size() == r.outcomes.size());
    CHECK(az::outcomes_to_csv(parsed) == text);
    CHECK(parsed[0].note == r.outcomes[0].note);
    CHECK(az::outcomes_to_csv({}) == std::string("check_id,part,params,passed,conjectural,"
                                                 "error,required_valuation,achieved_valuation,"
                                                 "lhs,rhs,note\n"));
}

TEST_CASE("table output carries a summary line") {
    Report r = sample_report();
    std::string t = az::report_to_table(r);
    CHECK(t.find("MAIN_SUPERCONGRUENCE") != std::string::npos);
    CHECK(t.find("pass ") != std::string::npos);
    CHECK(t.find("ERROR") != std::string::npos);
}

TEST_CASE("cache file round-trips bit-exact values") {
    std::string path = temp_path("az_test_cache.jsonl");
    std::remove(path.c_str());

    az::sequence_cache().clear();
    az::az_a(0, 7);
    az::apery(4);
    az::az_b(2, 5);
    auto before = az::sequence_cache().snapshot();
    az::save_cache_file(path, az::sequence_cache());

    std::ifstream in(path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();

    az::SequenceCache fresh;
    std::string warning;
    CHECK(az::load_cache_file(path, fresh, &warning));
    CHECK(warning.empty());
    auto after = fresh.snapshot();
    REQUIRE(after.size() == before.size());
    for (size_t i = 0; i < before.size(); ++i) {
        CHECK(after[i].key == before[i].key);
        CHECK(after[i].value == before[i].value);
    }

    // re-saving the reloaded cache reproduces the file byte-for-byte
    std::string path2 = temp_path("az_test_cache2.jsonl");
    std::remove(path2.c_str());
    az::save_cache_file(path2, fresh);
    std::ifstream in2(path2);
    std::string bytes2((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    CHECK(bytes2 == bytes);
    std::remove(path.c_str());
    std::remove(path2.c_str());
    az::sequence_cache().clear();
}

TEST_CASE("unreadable cache is reported, not fatal") {
    std::string path = temp_path("az_test_cache_bad.jsonl");
    {
        std::ofstream out(path);
        out << "{\"family\":\"AZ_A\",\"index\":0,\"n\":1,\"num\":\"-3\",\"den\":\"1\"}\n";
        out << "this is not json\n";
    }
    az::SequenceCache fresh;
    std::string warning;
    CHECK_FALSE(az::load_cache_file(path, fresh, &warning));
    CHECK(fresh.size() == 0);  // nothing partially applied
    CHECK(warning.find("recomputing") != std::string::npos);
    std::remove(path.c_str());

    az::SequenceCache untouched;
    std::string w2;
    CHECK(az::load_cache_file(temp_path("az_no_such_file.jsonl"), untouched, &w2));
    CHECK(w2.empty());
}

TEST_CASE("timestamp shape") {
    std::string ts = az::current_timestamp_utc();
    REQUIRE(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts.back() == 'Z');
}
