/*
 * az — exact computation of Almkvist-Zudilin-type sequences and batch
 * verification of their congruences, with achieved p-adic valuations.
 *
 *   az seq <family> [index] <range>     print exact sequence values
 *   az verify <CHECK_ID> k=v ...        run one check
 *   az scan [CHECK_ID ...] [ranges]     run a parameter sweep (no
 *                                       arguments: the full desk-scale
 *                                       sweep over every check)
 *
 * Exit codes: 0 all requested checks passed, 1 any failure, 2 usage error.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include "az/report.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using az::CheckCase;
using az::CheckOutcome;
using az::GridOverrides;
using az::Rat;
using az::Report;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long parse_long(const std::string& s) {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size())
        throw UsageError("not an integer: " + s);
    return v;
}

// "1..8", "5,7,11", "1,4..6"
std::vector<long> parse_range_list(const std::string& s) {
    std::vector<long> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty())
            throw UsageError("empty range token in '" + s + "'");
        auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_long(tok));
            continue;
        }
        long lo = parse_long(tok.substr(0, dots));
        long hi = parse_long(tok.substr(dots + 2));
        if (lo > hi)
            throw UsageError("empty range " + tok);
        for (long v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    if (out.empty())
        throw UsageError("empty range '" + s + "'");
    return out;
}

// Ranges keep only the primes they contain; explicitly listed values must
// be prime.
std::vector<long> parse_prime_list(const std::string& s) {
    std::vector<long> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty())
            throw UsageError("empty range token in '" + s + "'");
        auto dots = tok.find("..");
        if (dots == std::string::npos) {
            long v = parse_long(tok);
            if (v < 5 || !az::is_prime(v))
                throw UsageError("not a prime >= 5: " + tok);
            out.push_back(v);
            continue;
        }
        long lo = parse_long(tok.substr(0, dots));
        long hi = parse_long(tok.substr(dots + 2));
        for (long v = std::max(lo, 5L); v <= hi; ++v)
            if (az::is_prime(v))
                out.push_back(v);
    }
    if (out.empty())
        throw UsageError("no primes in '" + s + "'");
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        try {
            out.push_back(Rat::parse(tok));
        } catch (const std::exception&) {
            throw UsageError("not a rational: " + tok);
        }
    }
    if (out.empty())
        throw UsageError("empty rational list '" + s + "'");
    return out;
}

struct CommonOpts {
    std::string format = "table";
    std::string cache_flag;
    int jobs = 1;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format: json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--cache", opts.cache_flag,
                    "sequence cache file (default $AZ_CACHE or ./az-cache.jsonl)");
    cmd->add_option("--jobs", opts.jobs, "worker count for independent cases")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
}

std::string resolve_cache_path(const CommonOpts& opts) {
    if (!opts.cache_flag.empty())
        return opts.cache_flag;
    if (const char* env = std::getenv("AZ_CACHE"); env && *env)
        return env;
    return "./az-cache.jsonl";
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::trunc);
    if (!out.is_open())
        throw std::runtime_error("cannot write " + opts.out_path);
    out << text;
}

// --- seq ---------------------------------------------------------------

struct SeqRow {
    az::Family family;
    long index;
    long n;
    Rat value;
};

int cmd_seq(const std::string& family_str, const std::string& index_str,
            const std::string& range_str, const CommonOpts& opts) {
    auto family = az::family_from_name(family_str);
    if (!family)
        throw UsageError("unknown family '" + family_str + "' (expected AZ_A, APERY or B)");
    long index = 0;
    if (*family == az::Family::APERY) {
        if (!index_str.empty() && index_str != "-")
            throw UsageError("APERY takes no index");
    } else {
        if (index_str.empty() || index_str == "-")
            throw UsageError(family_str + " requires an index");
        index = parse_long(index_str);
        if (*family == az::Family::AZ_A && index < 0)
            throw UsageError("index i must be >= 0");
        if (*family == az::Family::B && index < 1)
            throw UsageError("index j must be >= 1");
    }

    std::string cache_path = resolve_cache_path(opts);
    std::string cache_warning;
    az::load_cache_file(cache_path, az::sequence_cache(), &cache_warning);

    std::vector<SeqRow> rows;
    for (long n : parse_range_list(range_str)) {
        Rat value;
        switch (*family) {
            case az::Family::AZ_A:
                if (n < 0)
                    throw UsageError("n must be >= 0");
                value = Rat(az::az_a(index, n));
                break;
            case az::Family::APERY:
                if (n < 0)
                    throw UsageError("n must be >= 0");
                value = Rat(az::apery(n));
                break;
            case az::Family::B:
                if (n < 1)
                    throw UsageError("n must be >= 1");
                value = az::az_b(index, n);
                break;
        }
        rows.push_back({*family, index, n, value});
    }
    az::save_cache_file(cache_path, az::sequence_cache());

    std::string text;
    if (opts.format == "json") {
        for (const auto& r : rows) {
            nlohmann::json j;
            j["family"] = az::family_name(r.family);
            j["index"] = r.index;
            j["n"] = r.n;
            j["value"] = r.value.str();
            text += j.dump();
            text += '\n';
        }
    } else if (opts.format == "csv") {
        text = "family,index,n,value\n";
        for (const auto& r : rows)
            text += az::family_name(r.family) + "," + std::to_string(r.index) + "," +
                    std::to_string(r.n) + "," + r.value.str() + "\n";
    } else {
        text = "FAMILY  INDEX  N  VALUE\n";
        for (const auto& r : rows) {
            std::string idx =
                r.family == az::Family::APERY ? std::string("-") : std::to_string(r.index);
            text += az::family_name(r.family) + "  " + idx + "  " + std::to_string(r.n) +
                    "  " + r.value.str() + "\n";
        }
    }
    emit(opts, text);
    return 0;
}

// --- verify ------------------------------------------------------------

CheckCase parse_case(const std::string& check_id, const std::vector<std::string>& kvs) {
    CheckCase c;
    c.check_id = check_id;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw UsageError("expected name=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq);
        std::string val = kv.substr(eq + 1);
        if (key == "y") {
            Rat y = Rat::parse(val);
            c.params["ynum"] = y.num().get_si();
            c.params["yden"] = y.den().get_si();
            continue;
        }
        c.params[key] = parse_long(val);
    }
    return c;
}

int cmd_verify(const std::string& check_id, const std::vector<std::string>& kvs,
               const CommonOpts& opts) {
    if (!az::find_check(check_id)) {
        std::string known;
        for (const auto& info : az::check_registry())
            known += (known.empty() ? "" : ", ") + info.id;
        throw UsageError("unknown check '" + check_id + "'; known checks: " + known);
    }
    CheckCase c = parse_case(check_id, kvs);
    std::string warning;  // consulted but not rewritten
    az::load_cache_file(resolve_cache_path(opts), az::sequence_cache(), &warning);
    std::vector<CheckOutcome> outcomes;
    try {
        outcomes = az::run_check(c);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }

    Report r;
    r.meta.timestamp = az::current_timestamp_utc();
    r.meta.grid = "verify " + check_id;
    r.outcomes = outcomes;
    if (opts.format == "json") {
        std::string text;
        for (const auto& o : outcomes)
            text += az::outcome_to_json(o) + "\n";
        emit(opts, text);
    } else if (opts.format == "csv") {
        emit(opts, az::outcomes_to_csv(outcomes));
    } else {
        emit(opts, az::report_to_table(r));
    }
    for (const auto& o : outcomes)
        if (!o.passed || o.error)
            return 1;
    return 0;
}

// --- scan --------------------------------------------------------------

std::string describe_overrides(const GridOverrides& ov) {
    std::string s;
    for (const auto& [name, values] : ov.values) {
        s += " " + name + "=";
        for (size_t i = 0; i < values.size(); ++i)
            s += (i ? "," : "") + std::to_string(values[i]);
    }
    if (ov.y) {
        s += " y=";
        for (size_t i = 0; i < ov.y->size(); ++i)
            s += (i ? "," : "") + (*ov.y)[i].str();
    }
    return s;
}

int cmd_scan(std::vector<std::string> check_args,
             const std::map<std::string, std::string>& range_flags, const std::string& y_flag,
             const CommonOpts& opts) {
    // expand comma-joined positional check lists
    std::vector<std::string> ids;
    for (const auto& arg : check_args) {
        std::istringstream is(arg);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty())
                ids.push_back(tok);
    }
    if (ids.empty())
        for (const auto& info : az::check_registry())
            ids.push_back(info.id);

    GridOverrides ov;
    for (const auto& [name, value] : range_flags)
        if (!value.empty())
            ov.values[name] = name == "p" ? parse_prime_list(value) : parse_range_list(value);
    if (!y_flag.empty())
        ov.y = parse_rat_list(y_flag);

    std::vector<CheckCase> cases;
    std::string grid_desc;
    for (const auto& id : ids) {
        const az::CheckInfo* info = az::find_check(id);
        if (!info)
            throw UsageError("unknown check '" + id + "'");
        std::vector<CheckCase> sub;
        try {
            sub = info->grid(ov);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        grid_desc += (grid_desc.empty() ? "" : "; ") + id;
        cases.insert(cases.end(), sub.begin(), sub.end());
    }
    grid_desc += describe_overrides(ov);
    if (cases.empty())
        throw UsageError("empty grid: no parameter combination satisfies the hypotheses");

    std::string cache_path = resolve_cache_path(opts);
    std::vector<std::string> warnings;
    {
        std::string warning;
        if (!az::load_cache_file(cache_path, az::sequence_cache(), &warning))
            warnings.push_back(warning);
    }

    Report r;
    r.meta.timestamp = az::current_timestamp_utc();
    r.meta.grid = grid_desc;
    r.meta.warnings = warnings;
    r.outcomes = az::run_suite(cases, opts.jobs);

    az::save_cache_file(cache_path, az::sequence_cache());

    if (opts.format == "json")
        emit(opts, az::report_to_jsonl(r));
    else if (opts.format == "csv")
        emit(opts, az::outcomes_to_csv(r.outcomes));
    else
        emit(opts, az::report_to_table(r));

    auto s = r.summary();
    return (s.fail > 0 || s.error > 0) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sequence values and congruence verification"};
    app.set_version_flag("--version", std::string("az ") + az::kToolVersion);
    app.require_subcommand(1);

    CommonOpts seq_opts, verify_opts, scan_opts;

    CLI::App* seq = app.add_subcommand("seq", "print exact sequence values");
    std::string family, index_or_range, range;
    seq->add_option("family", family, "AZ_A, APERY or B")->required();
    seq->add_option("index", index_or_range, "sequence index (i or j); '-' for APERY");
    seq->add_option("range", range, "n range, e.g. 1..8 or 1,2,5");
    add_common(seq, seq_opts);

    CLI::App* verify = app.add_subcommand("verify", "run a single check");
    std::string check_id;
    std::vector<std::string> kvs;
    verify->add_option("check", check_id, "check id, e.g. MAIN_SUPERCONGRUENCE")->required();
    verify->add_option("params", kvs, "check parameters as name=value");
    add_common(verify, verify_opts);

    CLI::App* scan = app.add_subcommand("scan", "run a parameter sweep");
    std::vector<std::string> scan_checks;
    scan->add_option("checks", scan_checks, "check ids (default: all)");
    std::map<std::string, std::string> range_flags;
    std::string y_flag;
    for (const char* name : {"n", "m", "i", "j", "r", "a", "b", "c", "d", "e", "A", "k",
                             "n1", "n0", "k1", "k0"}) {
        range_flags[name] = "";
        scan->add_option("--" + std::string(name), range_flags[name],
                         "values for parameter " + std::string(name));
    }
    range_flags["p"] = "";
    scan->add_option("--primes", range_flags["p"], "prime values, e.g. 5,7,11 or 5..31");
    scan->add_option("--y", y_flag, "rational y values for MORT, e.g. 1/2,2,-1/2");
    add_common(scan, scan_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed()) {
            // APERY may omit the index: "az seq APERY 0..2"
            std::string idx = index_or_range, rng = range;
            if (rng.empty()) {
                rng = idx;
                idx.clear();
            }
            if (rng.empty())
                throw UsageError("missing n range");
            return cmd_seq(family, idx, rng, seq_opts);
        }
        if (verify->parsed())
            return cmd_verify(check_id, kvs, verify_opts);
        return cmd_scan(scan_checks, range_flags, y_flag, scan_opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
