#include "az/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace az {

using nlohmann::json;

namespace {

json valuation_to_json(const Valuation& v) {
    if (v.is_infinite())
        return json("inf");
    return json(v.value());
}

Valuation valuation_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "inf")
            throw std::invalid_argument("bad valuation string: " + j.get<std::string>());
        return Valuation::infinite();
    }
    return Valuation::finite(j.get<long>());
}

std::string params_to_string(const ParamMap& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty())
            out += ' ';
        out += k + "=" + std::to_string(v);
    }
    return out;
}

ParamMap params_from_string(const std::string& s) {
    ParamMap out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad parameter token: " + tok);
        out[tok.substr(0, eq)] = std::stol(tok.substr(eq + 1));
    }
    return out;
}

}  // namespace

ReportSummary Report::summary() const {
    ReportSummary s;
    for (const auto& o : outcomes) {
        if (o.error)
            ++s.error;
        else if (o.passed)
            ++s.pass;
        else
            ++s.fail;
        if (!o.error && !o.passed && o.conjectural)
            ++s.conjectural_violations;
        if (o.achieved) {
            auto [it, inserted] = s.min_achieved.try_emplace(o.kase.check_id, *o.achieved);
            if (!inserted)
                it->second = min(it->second, *o.achieved);
        }
    }
    return s;
}

std::string current_timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string outcome_to_json(const CheckOutcome& o) {
    json j;
    j["check_id"] = o.kase.check_id;
    json params = json::object();
    for (const auto& [k, v] : o.kase.params)
        params[k] = v;
    j["params"] = params;
    j["part"] = o.part;
    j["passed"] = o.passed;
    j["error"] = o.error;
    j["conjectural"] = o.conjectural;
    j["required_valuation"] = valuation_to_json(o.required);
    j["achieved_valuation"] = o.achieved ? valuation_to_json(*o.achieved) : json(nullptr);
    j["lhs"] = o.lhs.str();
    j["rhs"] = o.rhs.str();
    j["note"] = o.note;
    return j.dump();
}

CheckOutcome outcome_from_json(const std::string& line) {
    json j = json::parse(line);
    CheckOutcome o;
    o.kase.check_id = j.at("check_id").get<std::string>();
    for (const auto& [k, v] : j.at("params").items())
        o.kase.params[k] = v.get<long>();
    o.part = j.at("part").get<std::string>();
    o.passed = j.at("passed").get<bool>();
    o.error = j.at("error").get<bool>();
    o.conjectural = j.at("conjectural").get<bool>();
    o.required = valuation_from_json(j.at("required_valuation"));
    if (!j.at("achieved_valuation").is_null())
        o.achieved = valuation_from_json(j.at("achieved_valuation"));
    o.lhs = Rat::parse(j.at("lhs").get<std::string>());
    o.rhs = Rat::parse(j.at("rhs").get<std::string>());
    o.note = j.at("note").get<std::string>();
    return o;
}

std::string report_to_jsonl(const Report& r) {
    std::string out;
    json meta;
    meta["meta"]["timestamp"] = r.meta.timestamp;
    meta["meta"]["version"] = r.meta.version;
    meta["meta"]["grid"] = r.meta.grid;
    meta["meta"]["warnings"] = r.meta.warnings;
    out += meta.dump();
    out += '\n';
    for (const auto& o : r.outcomes) {
        out += outcome_to_json(o);
        out += '\n';
    }
    ReportSummary s = r.summary();
    json sj;
    sj["summary"]["pass"] = s.pass;
    sj["summary"]["fail"] = s.fail;
    sj["summary"]["error"] = s.error;
    sj["summary"]["conjectural_violations"] = s.conjectural_violations;
    json mins = json::object();
    for (const auto& [id, v] : s.min_achieved)
        mins[id] = valuation_to_json(v);
    sj["summary"]["min_achieved"] = mins;
    out += sj.dump();
    out += '\n';
    return out;
}

Report report_from_jsonl(const std::string& text) {
    Report r;
    std::istringstream is(text);
    std::string line;
    bool meta_seen = false;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        json j = json::parse(line);
        if (j.contains("meta")) {
            const json& m = j["meta"];
            r.meta.timestamp = m.at("timestamp").get<std::string>();
            r.meta.version = m.at("version").get<std::string>();
            r.meta.grid = m.at("grid").get<std::string>();
            r.meta.warnings = m.at("warnings").get<std::vector<std::string>>();
            meta_seen = true;
            continue;
        }
        if (j.contains("summary"))
            continue;  // recomputed from outcomes
        r.outcomes.push_back(outcome_from_json(line));
    }
    if (!meta_seen)
        throw std::invalid_argument("report: missing meta line");
    return r;
}

namespace {

const char* kCsvHeader =
    "check_id,part,params,passed,conjectural,error,required_valuation,"
    "achieved_valuation,lhs,rhs,note";

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split_line(const std::string& text, size_t& pos) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    while (pos < text.size()) {
        char ch = text[pos];
        if (quoted) {
            if (ch == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    cur += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch == '\n') {
            ++pos;
            fields.push_back(cur);
            return fields;
        } else if (ch != '\r') {
            cur += ch;
        }
        ++pos;
    }
    fields.push_back(cur);
    return fields;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

bool bool_from(const std::string& s) {
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    throw std::invalid_argument("bad boolean field: " + s);
}

}  // namespace

std::string outcomes_to_csv(const std::vector<CheckOutcome>& outcomes) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& o : outcomes) {
        std::vector<std::string> fields = {
            o.kase.check_id,
            o.part,
            params_to_string(o.kase.params),
            bool_str(o.passed),
            bool_str(o.conjectural),
            bool_str(o.error),
            o.required.str(),
            o.achieved ? o.achieved->str() : "",
            o.lhs.str(),
            o.rhs.str(),
            o.note,
        };
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i)
                out += ',';
            out += csv_escape(fields[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<CheckOutcome> outcomes_from_csv(const std::string& text) {
    size_t pos = 0;
    std::vector<std::string> header = csv_split_line(text, pos);
    std::string joined;
    for (size_t i = 0; i < header.size(); ++i)
        joined += (i ? "," : "") + header[i];
    if (joined != kCsvHeader)
        throw std::invalid_argument("csv: unexpected header");
    std::vector<CheckOutcome> out;
    while (pos < text.size()) {
        if (text[pos] == '\n') {  // tolerate a trailing blank line
            ++pos;
            continue;
        }
        std::vector<std::string> f = csv_split_line(text, pos);
        if (f.size() != 11)
            throw std::invalid_argument("csv: wrong field count");
        CheckOutcome o;
        o.kase.check_id = f[0];
        o.part = f[1];
        o.kase.params = params_from_string(f[2]);
        o.passed = bool_from(f[3]);
        o.conjectural = bool_from(f[4]);
        o.error = bool_from(f[5]);
        o.required = f[6] == "inf" ? Valuation::infinite() : Valuation::finite(std::stol(f[6]));
        if (!f[7].empty())
            o.achieved = f[7] == "inf" ? Valuation::infinite() : Valuation::finite(std::stol(f[7]));
        o.lhs = Rat::parse(f[8].empty() ? "0" : f[8]);
        o.rhs = Rat::parse(f[9].empty() ? "0" : f[9]);
        o.note = f[10];
        out.push_back(std::move(o));
    }
    return out;
}

namespace {

std::string clip(const std::string& s, size_t width) {
    if (s.size() <= width)
        return s;
    return s.substr(0, width - 2) + "..";
}

}  // namespace

std::string report_to_table(const Report& r) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"CHECK", "PARAMS", "PART", "STATUS", "REQ", "ACH", "LHS", "RHS", "NOTE"});
    for (const auto& o : r.outcomes) {
        std::string status = o.error ? "ERROR" : (o.passed ? "pass" : "FAIL");
        if (o.conjectural && !o.error)
            status += o.passed ? "" : " (conjectural)";
        rows.push_back({o.kase.check_id, params_to_string(o.kase.params), o.part, status,
                        o.required.str(), o.achieved ? o.achieved->str() : "-",
                        clip(o.lhs.str(), 26), clip(o.rhs.str(), 26), o.note});
    }
    std::vector<size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows)
        for (size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line;
        out += '\n';
    }
    ReportSummary s = r.summary();
    out += "--\n";
    out += "pass " + std::to_string(s.pass) + "  fail " + std::to_string(s.fail) + "  error " +
           std::to_string(s.error);
    if (s.conjectural_violations > 0)
        out += "  CONJECTURAL VIOLATIONS " + std::to_string(s.conjectural_violations);
    out += '\n';
    if (!s.min_achieved.empty()) {
        out += "min achieved valuation:";
        for (const auto& [id, v] : s.min_achieved)
            out += " " + id + "=" + v.str();
        out += '\n';
    }
    return out;
}

bool load_cache_file(const std::string& path, SequenceCache& cache, std::string* warning) {
    std::ifstream in(path);
    if (!in.is_open())
        return true;  // cold cache
    std::vector<SequenceValue> entries;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        try {
            json j = json::parse(line);
            auto family = family_from_name(j.at("family").get<std::string>());
            if (!family)
                throw std::invalid_argument("unknown family");
            SeqKey key{*family, j.at("index").get<long>(), j.at("n").get<long>()};
            Rat value(Int(j.at("num").get<std::string>()), Int(j.at("den").get<std::string>()));
            entries.push_back({key, value});
        } catch (const std::exception& e) {
            if (warning)
                *warning = "cache unreadable at " + path + ":" + std::to_string(lineno) +
                           " (" + e.what() + "); recomputing";
            return false;
        }
    }
    for (const auto& e : entries)
        cache.store(e.key, e.value);
    return true;
}

void save_cache_file(const std::string& path, const SequenceCache& cache) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out.is_open())
            throw std::runtime_error("cannot write cache file " + tmp);
        for (const auto& e : cache.snapshot()) {
            json j;
            j["family"] = family_name(e.key.family);
            j["index"] = e.key.index;
            j["n"] = e.key.n;
            j["num"] = e.value.num().get_str();
            j["den"] = e.value.den().get_str();
            out << j.dump() << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace az
