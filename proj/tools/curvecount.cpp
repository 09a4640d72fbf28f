#include "curvecount/charnum.hpp"
#include "curvecount/kontsevich.hpp"
#include "curvecount/output.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace cc = curvecount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct Emitter {
    cc::Format format = cc::Format::Plain;
    bool csv_header_done = false;

    // `label` prefixes plain output when a command emits several rows.
    void emit(const cc::OutputRecord& rec, const std::string& label = "") {
        if (format == cc::Format::Csv && !csv_header_done) {
            std::cout << cc::csv_header() << "\n";
            csv_header_done = true;
        }
        if (format == cc::Format::Plain && !label.empty())
            std::cout << label << " " << rec.result << "\n";
        else
            std::cout << cc::render(rec, format) << "\n";
    }
};

std::optional<std::string> cache_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CURVECOUNT_CACHE"); env && *env) return std::string(env);
    return std::nullopt;
}

void load_cache(const std::string& path, cc::MemoTable& table) {
    std::ifstream in(path);
    if (!in) return;  // absent file: cold start
    nlohmann::json j;
    try {
        in >> j;
        if (!j.is_object()) throw std::runtime_error("top-level value is not an object");
        for (const auto& [k, v] : j.items()) {
            long d = std::stol(k);
            if (d < 1 || !v.is_string())
                throw std::runtime_error("bad entry for degree " + k);
            table.store(d, cc::Int(v.get<std::string>()), cc::MemoTable::Source::Cache);
        }
    } catch (const std::exception& e) {
        throw UsageError("corrupted cache file '" + path + "': " + e.what());
    }
}

void save_cache(const std::string& path, const cc::MemoTable& table) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [d, v] : table.entries())
        j[std::to_string(d)] = v.str();
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw UsageError("cannot write cache file '" + tmp + "'");
        out << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw UsageError("cannot replace cache file '" + path + "'");
}

cc::OutputRecord record(std::string command,
                        std::vector<std::pair<std::string, std::string>> inputs,
                        std::string result, std::string provenance, const Timer& t) {
    return cc::OutputRecord{std::move(command), std::move(inputs), std::move(result),
                            std::move(provenance), t.ms()};
}

void run_nd(Emitter& em, long degree, const std::string& method,
            const std::optional<std::string>& cache) {
    if (degree < 1) throw UsageError("nd: degree must be >= 1");
    if (method == "classical" && degree > 4)
        throw UsageError("nd: classical method covers only degree 1..4");

    cc::MemoTable table;
    if (cache) load_cache(*cache, table);

    std::vector<std::pair<std::string, cc::Int>> results;
    Timer t;
    if (method == "recursion" || method == "all")
        results.emplace_back("recursion", cc::nd(degree, table));
    if (method == "unsym" || method == "all") {
        cc::MemoTable isolated;  // keep the two formulas independent
        results.emplace_back("unsym", cc::nd_unsym(degree, isolated));
    }
    if ((method == "classical" || method == "all") && degree <= 4)
        results.emplace_back("classical", cc::nd_classical(degree));
    if (results.empty()) throw UsageError("nd: unknown method '" + method + "'");

    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].second != results[0].second)
            throw ConsistencyError("nd: method '" + results[i].first + "' gives " +
                                   results[i].second.str() + " but '" + results[0].first +
                                   "' gives " + results[0].second.str());

    if (cache) save_cache(*cache, table);

    bool many = results.size() > 1;
    for (const auto& [prov, value] : results)
        em.emit(record("nd",
                       {{"degree", std::to_string(degree)}, {"method", method}},
                       value.str(), prov, t),
                many ? prov : "");
}

void run_charnum(Emitter& em, const std::string& name_str, long degree, bool symbolic) {
    cc::CharName name = cc::char_name_from_string(name_str);
    Timer t;
    if (symbolic) {
        cc::CharNumRecord rec = cc::charnum_symbolic(name);
        em.emit(record("charnum", {{"name", name_str}, {"degree", "d"}},
                       rec.value.str(), "pipeline:" + name_str, t));
    } else {
        if (degree < cc::min_degree(name))
            throw UsageError("charnum " + name_str + ": formula applies only for d >= " +
                             std::to_string(cc::min_degree(name)));
        cc::CharNumRecord rec = cc::charnum(name, degree);
        em.emit(record("charnum",
                       {{"name", name_str}, {"degree", std::to_string(degree)}},
                       rec.value.str(), "pipeline:" + name_str, t));
    }
}

void emit_char_row(Emitter& em, cc::CharNumbers& ev, cc::CharName name, long d,
                   const Timer& t) {
    std::string n = cc::to_string(name);
    em.emit(record("table",
                   {{"name", n}, {"degree", std::to_string(d)}},
                   ev.value(name).str(), "pipeline:" + n, t),
            n);
}

void run_table_quartics(Emitter& em) {
    Timer t;
    cc::CharNumbers ev = cc::CharNumbers::numeric(4);
    for (cc::CharName name : cc::all_char_names()) emit_char_row(em, ev, name, 4, t);
    // audit block: affine-map counts and boundary-correction totals
    const std::vector<std::pair<std::string, cc::ExcessName>> ex = {
        {"excess:node2", cc::ExcessName::Node2},
        {"excess:node2_line", cc::ExcessName::Node2Line},
        {"excess:cusp2", cc::ExcessName::Cusp2},
        {"excess:node3", cc::ExcessName::Node3}};
    for (const auto& [label, name] : ex)
        em.emit(record("table", {{"audit", label}, {"degree", "4"}},
                       ev.excess(name).str(), label, t),
                label);
    const std::vector<cc::CharName> piped = {cc::CharName::N2, cc::CharName::N21,
                                             cc::CharName::K2, cc::CharName::N3};
    for (cc::CharName name : piped) {
        std::string label = "boundary_total:" + cc::to_string(name);
        em.emit(record("table", {{"audit", label}, {"degree", "4"}},
                       ev.audit(name).boundary_total().str(), label, t),
                label);
    }
}

void run_table_general(Emitter& em, const std::string& range) {
    long lo = 0, hi = 0;
    {
        auto pos = range.find("..");
        try {
            if (pos == std::string::npos) throw std::invalid_argument("no '..'");
            lo = std::stol(range.substr(0, pos));
            hi = std::stol(range.substr(pos + 2));
        } catch (const std::exception&) {
            throw UsageError("table: bad --degree-range '" + range + "', expected a..b");
        }
    }
    if (lo < 1 || hi < lo)
        throw UsageError("table: invalid range " + std::to_string(lo) + ".." + std::to_string(hi));
    Timer t;
    for (long d = lo; d <= hi; ++d) {
        cc::CharNumbers ev = cc::CharNumbers::numeric(d);
        for (cc::CharName name : cc::all_char_names()) {
            if (d < cc::min_degree(name)) continue;
            emit_char_row(em, ev, name, d, t);
        }
    }
}

void run_genus(Emitter& em, long degree) {
    if (degree < 1) throw UsageError("genus: degree must be >= 1");
    Timer t;
    em.emit(record("genus", {{"degree", std::to_string(degree)}},
                   cc::genus_smooth(degree).str(), "chi=3d-d^2", t));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumerative counts of singular plane curves"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "Output format: plain, json, csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    std::string cache_flag;
    app.add_option("--cache", cache_flag,
                   "Memo cache file for n_d (or env CURVECOUNT_CACHE)");

    auto* nd_cmd = app.add_subcommand("nd", "Rational-curve count n_d");
    long nd_degree = 0;
    std::string nd_method = "recursion";
    nd_cmd->add_option("--degree", nd_degree, "Curve degree")->required();
    nd_cmd->add_option("--method", nd_method, "recursion, unsym, classical, or all")
        ->check(CLI::IsMember({"recursion", "unsym", "classical", "all"}));

    auto* cn_cmd = app.add_subcommand("charnum", "Characteristic number of singular curves");
    std::string cn_name;
    long cn_degree = 0;
    bool cn_symbolic = false;
    cn_cmd->add_option("name", cn_name, "One of N1 N11 K1 K11 T1 N2 N21 K2 N3")->required();
    auto* cn_deg_opt = cn_cmd->add_option("--degree", cn_degree, "Curve degree");
    cn_cmd->add_flag("--symbolic", cn_symbolic, "Emit the closed-form polynomial in d")
        ->excludes(cn_deg_opt);

    auto* tb_cmd = app.add_subcommand("table", "Emit a full table of characteristic numbers");
    std::string tb_which;
    std::string tb_range = "3..5";
    tb_cmd->add_option("which", tb_which, "quartics or general")
        ->required()
        ->check(CLI::IsMember({"quartics", "general"}));
    tb_cmd->add_option("--degree-range", tb_range, "Degree range a..b (general only)");

    auto* gn_cmd = app.add_subcommand("genus", "Genus of a smooth plane curve");
    long gn_degree = 0;
    gn_cmd->add_option("--degree", gn_degree, "Curve degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    Emitter em;
    try {
        em.format = cc::format_from_string(format);
        if (nd_cmd->parsed()) {
            run_nd(em, nd_degree, nd_method, cache_path(cache_flag));
        } else if (cn_cmd->parsed()) {
            if (!cn_symbolic && cn_deg_opt->count() == 0)
                throw UsageError("charnum: need --degree or --symbolic");
            run_charnum(em, cn_name, cn_degree, cn_symbolic);
        } else if (tb_cmd->parsed()) {
            if (tb_which == "quartics")
                run_table_quartics(em);
            else
                run_table_general(em, tb_range);
        } else if (gn_cmd->parsed()) {
            run_genus(em, gn_degree);
        }
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
