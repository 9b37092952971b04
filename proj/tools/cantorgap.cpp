#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cantorgap/difference.hpp"
#include "cantorgap/family.hpp"
#include "cantorgap/json_io.hpp"
#include "cantorgap/report.hpp"

namespace fs = std::filesystem;
using namespace cantorgap;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string spec_path;
    std::string family_name;
    int max_stage = 8;
    std::size_t budget = Budget{}.max_components;
    std::string out_dir;
    std::string format = "json";
    bool plot_data = false;
    std::string theorem;
    int chain_depth = 6;
    int k_max = 6;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FamilySpec load_family(const RunConfig& cfg) {
    if (!cfg.spec_path.empty() && !cfg.family_name.empty()) throw UsageError("give either --spec or --family, not both");
    if (!cfg.spec_path.empty()) {
        std::ifstream in(cfg.spec_path);
        if (!in) throw UsageError("cannot read spec file " + cfg.spec_path);
        std::stringstream text;
        text << in.rdbuf();
        try {
            return parse_family_spec(text.str());
        } catch (const SpecError& e) {
            throw SpecError(cfg.spec_path + ": " + e.what());
        }
    }
    if (!cfg.family_name.empty()) {
        for (const auto& [name, spec] : builtin_families()) {
            if (name == cfg.family_name) return spec;
        }
        throw UsageError("unknown built-in family " + cfg.family_name);
    }
    throw UsageError("a family is required: --spec <file> or --family <name>");
}

// Tree families have 2^n components at stage n.
int clamp_stage(const FamilySpec& spec, const RunConfig& cfg) {
    int n = cfg.max_stage;
    if (n < 0) throw UsageError("--max-stage must be non-negative");
    if (!spec.is_tree()) return n;
    int fit = 0;
    while (fit < 62 && (std::size_t{1} << (fit + 1)) <= cfg.budget) ++fit;
    if (n > fit) {
        std::fprintf(stderr, "warning: max stage %d needs 2^%d components, budget is %zu; clamped to %d\n", n, n,
                     cfg.budget, fit);
        n = fit;
    }
    return n;
}

fs::path out_path(const RunConfig& cfg, const std::string& file) {
    fs::path dir = cfg.out_dir.empty() ? fs::path(".") : fs::path(cfg.out_dir);
    fs::create_directories(dir);
    return dir / file;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

// Report text goes to --out when given, stdout otherwise.
void emit(const RunConfig& cfg, const std::string& file, const std::string& text) {
    if (cfg.out_dir.empty()) {
        std::cout << text;
    } else {
        write_file(out_path(cfg, file), text);
    }
}

std::string rat_cols(const Rational& r) { return r.str() + "," + r.to_decimal(20); }

int cmd_construct(const RunConfig& cfg) {
    const FamilySpec spec = load_family(cfg);
    const int N = clamp_stage(spec, cfg);
    const Budget budget{cfg.budget};
    for (int n = 0; n <= N; ++n) {
        const CantorStage s = spec.stage(n, budget);
        write_file(out_path(cfg, "stage_" + std::to_string(n) + ".json"), to_json(s).dump(2) + "\n");
        std::string csv = "address,lo,hi,stage_created\n";
        for (const auto& row : gap_table(s)) {
            csv += row.address + "," + row.lo.str() + "," + row.hi.str() + "," + std::to_string(row.stage_created) + "\n";
        }
        write_file(out_path(cfg, "gaps_" + std::to_string(n) + ".csv"), csv);
    }
    return 0;
}

int cmd_diff_bounds(const RunConfig& cfg) {
    const FamilySpec spec = load_family(cfg);
    const int N = clamp_stage(spec, cfg);
    const Budget budget{cfg.budget};
    json rows = json::array();
    std::string csv = "n,m_inner,m_inner_decimal,m_outer,m_outer_decimal,m_missing_outer,m_missing_outer_decimal,"
                      "point_parts\n";
    std::string dat = "# n m_inner m_outer m_missing_outer\n";
    bool ordered = true;
    for (int n = 0; n <= N; ++n) {
        const DiffBracket br = diff_bracket(spec.stage(n, budget));
        const Rational mi = measure(br.inner);
        const Rational mo = measure(br.outer);
        const Rational mm = measure(br.missing_outer);
        ordered = ordered && !(mo < mi);
        rows.push_back(to_json(br));
        csv += std::to_string(n) + "," + rat_cols(mi) + "," + rat_cols(mo) + "," + rat_cols(mm) + "," +
               std::to_string(point_part_count(br.missing_outer)) + "\n";
        dat += std::to_string(n) + " " + mi.to_decimal(20) + " " + mo.to_decimal(20) + " " + mm.to_decimal(20) + "\n";
    }
    if (cfg.format == "csv") {
        emit(cfg, "diff_bounds.csv", csv);
    } else {
        emit(cfg, "diff_bounds.json", json{{"family", family_to_json(spec)}, {"max_stage", N}, {"stages", rows}}.dump(2) + "\n");
    }
    if (cfg.plot_data) write_file(out_path(cfg, "diff_bounds.dat"), dat);
    if (!ordered) {
        std::fprintf(stderr, "assertion failed: m(inner) > m(outer) at some stage\n");
        return 1;
    }
    return 0;
}

int cmd_measure_scan(const RunConfig& cfg) {
    const FamilySpec spec = load_family(cfg);
    const int N = clamp_stage(spec, cfg);
    const std::vector<MeasureRow> rows = measure_scan(spec, N, Budget{cfg.budget});
    json list = json::array();
    std::string csv = "n,measure,measure_decimal,max_component,max_component_decimal,components,missing_central,"
                      "missing_central_decimal,missing_total,missing_total_decimal,outer,outer_decimal\n";
    std::string dat = "# n measure max_component missing_central missing_total outer\n";
    for (const auto& r : rows) {
        list.push_back({{"n", r.n},
                        {"measure", r.set_measure.str()},
                        {"max_component", r.max_component.str()},
                        {"components", r.components},
                        {"missing_central", r.missing_central.str()},
                        {"missing_total", r.missing_total.str()},
                        {"outer", r.outer_measure.str()}});
        csv += std::to_string(r.n) + "," + rat_cols(r.set_measure) + "," + rat_cols(r.max_component) + "," +
               std::to_string(r.components) + "," + rat_cols(r.missing_central) + "," + rat_cols(r.missing_total) +
               "," + rat_cols(r.outer_measure) + "\n";
        dat += std::to_string(r.n) + " " + r.set_measure.to_decimal(20) + " " + r.max_component.to_decimal(20) + " " +
               r.missing_central.to_decimal(20) + " " + r.missing_total.to_decimal(20) + " " +
               r.outer_measure.to_decimal(20) + "\n";
    }
    if (cfg.format == "csv") {
        emit(cfg, "measure_scan.csv", csv);
    } else {
        emit(cfg, "measure_scan.json", json{{"family", family_to_json(spec)}, {"max_stage", N}, {"rows", list}}.dump(2) + "\n");
    }
    if (cfg.plot_data) write_file(out_path(cfg, "measure_scan.dat"), dat);
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const FamilySpec spec = load_family(cfg);
    VerifyOptions opts;
    opts.max_stage = clamp_stage(spec, cfg);
    opts.budget = Budget{cfg.budget};
    opts.chain_depth = cfg.chain_depth;
    opts.t13_k_max = cfg.k_max;
    const Verdict v = verify(cfg.theorem, spec, opts);
    if (cfg.format == "csv") {
        std::string csv = "assertion,status\n";
        for (const auto& a : v.assertions) csv += "\"" + a.name + "\"," + status_name(a.status) + "\n";
        emit(cfg, "verify_" + cfg.theorem + ".csv", csv);
    } else {
        emit(cfg, "verify_" + cfg.theorem + ".json", v.to_json().dump(2) + "\n");
    }
    for (const auto& a : v.assertions) {
        if (a.status != Status::Pass) std::fprintf(stderr, "%s: %s\n", status_name(a.status), a.name.c_str());
    }
    return v.passed() ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--spec", cfg.spec_path, "Family spec file (JSON)");
    sub->add_option("--family", cfg.family_name, "Built-in family: central-1/3, central-1/2, perturbed, tab, greedy");
    sub->add_option("--max-stage", cfg.max_stage, "Highest stage n")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "Maximum number of components per stage")->capture_default_str();
    sub->add_option("--out", cfg.out_dir, "Output directory");
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_flag("--plot-data", cfg.plot_data, "Also write gnuplot-style .dat files");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-stage analysis of Cantor sets and their gap-difference sets"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* construct = app.add_subcommand("construct", "Write stage JSON and gap-table CSV for n <= max stage");
    CLI::App* diff = app.add_subcommand("diff-bounds", "Inner/outer brackets of C^c - C per stage");
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a theorem verification suite");
    CLI::App* scan = app.add_subcommand("measure-scan", "Per-stage measure table");
    for (CLI::App* sub : {construct, diff, verify_cmd, scan}) add_common(sub, cfg);
    verify_cmd->add_option("--theorem", cfg.theorem, "Suite selector")
        ->required()
        ->check(CLI::IsMember(verify_selectors()));
    verify_cmd->add_option("--chain-depth", cfg.chain_depth, "Chain depth for tamc")->capture_default_str();
    verify_cmd->add_option("--k-max", cfg.k_max, "Largest k for t13")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*construct) return cmd_construct(cfg);
        if (*diff) return cmd_diff_bounds(cfg);
        if (*verify_cmd) return cmd_verify(cfg);
        return cmd_measure_scan(cfg);
    } catch (const SpecError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "error: budget exceeded: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
