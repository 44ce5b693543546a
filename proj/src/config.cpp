#include "tqre/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tqre/errors.hpp"

namespace tqre {

namespace {

struct Section {
    std::map<std::string, std::string> values;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    return s.substr(a, b - a + 1);
}

std::map<std::string, Section> tokenize(const std::string& text) {
    std::map<std::string, Section> sections;
    std::istringstream in(text);
    std::string line;
    std::string current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) {
            continue;
        }
        if (stripped.front() == '[') {
            if (stripped.back() != ']') {
                throw ConfigError("config line " + std::to_string(lineno) +
                                  ": unterminated section header");
            }
            current = trim(stripped.substr(1, stripped.size() - 2));
            sections[current];
            continue;
        }
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        if (current.empty()) {
            throw ConfigError("config line " + std::to_string(lineno) + ": key outside a section");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (!sections[current].values.emplace(key, value).second) {
            throw ConfigError("config section [" + current + "]: duplicate key '" + key + "'");
        }
    }
    return sections;
}

// Tracks which keys were consumed so leftovers can be reported as typos.
class SectionReader {
public:
    SectionReader(const std::string& name, const Section* section)
        : name_(name), section_(section) {}

    bool has(const std::string& key) const {
        return section_ && section_->values.count(key) > 0;
    }

    double number(const std::string& key, double fallback) {
        if (!has(key)) {
            return fallback;
        }
        consumed_.insert(key);
        const std::string& raw = section_->values.at(key);
        try {
            size_t pos = 0;
            double v = std::stod(raw, &pos);
            if (trim(raw.substr(pos)).empty()) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw ConfigError("config section [" + name_ + "] key '" + key + "': not a number ('" +
                          raw + "')");
    }

    std::string text(const std::string& key, const std::string& fallback) {
        if (!has(key)) {
            return fallback;
        }
        consumed_.insert(key);
        return section_->values.at(key);
    }

    void finish() const {
        if (!section_) {
            return;
        }
        for (const auto& [key, value] : section_->values) {
            if (!consumed_.count(key)) {
                throw ConfigError("config section [" + name_ + "]: unknown key '" + key + "'");
            }
        }
    }

private:
    std::string name_;
    const Section* section_;
    std::set<std::string> consumed_;
};

std::vector<double> parse_grid(const std::string& name, const std::string& raw) {
    std::vector<double> grid;
    std::istringstream in(raw);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) {
            continue;
        }
        try {
            grid.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("config [sweep] key '" + name + "': bad grid entry '" + item + "'");
        }
    }
    if (grid.empty()) {
        throw ConfigError("config [sweep] key '" + name + "': empty grid");
    }
    return grid;
}

std::optional<SweepParam> parse_sweep_param(const std::string& name) {
    for (SweepParam p : {SweepParam::WExp, SweepParam::WMul, SweepParam::RSep,
                         SweepParam::MaxFactories, SweepParam::CodeDistance,
                         SweepParam::GhzGridSpacing, SweepParam::PipelineCopies}) {
        if (name == sweep_param_name(p)) {
            return p;
        }
    }
    return std::nullopt;
}

void read_sweep_section(SectionReader& r, SweepSpec& sweep) {
    const std::string objective = r.text("objective", "spacetime_volume");
    if (objective == "spacetime_volume") {
        sweep.objective = Objective::SpacetimeVolume;
    } else if (objective == "runtime") {
        sweep.objective = Objective::Runtime;
    } else if (objective == "qubits") {
        sweep.objective = Objective::Qubits;
    } else {
        throw ConfigError(
            "config [sweep] key 'objective': expected spacetime_volume|runtime|qubits, got '" +
            objective + "'");
    }
    const double cap = r.number("qubit_cap", 0.0);
    if (cap > 0.0) {
        sweep.qubit_cap = cap;
    }
    sweep.grid_refine = r.number("grid_refine", sweep.grid_refine ? 1.0 : 0.0) != 0.0;
    const std::string pairs = r.text("pairs", "");
    if (!pairs.empty()) {
        sweep.pairs.clear();
        std::istringstream in(pairs);
        std::string entry;
        while (std::getline(in, entry, ',')) {
            entry = trim(entry);
            if (entry.empty()) {
                continue;
            }
            std::vector<SweepParam> pair;
            std::istringstream pin(entry);
            std::string name;
            while (std::getline(pin, name, ':')) {
                auto p = parse_sweep_param(trim(name));
                if (!p) {
                    throw ConfigError("config [sweep] key 'pairs': unknown parameter '" +
                                      trim(name) + "'");
                }
                pair.push_back(*p);
            }
            if (pair.empty() || pair.size() > 2) {
                throw ConfigError("config [sweep] key 'pairs': entry '" + entry +
                                  "' must name one or two parameters");
            }
            sweep.pairs.push_back(pair);
        }
    }
    for (SweepParam p : {SweepParam::WExp, SweepParam::WMul, SweepParam::RSep,
                         SweepParam::MaxFactories, SweepParam::CodeDistance,
                         SweepParam::GhzGridSpacing, SweepParam::PipelineCopies}) {
        const std::string key = std::string(sweep_param_name(p)) + "_grid";
        if (r.has(key)) {
            sweep.grids[static_cast<size_t>(p)] = parse_grid(key, r.text(key, ""));
        }
    }
}

} // namespace

RunConfig parse_config(const std::string& text) {
    const std::map<std::string, Section> sections = tokenize(text);

    static const std::set<std::string> known = {"physical",  "error_model", "algorithm",
                                                "factory",   "lookup",      "sweep"};
    for (const auto& [name, section] : sections) {
        if (!known.count(name)) {
            throw ConfigError("config: unknown section [" + name + "]");
        }
    }
    if (!sections.count("physical")) {
        throw ConfigError("config: missing required section [physical]");
    }
    if (!sections.count("algorithm")) {
        throw ConfigError("config: missing required section [algorithm]");
    }

    auto section_of = [&](const std::string& name) -> const Section* {
        auto it = sections.find(name);
        return it == sections.end() ? nullptr : &it->second;
    };

    RunConfig cfg;

    {
        SectionReader r("physical", section_of("physical"));
        cfg.physical.site_spacing_m = r.number("site_spacing_um", 12.0) * 1e-6;
        cfg.physical.acceleration_m_s2 = r.number("acceleration_m_s2", 5500.0);
        cfg.physical.gate_time_s = r.number("gate_time_us", 1.0) * 1e-6;
        cfg.physical.measure_time_s = r.number("measure_time_us", 500.0) * 1e-6;
        cfg.physical.decode_time_s = r.number("decode_time_us", 500.0) * 1e-6;
        cfg.physical.reaction_time_s = r.number("reaction_time_ms", 1.0) * 1e-3;
        cfg.physical.coherence_time_s = r.number("coherence_time_s", 10.0);
        r.finish();
        cfg.physical.validate();
    }
    {
        SectionReader r("error_model", section_of("error_model"));
        cfg.error_model.prefactor_c = r.number("c", 0.1);
        cfg.error_model.lambda = r.number("lambda", 10.0);
        cfg.error_model.p_phys = r.number("p_phys", 1e-3);
        cfg.error_model.p_thres = r.number("p_thres", 1e-2);
        cfg.error_model.alpha = r.number("alpha", 1.0 / 6.0);
        r.finish();
        cfg.error_model.validate();
    }
    {
        SectionReader r("algorithm", section_of("algorithm"));
        cfg.algorithm.n_bits = static_cast<long long>(r.number("n_bits", 2048));
        cfg.algorithm.exponent_bits = static_cast<long long>(r.number("exponent_bits", 0));
        cfg.algorithm.w_exp = static_cast<int>(r.number("w_exp", 3));
        cfg.algorithm.w_mul = static_cast<int>(r.number("w_mul", 4));
        cfg.algorithm.r_sep = static_cast<long long>(r.number("r_sep", 96));
        cfg.algorithm.r_pad = static_cast<long long>(r.number("r_pad", 43));
        cfg.algorithm.d = static_cast<int>(r.number("code_distance", 27));
        cfg.algorithm.max_factories = static_cast<int>(r.number("max_factories", 192));
        cfg.algorithm.ccz_budget_fraction = r.number("ccz_budget_fraction", 0.05);
        cfg.algorithm.total_error_budget = r.number("total_error_budget", 0.5);
        cfg.algorithm.storage_density_factor = r.number("storage_density_factor", 1.0);
        cfg.algorithm.storage_se_interval_s = r.number("storage_se_interval_ms", 0.0) * 1e-3;
        r.finish();
    }
    {
        SectionReader r("factory", section_of("factory"));
        const double se = r.number("se_rounds_per_gate", 0.0);
        if (se > 0.0) {
            cfg.factory.fixed_se_rounds = se;
        }
        cfg.factory.floor_fraction = r.number("floor_fraction", 0.1);
        cfg.algorithm.factory_floor_fraction = cfg.factory.floor_fraction;
        cfg.factory.cultivation_copies = static_cast<int>(r.number("cultivation_copies", 8));
        const std::string curve_path = r.text("cultivation_curve_csv", "");
        if (!curve_path.empty()) {
            std::ifstream in(curve_path);
            if (!in) {
                throw ConfigError("config [factory]: cannot open cultivation_curve_csv '" +
                                  curve_path + "'");
            }
            cfg.factory.curve = CultivationCurve::from_csv(in);
        }
        r.finish();
    }
    {
        SectionReader r("lookup", section_of("lookup"));
        cfg.algorithm.ghz_grid_spacing = static_cast<int>(r.number("ghz_grid_spacing", 2));
        cfg.algorithm.pipeline_copies = static_cast<int>(r.number("pipeline_copies", 1));
        const std::string mode = r.text("unlookup_mode", "measured");
        if (mode == "measured") {
            cfg.algorithm.unlookup_mode = UnlookupMode::Measured;
        } else if (mode == "full") {
            cfg.algorithm.unlookup_mode = UnlookupMode::Full;
        } else {
            throw ConfigError("config [lookup] key 'unlookup_mode': expected measured|full, got '" +
                              mode + "'");
        }
        r.finish();
    }
    {
        SectionReader r("sweep", section_of("sweep"));
        read_sweep_section(r, cfg.sweep);
        r.finish();
    }
    return cfg;
}

void apply_sweep_overlay(RunConfig& cfg, const std::string& text) {
    const std::map<std::string, Section> sections = tokenize(text);
    for (const auto& [name, section] : sections) {
        if (name != "sweep") {
            throw ConfigError("sweep spec file: unexpected section [" + name + "]");
        }
    }
    auto it = sections.find("sweep");
    SectionReader r("sweep", it == sections.end() ? nullptr : &it->second);
    read_sweep_section(r, cfg.sweep);
    r.finish();
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

namespace {

std::string format_si(double v) {
    std::ostringstream out;
    out.precision(4);
    if (v >= 1e6) {
        out << v / 1e6 << " million";
    } else {
        out << v;
    }
    return out.str();
}

} // namespace

std::string render_report_markdown(const EstimateReport& report) {
    std::ostringstream out;
    out.precision(4);
    out << "# Resource estimate\n\n";
    if (!report.assumptions.empty()) {
        out << "Assumptions: ";
        for (size_t i = 0; i < report.assumptions.size(); ++i) {
            if (i) out << "; ";
            out << report.assumptions[i];
        }
        out << ".\n\n";
    }
    out << "## Summary\n\n";
    out << "- physical qubits: " << format_si(static_cast<double>(report.total_physical_qubits))
        << " (" << report.total_physical_qubits << ")\n";
    out << "- runtime: " << report.runtime_s / 86400.0 << " days (" << report.runtime_s
        << " s)\n";
    out << "- space-time volume: " << report.spacetime_volume_qubit_s << " qubit-seconds\n";
    out << "- lookup-additions: " << report.lookup_addition_count << "\n";
    out << "- CCZ states: " << report.ccz_count << "\n";
    out << "- total logical error: " << report.total_logical_error << "\n\n";
    out << "## Unit timings\n\n";
    out << "- lookup (with unlookup): " << report.lookup_duration_s << " s\n";
    out << "- addition: " << report.addition_duration_s << " s\n";
    out << "- storage SE interval: " << report.storage_se_interval_s * 1e3 << " ms\n\n";
    out << "## Factory\n\n";
    out << "- code distance: " << report.factory.d << "\n";
    out << "- SE rounds per gate: " << report.factory.se_rounds_per_gate << "\n";
    out << "- T input error: " << report.factory.t_input_error << "\n";
    out << "- CCZ output error: " << report.factory.ccz_output_error << "\n";
    out << "- cycle: " << report.factory.cycle_duration_s * 1e3 << " ms ("
        << report.factory.throughput_ccz_per_s << " CCZ/s)\n";
    out << "- deployed: " << report.factories_deployed << "\n\n";
    out << "## Phase footprint\n\n";
    out << "- lookup phase: " << format_si(static_cast<double>(report.lookup_phase_qubits))
        << " qubits\n";
    out << "- addition phase: " << format_si(static_cast<double>(report.addition_phase_qubits))
        << " qubits\n\n";
    out << "| phase | component | patches | physical qubits | error share |\n";
    out << "|---|---|---|---|---|\n";
    for (const PhaseComponent& row : report.breakdown) {
        out << "| " << row.phase << " | " << row.component << " | " << row.patches << " | "
            << row.physical_qubits << " | " << row.error_share << " |\n";
    }
    out << "\n## Constraints\n\n";
    if (report.constraint_violations.empty()) {
        out << "all satisfied\n";
    } else {
        for (const std::string& v : report.constraint_violations) {
            out << "- VIOLATION: " << v << "\n";
        }
    }
    return out.str();
}

std::string phase_breakdown_csv(const EstimateReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "phase,component,patches,physical_qubits,error_share\n";
    for (const PhaseComponent& row : report.breakdown) {
        out << row.phase << ',' << row.component << ',' << row.patches << ','
            << row.physical_qubits << ',' << row.error_share << '\n';
    }
    return out.str();
}

void emit_layout_csvs(const RunConfig& cfg, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto write = [&](const GadgetLayout& layout, const std::string& name) {
        std::ofstream patches(fs::path(dir) / (name + "_patches.csv"));
        std::ofstream schedule(fs::path(dir) / (name + "_schedule.csv"));
        if (!patches || !schedule) {
            throw ConfigError("cannot write layout CSVs under '" + dir + "'");
        }
        write_layout_csv(layout, name, patches, schedule);
    };
    const int d = cfg.algorithm.d;
    write(maj_block_layout(d), "maj_block");
    write(factory_layout(d, cfg.factory.cultivation_copies), "factory");

    const FanoutLayout fanout = ghz_fanout_layout(cfg.algorithm.n_bits + cfg.algorithm.w_mul,
                                                  cfg.algorithm.ghz_grid_spacing, d);
    GadgetLayout fan;
    const long long patches = fanout.total_patches();
    fan.grid.width = static_cast<int>(std::min<long long>(patches, 64));
    fan.grid.height = static_cast<int>((patches + fan.grid.width - 1) / fan.grid.width);
    fan.schedule = fanout.schedule;
    fan.max_move_dl = fanout.max_move_dl;
    write(fan, "ghz_fanout");
}

} // namespace tqre
