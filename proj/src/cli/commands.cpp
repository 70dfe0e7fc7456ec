#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "ptosc/cli.hpp"
#include "ptosc/errors.hpp"

namespace ptosc::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool wants(const SweepConfig& config, Method m) {
    return std::find(config.methods.begin(), config.methods.end(), m) != config.methods.end();
}

std::vector<double> default_phases(std::size_t steps) {
    std::vector<double> out(steps);
    for (std::size_t k = 0; k < steps; ++k) out[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(steps - 1);
    return out;
}

struct Point {
    double eta;
    ModelParams params;
};

std::vector<Point> sweep_points(const SweepConfig& config) {
    std::vector<Point> out;
    if (config.raw) {
        const auto& r = *config.raw;
        const ModelParams p = make_params(r.m1_sq, r.m2_sq, r.mu_sq, r.p);
        out.push_back({p.eta(), p});
        return out;
    }
    if (!(config.ratio > 0.0 && config.ratio < 1.0)) throw ConfigError("--ratio must lie in (0, 1)");
    if (!(config.mass_sum > 0.0)) throw ConfigError("--mass-sum must be positive");
    for (double eta : config.etas) {
        if (!(eta >= 0.0) || !std::isfinite(eta)) throw ConfigError("eta values must be finite and >= 0");
        out.push_back({eta, params_from_eta(eta, config.ratio, config.mass_sum)});
    }
    return out;
}

}  // namespace

Table cmd_probabilities(const SweepConfig& config) {
    const std::vector<double> phases = config.phases.empty() ? default_phases(64) : config.phases;
    const bool closed = wants(config, Method::closed_form);
    const bool trace = wants(config, Method::trace);
    const bool herm = wants(config, Method::hermitian);
    const bool naive = wants(config, Method::naive_continuation);

    Table table;
    table.columns = {"eta", "phase"};
    if (closed) table.columns.insert(table.columns.end(), {"pt_survival", "pt_transition"});
    if (trace) table.columns.insert(table.columns.end(), {"trace_survival", "trace_transition"});
    if (herm) table.columns.insert(table.columns.end(), {"herm_survival", "herm_transition"});
    if (naive) table.columns.push_back("naive_transition");

    for (const Point& point : sweep_points(config)) {
        std::optional<EigenSystem> es;
        if (trace || naive) es = eigensystem(point.params);
        for (double phase : phases) {
            auto& row = table.rows.emplace_back();
            row.emplace_back(point.eta);
            row.emplace_back(phase);
            if (closed) {
                const double tr = transition_closed_form(point.eta, phase);
                row.emplace_back(1.0 - tr);
                row.emplace_back(tr);
            }
            if (trace) {
                const double dt = 2.0 * phase / es->delta_omega();
                const double t = config.t0 + dt;
                row.emplace_back(probability_trace(Flavour::one, Flavour::one, config.t0, t, *es).value);
                row.emplace_back(probability_trace(Flavour::one, Flavour::two, config.t0, t, *es).value);
            }
            if (herm) {
                const double tr = transition_hermitian(point.eta, phase);
                row.emplace_back(1.0 - tr);
                row.emplace_back(tr);
            }
            if (naive) row.emplace_back(transition_naive_continuation(point.eta, phase));
        }
    }
    return table;
}

Table cmd_masses(const SweepConfig& config) {
    Table table;
    table.columns = {"eta", "pt_m_plus_sq", "pt_m_minus_sq", "herm_m_plus_sq", "herm_m_minus_sq"};
    for (const Point& point : sweep_points(config)) {
        const double sum = point.params.m1_sq() + point.params.m2_sq();
        auto& row = table.rows.emplace_back();
        row.emplace_back(point.eta);
        try {
            const MassSpectrum s = mass_spectrum(point.params);
            row.emplace_back(s.m_plus_sq / sum);
            row.emplace_back(s.m_minus_sq / sum);
        } catch (const DomainError& e) {
            if (e.kind() != ErrorKind::BrokenPTPhase) throw;
            row.emplace_back(std::nullopt);
            row.emplace_back(std::nullopt);
        }
        const EigenvaluePair h = hermitian_mass_eigenvalues(point.params);
        row.emplace_back(h.plus / sum);
        row.emplace_back(h.minus / sum);
    }
    return table;
}

Table cmd_cardioid(const SweepConfig& config) {
    const std::vector<double> phases = config.phases.empty() ? default_phases(73) : config.phases;
    const std::vector<double> etas = config.etas.empty() ? std::vector<double>{0.1, 0.5, 0.9} : config.etas;
    Table table;
    table.columns = {"eta", "phase", "r", "r_ratio"};
    for (double eta : etas) {
        if (!(eta >= 0.0)) throw ConfigError("eta values must be >= 0");
        for (double phase : phases) {
            auto& row = table.rows.emplace_back();
            row.emplace_back(eta);
            row.emplace_back(phase);
            row.emplace_back(cardioid_r(phase, eta));
            row.emplace_back(cardioid_ratio(phase, eta));
        }
    }
    return table;
}

ValidateResult cmd_validate(const SweepConfig& config) {
    const ModelParams params = config.raw ? make_params(config.raw->m1_sq, config.raw->m2_sq, config.raw->mu_sq, config.raw->p)
                                          : make_params(2.0, 1.0, 0.3, 0.0);
    oracle::OracleGrid grid = oracle::default_grid();
    if (!config.etas.empty()) grid.etas = config.etas;
    grid.tolerance = config.tolerance;

    ValidateResult result;
    result.reports = oracle::check_all(params, grid);
    result.table.columns = {"check", "max_abs_error", "tolerance", "passed", "grid_size"};
    for (const auto& r : result.reports) {
        result.table.rows.push_back({Cell{r.check_name}, Cell{r.max_abs_error}, Cell{r.tolerance}, Cell{r.passed},
                                     Cell{r.grid_size}});
    }
    result.exit_code = oracle::all_passed(result.reports) ? kExitSuccess : kExitValidationFailure;
    return result;
}

namespace {

const std::vector<std::string> kSubcommands{"probabilities", "masses", "cardioid", "validate"};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Splices `key = value` lines from --config into the argument list right after
// the subcommand, so explicit flags (which come later) take precedence.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config") {
            if (k + 1 >= args.size()) throw ConfigError("--config requires a path");
            path = args[k + 1];
        } else if (args[k].rfind("--config=", 0) == 0) {
            path = args[k].substr(9);
        }
    }
    if (!path) return args;

    std::vector<std::string> injected;
    for (const auto& [key, value] : parse_config_text(read_file(*path))) {
        if (key == "config") throw ConfigError("config files cannot include other config files");
        if (key == "json") {
            if (value == "true" || value == "1") injected.push_back("--json");
            continue;
        }
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) {
        return std::find(kSubcommands.begin(), kSubcommands.end(), a) != kSubcommands.end();
    });
    if (sub == args.end()) return args;
    args.insert(sub + 1, injected.begin(), injected.end());
    return args;
}

struct RawOptions {
    std::string eta;
    std::string phase;
    double t0{0.0};
    double ratio{0.5};
    double mass_sum{1.0};
    std::string methods;
    std::string format{"csv"};
    std::string output{"stdout"};
    std::string raw_params;
    std::string config;
    std::optional<double> tolerance;
    bool json{false};
};

void add_common(CLI::App* cmd, RawOptions& o) {
    cmd->add_option("--eta", o.eta, "eta value, list a,b,c or range min:max:steps");
    cmd->add_option("--phase", o.phase, "phase grid in radians, min:max:steps");
    cmd->add_option("--t0", o.t0, "preparation time for the trace method");
    cmd->add_option("--ratio", o.ratio, "(m1^2 - m2^2)/(m1^2 + m2^2) for eta sweeps");
    cmd->add_option("--mass-sum", o.mass_sum, "m1^2 + m2^2 for eta sweeps");
    cmd->add_option("--methods", o.methods, "closed_form,trace,hermitian,naive_continuation");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", o.output, "output path, or stdout");
    cmd->add_option("--raw-params", o.raw_params, "m1sq,m2sq,musq,p instead of an eta sweep");
    cmd->add_option("--config", o.config, "flat key = value file; flags override it");
    cmd->add_option("--tolerance", o.tolerance, "override every validation tolerance");
    cmd->add_flag("--json", o.json, "emit JSON");
}

SweepConfig to_config(const RawOptions& o, const std::string& default_eta) {
    SweepConfig c;
    const std::string eta = o.eta.empty() ? default_eta : o.eta;
    if (!eta.empty()) c.etas = parse_values(eta);
    if (!o.phase.empty()) c.phases = parse_values(o.phase);
    c.t0 = o.t0;
    c.ratio = o.ratio;
    c.mass_sum = o.mass_sum;
    if (!o.methods.empty()) c.methods = parse_methods(o.methods);
    c.format = (o.format == "json" || o.json) ? Format::json : Format::csv;
    c.output = o.output;
    if (!o.raw_params.empty()) c.raw = parse_raw_params(o.raw_params);
    c.tolerance = o.tolerance;
    if (!std::isfinite(c.t0)) throw ConfigError("--t0 must be finite");
    return c;
}

template <class F>
void with_output(const SweepConfig& config, std::ostream& out, F&& write) {
    if (config.output == "stdout" || config.output == "-") {
        write(out);
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw ConfigError("cannot open output '" + config.output + "'");
    write(file);
}

void emit(const Table& table, const SweepConfig& config, std::ostream& out) {
    with_output(config, out, [&](std::ostream& os) {
        if (config.format == Format::json) {
            write_json(table, os);
        } else {
            write_csv(table, os);
        }
    });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Oscillation probabilities for a PT-symmetric non-Hermitian two-state system", "ptosc"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    RawOptions opts;
    CLI::App* probabilities = app.add_subcommand("probabilities", "survival/transition probabilities on an eta x phase grid");
    CLI::App* masses = app.add_subcommand("masses", "squared eigenmasses of both models versus eta");
    CLI::App* cardioid = app.add_subcommand("cardioid", "time-dependent Dirac norm r(phase)");
    CLI::App* validate = app.add_subcommand("validate", "run the brute-force oracle checks");
    for (CLI::App* cmd : {probabilities, masses, cardioid, validate}) add_common(cmd, opts);

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = merge_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (probabilities->parsed()) {
            const SweepConfig c = to_config(opts, "0:0.95:20");
            emit(cmd_probabilities(c), c, out);
        } else if (masses->parsed()) {
            const SweepConfig c = to_config(opts, "0:2:81");
            emit(cmd_masses(c), c, out);
        } else if (cardioid->parsed()) {
            const SweepConfig c = to_config(opts, "0.1,0.5,0.9");
            emit(cmd_cardioid(c), c, out);
        } else if (validate->parsed()) {
            const SweepConfig c = to_config(opts, "");
            const ValidateResult r = cmd_validate(c);
            const bool json = c.format == Format::json;
            std::ostream& human = json ? err : out;
            if (json) {
                emit(r.table, c, out);
            } else {
                with_output(c, out, [&](std::ostream& os) { write_text(r.table, os); });
            }
            std::size_t passed = 0;
            for (const auto& rep : r.reports) passed += rep.passed ? 1 : 0;
            if (json) write_text(r.table, human);
            human << passed << "/" << r.reports.size() << " checks passed\n";
            return r.exit_code;
        }
        return kExitSuccess;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        app.exit(e, os, os);
        err << os.str();
        return e.get_exit_code() == 0 ? kExitSuccess : kExitBadConfig;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadConfig;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        if (e.kind() == ErrorKind::ExceptionalPoint || e.kind() == ErrorKind::BrokenPTPhase) return kExitDomainError;
        if (e.kind() == ErrorKind::NonRealTrace) return kExitValidationFailure;
        return kExitBadConfig;
    }
}

}  // namespace ptosc::cli
