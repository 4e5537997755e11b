#include "cli.hpp"

#include "hball/claims.hpp"
#include "hball/cli_spec.hpp"
#include "hball/format.hpp"
#include "hball/suites.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace hball::cli {

namespace {

struct Common {
    std::uint64_t seed = kDefaultSeed;
    double tol_scale = 1.0;
    std::string json_path;
    std::string csv_path;

    RunOptions options() const {
        RunOptions o;
        o.seed = seed;
        o.tol_scale = tol_scale;
        o.validate();
        return o;
    }
};

void add_common(CLI::App* cmd, Common& c, bool with_csv = true) {
    cmd->add_option("--seed", c.seed, "seed for every randomized check")->capture_default_str();
    cmd->add_option("--tol-scale", c.tol_scale, "multiply every tolerance by this factor")->capture_default_str();
    cmd->add_option("--json", c.json_path, "write the JSON report here ('-' for stdout)");
    if (with_csv) {
        cmd->add_option("--csv", c.csv_path, "write check records as CSV here ('-' for stdout)");
    }
}

// Writes through `body` to stdout for "-", else to the file.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& body) {
    if (path.empty()) {
        return;
    }
    if (path == "-") {
        body(out);
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    body(f);
    if (!f) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

void write_json(const std::string& path, std::ostream& out, const nlohmann::json& j) {
    emit(path, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

std::string csv_number(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

void csv_header(std::ostream& os) { os << "group,name,status,value,lower,upper,tolerance\n"; }

void csv_rows(std::ostream& os, const std::string& group, const std::vector<CheckRecord>& checks) {
    for (const auto& c : checks) {
        const bool na = c.status == CheckStatus::NotApplicable;
        os << group << ',' << c.name << ',' << to_string(c.status) << ',' << (na ? "" : format_real(c.value)) << ','
           << csv_number(c.lower) << ',' << csv_number(c.upper) << ',' << format_real(c.tolerance) << '\n';
    }
}

void print_checks(std::ostream& os, const std::vector<CheckRecord>& checks) {
    for (const auto& c : checks) {
        os << "  " << to_string(c.status) << "  " << c.name;
        if (c.status != CheckStatus::NotApplicable) {
            os << " = " << format_real(c.value);
        }
        if (!c.note.empty()) {
            os << "  [" << c.note << "]";
        }
        os << '\n';
    }
}

std::string summary_line(const AnalysisReport& r) {
    std::string s = r.generator + " tau=" + format_vector(r.tau) + ":";
    s += " null_point=" + std::string(r.null_point.ok ? "ok" : "no");
    s += " alpha=" + (r.alpha.limit ? format_real(*r.alpha.limit) : std::string("n/a")) + " (" +
         to_string(r.alpha.verdict) + ")";
    s += " beta=" + format_real(r.beta.value);
    if (r.beta.suspect_unbounded) {
        s += " (may be -inf)";
    }
    s += " gamma=" + format_real(r.gamma.value);
    s += " fixed_point_free=" + std::string(r.fixed_point_free_flag ? "true" : "false");
    s += " checks=" + std::string(r.pass() ? "pass" : "FAIL");
    return s;
}

int cmd_verify(int id, const Common& c, std::ostream& out) {
    const RunOptions opts = c.options();
    const SuiteReport rep = verify_example(id, opts);
    out << rep.name << '\n';
    print_checks(out, rep.checks);
    for (const auto& a : rep.analyses) {
        out << summary_line(a) << '\n';
        for (const auto& chk : a.checks) {
            if (chk.failed()) {
                print_checks(out, {chk});
            }
        }
    }
    out << rep.name << ": " << (rep.pass() ? "PASS" : "FAIL") << '\n';
    write_json(c.json_path, out, to_json(rep, opts));
    emit(c.csv_path, out, [&](std::ostream& os) {
        csv_header(os);
        csv_rows(os, rep.name, rep.checks);
        for (const auto& a : rep.analyses) {
            csv_rows(os, a.generator + " tau=" + format_vector(a.tau), a.checks);
        }
    });
    return rep.pass() ? kExitPass : kExitCheckFailure;
}

int cmd_analyze(const std::string& gen_text, const std::string& tau_text, const Common& c, std::ostream& out) {
    const RunOptions opts = c.options();
    const BuiltinSpec spec = parse_generator_spec(gen_text);
    const BoundaryPoint tau = parse_boundary_point(tau_text, spec.dim);
    AnalysisConfig cfg;
    cfg.seed = opts.seed;
    cfg.tol_scale = opts.tol_scale;
    const AnalysisReport rep = analyze(builtin_generator(spec), builtin_semigroup(spec), tau, cfg);
    out << summary_line(rep) << '\n';
    write_json(c.json_path, out, to_json(rep));
    emit(c.csv_path, out, [&](std::ostream& os) {
        csv_header(os);
        csv_rows(os, rep.generator, rep.checks);
    });
    return rep.pass() ? kExitPass : kExitCheckFailure;
}

struct FlowArgs {
    std::string generator;
    std::string x0;
    double t_end = 1.0;
    int steps = 50;
    bool compare = false;
    double rel_tol = IntegratorConfig{}.rel_tol;
};

int cmd_flow(const FlowArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    const RunOptions opts = c.options();
    const BuiltinSpec spec = parse_generator_spec(a.generator);
    const BallPoint x0 = parse_ball_point(a.x0, spec.dim);
    if (!(a.t_end > 0.0 && a.t_end <= kMaxFlowTime)) {
        throw UsageError("--t-end must lie in (0, 50]");
    }
    if (a.steps < 1) {
        throw UsageError("--steps must be positive");
    }
    IntegratorConfig cfg;
    cfg.rel_tol = a.rel_tol;
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    std::vector<double> times;
    for (int k = 1; k <= a.steps; ++k) {
        times.push_back(a.t_end * k / a.steps);
    }
    Trajectory traj;
    try {
        traj = integrate_flow(builtin_generator(spec), x0, times, cfg);
    } catch (const BallExit& e) {
        err << "flow left the ball: " << e.what() << '\n';
        return kExitCheckFailure;
    } catch (const StepLimitExceeded& e) {
        err << "step limit exceeded: " << e.what() << '\n';
        return kExitCheckFailure;
    }

    std::optional<std::vector<double>> deviation;
    double worst = 0.0;
    if (a.compare) {
        const Semigroup closed = builtin_semigroup(spec);
        deviation.emplace();
        for (const auto& s : traj.samples) {
            deviation->push_back(distance(s.x.vec(), closed.evaluate(s.t, x0)));
            worst = std::max(worst, deviation->back());
        }
    }
    const std::string path = c.csv_path.empty() ? "-" : c.csv_path;
    emit(path, out, [&](std::ostream& os) {
        if (deviation) {
            write_trajectory_csv(os, traj, std::span<const double>(*deviation));
        } else {
            write_trajectory_csv(os, traj);
        }
    });
    const double tol = std::max(10.0 * cfg.rel_tol, 1e-6) * opts.tol_scale;
    if (!c.json_path.empty()) {
        const auto& d = traj.diagnostics;
        nlohmann::json j{{"schema", "hball.flow_report/1"},
                         {"version", kVersion},
                         {"inputs",
                          {{"generator", generator_spec_text(spec)},
                           {"x0", format_vector(x0.vec())},
                           {"t_end", a.t_end},
                           {"steps", a.steps},
                           {"rel_tol", cfg.rel_tol}}},
                         {"final_state", format_vector(traj.final_state().vec())},
                         {"diagnostics",
                          {{"accepted", d.accepted_steps},
                           {"rejected", d.rejected_steps},
                           {"boundary_halvings", d.boundary_halvings},
                           {"evaluations", d.evaluations},
                           {"min_boundary_margin", d.min_boundary_margin}}}};
        if (deviation) {
            j["max_deviation"] = worst;
            j["tolerance"] = tol;
            j["pass"] = worst <= tol;
        }
        write_json(c.json_path, out, j);
    }
    if (deviation && !(worst <= tol)) {
        err << "max deviation from the closed form " << format_real(worst) << " exceeds " << format_real(tol) << '\n';
        return kExitCheckFailure;
    }
    return kExitPass;
}

int cmd_suite(const Common& c, bool serial, std::ostream& out) {
    RunOptions opts = c.options();
    opts.parallel = !serial;
    const auto results = run_acceptance(opts);
    bool all = true;
    for (const auto& r : results) {
        out << criterion_line(r) << '\n';
        all = all && r.pass();
    }
    out << (all ? "suite: PASS" : "suite: FAIL") << '\n';
    write_json(c.json_path, out, acceptance_json(results, opts));
    emit(c.csv_path, out, [&](std::ostream& os) {
        csv_header(os);
        for (const auto& r : results) {
            csv_rows(os, "criterion" + std::to_string(r.id), r.checks);
        }
    });
    return all ? kExitPass : kExitCheckFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperbolic geometry on the unit ball of C^n and boundary checks for semigroup generators", "hball"};
    app.require_subcommand(1);

    Common common;
    int example_id = 0;
    auto* verify = app.add_subcommand("verify-example", "run the full suite for example 1..5");
    verify->add_option("id", example_id, "example number")->required();
    add_common(verify, common);

    std::string gen_text;
    std::string tau_text = "e1";
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a generator at a boundary point");
    analyze_cmd->add_option("-g,--generator", gen_text, "generator spec, e.g. example1:chi=2 or example2@m=3")
        ->required();
    analyze_cmd->add_option("--tau", tau_text, "boundary point, e.g. 1, e1, (i, 0)")->capture_default_str();
    add_common(analyze_cmd, common);

    FlowArgs flow;
    auto* flow_cmd = app.add_subcommand("flow", "integrate dx/dt = -f(x) and write the trajectory as CSV");
    flow_cmd->add_option("-g,--generator", flow.generator, "generator spec")->required();
    flow_cmd->add_option("--x0", flow.x0, "initial point, e.g. (0.5, 0.1)")->required();
    flow_cmd->add_option("--t-end", flow.t_end, "final time")->required();
    flow_cmd->add_option("--steps", flow.steps, "number of output intervals")->capture_default_str();
    flow_cmd->add_option("--rel-tol", flow.rel_tol, "integrator relative tolerance")->capture_default_str();
    flow_cmd->add_flag("--compare", flow.compare, "append the deviation from the closed form");
    add_common(flow_cmd, common);

    bool serial = false;
    auto* suite = app.add_subcommand("suite", "run every acceptance criterion");
    suite->add_flag("--serial", serial, "run criteria one at a time");
    add_common(suite, common);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "run 'hball --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (*verify) {
            return cmd_verify(example_id, common, out);
        }
        if (*analyze_cmd) {
            return cmd_analyze(gen_text, tau_text, common, out);
        }
        if (*flow_cmd) {
            return cmd_flow(flow, common, out, err);
        }
        return cmd_suite(common, serial, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailure;
    }
}

}  // namespace hball::cli
