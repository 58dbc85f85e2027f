#include "mband/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "mband/cost.hpp"
#include "mband/error.hpp"
#include "mband/forecast.hpp"
#include "mband/markov.hpp"
#include "mband/report.hpp"
#include "mband/simulate.hpp"

namespace mband::cli {
namespace {

struct Options {
    std::string input;
    std::string column;
    std::string events;
    std::string rates;
    double p = 0.05;
    std::string rule = "paper-threshold";
    std::size_t horizon = 12;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "json";
    std::size_t sample = 0;
    bool force = false;
    std::size_t trials = 2000;
    std::size_t length = 50;
    double sigma = 1.0;
    bool true_sigma = false;
    std::string output;
    int threads = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_significance(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "Significance level, 0 < p < 0.5")->capture_default_str();
    cmd->add_option("--rule", o.rule, "Decision rule")
        ->check(CLI::IsMember({"paper-threshold", "p-value"}))
        ->capture_default_str();
}

void add_series(CLI::App* cmd, Options& o) {
    cmd->add_option("--input", o.input, "Series CSV file")->required();
    cmd->add_option("--column", o.column, "Column name or 1-based index (default: last column)");
    add_significance(cmd, o);
}

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "plot-csv"}))
        ->capture_default_str();
}

void check_p(double p) {
    if (!(p > 0.0 && p < 0.5)) throw UsageError("--p must lie in (0, 0.5), got " + format_real(p));
}

TimeSeries read_series(const Options& o) {
    return load_series_file(o.input, o.column.empty() ? std::nullopt : std::optional<std::string>(o.column));
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Runs the check and reports it on `err`; returns the verdict.
MarkovVerdict verdict_with_diagnostics(const TimeSeries& series, const Options& o, std::ostream& err) {
    const auto v = check_markov(series, o.p, parse_decision_rule(o.rule));
    err << "note: " << model_qualifier() << '\n';
    if (v.drift_warning) {
        err << "warning: mean error " << format_real(v.error_mean) << " exceeds " << kDriftThreshold
            << " standard errors; the zero-mean increment assumption looks violated\n";
    }
    return v;
}

// True when the caller may go on to emit bands.
bool gate_on_check(const MarkovVerdict& v, const Options& o, std::ostream& err) {
    if (v.is_markov) return true;
    if (o.force) {
        err << "warning: series failed the Markov check (W = " << format_real(v.sw.w)
            << "); emitting bands anyway because of --force\n";
        return true;
    }
    err << "refused: series failed the Markov check (W = " << format_real(v.sw.w)
        << "); bands are only justified for series that pass. Use --force to override.\n";
    return false;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    check_p(o.p);
    if (o.format != "json") throw UsageError("check only supports --format json");
    const auto v = verdict_with_diagnostics(read_series(o), o, err);
    print_json(out, verdict_json(v));
    return v.is_markov ? kSuccess : kNegative;
}

int cmd_forecast(const Options& o, std::ostream& out, std::ostream& err) {
    check_p(o.p);
    if (o.horizon < 1) throw UsageError("--horizon must be >= 1");
    const auto series = read_series(o);
    const auto v = verdict_with_diagnostics(series, o, err);
    if (!gate_on_check(v, o, err)) return kNegative;

    const auto b = band(series, o.horizon);
    if (o.format == "plot-csv") {
        write_band_plot_csv(out, b);
    } else {
        print_json(out, forecast_json(b));
    }
    return kSuccess;
}

CostRates read_rates(const std::string& spec) {
    if (spec.find('=') != std::string::npos) return parse_rates(spec);
    return load_rates_file(spec);
}

int cmd_cost(const Options& o, std::ostream& out, std::ostream& err) {
    check_p(o.p);
    if (o.horizon < 1) throw UsageError("--horizon must be >= 1");
    const auto series = read_series(o);
    const auto months = load_events_file(o.events);
    if (months.size() > series.size()) {
        throw UsageError("mismatched inputs: " + std::to_string(months.size()) + " months of events but only " +
                         std::to_string(series.size()) + " series values");
    }
    const auto rates = read_rates(o.rates);
    const auto summary = summarize_costs(months, rates);

    const auto v = verdict_with_diagnostics(series, o, err);
    if (!gate_on_check(v, o, err)) return kNegative;

    const auto b = band(series, o.horizon);
    const auto bands = cost_band(b, summary);
    if (o.format == "plot-csv") {
        write_cost_plot_csv(out, bands);
        return kSuccess;
    }
    std::optional<std::vector<StepSummary>> samples;
    if (o.sample > 0) samples = summarize_steps(sample_costs(b.x0, b.sigma, o.horizon, summary, o.sample, o.seed));
    print_json(out, cost_json(summary, bands, samples));
    return kSuccess;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream&) {
    check_p(o.p);
    CalibrationConfig c;
    c.trials = o.trials;
    c.walk_length = o.length;
    c.sigma = o.sigma;
    c.horizon = o.horizon;
    c.p = o.p;
    c.rule = parse_decision_rule(o.rule);
    c.seed = o.seed;
    c.coverage_sigma = o.true_sigma ? CoverageSigma::True : CoverageSigma::Estimated;
    if (o.threads > 0) omp_set_num_threads(o.threads);
    const auto report = run_calibration(c);

    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("cannot open '" + o.output + "' for writing");
    }
    std::ostream& sink = o.output.empty() ? out : file;
    if (o.format == "plot-csv") {
        write_coverage_plot_csv(sink, report);
    } else {
        print_json(sink, simulation_json(report));
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Markov random-walk check, prediction bands and cost impact", "mband"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Test a series for the Gaussian random-walk Markov model");
    add_series(check, o);
    add_format(check, o);

    auto* forecast = app.add_subcommand("forecast", "Emit x0 -/+ sqrt(k) sigma bands for k = 1..H");
    add_series(forecast, o);
    add_format(forecast, o);
    forecast->add_option("--horizon", o.horizon, "Forecast horizon H")->required();
    forecast->add_flag("--force", o.force, "Emit bands even when the check fails");

    auto* cost = app.add_subcommand("cost", "Average cost per interruption and cost bands");
    add_series(cost, o);
    add_format(cost, o);
    cost->add_option("--events", o.events, "Monthly events CSV")->required();
    cost->add_option("--rates", o.rates, "Rates file or inline key=value list")->required();
    cost->add_option("--horizon", o.horizon, "Forecast horizon H")->required();
    cost->add_option("--sample", o.sample, "Monte Carlo cost samples per step (0 = off)");
    cost->add_option("--seed", o.seed, "Sampler seed")->capture_default_str();
    cost->add_flag("--force", o.force, "Emit bands even when the check fails");

    auto* simulate = app.add_subcommand("simulate", "Measure test calibration and band coverage");
    add_significance(simulate, o);
    add_format(simulate, o);
    simulate->add_option("--trials", o.trials, "Number of simulated walks")->capture_default_str();
    simulate->add_option("--length", o.length, "History length of each walk")->capture_default_str();
    simulate->add_option("--sigma", o.sigma, "Generating increment stddev")->capture_default_str();
    simulate->add_option("--horizon", o.horizon, "Future steps per walk")->capture_default_str();
    simulate->add_option("--seed", o.seed, "Master seed")->capture_default_str();
    simulate->add_flag("--true-sigma", o.true_sigma, "Scale coverage bands by the generating sigma");
    simulate->add_option("--output", o.output, "Write the report to a file instead of stdout");
    simulate->add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (check->parsed()) return cmd_check(o, out, err);
        if (forecast->parsed()) return cmd_forecast(o, out, err);
        if (cost->parsed()) return cmd_cost(o, out, err);
        return cmd_simulate(o, out, err);
    } catch (const DegenerateInput& e) {
        err << "error: degenerate series: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

}  // namespace mband::cli
