/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================
*/
// specsep: spectral analysis and goodness-of-fit testing for separable
// covariance models in the p/n -> 0 regime.
//
// Subcommands: density, simulate, test, null-dist, fluctuation, table1.
// Exit codes: 0 success, 2 input error, 3 numerical failure, 4 infeasible
// model.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specsep/errors.hpp"
#include "specsep/gof.hpp"
#include "specsep/lsd.hpp"
#include "specsep/mixture.hpp"
#include "specsep/model_io.hpp"
#include "specsep/parallel.hpp"
#include "specsep/randmat.hpp"
#include "specsep/semicircle.hpp"
#include "specsep/stieltjes.hpp"

namespace {

using specsep::AtomicMixture;
using specsep::EmpiricalDistribution;
using specsep::LsdCurve;
using specsep::SampledModel;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 12345;
constexpr std::uint64_t kAltSeedSalt = 0x517cc1b727220a95ull;

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

double model_b_bar2(const specsep::ModelSpec& model, int n_hint) {
    if (model.b.is_explicit()) {
        const int n = static_cast<int>(model.b.eigenvalues().size());
        return specsep::moments_of(model.b, n_hint > 0 ? n_hint : n).b_bar2;
    }
    return model.b.stored_moments().b_bar2;
}

specsep::SpectralMoments model_moments(const specsep::ModelSpec& model, int n_hint) {
    if (model.b.is_explicit())
        return specsep::moments_of(model.b, n_hint > 0 ? n_hint
                                                       : static_cast<int>(model.b.eigenvalues().size()));
    return model.b.stored_moments();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

void print_warnings(const LsdCurve& curve) {
    for (const std::string& w : curve.warnings) std::cerr << "warning: " << w << "\n";
}

// ---------------------------------------------------------------- density

struct DensityArgs {
    std::string model_path;
    std::string out_path;
    double b2 = 0.0;  // 0 = take from model
    std::vector<double> grid;
    double origin_gap = 1e-3;
    bool oracle = false;
};

int run_density(const DensityArgs& args) {
    const specsep::ModelSpec model = specsep::load_model(args.model_path);
    const double b2 = args.b2 > 0.0 ? args.b2 : model_b_bar2(model, 0);

    double x_min, x_max, step;
    if (args.grid.size() == 3) {
        x_min = args.grid[0];
        x_max = args.grid[1];
        step = args.grid[2];
    } else {
        const double half = specsep::default_grid_half(model.a, b2);
        x_min = -half;
        x_max = half;
        step = 1e-3;
    }

    const LsdCurve curve = specsep::build_curve(model.a, b2, x_min, x_max, step, args.origin_gap);
    print_warnings(curve);

    std::vector<double> oracle_col;
    if (args.oracle) {
        oracle_col.resize(curve.grid.size());
        // Warm-start each epsilon chain along the grid; the sweep is the
        // expensive part of --oracle (tens of seconds on fine grids).
        const std::vector<double> ladder = {1e-2, 1e-3, 1e-4};
        std::vector<std::complex<double>> warm(ladder.size(), {0.0, 1.0});
        for (std::size_t k = 0; k < curve.grid.size(); ++k) {
            const double x = curve.grid[k];
            std::vector<double> values(ladder.size());
            for (std::size_t e = 0; e < ladder.size(); ++e) {
                const specsep::StieltjesPair pair =
                    specsep::solve_system(model.a, b2, {x, ladder[e]}, warm[e]);
                warm[e] = pair.beta;
                values[e] = pair.s.imag() / M_PI;
            }
            std::vector<double> table = values;
            for (std::size_t j = 1; j < ladder.size(); ++j)
                for (std::size_t i = ladder.size() - 1; i >= j; --i)
                    table[i] = table[i] + (table[i] - table[i - 1]) * ladder[i] /
                                              (ladder[i - j] - ladder[i]);
            oracle_col[k] = std::max(0.0, table.back());
        }

        double max_dev = 0.0, at = 0.0;
        for (std::size_t k = 0; k < curve.grid.size(); ++k) {
            bool interior = false;
            for (const specsep::Interval& iv : curve.support)
                if (curve.grid[k] >= iv.lo + 0.05 && curve.grid[k] <= iv.hi - 0.05)
                    interior = true;
            if (!interior) continue;
            const double dev = std::abs(curve.density[k] - oracle_col[k]);
            if (dev > max_dev) {
                max_dev = dev;
                at = curve.grid[k];
            }
        }
        std::cout << "oracle max deviation (interior support) : " << max_dev << " at x = " << at
                  << "\n";
    }

    specsep::write_curve_csv(args.out_path, curve, args.oracle ? &oracle_col : nullptr);
    specsep::write_support_json(specsep::support_sidecar_path(args.out_path), curve);
    return 0;
}

// --------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string model_path;
    std::string out_prefix;
    int p = 0;
    int n = 0;
    int reps = 100;
    std::uint64_t seed = kDefaultSeed;
    std::string law = "gaussian";
    int threads = 0;
    double step = 5e-4;
};

int run_simulate(const SimulateArgs& args) {
    if (args.p >= args.n) throw std::invalid_argument("simulate: requires p < n");
    if (args.reps < 1) throw std::invalid_argument("simulate: requires reps >= 1");
    const specsep::ModelSpec model = specsep::load_model(args.model_path);
    const double b2 = model_b_bar2(model, args.n);
    const SampledModel sampled = specsep::make_model(
        model.a, model.b, args.p, args.n, specsep::entry_law_from_string(args.law), args.seed);
    const LsdCurve curve = specsep::build_null_curve(model.a, b2, args.step);
    print_warnings(curve);

    const int threads = args.threads > 0 ? args.threads : default_threads();
    std::vector<std::vector<double>> eigs(args.reps);
    std::vector<double> stats(args.reps);
    specsep::parallel_for(args.reps, threads, [&](int r) {
        const EmpiricalDistribution esd = specsep::sample_c_n(sampled, r);
        stats[r] = specsep::l2_statistic(esd, curve);
        eigs[r] = esd.samples;
    });

    double mean = 0.0;
    for (double v : stats) mean += v;
    mean /= args.reps;
    double var = 0.0;
    for (double v : stats) var += (v - mean) * (v - mean);
    const double sd = args.reps > 1 ? std::sqrt(var / (args.reps - 1)) : 0.0;

    std::ofstream eig_out(args.out_prefix + "_eigs.csv");
    if (!eig_out) throw std::invalid_argument("cannot write " + args.out_prefix + "_eigs.csv");
    eig_out << "replicate,value\n";
    for (int r = 0; r < args.reps; ++r)
        for (double v : eigs[r]) eig_out << r << ',' << specsep::format_double(v) << "\n";

    json summary;
    summary["p"] = args.p;
    summary["n"] = args.n;
    summary["replicates"] = args.reps;
    summary["seed"] = args.seed;
    summary["law"] = args.law;
    summary["mean_L"] = mean;
    summary["sd_L"] = sd;
    write_text(args.out_prefix + "_summary.json", summary.dump(2) + "\n");

    std::cout << "L_n over " << args.reps << " replicates: mean " << specsep::format_double(mean)
              << ", sd " << specsep::format_double(sd) << "\n";
    return 0;
}

// ------------------------------------------------------------------- test

struct TestArgs {
    std::string null_path;
    std::string observed_path;
    std::string alt_path;
    std::string out_path;
    int p = 0;
    int n = 0;
    int reps = 500;
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;
};

int run_test_cmd(const TestArgs& args) {
    if (args.p >= args.n) throw std::invalid_argument("test: requires p < n");
    if (args.observed_path.empty() == args.alt_path.empty())
        throw std::invalid_argument("test: give exactly one of --observed / --simulate-under");

    const specsep::ModelSpec null_model = specsep::load_model(args.null_path);
    const specsep::SpectralMoments mom = model_moments(null_model, args.n);
    const specsep::NullSpec spec{null_model.a, mom.b_bar, mom.b_bar2, args.p, args.n};

    std::vector<double> observed;
    if (!args.observed_path.empty()) {
        observed = specsep::load_eigenvalue_csv(args.observed_path);
    } else {
        const specsep::ModelSpec alt_model = specsep::load_model(args.alt_path);
        const SampledModel data = specsep::make_model(alt_model.a, alt_model.b, args.p, args.n,
                                                      specsep::EntryLaw::kStandardGaussian,
                                                      args.seed ^ kAltSeedSalt);
        const SampledModel hyp = specsep::make_model(null_model.a, null_model.b, args.p, args.n,
                                                     specsep::EntryLaw::kStandardGaussian, 0);
        observed = specsep::null_centered_eigs(data, hyp.a_eigs, mom.b_bar, 0);
    }

    const int threads = args.threads > 0 ? args.threads : default_threads();
    const specsep::TestReport report = specsep::run_test(
        EmpiricalDistribution(std::move(observed)), spec, args.reps, args.seed, threads);

    json doc;
    doc["statistic"] = report.statistic;
    doc["p_value"] = report.p_value;
    doc["quantiles"] = json::object();
    for (const auto& [prob, q] : report.null_quantiles) {
        char key[16];
        std::snprintf(key, sizeof(key), "%.2f", prob);
        doc["quantiles"][key] = q;
    }
    doc["replicates"] = report.replicates;
    doc["seed"] = report.seed;
    const std::string text = doc.dump(2) + "\n";
    if (!args.out_path.empty()) write_text(args.out_path, text);
    std::cout << text;
    return 0;
}

// -------------------------------------------------------------- null-dist

struct NullDistArgs {
    std::string model_path;
    std::string out_path;
    std::string quantiles_out;
    std::string alt_model_path;
    std::string qq_out;
    int p = 0;
    int n = 0;
    int reps = 500;
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;
};

int run_null_dist(const NullDistArgs& args) {
    if (args.p >= args.n) throw std::invalid_argument("null-dist: requires p < n");
    if (args.reps < 100) throw std::invalid_argument("null-dist: requires reps >= 100");
    const specsep::ModelSpec model = specsep::load_model(args.model_path);
    const specsep::SpectralMoments mom = model_moments(model, args.n);
    const specsep::NullSpec spec{model.a, mom.b_bar, mom.b_bar2, args.p, args.n};
    const int threads = args.threads > 0 ? args.threads : default_threads();

    const LsdCurve curve = specsep::build_null_curve(model.a, mom.b_bar2);
    print_warnings(curve);
    const specsep::NullDistribution null_dist =
        specsep::monte_carlo_null(spec, args.reps, args.seed, threads, &curve);

    std::ofstream out(args.out_path);
    if (!out) throw std::invalid_argument("cannot write " + args.out_path);
    out << "value\n";
    for (double v : null_dist.values) out << specsep::format_double(v) << "\n";

    json qdoc;
    for (const auto& [prob, q] : null_dist.quantiles) {
        char key[16];
        std::snprintf(key, sizeof(key), "%.2f", prob);
        qdoc[key] = q;
    }
    if (!args.quantiles_out.empty()) write_text(args.quantiles_out, qdoc.dump(2) + "\n");
    std::cout << qdoc.dump(2) << "\n";

    if (!args.alt_model_path.empty()) {
        // Alternative statistics with the alternative's own centering,
        // scored against the null LSD; used for QQ comparisons.
        const specsep::ModelSpec alt = specsep::load_model(args.alt_model_path);
        const SampledModel alt_sampled =
            specsep::make_model(alt.a, alt.b, args.p, args.n,
                                specsep::EntryLaw::kStandardGaussian, args.seed ^ kAltSeedSalt);
        std::vector<double> alt_stats(args.reps);
        specsep::parallel_for(args.reps, threads, [&](int r) {
            const EmpiricalDistribution esd = specsep::sample_c_n(alt_sampled, r);
            alt_stats[r] = specsep::l2_statistic(esd, curve);
        });
        std::sort(alt_stats.begin(), alt_stats.end());
        const std::vector<double> probs(specsep::kQuantileLadder.begin(),
                                        specsep::kQuantileLadder.end());
        const auto pairs = specsep::qq_data(null_dist.values, alt_stats, probs);
        if (!args.qq_out.empty()) {
            std::ofstream qq(args.qq_out);
            if (!qq) throw std::invalid_argument("cannot write " + args.qq_out);
            qq << "prob,q_null,q_alt\n";
            for (std::size_t i = 0; i < probs.size(); ++i)
                qq << specsep::format_double(probs[i]) << ','
                   << specsep::format_double(pairs[i].first) << ','
                   << specsep::format_double(pairs[i].second) << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------ fluctuation

struct FluctArgs {
    std::string model_path;
    std::string out_prefix;
    int p = 0;
    int n = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string law = "gaussian";
};

int run_fluctuation(const FluctArgs& args) {
    if (args.p >= args.n) throw std::invalid_argument("fluctuation: requires p < n");
    const specsep::ModelSpec model = specsep::load_model(args.model_path);
    const double b2 = model_b_bar2(model, args.n);
    const SampledModel sampled = specsep::make_model(
        model.a, model.b, args.p, args.n, specsep::entry_law_from_string(args.law), args.seed);

    const EmpiricalDistribution sample = specsep::fluctuation_sample(sampled, 0);
    const specsep::FluctuationMixture law(model.a, b2);
    const double ks = specsep::ks_distance(sample.samples, law);

    std::ofstream sample_out(args.out_prefix + "_sample.csv");
    if (!sample_out)
        throw std::invalid_argument("cannot write " + args.out_prefix + "_sample.csv");
    sample_out << "value\n";
    for (double v : sample.samples) sample_out << specsep::format_double(v) << "\n";

    const double lo = sample.samples.front() - 0.5;
    const double hi = sample.samples.back() + 0.5;
    std::ofstream cdf_out(args.out_prefix + "_cdf.csv");
    if (!cdf_out) throw std::invalid_argument("cannot write " + args.out_prefix + "_cdf.csv");
    cdf_out << "x,model_cdf\n";
    const int grid_points = 512;
    for (int k = 0; k <= grid_points; ++k) {
        const double x = lo + (hi - lo) * k / grid_points;
        cdf_out << specsep::format_double(x) << ','
                << specsep::format_double(specsep::mixture_cdf(law, x)) << "\n";
    }

    json summary;
    summary["p"] = args.p;
    summary["n"] = args.n;
    summary["seed"] = args.seed;
    summary["law"] = args.law;
    summary["ks_distance"] = ks;
    write_text(args.out_prefix + "_summary.json", summary.dump(2) + "\n");
    std::cout << "KS distance to the fluctuation mixture: " << specsep::format_double(ks) << "\n";
    return 0;
}

// ----------------------------------------------------------------- table1

struct Table1Args {
    std::string model_path;
    std::string out_path;
    int reps = 100;
    std::uint64_t seed = kDefaultSeed;
    double max_cost = 1e10;  // cost of a cell = p² · n
    int threads = 0;
};

int run_table1(const Table1Args& args) {
    const specsep::ModelSpec model = specsep::load_model(args.model_path);
    const std::vector<int> ps = {33, 66, 99, 201, 600};
    const std::vector<int> ns = {1000, 3300, 10000, 40000, 240000};
    const int threads = args.threads > 0 ? args.threads : default_threads();

    std::ofstream out(args.out_path);
    if (!out) throw std::invalid_argument("cannot write " + args.out_path);
    out << "p,n,replicates,mean_L,sd_L\n";

    LsdCurve curve;  // same for every cell: b̄₂ fixes the LSD
    bool have_curve = false;
    for (int p : ps) {
        for (int n : ns) {
            const double cost = static_cast<double>(p) * p * n;
            if (p >= n || cost > args.max_cost) continue;
            const double b2 = model_b_bar2(model, n);
            if (!have_curve) {
                curve = specsep::build_null_curve(model.a, b2);
                have_curve = true;
            }
            const SampledModel sampled = specsep::make_model(
                model.a, model.b, p, n, specsep::EntryLaw::kStandardGaussian, args.seed);
            std::vector<double> stats(args.reps);
            specsep::parallel_for(args.reps, threads, [&](int r) {
                stats[r] = specsep::l2_statistic(specsep::sample_c_n(sampled, r), curve);
            });
            double mean = 0.0;
            for (double v : stats) mean += v;
            mean /= args.reps;
            double var = 0.0;
            for (double v : stats) var += (v - mean) * (v - mean);
            const double sd = args.reps > 1 ? std::sqrt(var / (args.reps - 1)) : 0.0;
            out << p << ',' << n << ',' << args.reps << ',' << specsep::format_double(mean) << ','
                << specsep::format_double(sd) << "\n";
            std::cerr << "table1: (" << p << ", " << n << ") mean " << mean << " sd " << sd
                      << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral limits and goodness-of-fit tests for separable covariance "
                 "models in the p/n -> 0 regime"};
    app.require_subcommand(1);

    DensityArgs density;
    CLI::App* cmd_density = app.add_subcommand("density", "LSD density/support for a model");
    cmd_density->add_option("model", density.model_path, "model JSON file")->required();
    cmd_density->add_option("--b2", density.b2, "override the b_bar2 scale");
    cmd_density->add_option("--grid", density.grid, "xmin xmax step")->expected(3);
    cmd_density->add_option("--origin-gap", density.origin_gap, "excluded half-width around 0");
    cmd_density->add_flag("--oracle", density.oracle,
                          "append the Stieltjes-inversion density column");
    cmd_density->add_option("--out", density.out_path, "curve CSV path")->required();

    SimulateArgs sim;
    CLI::App* cmd_sim = app.add_subcommand("simulate", "sample C_n replicates, report L_n");
    cmd_sim->add_option("model", sim.model_path)->required();
    cmd_sim->add_option("--p", sim.p)->required();
    cmd_sim->add_option("--n", sim.n)->required();
    cmd_sim->add_option("--reps", sim.reps);
    cmd_sim->add_option("--seed", sim.seed)->envname("SPECSEP_SEED");
    cmd_sim->add_option("--law", sim.law, "gaussian|rademacher|uniform|complex-gaussian");
    cmd_sim->add_option("--threads", sim.threads);
    cmd_sim->add_option("--step", sim.step, "LSD grid step");
    cmd_sim->add_option("--out", sim.out_prefix, "output file prefix")->required();

    TestArgs test;
    CLI::App* cmd_test = app.add_subcommand("test", "L2 test with Monte-Carlo calibration");
    cmd_test->add_option("--null", test.null_path, "null model JSON")->required();
    cmd_test->add_option("--observed", test.observed_path, "observed eigenvalue CSV");
    cmd_test->add_option("--simulate-under", test.alt_path, "simulate the observed spectrum");
    cmd_test->add_option("--p", test.p)->required();
    cmd_test->add_option("--n", test.n)->required();
    cmd_test->add_option("--reps", test.reps);
    cmd_test->add_option("--seed", test.seed)->envname("SPECSEP_SEED");
    cmd_test->add_option("--threads", test.threads);
    cmd_test->add_option("--out", test.out_path, "report JSON path");

    NullDistArgs nd;
    CLI::App* cmd_nd = app.add_subcommand("null-dist", "Monte-Carlo null sample and quantiles");
    cmd_nd->add_option("model", nd.model_path)->required();
    cmd_nd->add_option("--p", nd.p)->required();
    cmd_nd->add_option("--n", nd.n)->required();
    cmd_nd->add_option("--reps", nd.reps);
    cmd_nd->add_option("--seed", nd.seed)->envname("SPECSEP_SEED");
    cmd_nd->add_option("--threads", nd.threads);
    cmd_nd->add_option("--out", nd.out_path, "sorted null sample CSV")->required();
    cmd_nd->add_option("--quantiles-out", nd.quantiles_out, "quantile table JSON");
    cmd_nd->add_option("--alt-model", nd.alt_model_path,
                       "also sample an own-centered alternative for QQ data");
    cmd_nd->add_option("--qq-out", nd.qq_out, "QQ pairs CSV (needs --alt-model)");

    FluctArgs fluct;
    CLI::App* cmd_fluct =
        app.add_subcommand("fluctuation", "eigenvalue fluctuations vs the mixture law");
    cmd_fluct->add_option("model", fluct.model_path)->required();
    cmd_fluct->add_option("--p", fluct.p)->required();
    cmd_fluct->add_option("--n", fluct.n)->required();
    cmd_fluct->add_option("--seed", fluct.seed)->envname("SPECSEP_SEED");
    cmd_fluct->add_option("--law", fluct.law);
    cmd_fluct->add_option("--out", fluct.out_prefix, "output file prefix")->required();

    Table1Args table;
    CLI::App* cmd_table = app.add_subcommand("table1", "sweep the (p, n) grid, mean/sd of L_n");
    cmd_table->add_option("model", table.model_path)->required();
    cmd_table->add_option("--reps", table.reps);
    cmd_table->add_option("--seed", table.seed)->envname("SPECSEP_SEED");
    cmd_table->add_option("--max-cost", table.max_cost, "skip cells with p*p*n above this");
    cmd_table->add_option("--threads", table.threads);
    cmd_table->add_option("--out", table.out_path, "table CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_density->parsed()) return run_density(density);
        if (cmd_sim->parsed()) return run_simulate(sim);
        if (cmd_test->parsed()) return run_test_cmd(test);
        if (cmd_nd->parsed()) return run_null_dist(nd);
        if (cmd_fluct->parsed()) return run_fluctuation(fluct);
        if (cmd_table->parsed()) return run_table1(table);
    } catch (const specsep::InfeasibleModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const specsep::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
