#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "meo/entropies.hpp"
#include "meo/io.hpp"
#include "meo/oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct ComputeArgs {
    std::string input;
    std::string quantity;
    double alpha = 0.0;
    bool alpha_set = false;
    double epsilon = 1e-6;
    std::string trace_path;
    std::string output_path;
    long max_iters = 0;
};

std::string trace_csv(const std::vector<meo::TracePoint>& trace) {
    std::ostringstream out;
    out << "iter,objective,grad_hs_norm\n";
    for (const auto& pt : trace)
        out << pt.iteration << ',' << meo::io::format_double(pt.objective) << ','
            << meo::io::format_double(pt.grad_hs_norm) << '\n';
    return out.str();
}

int run_compute(const ComputeArgs& args) {
    if (args.quantity != "relent" && args.quantity != "renyi") {
        std::cerr << "error: --quantity must be relent or renyi\n";
        return 1;
    }
    if (args.quantity == "renyi" && !args.alpha_set) {
        std::cerr << "error: --alpha is required with --quantity renyi\n";
        return 1;
    }

    meo::io::StateFile sf = meo::io::read_state_file(args.input);
    meo::SolverConfig config;
    config.epsilon = args.epsilon;
    config.record_trace = !args.trace_path.empty();
    if (args.max_iters > 0)
        config.max_iterations = args.max_iters;

    const auto start = Clock::now();
    meo::EntropyReport report =
        args.quantity == "relent"
            ? meo::measured_relative_entropy(sf.rho, sf.sigma, config)
            : meo::measured_renyi(sf.rho, sf.sigma, args.alpha, config);
    const double wall = seconds_since(start);

    nlohmann::json record;
    record["quantity"] = args.quantity;
    if (report.alpha)
        record["alpha"] = *report.alpha;
    else
        record["alpha"] = nullptr;
    record["value"] = report.value;
    if (report.q_alpha)
        record["q_alpha"] = *report.q_alpha;
    record["epsilon"] = args.epsilon;
    record["iterations"] = report.solver.iterations;
    record["converged"] = report.solver.converged;
    record["kappa"] = report.profile.kappa;
    record["interval_lo"] = report.profile.interval.lo;
    record["interval_hi"] = report.profile.interval.hi;
    record["beta"] = report.profile.beta;
    record["gamma"] = report.profile.gamma;
    record["wall_time_seconds"] = wall;
    record["seed"] = nullptr;
    record["prng"] = "mt19937_64";

    const std::string body = record.dump(2) + "\n";
    if (!args.output_path.empty())
        meo::io::write_file_atomic(args.output_path, body);
    else
        std::cout << body;

    if (!args.trace_path.empty())
        meo::io::write_file_atomic(args.trace_path, trace_csv(report.solver.trace));

    return report.solver.converged ? 0 : 2;
}

struct BenchArgs {
    int dim = 2;
    int seeds = 1;
    std::string mixing = "1.0";
    double epsilon = 1e-6;
    double alpha = 0.0;
    bool alpha_set = false;
    std::string output;
    bool no_timing = false;
};

struct BenchRow {
    std::uint64_t seed;
    double t;
    double kappa;
    long iterations;
    double value;
    double wall;
};

int run_bench(const BenchArgs& args) {
    std::vector<double> mixing;
    {
        std::stringstream ss(args.mixing);
        std::string item;
        while (std::getline(ss, item, ','))
            mixing.push_back(std::stod(item));
    }
    if (mixing.empty()) {
        std::cerr << "error: --mixing list is empty\n";
        return 1;
    }
    for (double t : mixing)
        if (!(t > 0.0) || t > 1.0) {
            std::cerr << "error: mixing weights must lie in (0, 1]\n";
            return 1;
        }

    struct Cell {
        std::uint64_t seed;
        double t;
    };
    std::vector<Cell> cells;
    for (int s = 0; s < args.seeds; ++s)
        for (double t : mixing)
            cells.push_back({static_cast<std::uint64_t>(s), t});

    std::vector<BenchRow> rows(cells.size());
    auto run_cell = [&](std::size_t i) {
        const Cell& cell = cells[i];
        meo::oracles::InstanceSpec spec{args.dim, cell.seed,
                                        meo::oracles::Conditioning::WellConditioned,
                                        cell.t, false};
        const auto start = Clock::now();
        meo::SolverConfig config;
        config.epsilon = args.epsilon;
        const meo::EntropyReport report = [&] {
            if (args.alpha_set) {
                meo::ProblemInstance inst = meo::oracles::random_instance(
                    spec, meo::ProblemKind::renyi(args.alpha));
                return meo::measured_renyi(inst.rho, inst.sigma, args.alpha, config);
            }
            meo::ProblemInstance inst = meo::oracles::random_instance(
                spec, meo::ProblemKind::relative_entropy());
            return meo::measured_relative_entropy(inst.rho, inst.sigma, config);
        }();
        rows[i] = {cell.seed, cell.t, report.profile.kappa, report.solver.iterations,
                   report.value, args.no_timing ? 0.0 : seconds_since(start)};
    };

    unsigned threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("MEO_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1)
            threads = static_cast<unsigned>(parsed);
    }
    threads = std::min<unsigned>(std::max(threads, 1u), cells.size());

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size();
                 i = next.fetch_add(1))
                run_cell(i);
        });
    for (auto& th : pool)
        th.join();

    // rows were filled in cell order, which is already (seed, mixing) sorted
    std::ostringstream out;
    out << "seed,t,kappa,iterations,value,wall_time_seconds\n";
    for (const auto& row : rows)
        out << row.seed << ',' << meo::io::format_double(row.t) << ','
            << meo::io::format_double(row.kappa) << ',' << row.iterations << ','
            << meo::io::format_double(row.value) << ','
            << meo::io::format_double(row.wall) << '\n';
    meo::io::write_file_atomic(args.output, out.str());
    return 0;
}

int run_validate(const std::string& input) {
    meo::io::StateFile sf; // parse errors reported by read_state_file
    try {
        sf = meo::io::read_state_file(input);
    } catch (const std::exception& e) {
        std::cerr << "validate: parse: " << e.what() << "\n";
        return 1;
    }
    const double rho_defect = meo::hermiticity_defect(sf.rho);
    if (rho_defect > 1e-12) {
        std::cerr << "validate: rho is not Hermitian (defect " << rho_defect << ")\n";
        return 1;
    }
    const double sigma_defect = meo::hermiticity_defect(sf.sigma);
    if (sigma_defect > 1e-12) {
        std::cerr << "validate: sigma is not Hermitian (defect " << sigma_defect << ")\n";
        return 1;
    }
    meo::SpectralDecomposition srho = meo::spectral_decompose(meo::symmetrized(sf.rho));
    if (!meo::is_positive_definite(srho)) {
        std::cerr << "validate: rho is not positive definite (lambda_min "
                  << srho.eigenvalues(0) << ")\n";
        return 1;
    }
    meo::SpectralDecomposition ssigma = meo::spectral_decompose(meo::symmetrized(sf.sigma));
    if (!meo::is_positive_definite(ssigma)) {
        std::cerr << "validate: sigma is not positive definite (lambda_min "
                  << ssigma.eigenvalues(0) << ")\n";
        return 1;
    }
    const double tr = sf.rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-9) {
        std::cerr << "validate: rho trace is " << tr << ", expected 1\n";
        return 1;
    }
    meo::ProblemInstance inst(sf.rho, sf.sigma, meo::ProblemKind::relative_entropy());
    meo::ConditioningProfile profile = meo::smoothness_for(inst);
    std::cout << "dim: " << sf.rho.rows() << "\n"
              << "rho lambda_min: " << meo::io::format_double(srho.eigenvalues(0)) << "\n"
              << "sigma lambda_min: " << meo::io::format_double(ssigma.eigenvalues(0)) << "\n"
              << "kappa (relent): " << meo::io::format_double(profile.kappa) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measured relative entropy and measured Renyi relative entropy "
                 "via accelerated projected gradient methods"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    CLI::App* compute = app.add_subcommand("compute", "compute a divergence for a state pair");
    compute->add_option("--input", compute_args.input, "state-pair JSON file")->required();
    compute->add_option("--quantity", compute_args.quantity, "relent or renyi")->required();
    CLI::Option* alpha_opt =
        compute->add_option("--alpha", compute_args.alpha, "Renyi parameter");
    compute->add_option("--epsilon", compute_args.epsilon, "target accuracy (default 1e-6)");
    compute->add_option("--trace", compute_args.trace_path, "per-iteration CSV trace path");
    compute->add_option("--output", compute_args.output_path, "result JSON path (default stdout)");
    compute->add_option("--max-iters", compute_args.max_iters, "iteration cap override");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "kappa-scaling benchmark over seeded instances");
    bench->add_option("--dim", bench_args.dim, "state dimension")->required();
    bench->add_option("--seeds", bench_args.seeds, "number of seeds")->required();
    bench->add_option("--mixing", bench_args.mixing, "comma list of mixing weights t")->required();
    bench->add_option("--epsilon", bench_args.epsilon, "target accuracy");
    CLI::Option* bench_alpha = bench->add_option("--alpha", bench_args.alpha, "Renyi parameter");
    bench->add_option("--output", bench_args.output, "CSV output path")->required();
    bench->add_flag("--no-timing", bench_args.no_timing,
                    "write 0 for wall_time_seconds so output is byte-reproducible");

    std::string validate_input;
    CLI::App* validate = app.add_subcommand("validate", "check a state-pair file");
    validate->add_option("--input", validate_input, "state-pair JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    compute_args.alpha_set = alpha_opt->count() > 0;
    bench_args.alpha_set = bench_alpha->count() > 0;

    try {
        if (compute->parsed())
            return run_compute(compute_args);
        if (bench->parsed())
            return run_bench(bench_args);
        return run_validate(validate_input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
