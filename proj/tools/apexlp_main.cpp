#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "apexlp/bench.hpp"
#include "apexlp/fejer.hpp"
#include "apexlp/generator.hpp"
#include "apexlp/io.hpp"
#include "apexlp/model.hpp"
#include "apexlp/oracle.hpp"
#include "apexlp/target.hpp"

namespace {

void print_vector(std::span<const double> x) {
    // Full vector up to 16 coordinates, head/tail beyond that.
    if (x.size() <= 16) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j) std::cout << ' ';
            std::cout << apexlp::format_double(x[j]);
        }
    } else {
        for (std::size_t j = 0; j < 4; ++j) std::cout << apexlp::format_double(x[j]) << ' ';
        std::cout << "... " << apexlp::format_double(x[x.size() - 2]) << ' '
                  << apexlp::format_double(x[x.size() - 1]);
    }
    std::cout << '\n';
}

int cmd_generate(const std::string& kind, std::size_t n, const std::string& out_path) {
    if (kind == "model" && n < 2) {
        std::cerr << "error: --kind model requires --n >= 2\n";
        return 2;
    }
    if (kind == "hypercube" && n < 1) {
        std::cerr << "error: --kind hypercube requires --n >= 1\n";
        return 2;
    }
    apexlp::GeneratedInstance inst =
        kind == "model" ? apexlp::model_problem(n) : apexlp::unit_hypercube(n);
    apexlp::write_problem_file(inst.problem, out_path);
    std::cout << "wrote " << out_path << " (n=" << inst.problem.n << ", m=" << inst.problem.m
              << ")\n";
    std::cout << "known objective " << apexlp::format_double(inst.known_objective) << '\n';
    std::cout << "known solution ";
    print_vector(inst.known_solution);
    return 0;
}

int cmd_solve(const std::string& path, const apexlp::SolverParams& params,
              const std::string& trace_path) {
    apexlp::LpProblem problem = apexlp::read_problem_file(path);
    apexlp::SolveReport report = apexlp::solve(problem, params);

    std::cout << "n " << problem.n << "\nm " << problem.m << '\n';
    std::cout << "objective " << apexlp::format_double(report.objective) << '\n';
    std::cout << "solution ";
    print_vector(report.solution);
    std::cout << "iterations " << report.iterations << '\n';
    std::cout << "wall_seconds " << apexlp::format_double(report.wall_seconds) << '\n';
    std::cout << "termination " << apexlp::termination_name(report.termination) << '\n';

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw std::runtime_error("cannot open '" + trace_path + "' for writing");
        apexlp::write_trace_csv(report, out);
    }
    if (report.termination != apexlp::Termination::StopCriterion) {
        std::cerr << "error: " << apexlp::termination_name(report.termination) << '\n';
        return 1;
    }
    return 0;
}

int cmd_oracle(const std::string& path) {
    apexlp::LpProblem problem = apexlp::read_problem_file(path);
    apexlp::OracleResult res = apexlp::simplex_solve(problem);
    std::cout << "status " << apexlp::oracle_status_name(res.status) << '\n';
    if (res.status != apexlp::OracleStatus::Optimal) {
        std::cerr << "error: " << apexlp::oracle_status_name(res.status) << '\n';
        return 1;
    }
    std::cout << "objective " << apexlp::format_double(res.objective) << '\n';
    std::cout << "solution ";
    print_vector(res.x);
    return 0;
}

int cmd_bench(std::size_t n, const std::vector<std::size_t>& workers_list, std::size_t sweeps,
              const std::string& out_path) {
    apexlp::GeneratedInstance inst = apexlp::model_problem(n);
    // Fixed infeasible start: every cap row and the sum row are violated.
    apexlp::Vec x(n, 250.0);
    std::vector<apexlp::BenchRecord> records =
        apexlp::run_bench(inst.problem, x, workers_list, sweeps);
    for (const auto& r : records) {
        std::cout << "workers " << r.workers << " seconds "
                  << apexlp::format_double(r.seconds) << " speedup "
                  << apexlp::format_double(r.speedup) << '\n';
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        apexlp::write_bench_csv(records, out);
        std::cout << "wrote " << out_path << '\n';
    } else {
        apexlp::write_bench_csv(records, std::cout);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LP solver walking the polytope boundary via averaged projections"};
    app.require_subcommand(1);

    std::string kind = "model", out_path, problem_path, trace_path;
    std::size_t n = 2, sweeps = 200;
    std::vector<std::size_t> workers_list{1, 2, 4, 8};
    apexlp::SolverParams params;
    std::size_t workers = 1, max_iters = params.max_target_iters;

    CLI::App* gen = app.add_subcommand("generate", "Write a generated instance to an LPF1 file");
    gen->add_option("--kind", kind, "Instance family: model | hypercube")
        ->check(CLI::IsMember({"model", "hypercube"}));
    gen->add_option("--n", n, "Number of variables")->required();
    gen->add_option("--out", out_path, "Output path")->required();

    CLI::App* solve = app.add_subcommand("solve", "Solve an LPF1 problem");
    solve->add_option("problem", problem_path, "LPF1 problem file")->required();
    solve->add_option("--sigma", params.sigma, "Apex shift (0 = derive from the problem)");
    solve->add_option("--delta", params.delta, "Probe step (0 = derive from the first iterate)");
    solve->add_option("--mu", params.mu, "Initial march step");
    solve->add_option("--eps-proj", params.eps_proj, "Pseudo-projection stop threshold");
    solve->add_option("--eps-gamma", params.eps_gamma, "March resolution");
    solve->add_option("--eps-feas", params.eps_feas, "Membership band width");
    solve->add_option("--workers", workers, "Worker threads for the row reduction");
    solve->add_option("--max-iters", max_iters, "Boundary walk iteration cap");
    solve->add_option("--trace", trace_path, "Write the iterate trace as CSV");

    CLI::App* oracle = app.add_subcommand("oracle", "Reference simplex solve of an LPF1 problem");
    oracle->add_option("problem", problem_path, "LPF1 problem file")->required();

    CLI::App* bench =
        app.add_subcommand("bench", "Time the parallel row reduction on the model family");
    bench->add_option("--n", n, "Model-problem size")->required();
    bench->add_option("--workers", workers_list, "Comma-separated worker counts")
        ->delimiter(',');
    bench->add_option("--sweeps", sweeps, "Displacement evaluations per worker count");
    bench->add_option("--out", out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(kind, n, out_path);
        if (solve->parsed()) {
            params.workers = workers;
            params.max_target_iters = max_iters;
            try {
                apexlp::validate_params(params);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
            return cmd_solve(problem_path, params, trace_path);
        }
        if (oracle->parsed()) return cmd_oracle(problem_path);
        if (bench->parsed()) {
            if (n < 2) {
                std::cerr << "error: bench requires --n >= 2\n";
                return 2;
            }
            if (workers_list.empty() ||
                std::find(workers_list.begin(), workers_list.end(), std::size_t{0}) !=
                    workers_list.end()) {
                std::cerr << "error: --workers entries must be >= 1\n";
                return 2;
            }
            if (sweeps == 0) {
                std::cerr << "error: --sweeps must be >= 1\n";
                return 2;
            }
            return cmd_bench(n, workers_list, sweeps, out_path);
        }
    } catch (const apexlp::ApexInsideM& e) {
        std::cerr << "error: ApexInsideM: " << e.what() << '\n';
        return 1;
    } catch (const apexlp::UnboundedRay& e) {
        std::cerr << "error: UnboundedRay: " << e.what() << '\n';
        return 1;
    } catch (const apexlp::SizeGuard& e) {
        std::cerr << "error: SizeGuard: " << e.what() << '\n';
        return 1;
    } catch (const apexlp::ParseError& e) {
        std::cerr << "error: ParseError: " << e.what() << '\n';
        return 1;
    } catch (const apexlp::ValidationError& e) {
        std::cerr << "error: ValidationError: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
