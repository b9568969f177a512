#ifndef APEXLP_BENCH_HPP
#define APEXLP_BENCH_HPP

#include "apexlp/model.hpp"

namespace apexlp {

struct BenchRecord {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t workers = 0;
    double seconds = 0.0;
    double speedup = 0.0;  // seconds(workers=1) / seconds(workers)
};

/*
 * Times the parallel row reduction: `sweeps` displacement evaluations
 * at the fixed point x, once per requested worker count, after two
 * warmup evaluations.  Worker count 1 is always measured first (it is
 * prepended when missing) and serves as the speedup baseline.
 *
 * Every worker count must reproduce the single-worker result bit for
 * bit; a mismatch throws std::runtime_error because it would mean the
 * reduction order leaked into the arithmetic.
 */
std::vector<BenchRecord> run_bench(const LpProblem& problem, std::span<const double> x,
                                   std::vector<std::size_t> workers_list, std::size_t sweeps);

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace apexlp

#endif  // APEXLP_BENCH_HPP
