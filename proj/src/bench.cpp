#include "apexlp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <ostream>

#include "apexlp/fejer.hpp"
#include "apexlp/io.hpp"

namespace apexlp {

std::vector<BenchRecord> run_bench(const LpProblem& problem, std::span<const double> x,
                                   std::vector<std::size_t> workers_list, std::size_t sweeps) {
    if (sweeps == 0) throw std::invalid_argument("sweeps must be > 0");
    if (std::find(workers_list.begin(), workers_list.end(), std::size_t{1}) ==
        workers_list.end()) {
        workers_list.insert(workers_list.begin(), 1);
    } else {
        std::stable_partition(workers_list.begin(), workers_list.end(),
                              [](std::size_t w) { return w == 1; });
    }

    std::vector<BenchRecord> records;
    Vec reference;
    std::size_t reference_hits = 0;
    double base_seconds = 0.0;

    for (std::size_t w : workers_list) {
        if (w == 0) throw std::invalid_argument("workers must be > 0");
        RowReducer reducer(problem, w);
        Displacement d = reducer.displace(x);
        reducer.displace(x);  // second warmup

        if (reference.empty()) {
            reference = d.phi;
            reference_hits = d.violated;
        } else if (d.violated != reference_hits ||
                   std::memcmp(d.phi.data(), reference.data(),
                               reference.size() * sizeof(double)) != 0) {
            throw std::runtime_error("parallel reduction diverged at workers=" +
                                     std::to_string(w));
        }

        auto t0 = std::chrono::steady_clock::now();
        for (std::size_t s = 0; s < sweeps; ++s) reducer.displace(x);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        if (w == 1) base_seconds = seconds;
        BenchRecord rec{problem.n, problem.m, w, seconds,
                        seconds > 0.0 ? base_seconds / seconds : 0.0};
        records.push_back(rec);
    }
    return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "n,m,workers,seconds,speedup\n";
    for (const auto& r : records) {
        out << r.n << ',' << r.m << ',' << r.workers << ',' << format_double(r.seconds) << ','
            << format_double(r.speedup) << '\n';
    }
}

}  // namespace apexlp
