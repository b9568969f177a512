#ifndef APEXLP_FEJER_HPP
#define APEXLP_FEJER_HPP

#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <thread>

#include "apexlp/model.hpp"

namespace apexlp {

// Averaged correction at a point: phi is the mean over violated rows of
// (r_i / ||a_i||^2) a_i, the zero vector when no row is violated.
struct Displacement {
    Vec phi;
    std::size_t violated = 0;
};

// The single-row correction (r_i / ||a_i||^2) a_i if row i is violated
// at x (r_i > 0, compared exactly), the zero vector otherwise.
Vec violation_correction(const LpProblem& problem, std::span<const double> x, std::size_t i);

struct ProjectionResult {
    Vec point;
    std::size_t sweeps = 0;
    double last_step_norm = 0.0;
    bool converged = false;  // false means the sweep cap was hit
};

/*
 * Evaluates the averaged correction with the row set split into fixed
 * 64-row chunks.  Workers take contiguous chunk ranges and write one
 * partial sum per chunk; the calling thread then folds the partials in
 * chunk order and applies the 1/h factor once at the end.  Because the
 * chunk grid and the fold order do not depend on the worker count, the
 * result is bit-identical for every value of `workers`.
 *
 * The pool threads persist across calls; construction spawns workers-1
 * threads and the calling thread always processes the leading range.
 */
class RowReducer {
public:
    RowReducer(const LpProblem& problem, std::size_t workers);
    ~RowReducer();
    RowReducer(const RowReducer&) = delete;
    RowReducer& operator=(const RowReducer&) = delete;

    Displacement displace(std::span<const double> x);

    std::size_t workers() const { return workers_; }

private:
    static constexpr std::size_t kChunkRows = 64;

    void run_chunks(std::size_t chunk_begin, std::size_t chunk_end, const double* x);
    void worker_main(std::size_t index);
    std::size_t chunk_lo(std::size_t worker) const { return worker * chunks_ / workers_; }
    std::size_t chunk_hi(std::size_t worker) const { return (worker + 1) * chunks_ / workers_; }

    const LpProblem& problem_;
    std::size_t workers_;
    std::size_t chunks_;
    std::vector<double> partials_;       // chunks_ * n, partial sums
    std::vector<std::uint32_t> hits_;    // violated rows per chunk
    std::vector<std::thread> pool_;

    std::mutex mutex_;
    std::condition_variable start_cv_;
    std::condition_variable done_cv_;
    const double* job_x_ = nullptr;
    std::uint64_t epoch_ = 0;
    std::size_t outstanding_ = 0;
    bool quit_ = false;
};

// One-shot forms.  displacement() is the serial evaluation;
// parallel_displacement() builds a temporary RowReducer.  Both produce
// bit-identical results for the same problem and point.
Displacement displacement(const LpProblem& problem, std::span<const double> x);
Displacement parallel_displacement(const LpProblem& problem, std::span<const double> x,
                                   std::size_t workers);

// One relaxation step x - phi(x).
Vec fejer_step(const LpProblem& problem, std::span<const double> x);

// Iterates fejer_step from x0 until the step norm drops below
// params.eps_proj or params.max_proj_sweeps evaluations have run.
// Uses params.workers threads for the row reduction.
ProjectionResult pseudo_projection(const LpProblem& problem, std::span<const double> x0,
                                   const SolverParams& params);

}  // namespace apexlp

#endif  // APEXLP_FEJER_HPP
