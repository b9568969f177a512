#include "apexlp/fejer.hpp"

#include <cmath>

namespace apexlp {

Vec violation_correction(const LpProblem& problem, std::span<const double> x, std::size_t i) {
    Vec out(problem.n, 0.0);
    auto row = problem.row(i);
    double r = dot(row, x) - problem.b[i];
    if (r > 0.0) {
        double t = r / problem.row_norms_sq[i];
        for (std::size_t j = 0; j < problem.n; ++j) out[j] = t * row[j];
    }
    return out;
}

RowReducer::RowReducer(const LpProblem& problem, std::size_t workers)
    : problem_(problem),
      workers_(std::max<std::size_t>(1, workers)),
      chunks_((problem.m + kChunkRows - 1) / kChunkRows),
      partials_(chunks_ * problem.n),
      hits_(chunks_) {
    for (std::size_t w = 1; w < workers_; ++w) {
        if (chunk_lo(w) < chunk_hi(w)) pool_.emplace_back(&RowReducer::worker_main, this, w);
    }
}

RowReducer::~RowReducer() {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        quit_ = true;
    }
    start_cv_.notify_all();
    for (auto& t : pool_) t.join();
}

void RowReducer::run_chunks(std::size_t chunk_begin, std::size_t chunk_end, const double* x) {
    const std::size_t n = problem_.n;
    const double* a = problem_.a.data();
    const double* b = problem_.b.data();
    const double* nrm = problem_.row_norms_sq.data();
    for (std::size_t c = chunk_begin; c < chunk_end; ++c) {
        const std::size_t row_end = std::min(problem_.m, (c + 1) * kChunkRows);
        double* part = partials_.data() + c * n;
        std::uint32_t hits = 0;
        for (std::size_t i = c * kChunkRows; i < row_end; ++i) {
            const double* row = a + i * n;
            double r = -b[i];
            for (std::size_t j = 0; j < n; ++j) r += row[j] * x[j];
            if (r > 0.0) {
                double t = r / nrm[i];
                if (hits == 0) {
                    for (std::size_t j = 0; j < n; ++j) part[j] = t * row[j];
                } else {
                    for (std::size_t j = 0; j < n; ++j) part[j] += t * row[j];
                }
                ++hits;
            }
        }
        hits_[c] = hits;
    }
}

void RowReducer::worker_main(std::size_t index) {
    const std::size_t lo = chunk_lo(index), hi = chunk_hi(index);
    std::uint64_t seen = 0;
    for (;;) {
        const double* x;
        {
            std::unique_lock<std::mutex> lock(mutex_);
            start_cv_.wait(lock, [&] { return quit_ || epoch_ != seen; });
            if (quit_) return;
            seen = epoch_;
            x = job_x_;
        }
        run_chunks(lo, hi, x);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            --outstanding_;
        }
        done_cv_.notify_one();
    }
}

Displacement RowReducer::displace(std::span<const double> x) {
    if (!pool_.empty()) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            job_x_ = x.data();
            ++epoch_;
            outstanding_ = pool_.size();
        }
        start_cv_.notify_all();
    }
    run_chunks(chunk_lo(0), chunk_hi(0), x.data());
    if (!pool_.empty()) {
        std::unique_lock<std::mutex> lock(mutex_);
        done_cv_.wait(lock, [&] { return outstanding_ == 0; });
    }

    Displacement out;
    out.phi.assign(problem_.n, 0.0);
    for (std::size_t c = 0; c < chunks_; ++c) {
        if (hits_[c] == 0) continue;
        out.violated += hits_[c];
        const double* part = partials_.data() + c * problem_.n;
        for (std::size_t j = 0; j < problem_.n; ++j) out.phi[j] += part[j];
    }
    if (out.violated > 0) {
        const double scale = 1.0 / static_cast<double>(out.violated);
        for (double& v : out.phi) v *= scale;
    }
    return out;
}

Displacement displacement(const LpProblem& problem, std::span<const double> x) {
    RowReducer reducer(problem, 1);
    return reducer.displace(x);
}

Displacement parallel_displacement(const LpProblem& problem, std::span<const double> x,
                                   std::size_t workers) {
    RowReducer reducer(problem, workers);
    return reducer.displace(x);
}

Vec fejer_step(const LpProblem& problem, std::span<const double> x) {
    Displacement d = displacement(problem, x);
    Vec out(x.begin(), x.end());
    for (std::size_t j = 0; j < problem.n; ++j) out[j] -= d.phi[j];
    return out;
}

ProjectionResult pseudo_projection(const LpProblem& problem, std::span<const double> x0,
                                   const SolverParams& params) {
    RowReducer reducer(problem, params.workers);
    ProjectionResult res;
    res.point.assign(x0.begin(), x0.end());
    while (res.sweeps < params.max_proj_sweeps) {
        Displacement d = reducer.displace(res.point);
        ++res.sweeps;
        double step_sq = 0.0;
        for (std::size_t j = 0; j < problem.n; ++j) {
            res.point[j] -= d.phi[j];
            step_sq += d.phi[j] * d.phi[j];
        }
        res.last_step_norm = std::sqrt(step_sq);
        if (res.last_step_norm < params.eps_proj) {
            res.converged = true;
            break;
        }
    }
    return res;
}

}  // namespace apexlp
