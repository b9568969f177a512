#include "apexlp/model.hpp"

#include <cmath>
#include <cstdlib>

namespace apexlp {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> v) {
    return std::sqrt(dot(v, v));
}

double inf_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

LpProblem LpProblem::make(std::size_t n, std::vector<double> a, Vec b, Vec c) {
    LpProblem p;
    p.n = n;
    p.m = b.size();
    p.a = std::move(a);
    p.b = std::move(b);
    p.c = std::move(c);
    validate(p);
    p.row_norms_sq.resize(p.m);
    for (std::size_t i = 0; i < p.m; ++i) p.row_norms_sq[i] = dot(p.row(i), p.row(i));
    return p;
}

void validate(const LpProblem& problem) {
    if (problem.n == 0 || problem.m == 0 || problem.a.size() != problem.m * problem.n ||
        problem.b.size() != problem.m || problem.c.size() != problem.n) {
        throw ValidationError(ValidationIssue::DimensionMismatch, 0,
                              "problem arrays disagree with n=" + std::to_string(problem.n) +
                                  ", m=" + std::to_string(problem.m));
    }
    for (std::size_t i = 0; i < problem.m; ++i) {
        bool all_zero = true;
        for (std::size_t j = 0; j < problem.n; ++j) {
            if (problem.a[i * problem.n + j] != 0.0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            throw ValidationError(ValidationIssue::ZeroRow, i,
                                  "constraint row " + std::to_string(i) + " is all zeros");
        }
    }
    bool c_zero = true;
    for (double v : problem.c) {
        if (v != 0.0) {
            c_zero = false;
            break;
        }
    }
    if (c_zero) {
        throw ValidationError(ValidationIssue::ZeroObjective, 0, "objective vector is all zeros");
    }
}

Vec residuals(const LpProblem& problem, std::span<const double> x) {
    Vec r(problem.m);
    for (std::size_t i = 0; i < problem.m; ++i) r[i] = dot(problem.row(i), x) - problem.b[i];
    return r;
}

bool is_member(const LpProblem& problem, std::span<const double> x, double eps_feas) {
    for (std::size_t i = 0; i < problem.m; ++i) {
        double r = dot(problem.row(i), x) - problem.b[i];
        if (r > eps_feas * std::max(1.0, std::abs(problem.b[i]))) return false;
    }
    return true;
}

double objective(const LpProblem& problem, std::span<const double> x) {
    return dot(problem.c, x);
}

Iterate Iterate::at(const LpProblem& problem, Vec x, double eps_feas) {
    Iterate it;
    it.res = residuals(problem, x);
    it.x = std::move(x);
    for (std::size_t i = 0; i < problem.m; ++i) {
        if (it.res[i] > eps_feas * std::max(1.0, std::abs(problem.b[i]))) ++it.violated;
    }
    return it;
}

void validate_params(const SolverParams& params) {
    if (params.sigma < 0.0) throw std::invalid_argument("sigma must be >= 0 (0 = derive)");
    if (params.delta < 0.0) throw std::invalid_argument("delta must be >= 0 (0 = derive)");
    if (params.mu <= 0.0) throw std::invalid_argument("mu must be > 0");
    if (params.eps_proj <= 0.0) throw std::invalid_argument("eps_proj must be > 0");
    if (params.eps_gamma <= 0.0) throw std::invalid_argument("eps_gamma must be > 0");
    if (params.eps_feas <= 0.0) throw std::invalid_argument("eps_feas must be > 0");
    if (params.max_proj_sweeps == 0) throw std::invalid_argument("max_proj_sweeps must be > 0");
    if (params.max_target_iters == 0) throw std::invalid_argument("max_target_iters must be > 0");
    if (params.max_gamma_iters == 0) throw std::invalid_argument("max_gamma_iters must be > 0");
    if (params.workers == 0) throw std::invalid_argument("workers must be > 0");
}

}  // namespace apexlp
