#include "apexlp/target.hpp"

#include <chrono>
#include <cmath>

namespace apexlp {

namespace {

constexpr double kResidualPolish = 1e-13;  // target band after refinement
constexpr int kPolishPasses = 50;
constexpr int kDeltaHalvings = 20;
constexpr double kStopGainTol = 1e-9;  // relative objective gain treated as zero

/*
 * Sequential per-row projection of the near-active rows.  The averaged
 * pseudo-projection stops anywhere inside the eps band; pulling each
 * violated row back to ~1e-13 restores the slack that gamma_bisect
 * needs to march in real steps.
 */
void polish(const LpProblem& p, Vec& x) {
    for (int pass = 0; pass < kPolishPasses; ++pass) {
        bool touched = false;
        for (std::size_t i = 0; i < p.m; ++i) {
            auto row = p.row(i);
            double r = dot(row, x) - p.b[i];
            if (r > kResidualPolish * std::max(1.0, std::abs(p.b[i]))) {
                double t = r / p.row_norms_sq[i];
                for (std::size_t j = 0; j < p.n; ++j) x[j] -= t * row[j];
                touched = true;
            }
        }
        if (!touched) break;
    }
}

// Exact feasible step length from u along dir (not normalized), or
// nullopt when no row bounds the ray.
std::optional<double> ratio_eta(const LpProblem& p, std::span<const double> u,
                                std::span<const double> dir) {
    const double dir_norm = norm(dir);
    double best = 0.0;
    bool found = false;
    for (std::size_t i = 0; i < p.m; ++i) {
        auto row = p.row(i);
        double den = dot(row, dir);
        if (den > 1e-12 * std::sqrt(p.row_norms_sq[i]) * dir_norm) {
            double eta = (p.b[i] - dot(row, u)) / den;
            if (!found || eta < best) {
                best = eta;
                found = true;
            }
        }
    }
    if (!found) return std::nullopt;
    return std::max(best, 0.0);
}

double default_sigma(const LpProblem& p) {
    double scale = std::max(1.0, inf_norm(p.b) / static_cast<double>(p.n));
    return 20000.0 * static_cast<double>(p.n) * scale;
}

}  // namespace

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::StopCriterion: return "StopCriterion";
        case Termination::IterationCap: return "IterationCap";
        case Termination::ProjectionFailure: return "ProjectionFailure";
    }
    return "?";
}

Vec objective_direction(const LpProblem& problem) {
    double c_norm = norm(problem.c);
    if (c_norm == 0.0) {
        throw ValidationError(ValidationIssue::ZeroObjective, 0, "objective vector is all zeros");
    }
    Vec e(problem.n);
    for (std::size_t j = 0; j < problem.n; ++j) e[j] = problem.c[j] / c_norm;
    return e;
}

Vec apex_point(std::span<const double> x, std::span<const double> e, double sigma) {
    Vec z(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) z[j] = x[j] + sigma * e[j];
    return z;
}

double sigma_floor(const LpProblem& problem) {
    return std::max(static_cast<double>(problem.n), inf_norm(problem.b));
}

Vec initial_approximation(const LpProblem& problem, std::span<const double> z,
                          const SolverParams& params, std::size_t* sweeps_out) {
    if (is_member(problem, z, params.eps_feas)) {
        throw ApexInsideM("apex point is inside the polytope; increase sigma");
    }
    ProjectionResult pr = pseudo_projection(problem, z, params);
    if (sweeps_out) *sweeps_out = pr.sweeps;
    if (!pr.converged) {
        throw ProjectionFailure(std::move(pr.point), pr.sweeps,
                                "pseudo-projection hit its sweep cap");
    }
    polish(problem, pr.point);
    return std::move(pr.point);
}

Vec gamma_bisect(const LpProblem& problem, std::span<const double> u, std::span<const double> w,
                 const SolverParams& params) {
    const std::size_t n = problem.n;
    Vec d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = w[j] - u[j];
    double nd = norm(d);
    if (nd < 1e-14) throw StepDegenerate("gamma march: u and w coincide");
    for (std::size_t j = 0; j < n; ++j) d[j] /= nd;

    Vec t(u.begin(), u.end()), cand(n);
    double tau = params.mu;
    std::size_t accepted_run = 0;
    while (tau >= params.eps_gamma) {
        for (std::size_t j = 0; j < n; ++j) cand[j] = t[j] + tau * d[j];
        if (is_member(problem, cand, params.eps_feas)) {
            t.swap(cand);
            if (++accepted_run >= params.max_gamma_iters) {
                throw UnboundedRay("gamma march: no boundary along the ray");
            }
        } else {
            tau *= 0.5;
            accepted_run = 0;
        }
    }
    return t;
}

Vec gamma_ratio_test(const LpProblem& problem, std::span<const double> u,
                     std::span<const double> w) {
    const std::size_t n = problem.n;
    Vec d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = w[j] - u[j];
    std::optional<double> eta = ratio_eta(problem, u, d);
    if (!eta) throw UnboundedRay("ratio test: no row bounds the ray");
    Vec out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = u[j] + *eta * d[j];
    return out;
}

SolveReport solve(const LpProblem& problem, std::span<const double> x_start,
                  const SolverParams& params) {
    validate_params(params);
    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    auto finish = [&](SolveReport rep) {
        rep.objective = objective(problem, rep.solution);
        rep.iterations = rep.trace.empty() ? 0 : rep.trace.size() - 1;
        rep.wall_seconds = elapsed();
        return rep;
    };

    SolveReport rep;
    const Vec e_c = objective_direction(problem);
    const double c_norm = norm(problem.c);

    // Quest stage: reach the polytope from the start point.
    ProjectionResult quest = pseudo_projection(problem, x_start, params);
    if (!quest.converged) {
        rep.solution = std::move(quest.point);
        rep.termination = Termination::ProjectionFailure;
        return finish(std::move(rep));
    }

    const double sigma = params.sigma > 0.0 ? params.sigma : default_sigma(problem);
    if (sigma < sigma_floor(problem)) {
        throw ApexInsideM("sigma " + std::to_string(sigma) + " is below the admissible floor " +
                          std::to_string(sigma_floor(problem)));
    }
    const Vec z = apex_point(quest.point, e_c, sigma);

    Vec u;
    std::size_t apex_sweeps = 0;
    try {
        u = initial_approximation(problem, z, params, &apex_sweeps);
    } catch (const ProjectionFailure& pf) {
        rep.solution = pf.best();
        rep.termination = Termination::ProjectionFailure;
        return finish(std::move(rep));
    }

    const double delta0 = params.delta > 0.0 ? params.delta : 1e-2 * std::max(1.0, inf_norm(u));
    rep.trace.push_back({0, u, objective(problem, u), std::nullopt, apex_sweeps});
    rep.termination = Termination::IterationCap;

    for (std::size_t it = 0; it < params.max_target_iters; ++it) {
        const double obj_u = objective(problem, u);
        double delta = delta0;
        bool stop_now = false, proj_fail = false;
        Vec w;
        std::size_t probe_sweeps = 0;

        // Ascent probe: project u + delta * e_c back onto the polytope.
        // A probe that shows no gain is confirmed against the exact
        // feasible step along e_c before it is allowed to stop the walk;
        // otherwise delta halves and the probe is retried.
        for (int half = 0; half <= kDeltaHalvings; ++half) {
            Vec v(problem.n);
            for (std::size_t j = 0; j < problem.n; ++j) v[j] = u[j] + delta * e_c[j];
            ProjectionResult pw = pseudo_projection(problem, v, params);
            probe_sweeps += pw.sweeps;
            if (!pw.converged) {
                proj_fail = true;
                break;
            }
            w = std::move(pw.point);
            polish(problem, w);
            if (objective(problem, w) > obj_u) break;
            std::optional<double> eta = ratio_eta(problem, u, e_c);
            if (eta && *eta * c_norm <= kStopGainTol * std::max(1.0, std::abs(obj_u))) {
                stop_now = true;
                break;
            }
            if (half == kDeltaHalvings) {
                stop_now = true;
                break;
            }
            delta *= 0.5;
        }
        if (proj_fail) {
            rep.termination = Termination::ProjectionFailure;
            break;
        }
        if (stop_now || objective(problem, w) <= obj_u) {
            rep.termination = Termination::StopCriterion;
            break;
        }

        Vec next;
        try {
            next = gamma_bisect(problem, u, w, params);
        } catch (const StepDegenerate&) {
            rep.termination = Termination::StopCriterion;
            break;
        }
        polish(problem, next);

        double step_sq = 0.0;
        for (std::size_t j = 0; j < problem.n; ++j) {
            double dj = next[j] - u[j];
            step_sq += dj * dj;
        }
        const double step = std::sqrt(step_sq);
        if (step < params.eps_gamma || objective(problem, next) <= obj_u) {
            rep.termination = Termination::StopCriterion;
            break;
        }

        rep.trace.back().step_norm = step;
        u = std::move(next);
        rep.trace.push_back({rep.trace.size(), u, objective(problem, u), std::nullopt, probe_sweeps});
    }

    rep.solution = std::move(u);
    return finish(std::move(rep));
}

SolveReport solve(const LpProblem& problem, const SolverParams& params) {
    Vec origin(problem.n, 0.0);
    return solve(problem, origin, params);
}

}  // namespace apexlp
