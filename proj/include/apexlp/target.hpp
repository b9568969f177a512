#ifndef APEXLP_TARGET_HPP
#define APEXLP_TARGET_HPP

#include <optional>

#include "apexlp/fejer.hpp"
#include "apexlp/model.hpp"

namespace apexlp {

// The apex point landed inside the polytope (or sigma was too small for
// that to be ruled out), so projecting it cannot reach the face that
// supports the optimum.
class ApexInsideM : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// gamma_bisect was handed two coincident points; there is no direction
// to march along.
class StepDegenerate : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The feasible ray in the requested direction never leaves the polytope.
class UnboundedRay : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pseudo-projection hit its sweep cap.  Carries the best point reached.
class ProjectionFailure : public std::runtime_error {
public:
    ProjectionFailure(Vec best, std::size_t sweeps, const std::string& what)
        : std::runtime_error(what), best_(std::move(best)), sweeps_(sweeps) {}

    const Vec& best() const { return best_; }
    std::size_t sweeps() const { return sweeps_; }

private:
    Vec best_;
    std::size_t sweeps_;
};

enum class Termination {
    StopCriterion,      // the ascent probe found no further gain
    IterationCap,       // max_target_iters exhausted
    ProjectionFailure,  // a pseudo-projection hit its sweep cap
};

const char* termination_name(Termination t);

struct TargetTraceRecord {
    std::size_t k = 0;
    Vec u;  // the boundary iterate u_k
    double objective = 0.0;
    // ||u_{k+1} - u_k||; absent on the final record.
    std::optional<double> step_norm;
    // Pseudo-projection sweeps spent producing this iterate.
    std::size_t proj_sweeps = 0;
};

struct SolveReport {
    Vec solution;
    double objective = 0.0;
    std::size_t iterations = 0;  // boundary steps taken (trace size - 1)
    std::vector<TargetTraceRecord> trace;
    Termination termination = Termination::StopCriterion;
    double wall_seconds = 0.0;
};

// c / ||c||.  The problem validator already rejects c = 0.
Vec objective_direction(const LpProblem& problem);

// z = x + sigma * e.
Vec apex_point(std::span<const double> x, std::span<const double> e, double sigma);

// Smallest admissible apex shift, max(n, |b|_inf).  Below this the shift
// cannot clear the polytope reliably and solve() refuses to run.
double sigma_floor(const LpProblem& problem);

/*
 * Projects the apex point z onto the polytope boundary and refines the
 * landing point so every near-active row sits within 1e-13 * max(1, |b_i|)
 * instead of anywhere inside the eps_feas band.  Without that refinement
 * the boundary march inherits band-sized junk components and crawls.
 *
 * Throws ApexInsideM when z is already a member (within eps_feas) and
 * ProjectionFailure when the sweep cap is hit.
 */
Vec initial_approximation(const LpProblem& problem, std::span<const double> z,
                          const SolverParams& params, std::size_t* sweeps_out = nullptr);

/*
 * Marches from u toward (and past) w along the ray u + t * (w - u) / ||w - u||,
 * keeping every accepted point inside the membership band.  The step
 * starts at params.mu and halves on each rejected candidate; the march
 * stops once the step drops below params.eps_gamma.  The result is the
 * last accepted point, within eps_gamma of the exact exit point.
 *
 * Throws StepDegenerate when ||w - u|| < 1e-14 and UnboundedRay after
 * params.max_gamma_iters consecutive accepted steps.
 */
Vec gamma_bisect(const LpProblem& problem, std::span<const double> u, std::span<const double> w,
                 const SolverParams& params);

/*
 * Exact exit point along the same ray, by ratio test:
 * eta* = min over rows with <a_i, d> > 1e-12 * ||a_i|| * ||d|| of
 * (b_i - <a_i, u>) / <a_i, d>, clamped at 0.  Returns u + eta* * d.
 * Throws UnboundedRay when no row bounds the ray.
 */
Vec gamma_ratio_test(const LpProblem& problem, std::span<const double> u,
                     std::span<const double> w);

/*
 * Full solve: project the start point onto the polytope, lift it by
 * sigma along the objective direction, project back to get the first
 * boundary iterate, then walk the boundary with probe steps of delta
 * and gamma_bisect marches until the probe finds no further gain.
 *
 * Throws ApexInsideM when sigma is below sigma_floor() or the apex point
 * lands inside the polytope.  Projection sweep-cap overruns terminate
 * the report with Termination::ProjectionFailure instead of throwing.
 */
SolveReport solve(const LpProblem& problem, std::span<const double> x_start,
                  const SolverParams& params);

// Same, starting the feasibility quest from the origin.
SolveReport solve(const LpProblem& problem, const SolverParams& params);

}  // namespace apexlp

#endif  // APEXLP_TARGET_HPP
