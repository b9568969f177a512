#ifndef APEXLP_MODEL_HPP
#define APEXLP_MODEL_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apexlp {

using Vec = std::vector<double>;

// Why a problem definition was rejected.
enum class ValidationIssue {
    ZeroRow,            // some constraint row a_i is the zero vector
    ZeroObjective,      // c is the zero vector
    DimensionMismatch,  // array sizes disagree with (n, m)
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationIssue issue, std::size_t index, const std::string& what)
        : std::runtime_error(what), issue_(issue), index_(index) {}

    ValidationIssue issue() const { return issue_; }
    // Offending row for ZeroRow, 0 otherwise.
    std::size_t index() const { return index_; }

private:
    ValidationIssue issue_;
    std::size_t index_;
};

/*
 * A linear program in the form
 *
 *     maximize   <c, x>
 *     subject to <a_i, x> <= b_i,   i = 0..m-1
 *
 * with x ranging over all of R^n (no implicit sign restrictions; bounds
 * are ordinary rows).  The constraint matrix is stored dense, row major.
 * Row norms are cached at construction because the projection step
 * divides by ||a_i||^2 for every violated row.
 */
struct LpProblem {
    std::size_t n = 0;  // number of variables
    std::size_t m = 0;  // number of constraint rows
    std::vector<double> a;  // m*n coefficients, row major
    Vec b;                  // m right-hand sides
    Vec c;                  // n objective coefficients
    Vec row_norms_sq;       // ||a_i||^2, cached

    // Builds a problem and validates it (throws ValidationError).
    static LpProblem make(std::size_t n, std::vector<double> a, Vec b, Vec c);

    std::span<const double> row(std::size_t i) const {
        return {a.data() + i * n, n};
    }
};

// Checks dimensions, nonzero rows and nonzero objective.
// Throws ValidationError naming the offending element.
void validate(const LpProblem& problem);

// r_i = <a_i, x> - b_i for every row.  Negative entries mean slack.
Vec residuals(const LpProblem& problem, std::span<const double> x);

// Membership test with a per-row relative band:
// every residual must satisfy r_i <= eps_feas * max(1, |b_i|).
bool is_member(const LpProblem& problem, std::span<const double> x, double eps_feas);

double objective(const LpProblem& problem, std::span<const double> x);

// A point together with its residual profile.
struct Iterate {
    Vec x;
    Vec res;                   // residuals at x
    std::size_t violated = 0;  // rows with r_i > eps_feas * max(1, |b_i|)

    static Iterate at(const LpProblem& problem, Vec x, double eps_feas);
};

/*
 * Knobs for the solver.  sigma and delta default to 0, which means
 * "derive from the problem": sigma becomes 20000 * n * max(1, |b|_inf / n)
 * and delta becomes 1e-2 * max(1, |u0|_inf) once the initial
 * approximation u0 is known.  Explicit positive values override both.
 */
struct SolverParams {
    double sigma = 0.0;       // apex shift along the objective direction
    double delta = 0.0;       // probe step of the target stage
    double mu = 1.0;          // initial step of the boundary march
    double eps_proj = 1e-9;   // pseudo-projection stop threshold
    double eps_gamma = 1e-9;  // boundary march resolution
    double eps_feas = 1e-9;   // membership band width
    std::size_t max_proj_sweeps = 10'000'000;
    std::size_t max_target_iters = 10'000;
    std::size_t max_gamma_iters = 200'000;  // consecutive accepted steps before declaring the ray unbounded
    std::size_t workers = 1;
};

// Throws std::invalid_argument on nonsensical settings (negative
// tolerances, zero caps, zero workers).
void validate_params(const SolverParams& params);

// Shared helpers used across the solver.
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);
double inf_norm(std::span<const double> v);

}  // namespace apexlp

#endif  // APEXLP_MODEL_HPP
