#ifndef APEXLP_ORACLE_HPP
#define APEXLP_ORACLE_HPP

#include "apexlp/model.hpp"

namespace apexlp {

// The instance is too large for the verification oracle it was handed to.
class SizeGuard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OracleStatus { Optimal, Unbounded, Infeasible };

const char* oracle_status_name(OracleStatus s);

struct OracleResult {
    OracleStatus status = OracleStatus::Infeasible;
    Vec x;                   // maximizer when status == Optimal
    double objective = 0.0;  // <c, x> when status == Optimal
};

/*
 * Reference solver: dense two-phase tableau simplex with Bland's rule.
 * Free variables are split as x = x+ - x-, one slack per row, and
 * artificials only where the right-hand side is negative.  Intended for
 * verification at desk scale; guards n <= 200, m <= 500 (SizeGuard).
 */
OracleResult simplex_solve(const LpProblem& problem);

/*
 * Second, independent reference: enumerate every n-subset of rows,
 * solve the n x n system, keep the feasible vertices and return the
 * objective maximizer.  Never reports Unbounded; an unbounded problem
 * with vertices yields the best vertex.  Guards C(m, n) <= 1e6
 * (SizeGuard).
 */
OracleResult vertex_brute_force(const LpProblem& problem);

}  // namespace apexlp

#endif  // APEXLP_ORACLE_HPP
