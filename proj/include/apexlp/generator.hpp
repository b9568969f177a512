#ifndef APEXLP_GENERATOR_HPP
#define APEXLP_GENERATOR_HPP

#include "apexlp/model.hpp"

namespace apexlp {

// A generated instance together with its known optimum.
struct GeneratedInstance {
    LpProblem problem;
    Vec known_solution;
    double known_objective = 0.0;
};

/*
 * The scalable benchmark family, for n >= 2:
 *
 *     maximize 10n x_0 + 10(n-1) x_1 + ... + 10 x_{n-1}
 *     x_i <= 200                                (n rows)
 *     x_0 + ... + x_{n-1} <= 200(n-1) + 100     (1 row)
 *     -(x_0 + ... + x_{n-1}) <= -100            (1 row)
 *     -x_i <= 0                                 (n rows)
 *
 * so m = 2n + 2.  The optimum is (200, ..., 200, 100) with objective
 * 1000n^2 + 1000n - 1000: the heaviest n-1 coordinates saturate their
 * caps and the sum row pins the last one at 100.
 */
GeneratedInstance model_problem(std::size_t n);

// [0, 1]^n with c = (1, ..., 1): x_i <= 1 (n rows) then -x_i <= 0
// (n rows), optimum (1, ..., 1) with objective n.  For n >= 1.
GeneratedInstance unit_hypercube(std::size_t n);

}  // namespace apexlp

#endif  // APEXLP_GENERATOR_HPP
