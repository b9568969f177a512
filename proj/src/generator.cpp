#include "apexlp/generator.hpp"

namespace apexlp {

GeneratedInstance model_problem(std::size_t n) {
    if (n < 2) throw std::invalid_argument("model_problem needs n >= 2");
    const std::size_t m = 2 * n + 2;
    std::vector<double> a(m * n, 0.0);
    Vec b(m), c(n);

    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = 1.0;
        b[i] = 200.0;
    }
    for (std::size_t j = 0; j < n; ++j) a[n * n + j] = 1.0;
    b[n] = 200.0 * static_cast<double>(n - 1) + 100.0;
    for (std::size_t j = 0; j < n; ++j) a[(n + 1) * n + j] = -1.0;
    b[n + 1] = -100.0;
    for (std::size_t i = 0; i < n; ++i) {
        a[(n + 2 + i) * n + i] = -1.0;
        b[n + 2 + i] = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) c[j] = 10.0 * static_cast<double>(n - j);

    GeneratedInstance inst;
    inst.problem = LpProblem::make(n, std::move(a), std::move(b), std::move(c));
    inst.known_solution.assign(n, 200.0);
    inst.known_solution[n - 1] = 100.0;
    const double dn = static_cast<double>(n);
    inst.known_objective = 1000.0 * dn * dn + 1000.0 * dn - 1000.0;
    return inst;
}

GeneratedInstance unit_hypercube(std::size_t n) {
    if (n < 1) throw std::invalid_argument("unit_hypercube needs n >= 1");
    const std::size_t m = 2 * n;
    std::vector<double> a(m * n, 0.0);
    Vec b(m), c(n, 1.0);

    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = 1.0;
        b[i] = 1.0;
        a[(n + i) * n + i] = -1.0;
        b[n + i] = 0.0;
    }

    GeneratedInstance inst;
    inst.problem = LpProblem::make(n, std::move(a), std::move(b), std::move(c));
    inst.known_solution.assign(n, 1.0);
    inst.known_objective = static_cast<double>(n);
    return inst;
}

}  // namespace apexlp
