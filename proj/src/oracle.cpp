#include "apexlp/oracle.hpp"

#include <cmath>
#include <limits>

namespace apexlp {

const char* oracle_status_name(OracleStatus s) {
    switch (s) {
        case OracleStatus::Optimal: return "Optimal";
        case OracleStatus::Unbounded: return "Unbounded";
        case OracleStatus::Infeasible: return "Infeasible";
    }
    return "?";
}

namespace {

constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-11;
constexpr std::size_t kPivotCap = 200'000;

/*
 * Dense tableau for min <cost, y>, rows A y = rhs (rhs >= 0), basis B.
 * The reduced-cost row is kept canonical: r[B[i]] == 0 for every basic
 * column.
 */
struct Tableau {
    std::size_t rows, cols;  // cols excludes the rhs column
    std::vector<double> t;   // rows x (cols + 1), row major
    std::vector<std::size_t> basis;
    Vec r;  // cols + 1 reduced costs; r[cols] = -objective

    double& at(std::size_t i, std::size_t j) { return t[i * (cols + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return t[i * (cols + 1) + j]; }

    void set_costs(const Vec& cost) {
        r.assign(cols + 1, 0.0);
        for (std::size_t j = 0; j <= cols; ++j) {
            double v = j < cols ? cost[j] : 0.0;
            for (std::size_t i = 0; i < rows; ++i) v -= cost[basis[i]] * at(i, j);
            r[j] = v;
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const double pv = at(pr, pc);
        for (std::size_t j = 0; j <= cols; ++j) at(pr, j) /= pv;
        at(pr, pc) = 1.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const double f = at(i, pc);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols; ++j) at(i, j) -= f * at(pr, j);
            at(i, pc) = 0.0;
        }
        const double f = r[pc];
        if (f != 0.0) {
            for (std::size_t j = 0; j <= cols; ++j) r[j] -= f * at(pr, j);
            r[pc] = 0.0;
        }
        basis[pr] = pc;
    }

    // Bland's rule: entering = lowest eligible column index; leaving =
    // min ratio, ties broken by lowest basic variable index.  Returns
    // Optimal or Unbounded.
    OracleStatus run(std::size_t enter_limit, double cost_scale) {
        const double rtol = kReducedCostTol * cost_scale;
        for (std::size_t iter = 0; iter < kPivotCap; ++iter) {
            std::size_t pc = cols;
            for (std::size_t j = 0; j < enter_limit; ++j) {
                if (r[j] < -rtol) {
                    pc = j;
                    break;
                }
            }
            if (pc == cols) return OracleStatus::Optimal;
            std::size_t pr = rows;
            double best_ratio = 0.0;
            for (std::size_t i = 0; i < rows; ++i) {
                if (at(i, pc) <= kPivotTol) continue;
                double ratio = at(i, cols) / at(i, pc);
                if (pr == rows || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[pr])) {
                    pr = i;
                    best_ratio = ratio;
                }
            }
            if (pr == rows) return OracleStatus::Unbounded;
            pivot(pr, pc);
        }
        throw std::runtime_error("simplex: pivot cap exceeded");
    }
};

}  // namespace

OracleResult simplex_solve(const LpProblem& problem) {
    if (problem.n > 200 || problem.m > 500) {
        throw SizeGuard("simplex oracle guards n <= 200, m <= 500 (got n=" +
                        std::to_string(problem.n) + ", m=" + std::to_string(problem.m) + ")");
    }
    const std::size_t n = problem.n, m = problem.m;

    std::size_t art_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (problem.b[i] < 0.0) ++art_count;
    }
    // Columns: x+ (n) | x- (n) | slacks (m) | artificials.
    const std::size_t art0 = 2 * n + m;
    Tableau tab;
    tab.rows = m;
    tab.cols = art0 + art_count;
    tab.t.assign(m * (tab.cols + 1), 0.0);
    tab.basis.resize(m);

    std::size_t art = art0;
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = problem.b[i] < 0.0 ? -1.0 : 1.0;
        auto row = problem.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            tab.at(i, j) = sign * row[j];
            tab.at(i, n + j) = -sign * row[j];
        }
        tab.at(i, 2 * n + i) = sign;
        tab.at(i, tab.cols) = sign * problem.b[i];
        if (sign < 0.0) {
            tab.at(i, art) = 1.0;
            tab.basis[i] = art++;
        } else {
            tab.basis[i] = 2 * n + i;
        }
    }

    const double b_scale = std::max(1.0, inf_norm(problem.b));

    if (art_count > 0) {
        Vec cost1(tab.cols, 0.0);
        for (std::size_t j = art0; j < tab.cols; ++j) cost1[j] = 1.0;
        tab.set_costs(cost1);
        // Phase 1 is bounded below by zero, so Unbounded cannot occur.
        tab.run(tab.cols, 1.0);
        double infeas = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] >= art0) infeas += tab.at(i, tab.cols);
        }
        if (infeas > 1e-7 * b_scale) return {OracleStatus::Infeasible, {}, 0.0};
        // Pivot remaining artificials out where possible; a row with no
        // usable column is redundant and stays parked at zero.
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < art0) continue;
            for (std::size_t j = 0; j < art0; ++j) {
                if (std::abs(tab.at(i, j)) > kPivotTol) {
                    tab.pivot(i, j);
                    break;
                }
            }
        }
    }

    Vec cost2(tab.cols, 0.0);
    double cost_scale = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        cost2[j] = -problem.c[j];
        cost2[n + j] = problem.c[j];
        cost_scale = std::max(cost_scale, std::abs(problem.c[j]));
    }
    tab.set_costs(cost2);
    // Artificial columns are barred from entering in phase 2.
    OracleStatus status = tab.run(art0, cost_scale);
    if (status == OracleStatus::Unbounded) return {OracleStatus::Unbounded, {}, 0.0};

    OracleResult res;
    res.status = OracleStatus::Optimal;
    res.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < n) res.x[tab.basis[i]] += tab.at(i, tab.cols);
        else if (tab.basis[i] < 2 * n) res.x[tab.basis[i] - n] -= tab.at(i, tab.cols);
    }
    res.objective = objective(problem, res.x);
    return res;
}

OracleResult vertex_brute_force(const LpProblem& problem) {
    const std::size_t n = problem.n, m = problem.m;
    double combos = 1.0;
    for (std::size_t k = 1; k <= n && k <= m; ++k) {
        combos *= static_cast<double>(m - n + k) / static_cast<double>(k);
        if (combos > 1e9) break;
    }
    if (m < n || combos > 1e6) {
        throw SizeGuard("vertex enumeration guards C(m, n) <= 1e6 (n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");
    }

    double a_scale = 0.0;
    for (double v : problem.a) a_scale = std::max(a_scale, std::abs(v));

    std::vector<std::size_t> idx(n);
    for (std::size_t j = 0; j < n; ++j) idx[j] = j;

    std::vector<double> sys(n * (n + 1));
    std::vector<std::size_t> perm(n);
    Vec vertex(n);

    OracleResult best;
    best.status = OracleStatus::Infeasible;

    for (;;) {
        for (std::size_t i = 0; i < n; ++i) {
            auto row = problem.row(idx[i]);
            for (std::size_t j = 0; j < n; ++j) sys[i * (n + 1) + j] = row[j];
            sys[i * (n + 1) + n] = problem.b[idx[i]];
        }

        // Gaussian elimination with partial pivoting; a pivot below
        // 1e-11 of the matrix scale marks the subset as singular.
        bool singular = false;
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        for (std::size_t col = 0; col < n && !singular; ++col) {
            std::size_t piv = col;
            for (std::size_t i = col + 1; i < n; ++i) {
                if (std::abs(sys[perm[i] * (n + 1) + col]) >
                    std::abs(sys[perm[piv] * (n + 1) + col]))
                    piv = i;
            }
            if (std::abs(sys[perm[piv] * (n + 1) + col]) <= 1e-11 * a_scale) {
                singular = true;
                break;
            }
            std::swap(perm[col], perm[piv]);
            const double* prow = &sys[perm[col] * (n + 1)];
            for (std::size_t i = col + 1; i < n; ++i) {
                double* irow = &sys[perm[i] * (n + 1)];
                double f = irow[col] / prow[col];
                if (f == 0.0) continue;
                for (std::size_t j = col; j <= n; ++j) irow[j] -= f * prow[j];
            }
        }
        if (!singular) {
            for (std::size_t i = n; i-- > 0;) {
                const double* irow = &sys[perm[i] * (n + 1)];
                double v = irow[n];
                for (std::size_t j = i + 1; j < n; ++j) v -= irow[j] * vertex[j];
                vertex[i] = v / irow[i];
            }
            bool feasible = true;
            for (std::size_t i = 0; i < m && feasible; ++i) {
                double r = dot(problem.row(i), vertex) - problem.b[i];
                if (r > 1e-8 * std::max(1.0, std::abs(problem.b[i]))) feasible = false;
            }
            if (feasible) {
                double obj = objective(problem, vertex);
                if (best.status == OracleStatus::Infeasible || obj > best.objective) {
                    best.status = OracleStatus::Optimal;
                    best.objective = obj;
                    best.x = vertex;
                }
            }
        }

        // Advance the subset odometer.
        std::size_t j = n;
        while (j-- > 0) {
            if (idx[j] != j + m - n) {
                ++idx[j];
                for (std::size_t k = j + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
                break;
            }
            if (j == 0) return best;
        }
    }
}

}  // namespace apexlp
