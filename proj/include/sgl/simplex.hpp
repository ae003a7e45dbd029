#pragma once

#include <vector>

#include "sgl/errors.hpp"

namespace sgl {

enum class Relation { LE, GE, EQ };

// min c.x  s.t.  rows (a.x <=|>=|= b),  x >= 0.
struct LinearProgram {
    std::vector<double> objective;
    struct Row {
        std::vector<double> coeffs;
        Relation rel;
        double rhs;
    };
    std::vector<Row> rows;

    void validate() const {
        for (const auto& r : rows)
            if (r.coeffs.size() != objective.size())
                throw parameter_error("LinearProgram: row dimension mismatch");
    }
};

struct SimplexSolution {
    double value = 0.0;
    std::vector<double> x; // structural variables only
};

// Two-phase dense tableau simplex with Bland's anti-cycling rule.
// Throws lp_infeasible_error / lp_unbounded_error; feasibility residual of the
// returned solution is within tol.
SimplexSolution simplex_solve(const LinearProgram& lp, double tol = 1e-9);

} // namespace sgl
