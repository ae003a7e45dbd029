#pragma once

#include <stdexcept>
#include <string>

namespace sgl {

// Error taxonomy. Callers distinguish bad inputs (parameter_error), blown caps
// (resource_error), mathematically undefined results (degenerate_error) and
// solver breakdowns (numeric_error, lp_* errors).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parameter_error : error {
    using error::error;
};

struct resource_error : error {
    using error::error;
};

struct degenerate_error : error {
    using error::error;
};

struct numeric_error : error {
    double residual;
    numeric_error(const std::string& msg, double res) : error(msg), residual(res) {}
};

struct io_error : error {
    using error::error;
};

struct lp_infeasible_error : error {
    using error::error;
};

struct lp_unbounded_error : error {
    using error::error;
};

} // namespace sgl
