#pragma once

#include <cstdint>
#include <optional>

#include "sgl/errors.hpp"

namespace sgl {

// Every named constant, in natural-log space (the linear values are mostly
// far beyond double range). All unqualified logs are natural; the JSON
// serialization records that choice.
struct ConstantsTable {
    int d = 3;
    double eps = 1e-4;
    double alpha = 0.0;     // defaulted to exp(ln_alpha_d) when not supplied
    double p = 1.0;
    bool strict_regime = true; // eps <= 1e-4

    double ln_gamma_dp = 0.0;   // 10^12 * 2^p * ln(d)^2
    double gamma_dp_linear = 0; // exp of the above; +inf when unrepresentable
    double gamma1 = 0.0;        // 18/eps
    double ln_gamma2 = 0.0;     // -ln(alpha) - 2 ln(eps) + 3632 ln(d)^2
    double ln_alpha_d = 0.0;    // -10^11 * ln(d)^2
    double ln_alpha = 0.0;      // ln of the alpha actually used
    long long ell_star = 0;     // floor(log_{1+1/3000}(5(d-1)/4))
    double ln_alpha_tilde = 0.0; // ln(5 alpha/4) - ell_star * ln(d-1)
    double ln_eta = 0.0;         // ln_alpha_tilde + ln(eps) - ln(2^8 * 3^2 * 10^3)

    std::optional<double> ln_image_regime_threshold; // (1/eps) ln(4 + 2 log2 m), when m given
    std::optional<bool> image_regime_met;            // m >= ceil((4 + 2 log2 m)^(1/eps))
};

// eps in (0, 1/4); values above 1e-4 are allowed for exploration and clear the
// strict_regime flag. alpha defaults to alpha(d) = exp(-10^11 ln^2 d).
ConstantsTable constants_table(int d, double eps, std::optional<double> alpha = std::nullopt,
                               double p = 1.0, std::optional<std::int64_t> m = std::nullopt);

double ln_gamma_dp(int d, double p);
double ln_alpha_of_d(int d);
double ln_alpha_tilde(double alpha, int d);
double ln_eta(int d, double alpha, double eps);

// floor(log_{1+1/3000}(5(d-1)/4)), evaluated with 50-digit MPFR and
// cross-checked by an exact GMP integer power comparison; throws
// numeric_error if the two routes disagree.
long long ell_star(int d);

// m >= ceil((4 + 2 log2 m)^(1/eps)) — the regime where the compressed image
// bound collapses to m^(1-eps).
bool image_regime_met(std::int64_t m, double eps);

// Second, high-precision evaluation path for the extrapolation bound's
// log value (50-digit MPFR); used to cross-check the double-precision path.
double extrapolation_log_hp(double gamma_p, double p, double q, int d, double h);

// 50-digit evaluation of 10^12 * 2^p * ln(d)^2, for cross-checks.
double ln_gamma_dp_hp(int d, double p);

} // namespace sgl
