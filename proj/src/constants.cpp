#include "sgl/constants.hpp"

#include <cmath>

#include <gmp.h>
#include <mpfr.h>

namespace sgl {

namespace {

constexpr mpfr_prec_t kPrecBits = 192; // ~57 decimal digits

// RAII wrapper around a single mpfr value.
class Real {
public:
    Real() { mpfr_init2(v_, kPrecBits); }
    explicit Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    static Real log(const Real& x) {
        Real r;
        mpfr_log(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    static Real exp2x(double x) {
        Real r;
        Real e(x);
        mpfr_exp2(r.v_, e.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r;
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, const Real& b) {
        Real r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

private:
    mpfr_t v_;
};

void check_d(int d) {
    if (d < 3) throw parameter_error("constants: need d >= 3");
}

void check_eps(double eps) {
    if (!(eps > 0.0) || eps >= 0.25)
        throw parameter_error("constants: eps must lie in (0, 1/4)");
}

} // namespace

double ln_gamma_dp(int d, double p) {
    check_d(d);
    const double ld = std::log(static_cast<double>(d));
    return 1e12 * std::exp2(p) * ld * ld;
}

double ln_gamma_dp_hp(int d, double p) {
    check_d(d);
    const Real ld = Real::log(Real(static_cast<double>(d)));
    return (Real(1e12) * Real::exp2x(p) * ld * ld).to_double();
}

double ln_alpha_of_d(int d) {
    check_d(d);
    const double ld = std::log(static_cast<double>(d));
    return -1e11 * ld * ld;
}

long long ell_star(int d) {
    check_d(d);
    // floor(log(5(d-1)/4) / log(3001/3000)) at 50+ digits
    Real num = Real::log(Real(5.0 * (d - 1)) / Real(4.0));
    Real den = Real::log(Real(3001.0) / Real(3000.0));
    Real q = num / den;
    mpfr_t fl;
    mpfr_init2(fl, kPrecBits);
    mpfr_floor(fl, q.get());
    const long long result = std::llround(mpfr_get_d(fl, MPFR_RNDN));
    mpfr_clear(fl);

    // exact oracle: (3001/3000)^L <= 5(d-1)/4 < (3001/3000)^(L+1), cleared of
    // denominators: 4*3001^L <= 5(d-1)*3000^L and 4*3001^(L+1) > 5(d-1)*3000^(L+1)
    auto side_holds = [&](long long L, bool lower) {
        mpz_t a, b;
        mpz_init(a);
        mpz_init(b);
        mpz_ui_pow_ui(a, 3001, static_cast<unsigned long>(L));
        mpz_mul_ui(a, a, 4);
        mpz_ui_pow_ui(b, 3000, static_cast<unsigned long>(L));
        mpz_mul_ui(b, b, static_cast<unsigned long>(5 * (d - 1)));
        const int cmp = mpz_cmp(a, b);
        mpz_clear(a);
        mpz_clear(b);
        return lower ? cmp <= 0 : cmp > 0;
    };
    if (result < 0 || !side_holds(result, true) || !side_holds(result + 1, false))
        throw numeric_error("ell_star: floating and exact-integer routes disagree",
                            static_cast<double>(result));
    return result;
}

double ln_alpha_tilde(double alpha, int d) {
    check_d(d);
    if (!(alpha > 0.0) || alpha > 1.0) throw parameter_error("constants: alpha must lie in (0, 1]");
    return std::log(5.0 * alpha / 4.0) - static_cast<double>(ell_star(d)) * std::log(static_cast<double>(d - 1));
}

double ln_eta(int d, double alpha, double eps) {
    check_eps(eps);
    return ln_alpha_tilde(alpha, d) + std::log(eps) - std::log(256.0 * 9.0 * 1000.0);
}

bool image_regime_met(std::int64_t m, double eps) {
    check_eps(eps);
    if (m < 2) throw parameter_error("constants: need m >= 2");
    const double ln_threshold = (1.0 / eps) * std::log(4.0 + 2.0 * std::log2(static_cast<double>(m)));
    return std::log(static_cast<double>(m)) >= ln_threshold;
}

double extrapolation_log_hp(double gamma_p, double p, double q, int d, double h) {
    check_d(d);
    if (h <= 0.0) throw parameter_error("extrapolation_log_hp: need h > 0");
    if (p < 1.0 || q < p) throw parameter_error("extrapolation_log_hp: need 1 <= p <= q");
    if (gamma_p <= 0.0) throw parameter_error("extrapolation_log_hp: need gamma_p > 0");
    const Real ld = Real::log(Real(static_cast<double>(d)));
    const Real exp_branch = Real(12.0) * Real::exp2x(q) * (Real(static_cast<double>(d)) / Real(h)) * ld;
    const Real poly_branch = Real(q) * Real::log(Real(5.0)) +
                             (Real(q) / Real(p)) * Real::log(Real(2.0)) +
                             (Real(q) / Real(p)) * Real::log(Real(gamma_p));
    const double a = exp_branch.to_double();
    const double b = poly_branch.to_double();
    return a >= b ? a : b;
}

ConstantsTable constants_table(int d, double eps, std::optional<double> alpha, double p,
                               std::optional<std::int64_t> m) {
    check_d(d);
    check_eps(eps);
    if (p < 1.0) throw parameter_error("constants: need p >= 1");

    ConstantsTable t;
    t.d = d;
    t.eps = eps;
    t.p = p;
    t.strict_regime = eps <= 1e-4;
    t.ln_alpha_d = ln_alpha_of_d(d);
    if (alpha) {
        if (!(*alpha > 0.0) || *alpha > 1.0)
            throw parameter_error("constants: alpha must lie in (0, 1]");
        t.alpha = *alpha;
        t.ln_alpha = std::log(*alpha);
    } else {
        t.ln_alpha = t.ln_alpha_d;
        t.alpha = std::exp(t.ln_alpha_d); // underflows to 0 for every d >= 3
    }
    t.ln_gamma_dp = ln_gamma_dp(d, p);
    t.gamma_dp_linear = std::exp(t.ln_gamma_dp);
    t.gamma1 = 18.0 / eps;
    const double ld = std::log(static_cast<double>(d));
    t.ln_gamma2 = -t.ln_alpha - 2.0 * std::log(eps) + 3632.0 * ld * ld;
    t.ell_star = ell_star(d);
    t.ln_alpha_tilde = std::log(5.0 / 4.0) + t.ln_alpha -
                       static_cast<double>(t.ell_star) * std::log(static_cast<double>(d - 1));
    t.ln_eta = t.ln_alpha_tilde + std::log(eps) - std::log(256.0 * 9.0 * 1000.0);
    if (m) {
        t.ln_image_regime_threshold =
            (1.0 / eps) * std::log(4.0 + 2.0 * std::log2(static_cast<double>(*m)));
        t.image_regime_met = image_regime_met(*m, eps);
    }
    return t;
}

} // namespace sgl
