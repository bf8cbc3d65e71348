#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "crashrisk/series.hpp"

namespace crashrisk {

/// Functional form of the lagged-shock term in the skewness recursion.
/// `cubed` (eta^3) is the default: it lets positive coefficients produce
/// negative skewness. `squared` reproduces an eta^2 recursion instead.
enum class ShockForm { cubed, squared };

std::string to_string(ShockForm form);
ShockForm shock_form_from_string(const std::string& text);

struct GarchSParams {
    double mu = 0.0;      // mean return
    double alpha0 = 0.0;  // variance intercept
    double alpha1 = 0.0;  // ARCH coefficient
    double alpha2 = 0.0;  // GARCH coefficient
    double beta0 = 0.0;   // skewness intercept
    double beta1 = 0.0;   // skewness shock coefficient
    double beta2 = 0.0;   // skewness persistence

    /// Validation tiers. `basic` is what the recursions need to stay
    /// well defined (alpha0 > 0, alpha1/alpha2 >= 0, |beta2| < 1).
    /// `strictly_stationary` additionally requires a negative Lyapunov
    /// exponent for the variance recursion, which admits near-integrated
    /// processes with alpha1 + alpha2 slightly above 1.
    /// `covariance_stationary` is the strict alpha1 + alpha2 < 1 rule.
    enum class Strictness { basic, strictly_stationary, covariance_stationary };

    /// Throws ValidationError naming the offending parameter.
    void validate(Strictness level = Strictness::basic) const;

    std::array<double, 7> as_array() const {
        return {mu, alpha0, alpha1, alpha2, beta0, beta1, beta2};
    }
    static const std::array<std::string, 7>& names();
};

struct FilteredPaths {
    std::vector<double> h;    // conditional variances, > 0
    std::vector<double> s;    // conditional skewness
    std::vector<double> eta;  // standardized residuals
};

struct GarchSFit {
    GarchSParams params;
    double loglik = 0.0;
    double aic = 0.0;  // (-2 lnL + 2k) / N, k = 7
    std::vector<double> std_errors;  // size 7; NaN when unavailable
    std::vector<double> t_stats;     // params / std_errors
    bool std_errors_available = false;
    double sic = 0.0;  // (-2 lnL + k ln N) / N
    FilteredPaths paths;
    bool converged = false;
    int iterations = 0;
    std::size_t n_obs = 0;
    ShockForm shock_form = ShockForm::cubed;
};

/// Log density of the third-moment Gram-Charlier innovation:
/// f(eta; s) = phi(eta) * psi^2 / (1 + s^2/6), psi = 1 + (s/6)(eta^3 - 3 eta).
/// Integrates to one for every s. Returns -inf at the isolated zeros of psi.
double gc_log_density(double eta, double skew);

/// Runs the variance/skewness recursions. h_1 is the mean square of
/// (r_t - mu); s_1 is the unconditional mean beta0 / (1 - beta2).
FilteredPaths filter_paths(const ReturnSeries& returns, const GarchSParams& params,
                           ShockForm form = ShockForm::cubed);

/// Negative Gram-Charlier log-likelihood over all observations.
/// Returns +inf when the parameters drive the filter out of range.
double neg_log_likelihood(const ReturnSeries& returns, const GarchSParams& params,
                          ShockForm form = ShockForm::cubed);

struct Garch11Fit {
    double mu = 0.0;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double loglik = 0.0;
    bool converged = false;
    int iterations = 0;
};

/// Gaussian-likelihood GARCH(1,1) fit; seeds fit_garchs. Throws
/// NumericalError on non-convergence, ValidationError on degenerate input.
Garch11Fit fit_garch11(const ReturnSeries& returns);

struct GarchSFitOptions {
    ShockForm shock_form = ShockForm::cubed;
    int multistart = 3;       // GARCH(1,1) seed plus random perturbations
    double tolerance = 1e-9;  // relative log-likelihood change
    int max_iterations = 2000;
    std::uint64_t seed = 1;   // perturbation stream
};

/// Constrained maximum likelihood via an unconstrained reparameterization;
/// standard errors from the observed information at the optimum.
GarchSFit fit_garchs(const ReturnSeries& returns, const GarchSFitOptions& options = {});

/// Simulates the recursions with Gram-Charlier innovations drawn by
/// inverse transform on a tabulated CDF. Deterministic given the seed;
/// 500 burn-in steps are discarded. Accepts strictly stationary parameter
/// sets, including near-integrated variance dynamics.
ReturnSeries simulate_garchs(const GarchSParams& params, std::size_t n, std::uint64_t seed,
                             ShockForm form = ShockForm::cubed,
                             Date start_date = Date::from_ymd(2017, 1, 2));

/// Flat `name = value` dump of a fit.
void write_fit_keyvalues(std::ostream& out, const GarchSFit& fit);
/// `date,h,s,eta` export of the filtered paths.
void write_paths_csv(std::ostream& out, const std::vector<Date>& dates,
                     const FilteredPaths& paths);

namespace detail {

/// One step of the coupled recursions; shared by filter, likelihood and
/// simulator so they cannot drift apart.
struct GarchSStepper {
    double alpha0, alpha1, alpha2, beta0, beta1, beta2;
    bool cubed;

    void advance(double eps_prev, double eta_prev, double& h, double& s) const {
        h = alpha0 + alpha1 * eps_prev * eps_prev + alpha2 * h;
        const double g = cubed ? eta_prev * eta_prev * eta_prev : eta_prev * eta_prev;
        s = beta0 + beta1 * g + beta2 * s;
    }
};

/// Inverse-CDF sampler for the Gram-Charlier innovation density. Keeps a
/// 4096-point table over [-12, 12], rebuilt when the requested skew moves
/// more than 1e-3 from the tabulated one.
class GcSampler {
public:
    GcSampler();
    double sample(double skew, double uniform01);

private:
    void rebuild(double skew);

    static constexpr int kPoints = 4096;
    static constexpr double kLo = -12.0, kHi = 12.0;
    std::vector<double> cdf_;
    double table_skew_;
    bool built_ = false;
};

}  // namespace detail

}  // namespace crashrisk
