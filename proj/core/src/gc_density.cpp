#include <cmath>
#include <limits>

#include "crashrisk/errors.hpp"
#include "crashrisk/garchs.hpp"

namespace crashrisk {

namespace {
constexpr double kHalfLog2Pi = 0.91893853320467274178;
}

double gc_log_density(double eta, double skew) {
    if (!std::isfinite(eta) || !std::isfinite(skew)) {
        throw ValidationError("gc_log_density: non-finite input");
    }
    const double psi = 1.0 + (skew / 6.0) * (eta * eta * eta - 3.0 * eta);
    const double psi2 = psi * psi;
    if (psi2 == 0.0) return -std::numeric_limits<double>::infinity();
    return -kHalfLog2Pi - 0.5 * eta * eta + std::log(psi2) - std::log1p(skew * skew / 6.0);
}

namespace detail {

GcSampler::GcSampler() : cdf_(kPoints), table_skew_(0.0) {}

void GcSampler::rebuild(double skew) {
    const double step = (kHi - kLo) / (kPoints - 1);
    const double norm = 1.0 + skew * skew / 6.0;
    double prev_density = 0.0;
    double acc = 0.0;
    for (int i = 0; i < kPoints; ++i) {
        const double eta = kLo + step * i;
        const double psi = 1.0 + (skew / 6.0) * (eta * eta * eta - 3.0 * eta);
        const double density = std::exp(-0.5 * eta * eta) * psi * psi / norm;
        if (i > 0) acc += 0.5 * (prev_density + density) * step;
        cdf_[i] = acc;
        prev_density = density;
    }
    // normalize away the (tiny) quadrature and tail truncation error
    const double total = cdf_.back();
    for (double& c : cdf_) c /= total;
    table_skew_ = skew;
    built_ = true;
}

double GcSampler::sample(double skew, double uniform01) {
    if (!built_ || std::fabs(skew - table_skew_) > 1e-3) rebuild(skew);
    const double u = uniform01;
    // first index with cdf >= u
    int lo = 0, hi = kPoints - 1;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (cdf_[mid] < u) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    const double step = (kHi - kLo) / (kPoints - 1);
    if (lo == 0) return kLo;
    const double c0 = cdf_[lo - 1];
    const double c1 = cdf_[lo];
    const double frac = (c1 > c0) ? (u - c0) / (c1 - c0) : 0.5;
    return kLo + step * (lo - 1 + frac);
}

}  // namespace detail

}  // namespace crashrisk
