#include "crashrisk/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace crashrisk {

namespace {

constexpr double kBad = std::numeric_limits<double>::infinity();

double guarded(const Objective& f, std::span<const double> x, int& evals) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : kBad;
}

bool rel_close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * (std::fabs(a) + std::fabs(b) + 1e-12);
}

}  // namespace

std::vector<double> central_gradient(const Objective& f, std::span<const double> x,
                                     double rel_step) {
    std::vector<double> grad(x.size());
    std::vector<double> p(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = rel_step * (1.0 + std::fabs(x[i]));
        const double xi = p[i];
        p[i] = xi + h;
        const double fp = f(p);
        p[i] = xi - h;
        const double fm = f(p);
        p[i] = xi;
        grad[i] = (fp - fm) / (2.0 * h);
    }
    return grad;
}

Eigen::MatrixXd central_hessian(const Objective& f, std::span<const double> x, double rel_step) {
    const std::size_t n = x.size();
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = rel_step * (1.0 + std::fabs(x[i]));

    Eigen::MatrixXd hess(n, n);
    std::vector<double> p(x.begin(), x.end());
    const double f0 = f(p);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = p[i];
        p[i] = xi + h[i];
        const double fp = f(p);
        p[i] = xi - h[i];
        const double fm = f(p);
        p[i] = xi;
        hess(i, i) = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double xj = p[j];
            p[i] = xi + h[i];
            p[j] = xj + h[j];
            const double fpp = f(p);
            p[j] = xj - h[j];
            const double fpm = f(p);
            p[i] = xi - h[i];
            p[j] = xj + h[j];
            const double fmp = f(p);
            p[j] = xj - h[j];
            const double fmm = f(p);
            p[i] = xi;
            p[j] = xj;
            hess(i, j) = hess(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
        }
    }
    return hess;
}

OptimResult nelder_mead(const Objective& f, std::span<const double> x0,
                        const OptimOptions& options) {
    const std::size_t n = x0.size();
    OptimResult result;
    result.x.assign(x0.begin(), x0.end());

    // Simplex around x0: 5% steps, absolute fallback for zero coordinates.
    std::vector<std::vector<double>> simplex(n + 1, result.x);
    for (std::size_t i = 0; i < n; ++i) {
        simplex[i + 1][i] += (x0[i] != 0.0) ? 0.05 * x0[i] : 0.00025;
    }
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = guarded(f, simplex[i], result.evaluations);

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };
    sort_simplex();
    double best_seen = fv[order[0]];

    std::vector<double> centroid(n), reflected(n), trial(n);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        result.iterations = iter + 1;
        const std::size_t lo = order[0];
        const std::size_t hi = order[n];
        const std::size_t second_hi = order[n - 1];

        if (std::isfinite(fv[lo]) && std::isfinite(fv[hi]) &&
            rel_close(fv[lo], fv[hi], options.rel_tol)) {
            result.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == hi) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[k][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        for (std::size_t j = 0; j < n; ++j) reflected[j] = 2.0 * centroid[j] - simplex[hi][j];
        const double f_reflect = guarded(f, reflected, result.evaluations);

        if (f_reflect < fv[lo]) {
            // expansion
            for (std::size_t j = 0; j < n; ++j) trial[j] = centroid[j] + 2.0 * (reflected[j] - centroid[j]);
            const double f_expand = guarded(f, trial, result.evaluations);
            if (f_expand < f_reflect) {
                simplex[hi] = trial;
                fv[hi] = f_expand;
            } else {
                simplex[hi] = reflected;
                fv[hi] = f_reflect;
            }
        } else if (f_reflect < fv[second_hi]) {
            simplex[hi] = reflected;
            fv[hi] = f_reflect;
        } else {
            // contraction, outside or inside
            const bool outside = f_reflect < fv[hi];
            const auto& toward = outside ? reflected : simplex[hi];
            for (std::size_t j = 0; j < n; ++j) trial[j] = centroid[j] + 0.5 * (toward[j] - centroid[j]);
            const double f_contract = guarded(f, trial, result.evaluations);
            if (f_contract < std::min(f_reflect, fv[hi])) {
                simplex[hi] = trial;
                fv[hi] = f_contract;
            } else {
                // shrink toward the best vertex
                for (std::size_t k = 0; k <= n; ++k) {
                    if (k == lo) continue;
                    for (std::size_t j = 0; j < n; ++j) {
                        simplex[k][j] = simplex[lo][j] + 0.5 * (simplex[k][j] - simplex[lo][j]);
                    }
                    fv[k] = guarded(f, simplex[k], result.evaluations);
                }
            }
        }
        sort_simplex();
        if (options.trace && fv[order[0]] < best_seen) {
            options.trace->push_back(fv[order[0]]);
        }
        best_seen = std::min(best_seen, fv[order[0]]);
    }

    sort_simplex();
    result.x = simplex[order[0]];
    result.value = fv[order[0]];
    return result;
}

OptimResult bfgs(const Objective& f, std::span<const double> x0, const OptimOptions& options) {
    const int n = static_cast<int>(x0.size());
    OptimResult result;
    result.x.assign(x0.begin(), x0.end());

    Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(x0.data(), n);
    double fx = guarded(f, result.x, result.evaluations);
    if (!std::isfinite(fx)) return result;

    auto grad_at = [&](const Eigen::VectorXd& point) {
        const std::vector<double> p(point.data(), point.data() + n);
        result.evaluations += 2 * n;
        const auto g = central_gradient(f, p, options.grad_rel_step);
        return Eigen::Map<const Eigen::VectorXd>(g.data(), n).eval();
    };

    Eigen::VectorXd g = grad_at(x);
    Eigen::MatrixXd h_inv = Eigen::MatrixXd::Identity(n, n);
    std::vector<double> trial(n);

    for (int iter = 0; iter < options.max_iterations; ++iter) {
        result.iterations = iter + 1;
        Eigen::VectorXd direction = -h_inv * g;
        double slope = g.dot(direction);
        if (slope >= 0.0) {  // not a descent direction; reset curvature
            h_inv.setIdentity();
            direction = -g;
            slope = g.dot(direction);
        }

        // backtracking Armijo
        double step = 1.0;
        double f_new = kBad;
        Eigen::VectorXd x_new;
        bool accepted = false;
        for (int ls = 0; ls < 50; ++ls) {
            x_new = x + step * direction;
            Eigen::Map<Eigen::VectorXd>(trial.data(), n) = x_new;
            f_new = guarded(f, trial, result.evaluations);
            if (f_new <= fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // stuck: no improving step along the direction

        const Eigen::VectorXd g_new = grad_at(x_new);
        const Eigen::VectorXd s = x_new - x;
        const Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            const double rho = 1.0 / sy;
            const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
            h_inv = (identity - rho * s * y.transpose()) * h_inv *
                        (identity - rho * y * s.transpose()) +
                    rho * s * s.transpose();
        }

        const bool value_converged = rel_close(fx, f_new, options.rel_tol);
        x = x_new;
        fx = f_new;
        g = g_new;
        if (options.trace) options.trace->push_back(fx);
        if (value_converged || g.lpNorm<Eigen::Infinity>() < 1e-10 * (1.0 + std::fabs(fx))) {
            result.converged = true;
            break;
        }
    }

    Eigen::Map<Eigen::VectorXd>(result.x.data(), n) = x;
    result.value = fx;
    return result;
}

OptimResult minimize(const Objective& f, std::span<const double> x0,
                     const OptimOptions& options) {
    OptimOptions simplex_options = options;
    simplex_options.max_iterations = std::min(options.max_iterations, 200 * int(x0.size()));
    simplex_options.rel_tol = std::max(options.rel_tol, 1e-8);
    OptimResult coarse = nelder_mead(f, x0, simplex_options);

    OptimOptions polish_options = options;
    polish_options.max_iterations = options.max_iterations;
    OptimResult fine = bfgs(f, coarse.x, polish_options);
    fine.evaluations += coarse.evaluations;
    fine.iterations += coarse.iterations;
    if (fine.value > coarse.value) {  // polish made it worse numerically; keep simplex result
        fine.x = coarse.x;
        fine.value = coarse.value;
        fine.converged = coarse.converged;
    }
    return fine;
}

}  // namespace crashrisk
