#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace crashrisk {

using Objective = std::function<double(std::span<const double>)>;

struct OptimOptions {
    double rel_tol = 1e-9;
    int max_iterations = 2000;
    double grad_rel_step = 1e-5;
    // When set, the best objective value after each accepted step is
    // appended here (monotone non-increasing by construction).
    std::vector<double>* trace = nullptr;
};

struct OptimResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
    int evaluations = 0;
};

/// Central-difference gradient with per-coordinate step rel_step*(1+|x_i|).
std::vector<double> central_gradient(const Objective& f, std::span<const double> x,
                                     double rel_step);

/// Central-difference Hessian with per-coordinate step rel_step*(1+|x_i|).
Eigen::MatrixXd central_hessian(const Objective& f, std::span<const double> x, double rel_step);

/// Derivative-free downhill simplex. Non-finite objective values are
/// treated as arbitrarily bad vertices.
OptimResult nelder_mead(const Objective& f, std::span<const double> x0,
                        const OptimOptions& options);

/// Quasi-Newton minimizer on numeric gradients with a backtracking Armijo
/// line search; every accepted step strictly improves the objective.
OptimResult bfgs(const Objective& f, std::span<const double> x0, const OptimOptions& options);

/// Simplex start polished by BFGS; the iteration budget is shared.
OptimResult minimize(const Objective& f, std::span<const double> x0,
                     const OptimOptions& options);

}  // namespace crashrisk
