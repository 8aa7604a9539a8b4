// Small statistics toolkit: deterministic summation, weighted means with
// standard errors, empirical-CDF distances (Kolmogorov-Smirnov and
// Wasserstein-1) for weighted samples.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

namespace cms::stats {

/// Pairwise (tree-order) summation. Deterministic and more accurate than a
/// running sum; identical results regardless of task partitioning.
double pairwise_sum(std::span<const double> values);

struct MeanResult {
    double mean = 0.0;
    double se = 0.0;       // standard error of the mean
    std::size_t n = 0;
};

MeanResult mean_se(std::span<const double> values);

/// Weighted mean of `values` under normalized `weights`, with the standard
/// error of the weighted estimator.
MeanResult weighted_mean_se(std::span<const double> values, std::span<const double> weights);

/// One-sample Kolmogorov-Smirnov distance of a weighted sample against a
/// reference CDF.
double ks_to_cdf(std::span<const double> values, std::span<const double> weights,
                 const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov distance between weighted empirical CDFs.
double ks_two_sample(std::span<const double> a_values, std::span<const double> a_weights,
                     std::span<const double> b_values, std::span<const double> b_weights);

/// Wasserstein-1 distance between two weighted empirical measures on the line.
double wasserstein1(std::span<const double> a_values, std::span<const double> a_weights,
                    std::span<const double> b_values, std::span<const double> b_weights);

/// Max over coordinates of the per-coordinate two-sample KS distance.
/// Points are stored one column per sample.
double sliced_ks(const Eigen::MatrixXd& a_points, std::span<const double> a_weights,
                 const Eigen::MatrixXd& b_points, std::span<const double> b_weights);

/// Max over coordinates of the per-coordinate Wasserstein-1 distance.
double sliced_wasserstein1(const Eigen::MatrixXd& a_points, std::span<const double> a_weights,
                           const Eigen::MatrixXd& b_points, std::span<const double> b_weights);

/// z such that P(Z > z) = alpha for standard normal Z.
double normal_upper_quantile(double alpha);

/// Least-squares slope of y against x.
double regression_slope(std::span<const double> x, std::span<const double> y);

}  // namespace cms::stats
