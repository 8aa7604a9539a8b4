#include "cms/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cms::stats {

namespace {

double pairwise_sum_impl(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(v, half) + pairwise_sum_impl(v + half, n - half);
}

// Sort order of a weighted sample by value.
std::vector<std::size_t> sort_order(std::span<const double> values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return idx;
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_impl(values.data(), values.size());
}

MeanResult mean_se(std::span<const double> values) {
    MeanResult r;
    r.n = values.size();
    if (r.n == 0) return r;
    r.mean = pairwise_sum(values) / static_cast<double>(r.n);
    if (r.n < 2) return r;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - r.mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(r.n - 1);
    r.se = std::sqrt(var / static_cast<double>(r.n));
    return r;
}

MeanResult weighted_mean_se(std::span<const double> values, std::span<const double> weights) {
    if (values.size() != weights.size())
        throw std::invalid_argument("weighted_mean_se: size mismatch");
    MeanResult r;
    r.n = values.size();
    if (r.n == 0) return r;
    std::vector<double> wv(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) wv[i] = weights[i] * values[i];
    const double wsum = pairwise_sum(weights);
    r.mean = pairwise_sum(wv) / wsum;
    if (r.n < 2) return r;
    // Variance of the weighted estimator: sum w_i^2 (x_i - mean)^2 / (sum w)^2.
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - r.mean;
        wv[i] = weights[i] * weights[i] * d * d;
    }
    r.se = std::sqrt(pairwise_sum(wv)) / wsum;
    return r;
}

double ks_to_cdf(std::span<const double> values, std::span<const double> weights,
                 const std::function<double(double)>& cdf) {
    if (values.empty()) return 0.0;
    const auto idx = sort_order(values);
    const double wsum = pairwise_sum(weights);
    double acc = 0.0;
    double d = 0.0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const double x = values[idx[k]];
        const double f = cdf(x);
        d = std::max(d, std::abs(acc / wsum - f));  // left limit
        acc += weights[idx[k]];
        d = std::max(d, std::abs(acc / wsum - f));  // right limit
    }
    return d;
}

double ks_two_sample(std::span<const double> a_values, std::span<const double> a_weights,
                     std::span<const double> b_values, std::span<const double> b_weights) {
    const auto ia = sort_order(a_values);
    const auto ib = sort_order(b_values);
    const double wa = pairwise_sum(a_weights);
    const double wb = pairwise_sum(b_weights);
    double ca = 0.0, cb = 0.0, d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < ia.size() || j < ib.size()) {
        const double xa = i < ia.size() ? a_values[ia[i]]
                                        : std::numeric_limits<double>::infinity();
        const double xb = j < ib.size() ? b_values[ib[j]]
                                        : std::numeric_limits<double>::infinity();
        const double x = std::min(xa, xb);
        while (i < ia.size() && a_values[ia[i]] == x) ca += a_weights[ia[i++]];
        while (j < ib.size() && b_values[ib[j]] == x) cb += b_weights[ib[j++]];
        d = std::max(d, std::abs(ca / wa - cb / wb));
    }
    return d;
}

double wasserstein1(std::span<const double> a_values, std::span<const double> a_weights,
                    std::span<const double> b_values, std::span<const double> b_weights) {
    const auto ia = sort_order(a_values);
    const auto ib = sort_order(b_values);
    const double wa = pairwise_sum(a_weights);
    const double wb = pairwise_sum(b_weights);
    // Integral of |F_A - F_B| over the merged breakpoints.
    double ca = 0.0, cb = 0.0, dist = 0.0;
    std::size_t i = 0, j = 0;
    double prev = 0.0;
    bool have_prev = false;
    while (i < ia.size() || j < ib.size()) {
        const double xa = i < ia.size() ? a_values[ia[i]]
                                        : std::numeric_limits<double>::infinity();
        const double xb = j < ib.size() ? b_values[ib[j]]
                                        : std::numeric_limits<double>::infinity();
        const double x = std::min(xa, xb);
        if (have_prev) dist += std::abs(ca / wa - cb / wb) * (x - prev);
        while (i < ia.size() && a_values[ia[i]] == x) ca += a_weights[ia[i++]];
        while (j < ib.size() && b_values[ib[j]] == x) cb += b_weights[ib[j++]];
        prev = x;
        have_prev = true;
    }
    return dist;
}

namespace {

template <typename F>
double sliced(const Eigen::MatrixXd& a, std::span<const double> wa,
              const Eigen::MatrixXd& b, std::span<const double> wb, F dist1d) {
    if (a.rows() != b.rows()) throw std::invalid_argument("sliced: dimension mismatch");
    double worst = 0.0;
    std::vector<double> va(static_cast<std::size_t>(a.cols()));
    std::vector<double> vb(static_cast<std::size_t>(b.cols()));
    for (Eigen::Index c = 0; c < a.rows(); ++c) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) va[static_cast<std::size_t>(k)] = a(c, k);
        for (Eigen::Index k = 0; k < b.cols(); ++k) vb[static_cast<std::size_t>(k)] = b(c, k);
        worst = std::max(worst, dist1d(va, wa, vb, wb));
    }
    return worst;
}

}  // namespace

double sliced_ks(const Eigen::MatrixXd& a_points, std::span<const double> a_weights,
                 const Eigen::MatrixXd& b_points, std::span<const double> b_weights) {
    return sliced(a_points, a_weights, b_points, b_weights,
                  [](std::span<const double> va, std::span<const double> wa,
                     std::span<const double> vb, std::span<const double> wb) {
                      return ks_two_sample(va, wa, vb, wb);
                  });
}

double sliced_wasserstein1(const Eigen::MatrixXd& a_points, std::span<const double> a_weights,
                           const Eigen::MatrixXd& b_points, std::span<const double> b_weights) {
    return sliced(a_points, a_weights, b_points, b_weights,
                  [](std::span<const double> va, std::span<const double> wa,
                     std::span<const double> vb, std::span<const double> wb) {
                      return wasserstein1(va, wa, vb, wb);
                  });
}

double normal_upper_quantile(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("normal_upper_quantile: alpha out of (0,1)");
    // Bisection on the survival function 0.5*erfc(z/sqrt(2)); monotone, exact
    // to double precision after ~80 halvings.
    double lo = -40.0, hi = 40.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double tail = 0.5 * std::erfc(mid / std::sqrt(2.0));
        (tail > alpha ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double regression_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("regression_slope: need matched samples, n >= 2");
    const double mx = pairwise_sum(x) / static_cast<double>(x.size());
    const double my = pairwise_sum(y) / static_cast<double>(y.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

}  // namespace cms::stats
