#include "dgl/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace dgl {

double hurwitz_zeta(double a, std::int64_t xmin) {
    // Direct sum to K, then integral tail with the midpoint correction:
    // sum_{k>K} k^-a ~= (K+0.5)^(1-a)/(a-1).
    constexpr std::int64_t K = 20000;
    double sum = 0.0;
    for (std::int64_t k = xmin; k < xmin + K; k++) sum += std::pow(static_cast<double>(k), -a);
    double tail_from = static_cast<double>(xmin + K) - 0.5;
    sum += std::pow(tail_from, 1.0 - a) / (a - 1.0);
    return sum;
}

PowerLawFit fit_power_law(const std::vector<std::int64_t>& samples, std::int64_t xmin) {
    std::vector<std::int64_t> xs;
    xs.reserve(samples.size());
    for (auto v : samples)
        if (v >= xmin) xs.push_back(v);
    if (xs.size() < 50) throw std::runtime_error("too few samples");

    double sum_log = 0.0;
    bool all_equal = true;
    for (auto v : xs) {
        sum_log += std::log(static_cast<double>(v));
        if (v != xs.front()) all_equal = false;
    }
    if (all_equal) return {0.0, 0.0, true};

    double n = static_cast<double>(xs.size());
    // Log-likelihood per sample: -a * mean(log x) - log zeta(a, xmin).
    auto neg_ll = [&](double a) { return a * sum_log / n + std::log(hurwitz_zeta(a, xmin)); };

    // Golden-section minimum over a in (1, 20).
    double lo = 1.0001, hi = 20.0;
    const double phi = 0.6180339887498949;
    double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    double fa = neg_ll(a), fb = neg_ll(b);
    for (int it = 0; it < 80 && hi - lo > 1e-7; it++) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - phi * (hi - lo);
            fa = neg_ll(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + phi * (hi - lo);
            fb = neg_ll(b);
        }
    }
    double alpha = 0.5 * (lo + hi);

    // KS distance: empirical CDF against the fitted discrete CDF,
    // CDF(x) = 1 - zeta(alpha, x+1) / zeta(alpha, xmin).
    std::map<std::int64_t, std::int64_t> counts;
    for (auto v : xs) counts[v]++;
    double z = hurwitz_zeta(alpha, xmin);
    double emp = 0.0, ks = 0.0;
    for (auto [x, c] : counts) {
        emp += static_cast<double>(c) / n;
        double model = 1.0 - hurwitz_zeta(alpha, x + 1) / z;
        ks = std::max(ks, std::abs(emp - model));
    }
    return {alpha, ks, false};
}

}  // namespace dgl
