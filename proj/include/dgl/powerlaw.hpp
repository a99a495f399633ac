#pragma once

#include <cstdint>
#include <vector>

namespace dgl {

struct PowerLawFit {
    double exponent = 0.0;
    double ks_distance = 0.0;  // empirical vs fitted CCDF
    bool degenerate = false;   // all samples equal; exponent meaningless
};

// Discrete maximum-likelihood exponent over samples >= xmin, with a
// Kolmogorov-Smirnov distance as the fit error. Requires >= 50 samples at or
// above xmin; throws "too few samples" otherwise.
PowerLawFit fit_power_law(const std::vector<std::int64_t>& samples, std::int64_t xmin = 1);

// Hurwitz zeta sum_{k>=xmin} k^-a, truncated with an Euler-Maclaurin tail.
double hurwitz_zeta(double a, std::int64_t xmin);

}  // namespace dgl
