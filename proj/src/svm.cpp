#include "dgl/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dgl/io.hpp"
#include "dgl/rng.hpp"

namespace dgl {

void LinearSvm::train(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
                      const Options& opts, std::uint64_t seed) {
    if (x.empty() || x.size() != y.size()) throw std::runtime_error("bad training set");
    std::size_t n = x.size(), dim = x[0].size();

    std::size_t pos = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
    std::size_t neg = n - pos;
    if (pos == 0 || neg == 0) throw std::runtime_error("single-class data");
    double w_pos = 1.0, w_neg = 1.0;
    if (opts.class_balanced) {
        w_pos = static_cast<double>(n) / (2.0 * static_cast<double>(pos));
        w_neg = static_cast<double>(n) / (2.0 * static_cast<double>(neg));
    }

    mean_.assign(dim, 0.0);
    std_.assign(dim, 0.0);
    for (const auto& row : x)
        for (std::size_t j = 0; j < dim; j++) mean_[j] += row[j];
    for (double& m : mean_) m /= static_cast<double>(n);
    for (const auto& row : x)
        for (std::size_t j = 0; j < dim; j++)
            std_[j] += (row[j] - mean_[j]) * (row[j] - mean_[j]);
    for (double& s : std_) s = std::max(std::sqrt(s / static_cast<double>(n)), 1e-12);

    std::vector<std::vector<double>> z(n, std::vector<double>(dim));
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < dim; j++) z[i][j] = (x[i][j] - mean_[j]) / std_[j];

    w_.assign(dim, 0.0);
    bias_ = 0.0;
    Rng rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::size_t t = 0;
    for (std::size_t epoch = 0; epoch < opts.epochs; epoch++) {
        std::shuffle(order.begin(), order.end(), rng);
        for (auto i : order) {
            t++;
            double lr = 1.0 / (opts.lambda * static_cast<double>(t));
            double margin = y[i] * (std::inner_product(z[i].begin(), z[i].end(), w_.begin(), 0.0) +
                                    bias_);
            double cw = y[i] > 0 ? w_pos : w_neg;
            for (std::size_t j = 0; j < dim; j++) {
                double grad = opts.lambda * w_[j];
                if (margin < 1.0) grad -= cw * y[i] * z[i][j];
                w_[j] -= lr * grad;
            }
            if (margin < 1.0) bias_ += lr * cw * y[i];
        }
    }
}

double LinearSvm::decision(const std::vector<double>& x) const {
    double d = bias_;
    for (std::size_t j = 0; j < w_.size(); j++) d += w_[j] * (x[j] - mean_[j]) / std_[j];
    return d;
}

std::string LinearSvm::to_json() const {
    auto arr = [](const std::vector<double>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); i++) s += (i ? "," : "") + format_double(v[i]);
        return s + "]";
    };
    std::ostringstream os;
    os << "{\"weights\":" << arr(w_) << ",\"bias\":" << format_double(bias_)
       << ",\"column_means\":" << arr(mean_) << ",\"column_stds\":" << arr(std_) << "}";
    return os.str();
}

}  // namespace dgl
