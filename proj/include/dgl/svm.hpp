#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dgl {

// Linear max-margin classifier: hinge loss + L2, trained by subgradient
// descent with per-class weights. Labels are +1 / -1.
class LinearSvm {
public:
    struct Options {
        double lambda = 1e-3;
        std::size_t epochs = 40;
        bool class_balanced = true;  // inverse-frequency class weights
    };

    void train(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
               const Options& opts, std::uint64_t seed);

    double decision(const std::vector<double>& x) const;
    int predict(const std::vector<double>& x) const { return decision(x) >= 0 ? 1 : -1; }

    const std::vector<double>& weights() const { return w_; }
    double bias() const { return bias_; }
    const std::vector<double>& column_means() const { return mean_; }
    const std::vector<double>& column_stds() const { return std_; }

    std::string to_json() const;

private:
    std::vector<double> w_;
    double bias_ = 0.0;
    std::vector<double> mean_, std_;  // training-set standardization
};

}  // namespace dgl
