#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace hdpot {

// Welford accumulator
struct RunningStat {
    std::size_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void push(double x) {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
    double sd() const { return std::sqrt(variance()); }
    double stderr_mean() const { return n > 0 ? sd() / std::sqrt(static_cast<double>(n)) : 0.0; }
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// stderr of an empirical proportion
inline double proportion_stderr(double phat, std::size_t n) {
    return n > 0 ? std::sqrt(phat * (1.0 - phat) / static_cast<double>(n)) : 0.0;
}

// one-sided z at 99%
inline constexpr double kZ99 = 2.3263478740408408;

double log_sum_exp(std::span<const double> v);

// mean of exp(v[i]) reported in log space, with the delta-method stderr of
// log-mean: sd(exp v)/(mean * sqrt(n))
struct LogMeanExp {
    double log_mean;
    double stderr_log;
};
LogMeanExp log_mean_exp(std::span<const double> v);

double median(std::vector<double> v);

}  // namespace hdpot
