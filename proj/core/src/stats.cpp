#include "hdpot/stats.hpp"

#include <algorithm>
#include <limits>

namespace hdpot {

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    LinearFit f;
    std::size_t n = x.size();
    if (n < 2 || y.size() != n) return f;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx <= 0) return f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    if (syy <= 1e-300) {
        // constant response: a flat line is a perfect fit
        f.r2 = 1.0;
        return f;
    }
    double ssres = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double e = y[i] - (f.intercept + f.slope * x[i]);
        ssres += e * e;
    }
    f.r2 = 1.0 - ssres / syy;
    return f;
}

double log_sum_exp(std::span<const double> v) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : v) m = std::max(m, x);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double x : v) s += std::exp(x - m);
    return m + std::log(s);
}

LogMeanExp log_mean_exp(std::span<const double> v) {
    std::size_t n = v.size();
    double lse = log_sum_exp(v);
    if (!std::isfinite(lse)) return {lse, 0.0};
    double log_mean = lse - std::log(static_cast<double>(n));
    // Var(exp v) computed stably relative to the mean
    double s2 = 0.0;
    for (double x : v) {
        double r = std::exp(x - log_mean) - 1.0;
        s2 += r * r;
    }
    double sd_rel = n > 1 ? std::sqrt(s2 / static_cast<double>(n - 1)) : 0.0;
    return {log_mean, sd_rel / std::sqrt(static_cast<double>(n))};
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double hi = v[mid];
    if (v.size() % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid) - 1, v.end());
    return 0.5 * (hi + v[mid - 1]);
}

}  // namespace hdpot
