#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "hdpot/error.hpp"

namespace hdpot {

// Counter-based generator: the i-th draw of a stream is a pure function of
// (key, i), so independent streams can be split per (sample index, stick
// index, restart, ...) without coordination.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : key_(mix64(seed ^ 0x8f1bbcdcbfa53e0bULL)) {}

    // Derives the key of a child stream; ids identify the branch.
    static Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
        Rng r(seed);
        for (auto id : ids) r.key_ = mix64(r.key_ ^ mix64(id + 0x632be59bd9b4e019ULL));
        return r;
    }

    std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

    // Uniform on the open interval (0,1); never returns an endpoint.
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double normal() {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double exponential(double rate = 1.0) { return -std::log(uniform()) / rate; }

    // Marsaglia-Tsang; shape < 1 via the boost Gamma(shape+1) * U^{1/shape}.
    double gamma(double shape) {
        require(shape > 0.0, errc::invalid_parameter, "gamma shape must be > 0");
        if (shape < 1.0) {
            double g = gamma(shape + 1.0);
            return g * std::pow(uniform(), 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double beta(double a, double b) {
        require(a > 0.0 && b > 0.0, errc::invalid_parameter, "beta parameters must be > 0");
        if (a == 1.0) return 1.0 - std::pow(uniform(), 1.0 / b);
        if (b == 1.0) return std::pow(uniform(), 1.0 / a);
        double x = gamma(a), y = gamma(b);
        double s = x + y;
        return s > 0.0 ? x / s : 0.5;
    }

    void dirichlet(std::span<const double> params, std::span<double> out) {
        double sum = 0.0;
        for (std::size_t i = 0; i < params.size(); ++i) {
            out[i] = gamma(params[i]);
            sum += out[i];
        }
        if (sum <= 0.0) {
            // all gammas underflowed; fall back to the largest parameter
            std::size_t imax = 0;
            for (std::size_t i = 1; i < params.size(); ++i)
                if (params[i] > params[imax]) imax = i;
            for (std::size_t i = 0; i < params.size(); ++i) out[i] = (i == imax) ? 1.0 : 0.0;
            return;
        }
        for (std::size_t i = 0; i < params.size(); ++i) out[i] /= sum;
    }

    // weights must sum to 1 (within float noise); returns an index
    std::size_t categorical(std::span<const double> weights) {
        double u = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.size() - 1;
    }

  private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

}  // namespace hdpot
