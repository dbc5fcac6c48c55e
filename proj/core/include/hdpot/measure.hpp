#pragma once

#include <span>
#include <string>
#include <vector>

#include "hdpot/error.hpp"

namespace hdpot {

// Axis-aligned box in R^d carrying the ground metric (Euclidean norm).
class BoundedDomain {
  public:
    BoundedDomain(std::vector<double> lower, std::vector<double> upper);

    int dim() const { return static_cast<int>(lower_.size()); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    double side(int i) const { return upper_[static_cast<std::size_t>(i)] - lower_[static_cast<std::size_t>(i)]; }
    double diameter() const;
    bool contains(std::span<const double> x) const;

    static BoundedDomain unit_interval() { return BoundedDomain({0.0}, {1.0}); }
    static BoundedDomain unit_box(int d) {
        return BoundedDomain(std::vector<double>(static_cast<std::size_t>(d), 0.0),
                             std::vector<double>(static_cast<std::size_t>(d), 1.0));
    }

    friend bool operator==(const BoundedDomain& a, const BoundedDomain& b) {
        return a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

  private:
    std::vector<double> lower_, upper_;
};

double euclidean(std::span<const double> a, std::span<const double> b);

// Finite atomic probability measure on a BoundedDomain.
// Construction merges coincident atoms, drops atoms below kWeightFloor and
// renormalizes; weights then sum to one exactly up to float rounding.
class DiscreteMeasure {
  public:
    static constexpr double kWeightFloor = 1e-15;
    static constexpr double kSumTolerance = 1e-12;

    DiscreteMeasure(BoundedDomain domain, std::vector<double> locations, std::vector<double> weights);

    static DiscreteMeasure dirac(BoundedDomain domain, std::vector<double> location);

    const BoundedDomain& domain() const { return domain_; }
    int dim() const { return domain_.dim(); }
    std::size_t size() const { return weights_.size(); }
    std::span<const double> location(std::size_t i) const {
        return {locations_.data() + i * static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim())};
    }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& locations_flat() const { return locations_; }

    // mass inside a closed sub-box [lo, hi]
    double box_mass(std::span<const double> lo, std::span<const double> hi) const;

    bool same_atoms(const DiscreteMeasure& other, double tol = 0.0) const;

    std::string to_json() const;
    static DiscreteMeasure from_json(const std::string& text);

  private:
    BoundedDomain domain_;
    std::vector<double> locations_;  // row-major size() x dim()
    std::vector<double> weights_;
};

}  // namespace hdpot
