#include "hdpot/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <json.hpp>

namespace hdpot {

BoundedDomain::BoundedDomain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    require(!lower_.empty() && lower_.size() == upper_.size(), errc::invalid_parameter,
            "domain bounds must be nonempty and of equal dimension");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        require(std::isfinite(lower_[i]) && std::isfinite(upper_[i]) && lower_[i] < upper_[i],
                errc::invalid_parameter, "domain requires lower[i] < upper[i]");
    }
}

double BoundedDomain::diameter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        double d = upper_[i] - lower_[i];
        s += d * d;
    }
    return std::sqrt(s);
}

bool BoundedDomain::contains(std::span<const double> x) const {
    if (x.size() != lower_.size()) return false;
    for (std::size_t i = 0; i < lower_.size(); ++i)
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
    return true;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

DiscreteMeasure::DiscreteMeasure(BoundedDomain domain, std::vector<double> locations,
                                 std::vector<double> weights)
    : domain_(std::move(domain)) {
    const std::size_t d = static_cast<std::size_t>(domain_.dim());
    require(!weights.empty(), errc::invalid_measure, "measure needs at least one atom");
    require(locations.size() == weights.size() * d, errc::invalid_measure,
            "locations/weights size mismatch");

    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        require(std::isfinite(weights[i]) && weights[i] >= 0.0, errc::invalid_measure,
                "weights must be finite and nonnegative");
        sum += weights[i];
        std::span<const double> loc(locations.data() + i * d, d);
        for (double c : loc)
            require(std::isfinite(c), errc::invalid_measure, "atom coordinates must be finite");
        require(domain_.contains(loc), errc::invalid_measure, "atom outside the domain box");
    }
    require(std::abs(sum - 1.0) <= kSumTolerance, errc::invalid_measure,
            "weights must sum to 1 within 1e-12");

    // merge coincident atoms, drop near-zero weights, renormalize
    std::map<std::vector<double>, double> merged;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::vector<double> key(locations.begin() + static_cast<std::ptrdiff_t>(i * d),
                                locations.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
        merged[std::move(key)] += weights[i];
    }
    double kept = 0.0;
    for (auto& [loc, w] : merged)
        if (w >= kWeightFloor) kept += w;
    require(kept > 0.0, errc::invalid_measure, "all atoms below the weight floor");
    for (auto& [loc, w] : merged) {
        if (w < kWeightFloor) continue;
        locations_.insert(locations_.end(), loc.begin(), loc.end());
        weights_.push_back(w / kept);
    }
}

DiscreteMeasure DiscreteMeasure::dirac(BoundedDomain domain, std::vector<double> location) {
    return DiscreteMeasure(std::move(domain), std::move(location), {1.0});
}

double DiscreteMeasure::box_mass(std::span<const double> lo, std::span<const double> hi) const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        auto x = location(i);
        bool in = true;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (!(x[k] >= lo[k] && x[k] <= hi[k])) {
                in = false;
                break;
            }
        if (in) m += weights_[i];
    }
    return m;
}

bool DiscreteMeasure::same_atoms(const DiscreteMeasure& other, double tol) const {
    if (size() != other.size() || dim() != other.dim()) return false;
    std::vector<bool> used(other.size(), false);
    for (std::size_t i = 0; i < size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < other.size(); ++j) {
            if (used[j]) continue;
            if (euclidean(location(i), other.location(j)) <= tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::string DiscreteMeasure::to_json() const {
    nlohmann::json j;
    j["domain"]["lower"] = domain_.lower();
    j["domain"]["upper"] = domain_.upper();
    auto& atoms = j["atoms"];
    atoms = nlohmann::json::array();
    for (std::size_t i = 0; i < size(); ++i) {
        nlohmann::json a;
        auto loc = location(i);
        a["loc"] = std::vector<double>(loc.begin(), loc.end());
        a["w"] = weights_[i];
        atoms.push_back(std::move(a));
    }
    return j.dump();
}

DiscreteMeasure DiscreteMeasure::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BoundedDomain dom(j.at("domain").at("lower").get<std::vector<double>>(),
                      j.at("domain").at("upper").get<std::vector<double>>());
    std::vector<double> locs, ws;
    for (const auto& a : j.at("atoms")) {
        auto loc = a.at("loc").get<std::vector<double>>();
        require(static_cast<int>(loc.size()) == dom.dim(), errc::invalid_measure,
                "atom dimension mismatch in JSON");
        locs.insert(locs.end(), loc.begin(), loc.end());
        ws.push_back(a.at("w").get<double>());
    }
    return DiscreteMeasure(std::move(dom), std::move(locs), std::move(ws));
}

}  // namespace hdpot
