#pragma once

#include <cstdint>
#include <optional>

#include "firerisk/risk.hpp"

namespace firerisk {

// Agreement counts between a risk map and a burned/unburned ground truth,
// over cells classified in both (risk != Unclassified, GT valid).
struct ConfusionMatrix {
    std::uint64_t true_positive = 0;   // AtRisk and burned
    std::uint64_t false_positive = 0;  // AtRisk but unburned
    std::uint64_t false_negative = 0;  // NotAtRisk but burned
    std::uint64_t true_negative = 0;   // NotAtRisk and unburned

    std::uint64_t total() const {
        return true_positive + false_positive + false_negative + true_negative;
    }

    bool operator==(const ConfusionMatrix&) const = default;
};

// gt: valid nonzero = burned, valid zero = unburned, nodata = not compared.
// Throws when no cell is classified in both maps.
ConfusionMatrix confusion(const RiskMap& risk, const RasterGrid& gt);

// Ratios with an empty denominator are left unset rather than forced to 0
// or 1.
struct Metrics {
    double accuracy = 0.0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> iou;
};

Metrics metrics(const ConfusionMatrix& cm);  // requires total() > 0

}  // namespace firerisk
