#include "firerisk/validate.hpp"

namespace firerisk {

ConfusionMatrix confusion(const RiskMap& risk, const RasterGrid& gt) {
    require_compatible(risk.geometry, gt.geometry(), "confusion");

    ConfusionMatrix cm;
    const double* v = gt.values().data();
    const std::uint8_t* ok = gt.validity().data();
    for (std::size_t i = 0; i < risk.classes.size(); ++i) {
        if (risk.classes[i] == RiskClass::Unclassified || !ok[i]) continue;
        const bool burned = v[i] != 0.0;
        if (risk.classes[i] == RiskClass::AtRisk)
            burned ? ++cm.true_positive : ++cm.false_positive;
        else
            burned ? ++cm.false_negative : ++cm.true_negative;
    }
    if (cm.total() == 0)
        throw Error("confusion: no cell is classified in both the risk map and the GT");
    return cm;
}

Metrics metrics(const ConfusionMatrix& cm) {
    if (cm.total() == 0) throw Error("metrics: empty confusion matrix");

    const auto tp = static_cast<double>(cm.true_positive);
    const auto fp = static_cast<double>(cm.false_positive);
    const auto fn = static_cast<double>(cm.false_negative);
    const auto tn = static_cast<double>(cm.true_negative);

    Metrics m;
    m.accuracy = (tp + tn) / static_cast<double>(cm.total());
    if (tp + fp > 0) m.precision = tp / (tp + fp);
    if (tp + fn > 0) m.recall = tp / (tp + fn);
    if (tp + fp + fn > 0) m.iou = tp / (tp + fp + fn);
    return m;
}

}  // namespace firerisk
