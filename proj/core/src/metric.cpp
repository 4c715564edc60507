#include "plflow/metric.hpp"

#include <cmath>

#include "plflow/errors.hpp"

namespace plflow {

namespace {

void validate(const Eigen::VectorXd& lengths) {
    if (lengths.size() == 0) throw InvalidMetric("PLMetric: empty length vector");
    for (Eigen::Index i = 0; i < lengths.size(); ++i) {
        if (!std::isfinite(lengths[i]) || !(lengths[i] > 0.0))
            throw InvalidMetric("PLMetric: length " + std::to_string(i) +
                                " is not a positive finite number");
    }
}

}  // namespace

PLMetric::PLMetric(Eigen::VectorXd lengths) : lengths_(std::move(lengths)) {
    validate(lengths_);
}

PLMetric::PLMetric(const std::vector<double>& lengths)
    : lengths_(Eigen::Map<const Eigen::VectorXd>(lengths.data(),
                                                 static_cast<Eigen::Index>(lengths.size()))) {
    validate(lengths_);
}

}  // namespace plflow
