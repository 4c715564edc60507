#pragma once

#include <Eigen/Dense>
#include <vector>

namespace plflow {

// Positive length assignment over the canonical edge list of a
// triangulation.  Entries are validated at construction; the vector is
// immutable afterwards.
class PLMetric {
public:
    explicit PLMetric(Eigen::VectorXd lengths);
    explicit PLMetric(const std::vector<double>& lengths);

    const Eigen::VectorXd& values() const { return lengths_; }
    int size() const { return static_cast<int>(lengths_.size()); }
    double operator[](int i) const { return lengths_[i]; }

private:
    Eigen::VectorXd lengths_;
};

}  // namespace plflow
