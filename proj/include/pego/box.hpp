#pragma once

#include <stdexcept>

#include <Eigen/Dense>

namespace pego {

// Axis-aligned box domain with per-dimension [lo, hi].
struct Box {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;

  Eigen::Index dim() const { return lo.size(); }

  void validate() const {
    if (lo.size() != hi.size() || lo.size() == 0 || !(lo.array() < hi.array()).all()) {
      throw std::invalid_argument("Box: need lo < hi per dimension");
    }
  }

  bool contains(const Eigen::VectorXd& x) const {
    return (x.array() >= lo.array()).all() && (x.array() <= hi.array()).all();
  }

  Eigen::VectorXd to_unit(const Eigen::VectorXd& x) const {
    return ((x - lo).array() / (hi - lo).array()).matrix();
  }

  Eigen::VectorXd from_unit(const Eigen::VectorXd& u) const {
    return lo + ((hi - lo).array() * u.array()).matrix();
  }

  static Box unit(Eigen::Index d) {
    return {Eigen::VectorXd::Zero(d), Eigen::VectorXd::Ones(d)};
  }
};

}  // namespace pego
