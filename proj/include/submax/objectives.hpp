// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/oracles.hpp"

namespace submax {

// f(S) = sum of per-element weights. Weights may be negative, in which case
// the function stops claiming non-negativity and monotonicity.
class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights) : weights_(std::move(weights)) {
    for (double w : weights_)
      if (w < 0.0) nonnegative_ = false;
  }

  double value(const ElementSet& s) const override {
    detail::check_range(s, ground_size(), "ModularFunction");
    double total = 0.0;
    for (Element u : s) total += weights_[static_cast<std::size_t>(u)];
    return total;
  }
  int ground_size() const override { return static_cast<int>(weights_.size()); }
  bool claims_nonnegative() const override { return nonnegative_; }
  bool claims_monotone() const override { return nonnegative_; }
  std::string kind() const override { return "modular"; }
  double weight(Element u) const { return weights_[static_cast<std::size_t>(u)]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
  bool nonnegative_ = true;
};

// f(S) = total weight of the universe items covered by S. Monotone,
// submodular, non-negative.
class WeightedCoverage : public SetFunction {
 public:
  WeightedCoverage(int universe_size, std::vector<std::vector<int>> covers,
                   std::vector<double> item_weights)
      : universe_size_(universe_size), covers_(std::move(covers)),
        item_weights_(std::move(item_weights)) {
    if (universe_size < 0) throw std::invalid_argument("WeightedCoverage: negative universe");
    if (static_cast<int>(item_weights_.size()) != universe_size)
      throw std::invalid_argument("WeightedCoverage: weights/universe size mismatch");
    for (double w : item_weights_)
      if (w < 0.0) throw std::invalid_argument("WeightedCoverage: negative item weight");
    for (const auto& cover : covers_)
      for (int item : cover)
        if (item < 0 || item >= universe_size)
          throw std::invalid_argument("WeightedCoverage: covered item out of range");
  }

  double value(const ElementSet& s) const override {
    detail::check_range(s, ground_size(), "WeightedCoverage");
    std::vector<char> hit(static_cast<std::size_t>(universe_size_), 0);
    double total = 0.0;
    for (Element u : s)
      for (int item : covers_[static_cast<std::size_t>(u)])
        if (!hit[static_cast<std::size_t>(item)]) {
          hit[static_cast<std::size_t>(item)] = 1;
          total += item_weights_[static_cast<std::size_t>(item)];
        }
    return total;
  }
  int ground_size() const override { return static_cast<int>(covers_.size()); }
  bool claims_monotone() const override { return true; }
  std::string kind() const override { return "coverage"; }
  int universe_size() const { return universe_size_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }
  const std::vector<double>& item_weights() const { return item_weights_; }

 private:
  int universe_size_;
  std::vector<std::vector<int>> covers_;
  std::vector<double> item_weights_;
};

// Representativeness minus dispersion:
//   f(S) = sum_{i in S} sum_{j in relevant} s_ij - lambda * sum_{i,j in S} s_ij.
// Requires a symmetric non-negative similarity matrix; non-monotone for
// lambda > 0. Non-negative whenever lambda <= 1 and the relevant set covers
// the ground set (or lambda = 0).
class RecommendationCut : public SetFunction {
 public:
  RecommendationCut(Eigen::MatrixXd similarity, ElementSet relevant, double lambda)
      : similarity_(std::move(similarity)), relevant_(std::move(relevant)), lambda_(lambda) {
    if (similarity_.rows() != similarity_.cols())
      throw std::invalid_argument("RecommendationCut: similarity must be square");
    if (lambda < 0.0 || lambda > 1.0)
      throw std::invalid_argument("RecommendationCut: lambda must lie in [0, 1]");
    int n = static_cast<int>(similarity_.rows());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (similarity_(i, j) < 0.0)
          throw std::invalid_argument("RecommendationCut: negative similarity");
        if (similarity_(i, j) != similarity_(j, i))
          throw std::invalid_argument("RecommendationCut: similarity must be symmetric");
      }
    detail::check_range(relevant_, n, "RecommendationCut");
    relevance_.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (Element j : relevant_) row += similarity_(i, j);
      relevance_[static_cast<std::size_t>(i)] = row;
    }
  }

  double value(const ElementSet& s) const override {
    detail::check_range(s, ground_size(), "RecommendationCut");
    double total = 0.0;
    for (Element i : s) total += relevance_[static_cast<std::size_t>(i)];
    double inner = 0.0;
    for (Element i : s)
      for (Element j : s) inner += similarity_(i, j);
    return total - lambda_ * inner;
  }
  int ground_size() const override { return static_cast<int>(similarity_.rows()); }
  bool claims_nonnegative() const override {
    return lambda_ == 0.0 || relevant_.size() == ground_size();
  }
  bool claims_monotone() const override { return lambda_ == 0.0; }
  std::string kind() const override { return "cut"; }
  double lambda() const { return lambda_; }
  const ElementSet& relevant() const { return relevant_; }
  const Eigen::MatrixXd& similarity() const { return similarity_; }

 private:
  Eigen::MatrixXd similarity_;
  ElementSet relevant_;
  double lambda_;
  std::vector<double> relevance_;  // per-element sum over the relevant set
};

// Log-determinant diversity objective over a PSD kernel.
//   regularized: f(S) = log det(I + alpha * K_{S,S})   (monotone, f(∅) = 0)
//   plain:       f(S) = log det(K_{S,S})               (may be negative)
// The plain variant does not claim non-negativity; runs on it carry a
// "guarantees void" stamp.
class LogDetDPP : public SetFunction {
 public:
  enum class Variant { Regularized, Plain };

  LogDetDPP(Eigen::MatrixXd kernel, double alpha, Variant variant = Variant::Regularized)
      : kernel_(std::move(kernel)), alpha_(alpha), variant_(variant) {
    if (kernel_.rows() != kernel_.cols())
      throw std::invalid_argument("LogDetDPP: kernel must be square");
    if (variant_ == Variant::Regularized && alpha_ <= 0.0)
      throw std::invalid_argument("LogDetDPP: alpha must be positive");
    double asym = (kernel_ - kernel_.transpose()).cwiseAbs().maxCoeff();
    if (kernel_.rows() > 0 && asym > 1e-12)
      throw std::invalid_argument("LogDetDPP: kernel must be symmetric");
    if (kernel_.rows() > 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(kernel_,
                                                         Eigen::EigenvaluesOnly);
      double lo = eig.eigenvalues().minCoeff();
      double hi = eig.eigenvalues().cwiseAbs().maxCoeff();
      if (lo < -1e-8 * std::max(1.0, hi))
        throw std::invalid_argument("LogDetDPP: kernel is not positive semidefinite");
    }
  }

  double value(const ElementSet& s) const override {
    detail::check_range(s, ground_size(), "LogDetDPP");
    int k = s.size();
    if (k == 0) return 0.0;  // det of the empty matrix is 1
    Eigen::MatrixXd sub(k, k);
    const auto& idx = s.items();
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        sub(a, b) = kernel_(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
    if (variant_ == Variant::Regularized)
      sub = alpha_ * sub + Eigen::MatrixXd::Identity(k, k);
    Eigen::LLT<Eigen::MatrixXd> llt(sub);
    if (llt.info() != Eigen::Success)
      throw std::domain_error("LogDetDPP: principal submatrix is not positive definite");
    double logdet = 0.0;
    for (int a = 0; a < k; ++a) logdet += std::log(llt.matrixL()(a, a));
    return 2.0 * logdet;
  }
  int ground_size() const override { return static_cast<int>(kernel_.rows()); }
  bool claims_nonnegative() const override { return variant_ == Variant::Regularized; }
  bool claims_monotone() const override { return variant_ == Variant::Regularized; }
  std::string kind() const override {
    return variant_ == Variant::Regularized ? "logdet" : "logdet-plain";
  }
  double alpha() const { return alpha_; }
  Variant variant() const { return variant_; }
  const Eigen::MatrixXd& kernel() const { return kernel_; }

 private:
  Eigen::MatrixXd kernel_;
  double alpha_;
  Variant variant_;
};

// K_ij = exp(-d_ij^2 / h^2) over Euclidean distances. Unit diagonal, PSD by
// construction.
inline Eigen::MatrixXd gaussian_kernel(const std::vector<std::vector<double>>& points,
                                       double bandwidth) {
  if (bandwidth <= 0.0) throw std::invalid_argument("gaussian_kernel: bandwidth must be > 0");
  int n = static_cast<int>(points.size());
  std::size_t dim = n > 0 ? points[0].size() : 0;
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (points[static_cast<std::size_t>(j)].size() != dim)
        throw std::invalid_argument("gaussian_kernel: inconsistent point dimensions");
      double d2 = 0.0;
      for (std::size_t t = 0; t < dim; ++t) {
        double diff = points[static_cast<std::size_t>(i)][t] - points[static_cast<std::size_t>(j)][t];
        d2 += diff * diff;
      }
      double v = std::exp(-d2 / (bandwidth * bandwidth));
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

}  // namespace submax
