#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <vector>

#include "starspec/shape.hpp"

namespace starspec::testing {

// Dense adjacency built straight from the branch lengths, independent of
// starspec::adjacency.
inline Eigen::MatrixXd dense_adjacency(const StarlikeShape& shape) {
  const int n = shape.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  int offset = 1;
  for (int len : shape.branches()) {
    for (int m = 0; m + 1 < len; ++m) {
      a(offset + m, offset + m + 1) = a(offset + m + 1, offset + m) = 1.0;
    }
    a(offset + len - 1, 0) = a(0, offset + len - 1) = 1.0;
    offset += len;
  }
  return a;
}

// Eigenvalues in decreasing order from a dense symmetric solver.
inline std::vector<double> dense_eigenvalues(const StarlikeShape& shape) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_adjacency(shape));
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(values.rbegin(), values.rend());
  return values;
}

// Random branch multiset with the given sum.
inline StarlikeShape random_shape(std::mt19937& rng, int sum) {
  std::vector<int> branches;
  int left = sum;
  while (left > 0) {
    std::uniform_int_distribution<int> pick(1, left);
    const int n = pick(rng);
    branches.push_back(n);
    left -= n;
  }
  std::shuffle(branches.begin(), branches.end(), rng);
  return StarlikeShape(branches);
}

}  // namespace starspec::testing
