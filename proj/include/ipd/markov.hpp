#pragma once

#include <Eigen/Dense>

#include <vector>

namespace ipd {

// Internal solves run in extended precision: payoffs at stopping
// probabilities as small as 1e-10 put the linear system's condition number
// near 1/w, and long double keeps the resulting error below the 1e-9
// comparison tolerances used by the classifier.
using Real = long double;
using MatrixX = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Structural decomposition of a finite row-stochastic chain. An edge exists
// iff its probability exceeds 1e-15 (anything smaller is float noise, not a
// real transition).
struct ChainDecomposition {
  // Each recurrent class is a list of state indices; transient states are
  // the ones in no class.
  std::vector<std::vector<int>> recurrent_classes;
  std::vector<bool> is_recurrent;
};

ChainDecomposition decompose_chain(const MatrixX& m);

// Unique stationary distribution of one recurrent class, as a vector over
// all states (zero outside the class). Periodic classes yield the
// time-average distribution.
VectorX class_stationary(const MatrixX& m, const std::vector<int>& cls);

// Probability of eventual absorption into each recurrent class, starting
// from the distribution v0.
std::vector<Real> absorption_probabilities(const MatrixX& m,
                                           const ChainDecomposition& dec,
                                           const VectorX& v0);

}  // namespace ipd
