// Copyright the biphoton-contextuality developers
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
#include <cstdint>
#include <random>
#include <utility>

#include "biphoton/tolerances.hpp"

// Symmetric two-qubit (biphoton) states. A biphoton lives in the symmetric
// three-dimensional subspace of two polarization qubits: the state is fixed by
// a shared Bloch vector a and a real symmetric correlation tensor T with
// trace 1 (the trace condition is equivalent to zero singlet overlap). With
// a = 0 the physics is carried entirely by the ordered eigenvalues
// (lambda1, lambda2, lambda3) of T.

namespace biphoton {

using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;
using Matrix4c = Eigen::Matrix4cd;

/// Ordered correlation-tensor eigenvalues; the coordinates every
/// classification decision is made in.
struct SpectrumTriple {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;

  /// Validating factory: descending order, unit trace, positivity.
  /// Throws std::invalid_argument when any invariant fails.
  static SpectrumTriple checked(double l1, double l2, double l3);
};

/// Shared single-photon Bloch vector (|a| <= 1).
struct BlochVector {
  Vector3 a = Vector3::Zero();

  static BlochVector zero() { return BlochVector{}; }
  static BlochVector checked(const Vector3& v);
};

/// 3x3 real symmetric trace-1 correlation tensor.
struct CorrelationTensor {
  Matrix3 t = Matrix3::Identity() / 3.0;

  static CorrelationTensor checked(const Matrix3& m);
  /// diag(lambda1, lambda2, lambda3) for a valid spectrum.
  static CorrelationTensor diagonal(const SpectrumTriple& lambda);
};

/// 4x4 density matrix on the two-qubit computational basis
/// |0> = |H>, |1> = |V|; supported on the symmetric subspace.
struct BiphotonState {
  Matrix4c rho = Matrix4c::Identity() / 4.0;
};

/// Orthonormal eigenvectors of a correlation tensor, columns of a proper
/// rotation (determinant +1).
struct Eigenbasis {
  Matrix3 axes = Matrix3::Identity();

  Vector3 n1() const { return axes.col(0); }
  Vector3 n2() const { return axes.col(1); }
  Vector3 n3() const { return axes.col(2); }
};

/// The four positivity criteria on (lambda1, lambda2, lambda3):
///   1 + l1 + l2 - l3 >= 0,  1 - l1 + l2 + l3 >= 0,
///   1 + l1 - l2 + l3 >= 0,  1 - l1 - l2 - l3 >= 0.
/// All four are evaluated even though the last is automatic at unit trace.
bool validate_positivity(double l1, double l2, double l3);
bool validate_positivity(const SpectrumTriple& lambda);

/// rho = 1/4 (I (x) I + sum_k a_k (sigma_k (x) I + I (x) sigma_k)
///            + sum_kl t_kl sigma_k (x) sigma_l).
/// Throws std::invalid_argument when the result has an eigenvalue below
/// -kPositivityTol (the message names the offending eigenvalue) or when an
/// input invariant fails.
BiphotonState assemble_state(const BlochVector& a, const CorrelationTensor& t);

/// Eigen-decomposition of the correlation tensor, eigenvalues descending,
/// eigenbasis determinant forced to +1.
std::pair<SpectrumTriple, Eigenbasis> spectrum(const CorrelationTensor& t);

/// Rebuild sum_i lambda_i n_i n_i^T; inverse of spectrum() up to degeneracy.
CorrelationTensor tensor_from_spectrum(const SpectrumTriple& lambda,
                                       const Eigenbasis& basis);

/// <psi-|rho|psi-> for the singlet psi- = (|01> - |10>)/sqrt(2). Zero exactly
/// when Tr[T] = 1. Accepts any Hermitian trace-1 candidate matrix.
double singlet_overlap(const Matrix4c& rho);

/// Uniform sample over the valid-spectrum polytope
/// {l1 >= l2 >= l3, l1+l2+l3 = 1, positivity} by rejection from the bounding
/// box l1 in [1/3, 1], l2 in [-1, 1], l3 := 1 - l1 - l2.
SpectrumTriple random_spectrum(std::mt19937_64& rng);
SpectrumTriple random_spectrum(std::uint64_t seed);

}  // namespace biphoton
