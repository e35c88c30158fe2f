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

#include "biphoton/symstate.hpp"

// Spin-1 operator algebra realized on two qubits. The biphoton polarization
// along a unit direction m is measured by S_m = (m.sigma (x) I + I (x)
// m.sigma)/2 with eigenvalues {+1, 0, 0, -1}; the KCBS test only ever needs
// S_m^2 = (I (x) I + m.sigma (x) m.sigma)/2, which is insensitive to the
// local Bloch vector.

namespace biphoton {

using TwoQubitOperator = Matrix4c;

/// Unit 3-vector measurement direction.
struct Direction {
  /// Throws std::invalid_argument unless |v| = 1 within kAlgebraTol.
  explicit Direction(const Vector3& v);
  /// Normalizes v first; throws on a near-zero vector.
  static Direction normalized(const Vector3& v);

  const Vector3& vec() const { return m_; }

 private:
  Vector3 m_;
};

/// Spin-1 magnetization S_m; eigenvalues {+1, 0, 0, -1}, annihilates the
/// singlet.
TwoQubitOperator spin1_op(const Direction& m);

/// S_m^2 = (I (x) I + m.sigma (x) m.sigma)/2; eigenvalues {1, 1, 0, 0}.
TwoQubitOperator spin1_sq(const Direction& m);

struct SpinProjectors {
  TwoQubitOperator plus;   // onto |S_m = +1>, rank 1
  TwoQubitOperator minus;  // onto |S_m = -1>, rank 1
  TwoQubitOperator zero;   // I - S_m^2; rank 2 on the full space, rank 1 on
                           // the symmetric subspace
};

/// P_plus = (S_m^2 + S_m)/2, P_minus = (S_m^2 - S_m)/2, P_zero = I - S_m^2.
SpinProjectors spin_projectors(const Direction& m);

/// Optimal same-plane CHSH operator
/// B = sqrt(2) (m.sigma (x) m.sigma + mp.sigma (x) mp.sigma).
/// Requires m . m_perp = 0 within kOrthogonalityTol; m_perp is
/// re-orthogonalized against m before use.
TwoQubitOperator chsh_op(const Direction& m, const Direction& m_perp);

/// Tr[rho op] for Hermitian op. Throws std::logic_error if the imaginary part
/// reaches 1e-10 (a non-Hermitian operator slipped in).
double expectation(const BiphotonState& rho, const TwoQubitOperator& op);

struct MeasurementProbs {
  double p_plus = 0.0;
  double p_zero = 0.0;
  double p_minus = 0.0;
};

/// Outcome probabilities of the S_m measurement; the S_m^2 statistics are
/// (p_plus + p_minus, p_zero) for outcomes (1, 0).
MeasurementProbs measurement_probs(const BiphotonState& rho,
                                   const Direction& m);

/// Isometry onto the symmetric subspace with ordered basis
/// |HH>, (|HV> + |VH>)/sqrt(2), |VV>.
Eigen::Matrix<std::complex<double>, 4, 3> symmetric_embedding();

/// V^dagger op V: the qutrit view of a two-qubit operator.
Eigen::Matrix3cd restrict_symmetric(const TwoQubitOperator& op);

}  // namespace biphoton
