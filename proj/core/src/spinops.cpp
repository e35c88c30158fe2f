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

#include "biphoton/spinops.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace biphoton {

namespace {

using Matrix2c = Eigen::Matrix2cd;
using cd = std::complex<double>;

Matrix2c dot_sigma(const Vector3& m) {
  Matrix2c out;
  out << cd(m.z(), 0), cd(m.x(), -m.y()), cd(m.x(), m.y()), cd(-m.z(), 0);
  return out;
}

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

Direction::Direction(const Vector3& v) : m_(v) {
  if (std::abs(v.norm() - 1.0) > kAlgebraTol)
    throw std::invalid_argument("direction is not a unit vector");
}

Direction Direction::normalized(const Vector3& v) {
  const double n = v.norm();
  if (n < 1e-14) throw std::invalid_argument("cannot normalize a zero vector");
  return Direction(Vector3(v / n));
}

TwoQubitOperator spin1_op(const Direction& m) {
  static const Matrix2c id2 = Matrix2c::Identity();
  const Matrix2c ms = dot_sigma(m.vec());
  return 0.5 * (kron2(ms, id2) + kron2(id2, ms));
}

TwoQubitOperator spin1_sq(const Direction& m) {
  const Matrix2c ms = dot_sigma(m.vec());
  return 0.5 * (Matrix4c::Identity() + kron2(ms, ms));
}

SpinProjectors spin_projectors(const Direction& m) {
  const TwoQubitOperator s = spin1_op(m);
  const TwoQubitOperator s2 = spin1_sq(m);
  return SpinProjectors{0.5 * (s2 + s), 0.5 * (s2 - s),
                        Matrix4c::Identity() - s2};
}

TwoQubitOperator chsh_op(const Direction& m, const Direction& m_perp) {
  const Vector3& a = m.vec();
  Vector3 b = m_perp.vec();
  if (std::abs(a.dot(b)) > kOrthogonalityTol)
    throw std::invalid_argument("CHSH directions are not orthogonal");
  b = (b - a.dot(b) * a).normalized();
  const Matrix2c as = dot_sigma(a);
  const Matrix2c bs = dot_sigma(b);
  return std::sqrt(2.0) * (kron2(as, as) + kron2(bs, bs));
}

double expectation(const BiphotonState& rho, const TwoQubitOperator& op) {
  const cd tr = (rho.rho * op).trace();
  if (std::abs(tr.imag()) >= 1e-10)
    throw std::logic_error("expectation has a non-negligible imaginary part; "
                           "operator is not Hermitian");
  return tr.real();
}

MeasurementProbs measurement_probs(const BiphotonState& rho,
                                   const Direction& m) {
  const SpinProjectors p = spin_projectors(m);
  return MeasurementProbs{expectation(rho, p.plus), expectation(rho, p.zero),
                          expectation(rho, p.minus)};
}

Eigen::Matrix<cd, 4, 3> symmetric_embedding() {
  Eigen::Matrix<cd, 4, 3> v = Eigen::Matrix<cd, 4, 3>::Zero();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v(0, 0) = 1.0;                       // |HH>
  v(1, 1) = inv_sqrt2; v(2, 1) = inv_sqrt2;  // (|HV> + |VH>)/sqrt(2)
  v(3, 2) = 1.0;                       // |VV>
  return v;
}

Eigen::Matrix3cd restrict_symmetric(const TwoQubitOperator& op) {
  const auto v = symmetric_embedding();
  return v.adjoint() * op * v;
}

}  // namespace biphoton
