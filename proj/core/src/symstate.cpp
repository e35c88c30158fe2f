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

#include "biphoton/symstate.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "biphoton/rng.hpp"

namespace biphoton {

namespace {

using Matrix2c = Eigen::Matrix2cd;
using cd = std::complex<double>;

const Matrix2c& pauli(int k) {
  static const Matrix2c sx = (Matrix2c() << 0, 1, 1, 0).finished();
  static const Matrix2c sy =
      (Matrix2c() << 0, cd(0, -1), cd(0, 1), 0).finished();
  static const Matrix2c sz = (Matrix2c() << 1, 0, 0, -1).finished();
  static const Matrix2c* table[3] = {&sx, &sy, &sz};
  return *table[k];
}

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

SpectrumTriple SpectrumTriple::checked(double l1, double l2, double l3) {
  if (!(l1 >= l2 && l2 >= l3))
    throw std::invalid_argument("spectrum not in descending order");
  if (std::abs(l1 + l2 + l3 - 1.0) > kAlgebraTol)
    throw std::invalid_argument("spectrum trace differs from 1");
  if (!validate_positivity(l1, l2, l3))
    throw std::invalid_argument("spectrum violates a positivity criterion");
  return SpectrumTriple{l1, l2, l3};
}

BlochVector BlochVector::checked(const Vector3& v) {
  if (v.norm() > 1.0 + kAlgebraTol)
    throw std::invalid_argument("Bloch vector longer than 1");
  return BlochVector{v};
}

CorrelationTensor CorrelationTensor::checked(const Matrix3& m) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > kAlgebraTol)
    throw std::invalid_argument("correlation tensor not symmetric");
  if (std::abs(m.trace() - 1.0) > kAlgebraTol)
    throw std::invalid_argument("correlation tensor trace differs from 1");
  return CorrelationTensor{m};
}

CorrelationTensor CorrelationTensor::diagonal(const SpectrumTriple& lambda) {
  Matrix3 m = Matrix3::Zero();
  m(0, 0) = lambda.lambda1;
  m(1, 1) = lambda.lambda2;
  m(2, 2) = lambda.lambda3;
  return CorrelationTensor{m};
}

bool validate_positivity(double l1, double l2, double l3) {
  return 1.0 + l1 + l2 - l3 >= 0.0 && 1.0 - l1 + l2 + l3 >= 0.0 &&
         1.0 + l1 - l2 + l3 >= 0.0 && 1.0 - l1 - l2 - l3 >= 0.0;
}

bool validate_positivity(const SpectrumTriple& lambda) {
  return validate_positivity(lambda.lambda1, lambda.lambda2, lambda.lambda3);
}

BiphotonState assemble_state(const BlochVector& a, const CorrelationTensor& t) {
  BlochVector::checked(a.a);
  CorrelationTensor::checked(t.t);

  static const Matrix2c id2 = Matrix2c::Identity();
  Matrix4c rho = Matrix4c::Identity();
  for (int k = 0; k < 3; ++k) {
    rho += a.a[k] * (kron2(pauli(k), id2) + kron2(id2, pauli(k)));
    for (int l = 0; l < 3; ++l) rho += t.t(k, l) * kron2(pauli(k), pauli(l));
  }
  rho *= 0.25;

  Eigen::SelfAdjointEigenSolver<Matrix4c> es(rho, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPositivityTol) {
    std::ostringstream msg;
    msg << "unphysical parameter combination: density-matrix eigenvalue "
        << min_eig << " below " << -kPositivityTol;
    throw std::invalid_argument(msg.str());
  }
  return BiphotonState{rho};
}

std::pair<SpectrumTriple, Eigenbasis> spectrum(const CorrelationTensor& t) {
  CorrelationTensor::checked(t.t);
  Eigen::SelfAdjointEigenSolver<Matrix3> es(t.t);
  // Eigen returns ascending order; flip to descending.
  Matrix3 axes;
  Vector3 vals;
  for (int i = 0; i < 3; ++i) {
    vals[i] = es.eigenvalues()[2 - i];
    axes.col(i) = es.eigenvectors().col(2 - i);
  }
  if (axes.determinant() < 0.0) axes.col(2) = -axes.col(2);
  return {SpectrumTriple{vals[0], vals[1], vals[2]}, Eigenbasis{axes}};
}

CorrelationTensor tensor_from_spectrum(const SpectrumTriple& lambda,
                                       const Eigenbasis& basis) {
  Matrix3 d = Matrix3::Zero();
  d(0, 0) = lambda.lambda1;
  d(1, 1) = lambda.lambda2;
  d(2, 2) = lambda.lambda3;
  Matrix3 t = basis.axes * d * basis.axes.transpose();
  // Symmetrize away rotation round-off before the checked constructor.
  t = 0.5 * (t + t.transpose());
  return CorrelationTensor::checked(t);
}

double singlet_overlap(const Matrix4c& rho) {
  // psi- = (|01> - |10>)/sqrt(2): components 1 and 2 of the 4-vector.
  const cd v = 0.5 * (rho(1, 1) - rho(1, 2) - rho(2, 1) + rho(2, 2));
  return v.real();
}

SpectrumTriple random_spectrum(std::mt19937_64& rng) {
  for (;;) {
    const double l1 = uniform_range(rng, 1.0 / 3.0, 1.0);
    const double l2 = uniform_range(rng, -1.0, 1.0);
    const double l3 = 1.0 - l1 - l2;
    if (l1 >= l2 && l2 >= l3 && validate_positivity(l1, l2, l3))
      return SpectrumTriple{l1, l2, l3};
  }
}

SpectrumTriple random_spectrum(std::uint64_t seed) {
  std::mt19937_64 rng = substream(seed, 0);
  return random_spectrum(rng);
}

}  // namespace biphoton
