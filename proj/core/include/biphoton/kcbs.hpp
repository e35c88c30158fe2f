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
#include <array>

#include "biphoton/spinops.hpp"
#include "biphoton/symstate.hpp"

// KCBS measurement configurations: five unit directions u_1..u_5 with
// u_j . u_{j+1} = 0 cyclically. The induced 3x3 matrix K = sum_j u_j u_j^T
// has trace 5 and its sorted spectrum traces a one-parameter curve
// (K_max(s), K_mid(s), K_min(s)), s in [-1, 1]. A biphoton with correlation
// tensor T is KCBS-noncontextual iff Tr[T K] >= 1 for every configuration.

namespace biphoton {

/// Five cyclically orthogonal unit directions.
struct KcbsDirections {
  std::array<Vector3, 5> u;

  /// Throws std::invalid_argument on non-unit vectors or broken cyclic
  /// orthogonality.
  static KcbsDirections checked(const std::array<Vector3, 5>& dirs);
};

using KcbsMatrix = Matrix3;

/// Sorted spectrum of the KCBS matrix at parameter s.
struct KcbsSpectrum {
  double k_max = 0.0;
  double k_mid = 0.0;
  double k_min = 0.0;
  double s = 0.0;
};

/// The one-parameter spectrum family:
///   K_max/K_2 = (3 + s^2)/2 +/- sqrt((1 + 3s^2 - 5s^4 + s^6)/(1 + s^2))/2,
///   K_3      = 2 - s^2,
/// with k_mid/k_min assigned by direct comparison of K_2 and K_3. Requires
/// |s| <= 1. K_max + K_mid + K_min = 5, K_max in [2, sqrt(5)], K_min >= 1.
KcbsSpectrum spectrum_from_s(double s);

/// Chain construction of a configuration from two free angles:
///   u1 = z, u2 = x, u3 = cos(phi3) z + sin(phi3) y,
///   u4 = cos(phi4) (u3 x u2) + sin(phi4) u2,
///   u5 = (u4 x u1)/|u4 x u1|.
/// Covers every configuration up to a global rotation (and sign flips, which
/// the KCBS matrix ignores). Throws std::invalid_argument when
/// |u4 x u1| < 1e-8 (u4 parallel to u1, u5 undefined).
KcbsDirections generate_directions(double phi3, double phi4);

/// The symmetric pentagram: u_j = (sin(th) cos(4 pi j/5),
/// sin(th) sin(4 pi j/5), cos(th)) with cos^2(th) = cos(pi/5)/(1+cos(pi/5)).
/// Its KCBS matrix has spectrum (sqrt(5), (5-sqrt(5))/2, (5-sqrt(5))/2) with
/// the top eigenvector along z.
KcbsDirections pentagram_directions();

/// K = sum_j u_j u_j^T.
KcbsMatrix kcbs_matrix(const KcbsDirections& dirs);

/// Tr[T K(dirs)]; a configuration with value < 1 witnesses contextuality.
double kcbs_value(const CorrelationTensor& t, const KcbsDirections& dirs);

/// sum_j <S_{u_j}^2>; equals (5 + Tr[T K])/2. Non-contextual bound is 3.
double kcbs_spin_sum(const BiphotonState& rho, const KcbsDirections& dirs);

/// sum_j <B_{u_j, u_{j+1}}> over the five adjacent CHSH operators; equals
/// 2 sqrt(2) Tr[T K]. The non-contextual bound is 2 sqrt(2).
double chsh_sum(const BiphotonState& rho, const KcbsDirections& dirs);

/// Largest achievable KCBS projector sum max_s sum_m <P_m> for a qutrit with
/// ordered eigenvalues (rho_max, rho_mid, rho_min). A pure state reaches
/// sqrt(5); the classical bound is 2.
double qutrit_kcbs_max(double rho_max, double rho_mid, double rho_min);

namespace detail {

/// Dense sample of the spectrum curve on s in [0, 1], shared by the 1-D
/// extremizers; built once.
struct SpectrumCurveGrid {
  std::vector<double> s, k_max, k_mid, k_min;
};
const SpectrumCurveGrid& spectrum_curve_grid();

struct CurveExtremum {
  double value = 0.0;
  double s = 0.0;
};

/// min over s in [0, 1] of w_max K_max(s) + w_mid K_mid(s) + w_min K_min(s);
/// dense grid sweep plus golden-section refinement of every surviving local
/// minimum (|ds| < 1e-10).
CurveExtremum minimize_curve_combo(double w_max, double w_mid, double w_min);

/// Euclidean distance from the sorted triple (k1 >= k2 >= k3, sum 5) to the
/// nearest point of the spectrum curve.
double distance_to_spectrum_curve(double k1, double k2, double k3);

}  // namespace detail

}  // namespace biphoton
