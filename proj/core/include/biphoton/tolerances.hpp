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

namespace biphoton {

// Tolerance on exact algebraic identities (traces, symmetry, closures).
inline constexpr double kAlgebraTol = 1e-12;

// Density-matrix eigenvalues below -kPositivityTol are treated as genuine
// positivity violations rather than floating-point noise.
inline constexpr double kPositivityTol = 1e-10;

// Orthogonality tolerance accepted on user-supplied direction pairs.
inline constexpr double kOrthogonalityTol = 1e-10;

// Margin on the locality (CHSH = 2) and contextuality (KCBS = 1) frontiers;
// points within the margin are assigned to the non-violating side.
inline constexpr double kClassifyTol = 1e-9;

}  // namespace biphoton
