// Copyright 2026 The qform authors
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

#ifndef QFORM_MODMETA_HPP_
#define QFORM_MODMETA_HPP_

#include <vector>

#include "qform/arith.hpp"
#include "qform/genfun.hpp"
#include "qform/rational.hpp"

namespace qform {

// Where a normalized generating function lives: q^shift * (series) is a
// holomorphic modular form of the stated weight on Gamma_0(level) with the
// stated character (principal mode when the Kronecker discriminant reduces
// to a square).
struct SpaceMeta {
  long weight;
  long level;
  DirichletCharacter character;
  Q shift;
};

// Pure figurate form with parameter a (a != 2; a = 1 is the triangular
// case and follows the same formulas). Requires an even number of
// components; throws DivisibilityViolated when sum(C) misses the required
// multiple of 8a / gcd((a-2)^2, 4a).
SpaceMeta figurate_meta(long a, const std::vector<long>& C);

// Hexagonal (A) with triangular (C) components; |C| even (possibly empty),
// 8 | sum(C).
SpaceMeta lt_meta(const std::vector<long>& A, const std::vector<long>& C);

// Square (B) with triangular (C) components; |B| + |C| even, 8 | sum(C).
// C may be empty (pure square forms need |B| even).
SpaceMeta st_meta(const std::vector<long>& B, const std::vector<long>& C);

// Hexagonal (A), square (B) and triangular (C, possibly empty) components;
// |B| + |C| even, 8 | sum(C).
SpaceMeta mixed_meta(const std::vector<long>& A, const std::vector<long>& B,
                     const std::vector<long>& C);

// Dispatch on the shape of the spec. Throws UnsupportedSpace when the shape
// matches none of the covered families (for example a figurate group mixed
// with other components, or an empty spec).
SpaceMeta space_meta(const FormSpec& spec);

}  // namespace qform

#endif  // QFORM_MODMETA_HPP_
