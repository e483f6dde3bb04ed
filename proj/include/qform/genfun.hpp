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

#ifndef QFORM_GENFUN_HPP_
#define QFORM_GENFUN_HPP_

#include <vector>

#include "qform/qseries.hpp"
#include "qform/rational.hpp"

namespace qform {

// One figurate component group: counts n in Z weighted by the exponents
// coeffs[i] * N_a(n), where N_a(n) = n(an - (a - 2))/2. a = 1 degenerates to
// triangular numbers (indexed once, n >= 0) and a = 2 to squares.
struct FigurateGroup {
  long a;
  std::vector<long> coeffs;
};

// A mixed quadratic/figurate form. Each entry is a dilation coefficient:
//   hex:        c * (m^2 + m n + n^2) over (m, n) in Z^2
//   squares:    c * z^2 over z in Z
//   triangular: c * n(n+1)/2 over n >= 0
//   figurate:   c * N_a(n) over n in Z (a >= 3; see FigurateGroup)
struct FormSpec {
  std::vector<long> hex;
  std::vector<long> squares;
  std::vector<long> triangular;
  std::vector<FigurateGroup> figurate;

  bool empty() const {
    return hex.empty() && squares.empty() && triangular.empty() &&
           figurate.empty();
  }
};

// Throws BadInput on nonpositive dilations, a < 1, or an empty spec.
void validate(const FormSpec& spec);

// N_a(n) = n(an - (a - 2))/2; for a >= 3 this is injective over Z.
long figurate_number(long a, long n);

// Sum of q^(n(n+1)/2) over n >= 0 (integer window, offset 0).
FracQSeries psi_series(long prec);

// Sum of q^(z^2) over z in Z.
FracQSeries theta_series(long prec);

// Sum of q^(N_a(n)): over n in Z for a >= 2, over n >= 0 (each value once)
// for a = 1, matching the triangular counting convention.
FracQSeries phi_series(long a, long prec);

// Sum of q^(m^2 + m n + n^2) over (m, n) in Z^2.
FracQSeries hex_series(long prec);

// Product of the dilated component series of the spec; offset 0, integer
// exponent lattice.
FracQSeries form_series(const FormSpec& spec, long prec);

// Normalizing q-power shift making the completed squares visible:
//   sum(C)/8 + sum over figurate groups of (a-2)^2 sum(coeffs) / (8a).
// (Squares and hex components need no shift.)
Q normalizing_shift(const FormSpec& spec);

// form_series multiplied by q^shift. The shifted series is a candidate
// q-expansion only when the shift is an integer; otherwise throws
// NotModularShift.
FracQSeries normalized_form_series(const FormSpec& spec, long prec);

}  // namespace qform

#endif  // QFORM_GENFUN_HPP_
