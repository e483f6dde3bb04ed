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

#ifndef QFORM_DECOMP_HPP_
#define QFORM_DECOMP_HPP_

#include <string>
#include <vector>

#include "qform/basis.hpp"
#include "qform/qseries.hpp"
#include "qform/rational.hpp"

namespace qform {

// Exact coordinates of a target expansion over a registered basis. The
// labels pin the elements, so a decomposition can be re-expanded or
// evaluated long after the solve.
struct Decomposition {
  std::string space_label;
  long weight = 0;
  long level = 1;
  std::vector<std::string> element_labels;
  std::vector<Q> coefficients;
  // Exponents 0..verified_up_to were all checked against the target.
  long verified_up_to = 0;
};

// Solves for the coordinates of `target` on the coefficients 0..sturm and
// re-checks every further coefficient through verify_to (a mismatch there
// means the target is not in the span, reported as NoSolution — never a
// truncated answer).
//
// Preconditions: the target window starts at a nonnegative integer
// exponent and certifies 0..verify_to (OutOfPrecision otherwise), and
// verify_to >= sturm (BadInput otherwise). Quasi-modular bases (raw E_2
// dilation lists) extend the solve window past the largest dilation, where
// the dilation columns become visible; the target window and verification
// range grow to match.
//
// Throws NoSolution when the linear system is inconsistent or a checked
// coefficient disagrees, and UnderdeterminedBasis when the solve rows
// leave a free direction.
Decomposition decompose(const FracQSeries& target, const Basis& basis,
                        long verify_to);

// Exact re-expansion of the decomposition on the window [0, prec).
FracQSeries reconstruct(const Decomposition& d, long prec);

struct RenderOptions {
  // Render unit coefficients as an explicit "1·" multiplier instead of a
  // bare term.
  bool explicit_units = false;
};

// Closed divisor-sum formula for the coefficient of q^n. Classical
// Eisenstein elements and weight-2 combinations merge into σ-terms keyed
// by dilation (E_4 contributing 240 t σ₃(n/d), E_2 rows -24 t σ(n/d));
// twisted elements render σ_{k-1;χ,ψ}(n/a); cusp elements render symbolic
// coefficient terms (Δ_{...} as τ_{...}, f_{k,N} as a_{k,N}, a dilation
// suffix as an n/a argument). Zero terms are dropped; the zero
// decomposition renders as "0".
std::string render_formula(const Decomposition& d,
                           const RenderOptions& options = RenderOptions{});

// Value of the rendered formula at one index: divisor sums evaluated
// exactly, cusp terms read from the stored expansions. At n = 0 this is
// the constant-term balance sum(t_i * constant_i).
Q evaluate(const Decomposition& d, long n);

}  // namespace qform

#endif  // QFORM_DECOMP_HPP_
