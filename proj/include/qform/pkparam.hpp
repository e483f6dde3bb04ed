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

#ifndef QFORM_PKPARAM_HPP_
#define QFORM_PKPARAM_HPP_

#include <string>
#include <vector>

#include "qform/qseries.hpp"
#include "qform/rational.hpp"

namespace qform {

// The theta-derived parameter pair
//   p = (θ²(τ) − θ²(3τ)) / (2 θ²(3τ)),   k = θ³(3τ) / θ(τ),
// in which the weight-4 forms on Γ₀(12) admit degree-8 polynomial
// expressions (c₀ + c₁p + … + c₈p⁸) k⁴.
struct PkPair {
  FracQSeries p;  // starts 2q + 2q² − 2q³ − …
  FracQSeries k;  // starts 1 − 2q + 4q² − …
};

// Both parameter expansions on the window [0, prec).
PkPair compute_pk(long prec);

// (c₀ + c₁ p + … + c_d p^d) k⁴ on the parameters' window.
FracQSeries pk_combination(const PkPair& pair, const std::vector<Q>& coeffs);

// The exact coefficients c₀..c_degree with series = (Σ cᵢ pⁱ) k⁴ on the
// shared certified window (p is 2q + O(q²), so the system is triangular).
// Throws NoSolution when no such polynomial reproduces the window.
std::vector<Q> p_polynomial(const PkPair& pair, const FracQSeries& series,
                            long degree);

// Tabulated degree-8 rows for the weight-4 generators, keyed by the row
// labels accepted by check_pk_identity below.
std::vector<std::string> pk_identity_labels();
std::vector<Q> pk_polynomial_row(const std::string& label);

// Result of checking one tabulated row: the row's polynomial in (p, k) is
// compared against every candidate left side and the match is reported
// rather than assumed, so a mislabeled dilation is detected instead of
// silently substituted.
struct PkIdentityResult {
  std::string label;        // requested row
  std::string target;       // left side the polynomial reproduces; "" if none
  bool as_stated = false;   // target is the left side the row is labeled with
  bool holds = false;       // some candidate matched exactly on [0, prec)
  std::vector<Q> corrected; // when !holds: exact degree-8 row for the stated
                            // left side, derived from its expansion
};

PkIdentityResult check_pk_identity(const std::string& label, long prec);

// True when the row's polynomial reproduces its empirically resolved left
// side exactly on [0, prec). Use check_pk_identity to see whether that left
// side is the one the row is labeled with.
bool verify_pk_identity(const std::string& label, long prec);

// The unique candidate dilation d with E₄(dτ) equal to the polynomial
// combination on [0, prec). Throws NoSolution when no candidate (or more
// than one) matches — used to settle ambiguous tabulated dilations
// empirically.
long matching_e4_dilation(const std::vector<Q>& coeffs,
                          const std::vector<long>& candidates, long prec);

}  // namespace qform

#endif  // QFORM_PKPARAM_HPP_
