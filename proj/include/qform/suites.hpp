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

#ifndef QFORM_SUITES_HPP_
#define QFORM_SUITES_HPP_

#include <string>
#include <vector>

namespace qform {

// One named check inside a verification suite. `note` carries context that
// survives a pass: tabulated-source deviations the engine resolved (wrong
// prefactor, shifted dilation label, dropped operator), empirical
// resolutions, and on failure the first mismatch found.
struct SuiteItem {
  std::string name;
  bool passed = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteItem> items;

  bool all_passed() const {
    for (const SuiteItem& item : items) {
      if (!item.passed) return false;
    }
    return true;
  }
};

// The 21 mixed hexagonal/square/triangular forms of weight 4 on Γ₀(12):
// each normalized series is decomposed over the tabulated basis
// (E₄(dτ) for d | 12, then f_{4,6}, f_{4,6}(2τ), f_{4,12}) and the exact
// coordinate vector is compared against the tabulated row. `prec` is the
// certified window of the target (and the verification range).
SuiteReport run_table1_suite(long prec = 60);

// The degree-8 polynomial rows in the theta parameters (p, k): every row is
// resolved empirically against candidate left sides, the 12-vs-14 dilation
// question is settled by unique match, and the two factored product forms
// are expanded and compared. Rows whose tabulated vector matches no
// candidate are re-derived exactly and the correction is certified.
SuiteReport run_pk_suite(long prec = 40);

// Closed-form counts (δ₂, δ₃, δ₄, δ₆, δ₈ and r₄, r₆, r₈), the five
// numbered convolution identities, the square–triangular convolution on
// random component lists, and the Ψ-duplication identity
// Ψ_C(τ)² = Πθ(cᵢτ) · Ψ_C(2τ) on a 150-term window.
SuiteReport run_identities_suite(long nmax = 30);

// The odd-square bijection δ_k(C; n) = q_k(C; 8n + ΣC) on random component
// lists, and the ellipsoid lattice count against the two candidate index
// readings of its closed form (the zero-based reading is the correct one).
SuiteReport run_ellipsoid_suite(int trials = 200);

// Sample representation-number formulas of weights 2, 3 and 4: each form is
// decomposed over its space's tabulated basis, the rendered divisor-sum
// formula is compared character-for-character against the expected string,
// and every value through `nmax` is checked against the brute-force count.
SuiteReport run_formulas_suite(long nmax = 30);

// Dispatch by suite name: "table1", "pk", "identities", "ellipsoid",
// "formulas" or "all" (concatenation in that order). `nmax` <= 0 keeps each
// suite's default knob (precision for table1/pk, n-range for
// identities/formulas, trial count for ellipsoid). Throws BadInput on an
// unknown name.
std::vector<SuiteReport> run_suites(const std::string& name, long nmax = 0);

std::vector<std::string> suite_names();

}  // namespace qform

#endif  // QFORM_SUITES_HPP_
