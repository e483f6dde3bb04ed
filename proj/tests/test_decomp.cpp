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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "qform/basis.hpp"
#include "qform/decomp.hpp"
#include "qform/errors.hpp"
#include "qform/genfun.hpp"
#include "qform/qseries.hpp"

using namespace qform;

TEST_CASE("hex-square form over the weight-4 level-12 space") {
  FormSpec spec;
  spec.hex = {2};
  spec.squares = {1, 1, 1, 3, 3, 3};
  FracQSeries target = normalized_form_series(spec, 40);
  Basis basis = assemble_basis("M4(12,χ0)");
  Decomposition d = decompose(target, basis, 2 * basis.sturm());

  std::vector<Q> expected = {Q(1, 120), Q(0),    Q(-3, 40), Q(-2, 15), Q(0),
                             Q(6, 5),   Q(0),    Q(0),      Q(4)};
  CHECK(d.coefficients == expected);
  CHECK(d.verified_up_to == 18);
  CHECK(render_formula(d) ==
        "2σ₃(n) − 18σ₃(n/3) − 32σ₃(n/4) + 288σ₃(n/12) + 4a_{4,12}(n)");

  // Constant balance: the q^0 coefficient counts the zero vector once.
  CHECK(evaluate(d, 0) == 1);
  CHECK(Q(1, 120) - Q(3, 40) - Q(2, 15) + Q(6, 5) == 1);

  // Divisor-sum evaluation and series reconstruction both reproduce the
  // target coefficients.
  for (long n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(evaluate(d, n) == coeff(target, n));
  }
  FracQSeries rebuilt = reconstruct(d, 30);
  for (long n = 0; n < 30; ++n) {
    CAPTURE(n);
    CHECK(coeff(rebuilt, n) == coeff(target, n));
  }
}

TEST_CASE("six-variable triangular form and unit rendering") {
  FormSpec spec;
  spec.triangular = {1, 1, 1, 1, 2, 2};
  FracQSeries target = normalized_form_series(spec, 30);
  CHECK(target.offset == 1);
  Basis basis = assemble_basis("M3(4,χ−4)");
  Decomposition d = decompose(target, basis, 2 * basis.sturm());

  CHECK(d.coefficients == std::vector<Q>{Q(0), Q(1)});
  CHECK(render_formula(d) == "σ_{2;χ−4,1}(n)");
  RenderOptions explicit_units;
  explicit_units.explicit_units = true;
  CHECK(render_formula(d, explicit_units) == "1·σ_{2;χ−4,1}(n)");
  for (long n = 1; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(evaluate(d, n) == coeff(target, n));
  }
}

TEST_CASE("one target, two coordinate systems") {
  FormSpec spec;
  spec.hex = {1};
  spec.triangular = {2, 6};
  FracQSeries target = normalized_form_series(spec, 30);
  CHECK(target.offset == 1);

  Decomposition tabulated =
      decompose(target, assemble_basis("M2(12,χ0)"), 12);
  std::string formula =
      "σ(n) + 3σ(n/2) − 3σ(n/3) − 4σ(n/4) − 9σ(n/6) + 12σ(n/12)";
  CHECK(render_formula(tabulated) == formula);

  Decomposition raw = decompose(target, assemble_basis("M2(12,χ0)#e2"), 12);
  CHECK(raw.coefficients ==
        std::vector<Q>{Q(-1, 24), Q(-1, 8), Q(1, 8), Q(1, 6), Q(3, 8),
                       Q(-1, 2)});
  // The raw-E2 coordinates merge to the same divisor-sum formula, and the
  // quasi direction balances out for a genuinely modular target.
  CHECK(render_formula(raw) == formula);
  Q balance = 0;
  for (const Q& t : raw.coefficients) balance += t;
  CHECK(balance == 0);
  for (long n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(evaluate(tabulated, n) == coeff(target, n));
    CHECK(evaluate(raw, n) == coeff(target, n));
  }
}

TEST_CASE("twisted and indexed-cusp rendering") {
  FormSpec spec;
  spec.hex = {1};
  spec.squares = {1, 1};
  spec.triangular = {2, 6};
  FracQSeries target = normalized_form_series(spec, 30);
  CHECK(target.offset == 1);
  Basis basis = assemble_basis("M3(12,χ−4)");
  Decomposition d = decompose(target, basis, 2 * basis.sturm());

  CHECK(d.coefficients ==
        std::vector<Q>{Q(0), Q(0), Q(16, 7), Q(72, 7), Q(-9, 7), Q(-30, 7)});
  CHECK(render_formula(d) ==
        "16/7σ_{2;χ−4,1}(n) + 72/7σ_{2;χ−4,1}(n/3) − 9/7τ_{3,12,χ−4;1}(n)"
        " − 30/7τ_{3,12,χ−4;2}(n)");
  for (long n = 1; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(evaluate(d, n) == coeff(target, n));
  }
}

TEST_CASE("dilated cusp symbols and fractional multipliers") {
  FormSpec spec;
  spec.hex = {4, 4, 4};
  spec.squares = {1, 3};
  FracQSeries target = normalized_form_series(spec, 40);
  Basis basis = assemble_basis("M4(12,χ0)");
  Decomposition d = decompose(target, basis, 2 * basis.sturm());

  CHECK(render_formula(d) ==
        "1/5σ₃(n) − 9/5σ₃(n/2) + 9/5σ₃(n/3) + 128/5σ₃(n/4) − 81/5σ₃(n/6)"
        " + 1152/5σ₃(n/12) + 9/5a_{4,6}(n) + 18/5a_{4,6}(n/2)");
  for (long n = 0; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(evaluate(d, n) == coeff(target, n));
  }
}

TEST_CASE("zero decomposition renders as 0") {
  Decomposition d;
  d.space_label = "M4(12,χ0)";
  d.weight = 4;
  d.level = 12;
  d.element_labels = {"E4@d1", "f_{4,12}"};
  d.coefficients = {Q(0), Q(0)};
  CHECK(render_formula(d) == "0");
  CHECK(evaluate(d, 5) == 0);
}

TEST_CASE("failure modes") {
  Basis basis = assemble_basis("M4(12,χ0)");
  FracQSeries e4 = eisenstein_series(4, 1, 40);

  CHECK_THROWS_AS(decompose(e4, basis, basis.sturm() - 1), BadInput);
  CHECK_THROWS_AS(decompose(eisenstein_series(4, 1, 5), basis, 18),
                  OutOfPrecision);
  CHECK_THROWS_AS(decompose(shift(e4, Q(1, 2)), basis, 18), BadInput);

  // E4(5 tau) lives at level 5, not 12.
  CHECK_THROWS_AS(decompose(eisenstein_series(4, 5, 40), basis, 18),
                  NoSolution);

  // A perturbation beyond the solve rows must be caught by verification,
  // never silently truncated.
  FracQSeries perturbed = e4;
  perturbed.coeffs[15] += 1;
  CHECK_THROWS_AS(decompose(perturbed, basis, 18), NoSolution);
  CHECK_NOTHROW(decompose(e4, basis, 18));

  const BasisRegistry& registry = BasisRegistry::instance();
  Basis dependent;
  dependent.label = "dependent pair";
  dependent.weight = 4;
  dependent.level = 12;
  dependent.character = principal_character(12);
  dependent.eisenstein_count = 2;
  dependent.elements = {registry.element("E4@d1"), registry.element("E4@d1")};
  CHECK_THROWS_AS(decompose(e4, dependent, 18), UnderdeterminedBasis);
}
