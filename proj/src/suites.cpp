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

#include "qform/suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "qform/arith.hpp"
#include "qform/basis.hpp"
#include "qform/decomp.hpp"
#include "qform/errors.hpp"
#include "qform/genfun.hpp"
#include "qform/oracle.hpp"
#include "qform/pkparam.hpp"
#include "qform/qseries.hpp"
#include "qform/rational.hpp"

namespace qform {
namespace {

FormSpec spec_of(std::vector<long> hex, std::vector<long> squares,
                 std::vector<long> triangular) {
  FormSpec spec;
  spec.hex = std::move(hex);
  spec.squares = std::move(squares);
  spec.triangular = std::move(triangular);
  return spec;
}

std::string join_q(const std::vector<Q>& values) {
  std::ostringstream out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i].get_str();
  }
  return out.str();
}

void append_note(SuiteItem& item, const std::string& text) {
  if (!item.note.empty()) item.note += "; ";
  item.note += text;
}

// Runs `body` and converts an engine error into a failed item note, so one
// bad fixture never aborts the whole suite.
template <typename Body>
void guarded(SuiteItem& item, Body&& body) {
  try {
    body();
  } catch (const EngineError& error) {
    item.passed = false;
    append_note(item, std::string("error: ") + error.what());
  }
}

// ------------------------------------------------------------------------ //
// Mixed-form coordinate table of weight 4 on Gamma_0(12)                    //
// ------------------------------------------------------------------------ //

struct Table1Row {
  const char* name;
  FormSpec spec;
  std::vector<Q> expected;
  const char* note;
};

Q fr(long num, long den) { return make_frac(num, den); }

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  auto row = [&rows](const char* name, std::vector<long> hex,
                     std::vector<long> squares, std::vector<long> triangular,
                     std::vector<Q> expected, const char* note = "") {
    rows.push_back(Table1Row{name,
                             spec_of(std::move(hex), std::move(squares),
                                     std::move(triangular)),
                             std::move(expected), note});
  };

  row("𝓕(2τ)θ³(τ)θ³(3τ)", {2}, {1, 1, 1, 3, 3, 3}, {},
      {fr(1, 120), Q(0), fr(-3, 40), fr(-2, 15), Q(0), fr(6, 5), Q(0), Q(0),
       Q(4)});
  row("q𝓕(2τ)θ²(τ)θ²(3τ)Ψ(2τ)Ψ(6τ)", {2}, {1, 1, 3, 3}, {2, 6},
      {fr(1, 480), fr(-1, 480), fr(-3, 160), Q(0), fr(3, 160), Q(0), Q(0),
       Q(0), fr(1, 2)});
  row("q²𝓕(2τ)θ(τ)θ(3τ)Ψ²(2τ)Ψ²(6τ)", {2}, {1, 3}, {2, 2, 6, 6},
      {fr(1, 1920), fr(-1, 1920), fr(-3, 640), Q(0), fr(3, 640), Q(0), Q(0),
       Q(0), fr(-1, 8)});
  row("q²𝓕(4τ)θ²(τ)Ψ(τ)Ψ(3τ)Ψ²(6τ)", {4}, {1, 1}, {1, 3, 6, 6},
      {fr(1, 1920), fr(-1, 1920), fr(-3, 640), Q(0), fr(3, 640), Q(0),
       fr(-1, 2), Q(-1), fr(3, 8)});
  row("q𝓕(4τ)θ²(3τ)Ψ(τ)Ψ²(2τ)Ψ(3τ)", {4}, {3, 3}, {1, 2, 2, 3},
      {fr(1, 1920), fr(-1, 1920), fr(-3, 640), Q(0), fr(3, 640), Q(0),
       fr(1, 2), Q(1), fr(3, 8)},
      "tabulated prefactor reads q²; the component sum (1+2+2+3)/8 forces q¹ "
      "(coordinates correct as tabulated)");
  row("𝓕(τ)𝓕(2τ)θ⁴(3τ)", {1, 2}, {3, 3, 3, 3}, {},
      {fr(1, 300), fr(-1, 200), fr(13, 100), fr(2, 75), fr(-39, 200),
       fr(26, 25), fr(16, 5), fr(32, 5), Q(2)});
  row("𝓕(τ)𝓕(2τ)θ²(τ)θ²(3τ)", {1, 2}, {1, 1, 3, 3}, {},
      {fr(1, 60), fr(-1, 120), fr(-3, 20), fr(-2, 15), fr(3, 40), fr(6, 5),
       Q(0), Q(0), Q(6)});
  row("𝓕(τ)𝓕(2τ)θ⁴(τ)", {1, 2}, {1, 1, 1, 1}, {},
      {fr(13, 300), fr(-13, 200), fr(9, 100), fr(26, 75), fr(-27, 200),
       fr(18, 25), fr(48, 5), fr(96, 5), Q(-6)});
  row("q𝓕(τ)𝓕(2τ)Ψ²(τ)Ψ²(3τ)", {1, 2}, {}, {1, 1, 3, 3},
      {fr(1, 240), fr(-1, 240), fr(-3, 80), Q(0), fr(3, 80), Q(0), Q(0), Q(0),
       Q(0)});
  row("q²𝓕(τ)𝓕(2τ)Ψ²(2τ)Ψ²(6τ)", {1, 2}, {}, {2, 2, 6, 6},
      {fr(1, 640), fr(-19, 1920), fr(-9, 640), fr(1, 120), fr(57, 640),
       fr(-3, 40), Q(0), Q(0), fr(-3, 8)});
  row("𝓕(2τ)𝓕(4τ)θ²(τ)θ²(3τ)", {2, 4}, {1, 1, 3, 3}, {},
      {fr(1, 240), fr(1, 240), fr(-3, 80), fr(-2, 15), fr(-3, 80), fr(6, 5),
       Q(0), Q(0), Q(3)});
  row("q𝓕(2τ)𝓕(4τ)Ψ²(τ)Ψ²(3τ)", {2, 4}, {}, {1, 1, 3, 3},
      {fr(1, 960), fr(-1, 960), fr(-3, 320), Q(0), fr(3, 320), Q(0), Q(0),
       Q(0), fr(3, 4)});
  row("𝓕³(2τ)θ(τ)θ(3τ)", {2, 2, 2}, {1, 3}, {},
      {fr(1, 120), Q(0), fr(-3, 40), fr(-2, 15), Q(0), fr(6, 5), Q(0), Q(0),
       Q(0)});
  row("q𝓕³(2τ)Ψ(2τ)Ψ(6τ)", {2, 2, 2}, {}, {2, 6},
      {fr(1, 240), fr(-3, 80), fr(-3, 80), fr(1, 30), fr(27, 80), fr(-3, 10),
       Q(0), Q(0), Q(0)});
  row("𝓕³(4τ)θ(τ)θ(3τ)", {4, 4, 4}, {1, 3}, {},
      {fr(1, 1200), fr(-3, 400), fr(3, 400), fr(8, 75), fr(-27, 400),
       fr(24, 25), fr(9, 5), fr(18, 5), Q(0)});
  row("𝓕²(τ)𝓕(2τ)θ(τ)θ(3τ)", {1, 1, 2}, {1, 3}, {},
      {fr(1, 30), fr(-1, 40), fr(-3, 10), fr(-2, 15), fr(9, 40), fr(6, 5),
       Q(0), Q(0), Q(6)});
  row("q𝓕²(τ)𝓕(2τ)Ψ(2τ)Ψ(6τ)", {1, 1, 2}, {}, {2, 6},
      {fr(1, 96), fr(-7, 160), fr(-3, 32), fr(1, 30), fr(63, 160), fr(-3, 10),
       Q(0), Q(0), fr(-3, 2)});
  row("𝓕(τ)𝓕²(2τ)θ(τ)θ(3τ)", {1, 2, 2}, {1, 3}, {},
      {fr(1, 75), fr(-1, 50), fr(3, 25), fr(8, 75), fr(-9, 50), fr(24, 25),
       fr(24, 5), fr(48, 5), Q(0)});
  row("𝓕(2τ)𝓕²(4τ)θ(τ)θ(3τ)", {2, 4, 4}, {1, 3}, {},
      {fr(1, 480), fr(1, 160), fr(-3, 160), fr(-2, 15), fr(-9, 160), fr(6, 5),
       Q(0), Q(0), fr(3, 2)});
  row("𝓕(τ)𝓕(2τ)𝓕(4τ)θ(τ)θ(3τ)", {1, 2, 4}, {1, 3}, {},
      {fr(1, 120), Q(0), fr(-3, 40), fr(-2, 15), Q(0), fr(6, 5), Q(0), Q(0),
       Q(6)});
  row("q𝓕(τ)𝓕(2τ)𝓕(4τ)Ψ(2τ)Ψ(6τ)", {1, 2, 4}, {}, {2, 6},
      {fr(1, 960), fr(1, 64), fr(-3, 320), fr(-1, 60), fr(-9, 64), fr(3, 20),
       Q(0), Q(0), fr(3, 4)});
  return rows;
}

// ------------------------------------------------------------------------ //
// Sample divisor-sum formula fixtures                                       //
// ------------------------------------------------------------------------ //

struct FormulaFixture {
  const char* name;
  FormSpec spec;
  const char* space;
  const char* rendered;
  const char* note;
};

std::vector<FormulaFixture> formula_fixtures() {
  std::vector<FormulaFixture> fixtures;
  auto fix = [&fixtures](const char* name, std::vector<long> hex,
                         std::vector<long> squares,
                         std::vector<long> triangular, const char* space,
                         const char* rendered, const char* note = "") {
    fixtures.push_back(FormulaFixture{
        name,
        spec_of(std::move(hex), std::move(squares), std::move(triangular)),
        space, rendered, note});
  };

  const char* negated =
      "tabulated formula is the global negative of the count; the "
      "oracle-correct sign is asserted";

  // Weight 2, principal character: the tabulated rows print the negative.
  fix("δ₄(2⁴; n−1)", {}, {}, {2, 2, 2, 2}, "M2(4,χ0)",
      "σ(n) − 3σ(n/2) + 2σ(n/4)", negated);
  fix("δ₄(1²3²; n−1)", {}, {}, {1, 1, 3, 3}, "M2(6,χ0)",
      "σ(n) − σ(n/2) − 3σ(n/3) + 3σ(n/6)", negated);
  fix("N_st(1²; 4²; n−1)", {}, {1, 1}, {4, 4}, "M2(8,χ0)",
      "σ(n) + σ(n/2) − 10σ(n/4) + 8σ(n/8)", negated);
  fix("N_st(2²; 4²; n−1)", {}, {2, 2}, {4, 4}, "M2(8,χ0)",
      "σ(n) − 3σ(n/2) + 2σ(n/4)", negated);
  fix("N_st(2¹; 2²4¹; n−1)", {}, {2}, {2, 2, 4}, "M2(8,χ0)",
      "σ(n) − 3σ(n/2) + 2σ(n/4)", negated);
  fix("N_lt(1¹; 2¹6¹; n−1)", {1}, {}, {2, 6}, "M2(12,χ0)",
      "σ(n) + 3σ(n/2) − 3σ(n/3) − 4σ(n/4) − 9σ(n/6) + 12σ(n/12)", negated);
  fix("N_lt(2¹; 2¹6¹; n−1)", {2}, {}, {2, 6}, "M2(12,χ0)",
      "σ(n) − 3σ(n/2) + 3σ(n/3) + 2σ(n/4) − 9σ(n/6) + 6σ(n/12)", negated);

  // Weight 2, character χ8: correct as tabulated.
  fix("δ₄(1²2¹4¹; n−1)", {}, {}, {1, 1, 2, 4}, "M2(8,χ8)", "σ_{1;χ8,1}(n)");
  fix("N_st(1¹2¹; 4²; n−1)", {}, {1, 2}, {4, 4}, "M2(8,χ8)",
      "σ_{1;χ8,1}(n)");
  fix("N_st(1¹; 2²4¹; n−1)", {}, {1}, {2, 2, 4}, "M2(8,χ8)",
      "σ_{1;χ8,1}(n)");

  // Weight 3, level 4.
  fix("δ₆(1⁴2²; n−1)", {}, {}, {1, 1, 1, 1, 2, 2}, "M3(4,χ−4)",
      "σ_{2;χ−4,1}(n)");
  fix("N_st(1²; 2⁴; n−1)", {}, {1, 1}, {2, 2, 2, 2}, "M3(4,χ−4)",
      "σ_{2;χ−4,1}(n)");

  // Weight 3, level 6.
  fix("δ₆(1⁵3¹; n−1)", {}, {}, {1, 1, 1, 1, 1, 3}, "M3(6,χ−3)",
      "−1/8σ_{2;1,χ−3}(n) + 1/8σ_{2;1,χ−3}(n/2) + 9/8σ_{2;χ−3,1}(n) + "
      "9/8σ_{2;χ−3,1}(n/2)");
  fix("δ₆(1¹3⁵; n−2)", {}, {}, {1, 3, 3, 3, 3, 3}, "M3(6,χ−3)",
      "−1/8σ_{2;1,χ−3}(n) + 1/8σ_{2;1,χ−3}(n/2) + 1/8σ_{2;χ−3,1}(n) + "
      "1/8σ_{2;χ−3,1}(n/2)",
      "tabulated argument reads n−1; the component sum forces n−2 "
      "(coefficients correct as tabulated)");
  fix("N_lt(1¹; 1²3²; n−1)", {1}, {}, {1, 1, 3, 3}, "M3(6,χ−3)",
      "−1/2σ_{2;1,χ−3}(n) + 1/2σ_{2;1,χ−3}(n/2) + 3/2σ_{2;χ−3,1}(n) + "
      "3/2σ_{2;χ−3,1}(n/2)");
  fix("N_lt(2¹; 1²3²; n−1)", {2}, {}, {1, 1, 3, 3}, "M3(6,χ−3)",
      "1/4σ_{2;1,χ−3}(n) − 1/4σ_{2;1,χ−3}(n/2) + 3/4σ_{2;χ−3,1}(n) + "
      "3/4σ_{2;χ−3,1}(n/2)");

  // Weight 3, level 8, character χ−4.
  fix("δ₆(2⁴4²; n−2)", {}, {}, {2, 2, 2, 2, 4, 4}, "M3(8,χ−4)",
      "σ_{2;χ−4,1}(n/2)");
  fix("δ₆(4⁶; n−3)", {}, {}, {4, 4, 4, 4, 4, 4}, "M3(8,χ−4)",
      "−1/16σ_{2;1,χ−4}(n) + 1/16σ_{2;1,χ−4}(n/2) + 1/16σ_{2;χ−4,1}(n) − "
      "1/4σ_{2;χ−4,1}(n/2)");
  fix("N_st(1²2²; 4²; n−1)", {}, {1, 1, 2, 2}, {4, 4}, "M3(8,χ−4)",
      "σ_{2;χ−4,1}(n)");
  fix("N_st(1²; 4⁴; n−2)", {}, {1, 1}, {4, 4, 4, 4}, "M3(8,χ−4)",
      "−1/4σ_{2;1,χ−4}(n) + 1/4σ_{2;1,χ−4}(n/2) + 1/4σ_{2;χ−4,1}(n)");
  fix("N_st(2²; 4⁴; n−2)", {}, {2, 2}, {4, 4, 4, 4}, "M3(8,χ−4)",
      "σ_{2;χ−4,1}(n/2)");
  fix("N_st(2²; 2⁴; n−1)", {}, {2, 2}, {2, 2, 2, 2}, "M3(8,χ−4)",
      "σ_{2;χ−4,1}(n) − 4σ_{2;χ−4,1}(n/2)");
  fix("N_st(1¹2¹; 1²2¹4¹; n−1)", {}, {1, 2}, {1, 1, 2, 4}, "M3(8,χ−4)",
      "σ_{2;χ−4,1}(n)");
  fix("N_st(1⁴; 4²; n−1)", {}, {1, 1, 1, 1}, {4, 4}, "M3(8,χ−4)",
      "−σ_{2;1,χ−4}(n) + σ_{2;1,χ−4}(n/2) + 2σ_{2;χ−4,1}(n)");
  fix("N_st(2⁴; 4²; n−1)", {}, {2, 2, 2, 2}, {4, 4}, "M3(8,χ−4)",
      "σ_{2;χ−4,1}(n) − 4σ_{2;χ−4,1}(n/2)",
      "tabulated row drops an operator and carries two spurious "
      "σ_{2;1,χ−4} terms; the certified coordinates are (0, 0, 1, −4)");

  // Weight 3, level 8, character χ−8.
  fix("δ₆(1²2¹4³; n−2)", {}, {}, {1, 1, 2, 4, 4, 4}, "M3(8,χ−8)",
      "1/6σ_{2;χ−8,1}(n) − 1/6τ_{3,8,χ−8}(n)");
  fix("N_st(1¹2³; 4²; n−1)", {}, {1, 2, 2, 2}, {4, 4}, "M3(8,χ−8)",
      "2/3σ_{2;χ−8,1}(n) + 1/3τ_{3,8,χ−8}(n)");
  fix("N_st(1³2¹; 4²; n−1)", {}, {1, 1, 1, 2}, {4, 4}, "M3(8,χ−8)",
      "4/3σ_{2;χ−8,1}(n) − 1/3τ_{3,8,χ−8}(n)");
  fix("N_st(1²; 1²2¹4¹; n−1)", {}, {1, 1}, {1, 1, 2, 4}, "M3(8,χ−8)",
      "4/3σ_{2;χ−8,1}(n) − 1/3τ_{3,8,χ−8}(n)");
  fix("N_st(2²; 1²2¹4¹; n−1)", {}, {2, 2}, {1, 1, 2, 4}, "M3(8,χ−8)",
      "2/3σ_{2;χ−8,1}(n) + 1/3τ_{3,8,χ−8}(n)");
  fix("N_st(1¹2¹; 2⁴; n−1)", {}, {1, 2}, {2, 2, 2, 2}, "M3(8,χ−8)",
      "2/3σ_{2;χ−8,1}(n) + 1/3τ_{3,8,χ−8}(n)");
  fix("N_st(1¹2¹; 4⁴; n−2)", {}, {1, 2}, {4, 4, 4, 4}, "M3(8,χ−8)",
      "1/6σ_{2;χ−8,1}(n) − 1/6τ_{3,8,χ−8}(n)");
  fix("N_st(1³; 2²4¹; n−1)", {}, {1, 1, 1}, {2, 2, 4}, "M3(8,χ−8)",
      "4/3σ_{2;χ−8,1}(n) − 1/3τ_{3,8,χ−8}(n)");
  fix("N_st(1¹2²; 2²4¹; n−1)", {}, {1, 2, 2}, {2, 2, 4}, "M3(8,χ−8)",
      "2/3σ_{2;χ−8,1}(n) + 1/3τ_{3,8,χ−8}(n)");

  // Weight 3, level 12.
  fix("N_lst(1¹; 1¹3¹; 2¹6¹; n−1)", {1}, {1, 3}, {2, 6}, "M3(12,χ−3)",
      "−1/2σ_{2;1,χ−3}(n) + 1/2σ_{2;1,χ−3}(n/2) + 3/2σ_{2;χ−3,1}(n) + "
      "3/2σ_{2;χ−3,1}(n/2)");
  fix("N_lst(1¹; 1²; 2¹6¹; n−1)", {1}, {1, 1}, {2, 6}, "M3(12,χ−4)",
      "16/7σ_{2;χ−4,1}(n) + 72/7σ_{2;χ−4,1}(n/3) − 9/7τ_{3,12,χ−4;1}(n) − "
      "30/7τ_{3,12,χ−4;2}(n)");

  // Weight 4, level 12.
  fix("N_ls(2¹; 1³3³; n)", {2}, {1, 1, 1, 3, 3, 3}, {}, "M4(12,χ0)",
      "2σ₃(n) − 18σ₃(n/3) − 32σ₃(n/4) + 288σ₃(n/12) + 4a_{4,12}(n)");
  fix("N_ls(4³; 1¹3¹; n)", {4, 4, 4}, {1, 3}, {}, "M4(12,χ0)",
      "1/5σ₃(n) − 9/5σ₃(n/2) + 9/5σ₃(n/3) + 128/5σ₃(n/4) − 81/5σ₃(n/6) + "
      "1152/5σ₃(n/12) + 9/5a_{4,6}(n) + 18/5a_{4,6}(n/2)");
  return fixtures;
}

FracQSeries affine(const Q& c0, const Q& c1, const FracQSeries& s) {
  return add(constant_series(c0, s.prec()), scale(s, c1));
}

}  // namespace

// ------------------------------------------------------------------------ //
// Suite runners                                                             //
// ------------------------------------------------------------------------ //

SuiteReport run_table1_suite(long prec) {
  SuiteReport report{"table1", {}};
  if (prec < 20) prec = 20;
  Basis basis = assemble_basis("M4(12,χ0)");
  long verify_to = prec - 1;
  for (const Table1Row& row : table1_rows()) {
    SuiteItem item{row.name, false, row.note};
    guarded(item, [&] {
      FracQSeries target = normalized_form_series(row.spec, prec);
      Decomposition d = decompose(target, basis, verify_to);
      item.passed = d.coefficients == row.expected;
      if (!item.passed) {
        append_note(item, "coordinates (" + join_q(d.coefficients) +
                              ") differ from the tabulated row (" +
                              join_q(row.expected) + ")");
      }
    });
    report.items.push_back(std::move(item));
  }
  return report;
}

SuiteReport run_pk_suite(long prec) {
  SuiteReport report{"pk", {}};
  if (prec < 10) prec = 10;

  for (const std::string& label : pk_identity_labels()) {
    SuiteItem item{label, false, ""};
    guarded(item, [&] {
      PkIdentityResult result = check_pk_identity(label, prec);
      if (result.holds) {
        item.passed = true;
        if (!result.as_stated) {
          append_note(item, "tabulated left side resolves to " +
                                result.target +
                                " (dilation label shifted one divisor step)");
        } else if (label == "E4@12-or-14") {
          append_note(item,
                      "ambiguous dilation resolves to " + result.target);
        }
      } else {
        // The tabulated vector matches no candidate left side; the exact
        // replacement row was derived and certified on the same window.
        item.passed = !result.corrected.empty();
        append_note(item,
                    "tabulated row matches no candidate left side; certified "
                    "replacement row (" +
                        join_q(result.corrected) + ")");
      }
    });
    report.items.push_back(std::move(item));
  }

  {
    SuiteItem item{"E4 dilation 12-vs-14", false, ""};
    guarded(item, [&] {
      long d = matching_e4_dilation(pk_polynomial_row("E4@12-or-14"),
                                    {6, 12, 14}, prec);
      item.passed = d == 12;
      append_note(item, "unique match at d = " + std::to_string(d));
    });
    report.items.push_back(std::move(item));
  }

  {
    SuiteItem g_item{"G factored product", false, ""};
    SuiteItem h_item{"H factored product", false, ""};
    try {
      PkPair pair = compute_pk(prec);
      const FracQSeries& p = pair.p;
      FracQSeries common =
          mul(mul(affine(Q(1), Q(-1), p), affine(Q(1), Q(1), p)),
              affine(Q(1), Q(2), p));
      FracQSeries two_plus_p = affine(Q(2), Q(1), p);
      FracQSeries g_poly =
          scale(mul(mul(pow(p, 3), common), two_plus_p), fr(1, 16));
      FracQSeries h_poly =
          scale(mul(mul(p, common), pow(two_plus_p, 3)), fr(1, 16));
      FracQSeries k2 = mul(pair.k, pair.k);
      FracQSeries k4 = mul(k2, k2);
      FracQSeries g = pk_combination(pair, pk_polynomial_row("G"));
      FracQSeries h = pk_combination(pair, pk_polynomial_row("H"));
      g_item.passed = h_item.passed = true;
      for (long n = 0; n < prec; ++n) {
        if (coeff(mul(g_poly, k4), n) != coeff(g, n)) g_item.passed = false;
        if (coeff(mul(h_poly, k4), n) != coeff(h, n)) h_item.passed = false;
      }
    } catch (const EngineError& error) {
      g_item.passed = h_item.passed = false;
      append_note(g_item, std::string("error: ") + error.what());
      append_note(h_item, std::string("error: ") + error.what());
    }
    report.items.push_back(std::move(g_item));
    report.items.push_back(std::move(h_item));
  }
  return report;
}

SuiteReport run_identities_suite(long nmax) {
  SuiteReport report{"identities", {}};
  if (nmax < 5) nmax = 5;
  DirichletCharacter one = trivial_character();
  DirichletCharacter chi4 = quadratic_character(-4);

  auto tri = [](std::vector<long> C) { return spec_of({}, {}, std::move(C)); };
  auto sq = [](std::vector<long> B) { return spec_of({}, std::move(B), {}); };
  auto ones = [](long k) { return std::vector<long>(k, 1); };

  auto ranged = [&report, nmax](const char* name, auto&& check) {
    SuiteItem item{name, false, ""};
    guarded(item, [&] {
      item.passed = true;
      for (long n = 0; n <= nmax; ++n) {
        if (!check(n)) {
          item.passed = false;
          append_note(item, "first failure at n = " + std::to_string(n));
          break;
        }
      }
    });
    report.items.push_back(std::move(item));
  };

  ranged("4δ₂(n) = r₂(8n+2)", [&](long n) {
    return 4 * count(tri(ones(2)), n) == count(sq(ones(2)), 8 * n + 2);
  });
  ranged("8δ₃(n) = r₃(8n+3)", [&](long n) {
    return 8 * count(tri(ones(3)), n) == count(sq(ones(3)), 8 * n + 3);
  });
  ranged("δ₄(n) = σ(2n+1)", [&](long n) {
    return Q(count(tri(ones(4)), n)) == sigma(1, Q(2 * n + 1));
  });
  ranged("−8δ₆(n) = σ_{2;1,χ−4}(4n+3)", [&](long n) {
    return -8 * count(tri(ones(6)), n) ==
           sigma_twisted(2, one, chi4, 4 * n + 3);
  });
  ranged("δ₈(n) = σ₃^#(n+1)", [&](long n) {
    return count(tri(ones(8)), n) == sigma_sharp3(n + 1);
  });
  ranged("r₄(n) = 8σ(n) − 32σ(n/4)", [&](long n) {
    if (n == 0) return true;
    return Q(count(sq(ones(4)), n)) ==
           8 * sigma(1, Q(n)) - 32 * sigma(1, make_frac(n, 4));
  });
  ranged("r₆(n) = −4σ_{2;1,χ−4}(n) + 16σ_{2;χ−4,1}(n)", [&](long n) {
    if (n == 0) return true;
    return count(sq(ones(6)), n) == -4 * sigma_twisted(2, one, chi4, n) +
                                        16 * sigma_twisted(2, chi4, one, n);
  });
  ranged("r₈(n) = 16σ₃(n) − 32σ₃(n/2) + 256σ₃(n/4)", [&](long n) {
    if (n == 0) return true;
    return Q(count(sq(ones(8)), n)) == 16 * sigma(3, Q(n)) -
                                           32 * sigma(3, make_frac(n, 2)) +
                                           256 * sigma(3, make_frac(n, 4));
  });

  const std::pair<const char*, ConvolutionKind> convolutions[] = {
      {"δ₄ convolution", ConvolutionKind::kDelta4},
      {"δ₆ convolution", ConvolutionKind::kDelta6},
      {"δ₈ convolution", ConvolutionKind::kDelta8},
      {"δ₁₂ convolution", ConvolutionKind::kDelta12},
      {"δ₁₆ convolution", ConvolutionKind::kDelta16},
  };
  for (const auto& [name, kind] : convolutions) {
    ranged(name, [&, kind = kind](long n) {
      auto [lhs, rhs] = check_convolution(kind, {}, n);
      return lhs == rhs;
    });
  }

  std::mt19937 rng(20260814u);
  std::uniform_int_distribution<long> comp_dist(1, 4);
  auto random_components = [&](long max_size) {
    std::vector<long> C(static_cast<size_t>(
        std::uniform_int_distribution<long>(1, max_size)(rng)));
    for (long& c : C) c = comp_dist(rng);
    return C;
  };

  {
    SuiteItem item{"square–triangular convolution on random C", false, ""};
    guarded(item, [&] {
      item.passed = true;
      for (int trial = 0; trial < 5 && item.passed; ++trial) {
        std::vector<long> C = random_components(3);
        for (long n = 0; n <= nmax; ++n) {
          auto [lhs, rhs] =
              check_convolution(ConvolutionKind::kSquareTriangular, C, n);
          if (lhs != rhs) {
            item.passed = false;
            append_note(item, "first failure at n = " + std::to_string(n));
            break;
          }
        }
      }
      if (item.passed) append_note(item, "5 random component lists");
    });
    report.items.push_back(std::move(item));
  }

  {
    SuiteItem item{"Ψ_C(τ)² = Πθ(cᵢτ) · Ψ_C(2τ) to 150 terms", false, ""};
    guarded(item, [&] {
      const long window = 150;
      item.passed = true;
      for (int trial = 0; trial < 10 && item.passed; ++trial) {
        std::vector<long> C = random_components(4);
        FracQSeries psi = form_series(tri(C), window);
        FracQSeries lhs = truncate_to(mul(psi, psi), window);
        FracQSeries rhs =
            truncate_to(mul(form_series(sq(C), window), dilate(psi, 2)),
                        window);
        if (lhs != rhs) item.passed = false;
      }
      if (item.passed) append_note(item, "10 random component lists");
    });
    report.items.push_back(std::move(item));
  }
  return report;
}

SuiteReport run_ellipsoid_suite(int trials) {
  SuiteReport report{"ellipsoid", {}};
  if (trials < 1) trials = 1;
  std::mt19937 rng(0xE111u);
  std::uniform_int_distribution<long> size_dist(1, 6);
  std::uniform_int_distribution<long> comp_dist(1, 6);
  std::uniform_int_distribution<long> n_dist(0, 40);

  {
    SuiteItem item{"odd-square bijection δ_k(C;n) = q_k(C;8n+ΣC)", false, ""};
    guarded(item, [&] {
      item.passed = true;
      for (int trial = 0; trial < trials; ++trial) {
        std::vector<long> C(static_cast<size_t>(size_dist(rng)));
        for (long& c : C) c = comp_dist(rng);
        long n = n_dist(rng);
        auto [lhs, rhs] = check_odd_square_bijection(C, n);
        if (lhs != rhs) {
          item.passed = false;
          append_note(item, "first failure at n = " + std::to_string(n));
          break;
        }
      }
      if (item.passed) {
        append_note(item, std::to_string(trials) +
                              " random draws, components ≤ 6, n ≤ 40");
      }
    });
    report.items.push_back(std::move(item));
  }

  {
    SuiteItem item{"ellipsoid count matches the zero-based reading", false,
                   ""};
    guarded(item, [&] {
      item.passed = true;
      int deviations = 0;
      const int reading_trials = 40;
      for (int trial = 0; trial < reading_trials; ++trial) {
        std::vector<long> C(static_cast<size_t>(size_dist(rng)));
        long h = 0;
        for (long& c : C) {
          c = comp_dist(rng);
          h += c;
        }
        long n = n_dist(rng);
        EllipsoidCheck check = ellipsoid_count(C, make_frac(8 * n + h, 8));
        if (check.lattice_points != check.reading_from_zero) {
          item.passed = false;
          append_note(item, "zero-based reading missed at n = " +
                                std::to_string(n));
          break;
        }
        if (check.reading_from_one != check.lattice_points) ++deviations;
      }
      if (item.passed) {
        append_note(item, "one-based reading deviates in " +
                              std::to_string(deviations) + "/" +
                              std::to_string(reading_trials) + " draws");
      }
    });
    report.items.push_back(std::move(item));
  }
  return report;
}

SuiteReport run_formulas_suite(long nmax) {
  SuiteReport report{"formulas", {}};
  if (nmax < 5) nmax = 5;
  std::map<std::string, Basis> bases;
  for (const FormulaFixture& fixture : formula_fixtures()) {
    SuiteItem item{fixture.name, false, "space " + fixture.space};
    if (!fixture.note.empty()) append_note(item, fixture.note);
    guarded(item, [&] {
      auto found = bases.find(fixture.space);
      if (found == bases.end()) {
        found = bases.emplace(fixture.space, assemble_basis(fixture.space))
                    .first;
      }
      const Basis& basis = found->second;
      long verify_to = 2 * basis.sturm();
      FracQSeries target =
          normalized_form_series(fixture.spec, verify_to + 1);
      Decomposition d = decompose(target, basis, verify_to);

      std::string rendered = render_formula(d);
      bool render_ok = rendered == fixture.rendered;
      if (!render_ok) {
        append_note(item, "rendered \"" + rendered + "\", expected \"" +
                              fixture.rendered + "\"");
      }

      Q shift = normalizing_shift(fixture.spec);
      long s = static_cast<long>(shift.get_num().get_si());
      bool oracle_ok = true;
      for (long m = 0; m <= nmax; ++m) {
        if (evaluate(d, m + s) != Q(count(fixture.spec, m))) {
          oracle_ok = false;
          append_note(item,
                      "count mismatch at n = " + std::to_string(m));
          break;
        }
      }
      item.passed = render_ok && oracle_ok;
    });
    report.items.push_back(std::move(item));
  }
  return report;
}

std::vector<std::string> suite_names() {
  return {"table1", "pk", "identities", "ellipsoid", "formulas"};
}

std::vector<SuiteReport> run_suites(const std::string& name, long nmax) {
  std::vector<SuiteReport> reports;
  bool all = name == "all";
  bool known = all;
  if (all || name == "table1")
    reports.push_back(run_table1_suite(nmax > 0 ? nmax : 60)), known = true;
  if (all || name == "pk")
    reports.push_back(run_pk_suite(nmax > 0 ? nmax : 40)), known = true;
  if (all || name == "identities")
    reports.push_back(run_identities_suite(nmax > 0 ? nmax : 30)),
        known = true;
  if (all || name == "ellipsoid")
    reports.push_back(
        run_ellipsoid_suite(nmax > 0 ? static_cast<int>(nmax) : 200)),
        known = true;
  if (all || name == "formulas")
    reports.push_back(run_formulas_suite(nmax > 0 ? nmax : 30)), known = true;
  if (!known) throw BadInput("unknown suite: " + name);
  return reports;
}

}  // namespace qform
