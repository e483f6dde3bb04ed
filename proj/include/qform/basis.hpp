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

#ifndef QFORM_BASIS_HPP_
#define QFORM_BASIS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "qform/arith.hpp"
#include "qform/qseries.hpp"
#include "qform/rational.hpp"

namespace qform {

// The registry data file holds one record per line, `label kind payload`:
//   eisk k d              classical E_k(d tau) = 1 - (2k/B_k) sum sigma_{k-1}
//   eist k chi psi d      E_{k,chi,psi}(d tau); chi, psi are 1 (trivial) or
//                         fundamental discriminants
//   phi b                 E_2(tau) - b E_2(b tau), holomorphic weight 2
//   eta d^r ...           eta quotient prod eta(d tau)^r
//   etadiff d^r ... minus d^r ...   difference of two eta quotients
//   etaphi b d^r ...      (E_2(tau) - b E_2(b tau)) * eta quotient
//   undefined text        placeholder with no expansion
//   space k N disc e labels...   ordered basis of M_k(Gamma_0(N), chi) with
//                         e leading Eisenstein-type elements; disc 1 marks
//                         the principal character
enum class ElementKind {
  kEisenstein,         // eisk
  kEisensteinTwisted,  // eist
  kWeight2Combo,       // phi
  kCuspEta,            // eta
  kCuspEtaDifference,  // etadiff
  kCuspEtaPhi,         // etaphi
  kUndefined,          // undefined
};

struct BasisElement {
  std::string label;
  ElementKind kind = ElementKind::kUndefined;

  long weight = 0;    // eisk / eist
  Z chi = 1;          // eist: left character discriminant
  Z psi = 1;          // eist: right character discriminant
  long dilation = 1;  // eisk / eist argument dilation
  long phi_b = 0;     // phi / etaphi

  std::vector<std::pair<long, long>> eta;        // eta / etadiff / etaphi
  std::vector<std::pair<long, long>> eta_minus;  // etadiff subtrahend

  bool is_cusp() const;
  // Constant (q^0) coefficient of the element, exact.
  Q constant_term() const;
  // Certified window of length prec starting at exponent 0. Throws
  // IncompleteBasis for kUndefined.
  FracQSeries series(long prec) const;
};

struct Basis {
  std::string label;
  long weight = 0;
  long level = 1;
  DirichletCharacter character;
  long eisenstein_count = 0;
  std::vector<BasisElement> elements;

  long declared_dimension() const {
    return static_cast<long>(elements.size());
  }
  long cusp_count() const {
    return declared_dimension() - eisenstein_count;
  }
  // True when the element list spans quasi-modular weight-2 combinations
  // (raw E_2 dilations); such lists carry one direction beyond the modular
  // subspace and decompose genuinely modular targets with coordinate sums
  // balancing to zero automatically.
  bool quasi = false;
  long sturm() const;
};

// ceil(k/12 * N * prod_{p | N} (1 + 1/p)) + 1.
long sturm_bound(long k, long N);

// 1 - (2k/B_k) sum_{n >= 1} sigma_{k-1}(n) q^{dn}; k >= 2 even.
FracQSeries eisenstein_series(long k, long d, long prec);

// -B_{k,psi}/(2k) [chi trivial] + sum sigma_{k-1;chi,psi}(n) q^{dn}.
// Throws ParityMismatch unless chi(-1)psi(-1) = (-1)^k with not both
// characters trivial.
FracQSeries eisenstein_twisted(long k, const DirichletCharacter& chi,
                               const DirichletCharacter& psi, long d,
                               long prec);

// E_2(tau) - b E_2(b tau) for b > 1: holomorphic of weight 2 on
// Gamma_0(b) with constant term 1 - b.
FracQSeries weight2_combo(long b, long prec);

// Expansion of the registered cusp form with the given label.
// Throws UnknownLabel when absent and BadInput when the label does not
// name a cusp element.
FracQSeries cusp_form_series(const std::string& label, long prec);

class BasisRegistry {
 public:
  // Parsed once from the data file baked in at build time.
  static const BasisRegistry& instance();
  explicit BasisRegistry(const std::string& path);

  const BasisElement& element(const std::string& label) const;
  bool has_element(const std::string& label) const;
  // Ordered basis by space label ("M3(12,χ−4)"); IncompleteBasis when the
  // space references an undefined element.
  Basis space(const std::string& label) const;
  // Lookup by (weight, level, character discriminant); 1 = principal.
  // The first matching registry record wins, so tabulated bases shadow
  // the auxiliary raw-E2 variants ("#e2" labels).
  Basis space(long k, long N, const Z& disc) const;
  std::vector<std::string> space_labels() const;

 private:
  struct SpaceRecord {
    std::string label;
    long weight;
    long level;
    Z disc;
    long eisenstein_count;
    std::vector<std::string> element_labels;
  };
  Basis build(const SpaceRecord& record) const;

  std::vector<std::string> element_order_;
  std::vector<BasisElement> elements_;
  std::vector<SpaceRecord> spaces_;
};

// Exact full-column-rank check of the element expansions on the
// coefficients 0..sturm, plus the zero-constant-term invariant for cusp
// elements. Throws BadInput on violation and IncompleteBasis when an
// element has no expansion.
void verify_independence(const Basis& basis);

// Registry-backed table lookups, verifying linear independence of the
// element expansions on coefficients 0..sturm at assembly.
Basis assemble_basis(const std::string& space_label);
Basis assemble_basis(long k, long N, const Z& disc);

}  // namespace qform

#endif  // QFORM_BASIS_HPP_
