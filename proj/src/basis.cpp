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

#include "qform/basis.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qform/errors.hpp"
#include "qform/etagen.hpp"

namespace qform {

namespace {

EtaQuotientSpec to_eta_spec(const std::vector<std::pair<long, long>>& factors) {
  EtaQuotientSpec spec;
  for (const auto& [delta, r] : factors) spec.factors.push_back({delta, r});
  return spec;
}

// Re-windows a series whose offset is a nonnegative integer to the window
// [0, prec), padding the leading gap with exact zeros.
FracQSeries integer_window(const FracQSeries& a, long prec) {
  if (a.offset.get_den() != 1 || a.offset < 0) {
    throw BadInput("series does not start on a nonnegative integer exponent");
  }
  long start = static_cast<long>(a.offset.get_num().get_si());
  FracQSeries out;
  out.offset = 0;
  out.coeffs.assign(static_cast<size_t>(prec), Q(0));
  for (long n = start; n < prec; ++n) {
    long i = n - start;
    if (i >= a.prec()) break;
    out.coeffs[static_cast<size_t>(n)] = a.coeffs[static_cast<size_t>(i)];
  }
  if (start + a.prec() < prec) {
    throw OutOfPrecision("eta expansion too short for requested window");
  }
  return out;
}

DirichletCharacter character_from_disc(const Z& disc) {
  if (disc == 1) return trivial_character();
  return quadratic_character(disc);
}

long ceil_q(const Q& x) {
  Z num = x.get_num();
  Z den = x.get_den();
  Z q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q.get_si();
}

}  // namespace

bool BasisElement::is_cusp() const {
  return kind == ElementKind::kCuspEta ||
         kind == ElementKind::kCuspEtaDifference ||
         kind == ElementKind::kCuspEtaPhi;
}

Q BasisElement::constant_term() const {
  switch (kind) {
    case ElementKind::kEisenstein:
      return Q(1);
    case ElementKind::kEisensteinTwisted: {
      if (fundamental_discriminant(chi) != 1) return Q(0);
      DirichletCharacter psi_char = character_from_disc(psi);
      return -gen_bernoulli(weight, psi_char) / Q(2 * weight);
    }
    case ElementKind::kWeight2Combo:
      return Q(1 - phi_b);
    case ElementKind::kCuspEta:
    case ElementKind::kCuspEtaDifference:
    case ElementKind::kCuspEtaPhi:
      return Q(0);
    case ElementKind::kUndefined:
      break;
  }
  throw IncompleteBasis("no expansion on record for " + label);
}

FracQSeries BasisElement::series(long prec) const {
  if (prec < 1) throw BadInput("series window must have positive length");
  switch (kind) {
    case ElementKind::kEisenstein:
      return eisenstein_series(weight, dilation, prec);
    case ElementKind::kEisensteinTwisted:
      return eisenstein_twisted(weight, character_from_disc(chi),
                                character_from_disc(psi), dilation, prec);
    case ElementKind::kWeight2Combo:
      return weight2_combo(phi_b, prec);
    case ElementKind::kCuspEta:
      return integer_window(eta_quotient_series(to_eta_spec(eta), prec), prec);
    case ElementKind::kCuspEtaDifference: {
      FracQSeries lhs =
          integer_window(eta_quotient_series(to_eta_spec(eta), prec), prec);
      FracQSeries rhs = integer_window(
          eta_quotient_series(to_eta_spec(eta_minus), prec), prec);
      return sub(lhs, rhs);
    }
    case ElementKind::kCuspEtaPhi: {
      FracQSeries combo = weight2_combo(phi_b, prec);
      FracQSeries quotient = eta_quotient_series(to_eta_spec(eta), prec);
      return integer_window(mul(combo, quotient), prec);
    }
    case ElementKind::kUndefined:
      break;
  }
  throw IncompleteBasis("no expansion on record for " + label);
}

long Basis::sturm() const { return sturm_bound(weight, level); }

long sturm_bound(long k, long N) {
  if (k < 1 || N < 1) throw BadInput("sturm bound needs positive weight and level");
  Q index(N);
  long n = N;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    index *= Q(p + 1, p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) index *= Q(n + 1, n);
  return ceil_q(Q(k) / 12 * index) + 1;
}

FracQSeries eisenstein_series(long k, long d, long prec) {
  if (k < 2 || k % 2 != 0) {
    throw BadInput("classical Eisenstein series need even weight >= 2");
  }
  if (d < 1) throw BadInput("dilation must be positive");
  if (prec < 1) throw BadInput("series window must have positive length");
  BernoulliTable bernoulli;
  Q factor = Q(-2 * k) / bernoulli.number(k);
  FracQSeries out;
  out.offset = 0;
  out.coeffs.assign(static_cast<size_t>(prec), Q(0));
  out.coeffs[0] = 1;
  for (long m = 1; d * m < prec; ++m) {
    out.coeffs[static_cast<size_t>(d * m)] = factor * sigma(k - 1, Q(m));
  }
  return out;
}

FracQSeries eisenstein_twisted(long k, const DirichletCharacter& chi,
                               const DirichletCharacter& psi, long d,
                               long prec) {
  if (k < 1) throw BadInput("weight must be positive");
  if (d < 1) throw BadInput("dilation must be positive");
  if (prec < 1) throw BadInput("series window must have positive length");
  bool chi_trivial = chi.fundamental == 1;
  bool psi_trivial = psi.fundamental == 1;
  if (chi_trivial && psi_trivial) {
    throw ParityMismatch(
        "twisted Eisenstein series need a nontrivial character pair");
  }
  bool product_odd = chi.is_odd() != psi.is_odd();
  if (product_odd != (k % 2 == 1)) {
    throw ParityMismatch("character parity does not match the weight");
  }
  FracQSeries out;
  out.offset = 0;
  out.coeffs.assign(static_cast<size_t>(prec), Q(0));
  if (chi_trivial) {
    out.coeffs[0] = -gen_bernoulli(k, psi) / Q(2 * k);
  }
  for (long m = 1; d * m < prec; ++m) {
    out.coeffs[static_cast<size_t>(d * m)] =
        Q(sigma_twisted(k - 1, chi, psi, m));
  }
  return out;
}

FracQSeries weight2_combo(long b, long prec) {
  if (b < 2) throw BadInput("weight-2 combination needs b > 1");
  return sub(eisenstein_series(2, 1, prec),
             scale(eisenstein_series(2, b, prec), Q(b)));
}

FracQSeries cusp_form_series(const std::string& label, long prec) {
  const BasisElement& element = BasisRegistry::instance().element(label);
  if (!element.is_cusp()) {
    throw BadInput(label + " does not name a cusp form");
  }
  return element.series(prec);
}

namespace {

std::vector<std::pair<long, long>> parse_eta_tokens(
    std::istringstream& in, const std::string& label, std::string* stop_word) {
  std::vector<std::pair<long, long>> factors;
  std::string token;
  while (in >> token) {
    if (stop_word != nullptr && token == "minus") {
      *stop_word = token;
      return factors;
    }
    auto caret = token.find('^');
    if (caret == std::string::npos) {
      throw BadInput("malformed eta factor '" + token + "' in " + label);
    }
    long delta = std::stol(token.substr(0, caret));
    long r = std::stol(token.substr(caret + 1));
    factors.push_back({delta, r});
  }
  return factors;
}

}  // namespace

BasisRegistry::BasisRegistry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open basis registry at " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string label;
    if (!(fields >> label)) continue;
    if (label[0] == '#') continue;
    std::string kind;
    if (!(fields >> kind)) {
      throw BadInput("registry record for " + label + " has no kind");
    }
    if (kind == "space") {
      SpaceRecord record;
      record.label = label;
      long disc = 0;
      if (!(fields >> record.weight >> record.level >> disc >>
            record.eisenstein_count)) {
        throw BadInput("malformed space record for " + label);
      }
      record.disc = disc;
      std::string member;
      while (fields >> member) record.element_labels.push_back(member);
      if (record.eisenstein_count < 0 ||
          record.eisenstein_count >
              static_cast<long>(record.element_labels.size())) {
        throw BadInput("Eisenstein count out of range for " + label);
      }
      for (const SpaceRecord& existing : spaces_) {
        if (existing.label == label) {
          throw BadInput("duplicate space label " + label);
        }
      }
      spaces_.push_back(std::move(record));
      continue;
    }
    BasisElement element;
    element.label = label;
    if (kind == "eisk") {
      element.kind = ElementKind::kEisenstein;
      if (!(fields >> element.weight >> element.dilation)) {
        throw BadInput("malformed eisk record for " + label);
      }
    } else if (kind == "eist") {
      element.kind = ElementKind::kEisensteinTwisted;
      long chi = 0;
      long psi = 0;
      if (!(fields >> element.weight >> chi >> psi >> element.dilation)) {
        throw BadInput("malformed eist record for " + label);
      }
      element.chi = chi;
      element.psi = psi;
    } else if (kind == "phi") {
      element.kind = ElementKind::kWeight2Combo;
      if (!(fields >> element.phi_b)) {
        throw BadInput("malformed phi record for " + label);
      }
      element.weight = 2;
    } else if (kind == "eta") {
      element.kind = ElementKind::kCuspEta;
      element.eta = parse_eta_tokens(fields, label, nullptr);
      if (element.eta.empty()) {
        throw BadInput("eta record for " + label + " has no factors");
      }
    } else if (kind == "etadiff") {
      element.kind = ElementKind::kCuspEtaDifference;
      std::string stop;
      element.eta = parse_eta_tokens(fields, label, &stop);
      if (stop != "minus") {
        throw BadInput("etadiff record for " + label + " lacks a subtrahend");
      }
      element.eta_minus = parse_eta_tokens(fields, label, nullptr);
      if (element.eta.empty() || element.eta_minus.empty()) {
        throw BadInput("etadiff record for " + label + " has no factors");
      }
    } else if (kind == "etaphi") {
      element.kind = ElementKind::kCuspEtaPhi;
      if (!(fields >> element.phi_b)) {
        throw BadInput("malformed etaphi record for " + label);
      }
      element.eta = parse_eta_tokens(fields, label, nullptr);
      if (element.eta.empty()) {
        throw BadInput("etaphi record for " + label + " has no factors");
      }
    } else if (kind == "undefined") {
      element.kind = ElementKind::kUndefined;
    } else {
      throw BadInput("unknown registry kind '" + kind + "' for " + label);
    }
    if (has_element(label)) throw BadInput("duplicate element label " + label);
    element_order_.push_back(label);
    elements_.push_back(std::move(element));
  }
}

const BasisRegistry& BasisRegistry::instance() {
  static const BasisRegistry registry(QFORM_REGISTRY_FILE);
  return registry;
}

const BasisElement& BasisRegistry::element(const std::string& label) const {
  for (size_t i = 0; i < element_order_.size(); ++i) {
    if (element_order_[i] == label) return elements_[i];
  }
  throw UnknownLabel("no basis element named " + label);
}

bool BasisRegistry::has_element(const std::string& label) const {
  return std::find(element_order_.begin(), element_order_.end(), label) !=
         element_order_.end();
}

Basis BasisRegistry::space(const std::string& label) const {
  for (const SpaceRecord& record : spaces_) {
    if (record.label == label) return build(record);
  }
  throw UnknownLabel("no space named " + label);
}

Basis BasisRegistry::space(long k, long N, const Z& disc) const {
  for (const SpaceRecord& record : spaces_) {
    if (record.weight == k && record.level == N && record.disc == disc) {
      return build(record);
    }
  }
  std::ostringstream what;
  what << "no space of weight " << k << ", level " << N
       << ", character discriminant " << disc;
  throw UnsupportedSpace(what.str());
}

std::vector<std::string> BasisRegistry::space_labels() const {
  std::vector<std::string> labels;
  labels.reserve(spaces_.size());
  for (const SpaceRecord& record : spaces_) labels.push_back(record.label);
  return labels;
}

Basis BasisRegistry::build(const SpaceRecord& record) const {
  Basis basis;
  basis.label = record.label;
  basis.weight = record.weight;
  basis.level = record.level;
  if (record.disc == 1) {
    basis.character = principal_character(record.level);
  } else {
    basis.character = quadratic_character(record.disc);
    basis.character.modulus = record.level;
  }
  basis.eisenstein_count = record.eisenstein_count;
  for (const std::string& member : record.element_labels) {
    const BasisElement& found = element(member);
    if (found.kind == ElementKind::kUndefined) {
      throw IncompleteBasis(record.label + " references " + member +
                            ", which has no expansion on record");
    }
    if (found.kind == ElementKind::kEisenstein && found.weight == 2) {
      basis.quasi = true;
    }
    basis.elements.push_back(found);
  }
  return basis;
}

namespace {

// Exact column rank of the (rows x cols) coefficient matrix.
long rank_of(std::vector<std::vector<Q>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size();
  size_t cols = m[0].size();
  long rank = 0;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t selected = pivot_row;
    while (selected < rows && m[selected][col] == 0) ++selected;
    if (selected == rows) continue;
    std::swap(m[selected], m[pivot_row]);
    for (size_t row = pivot_row + 1; row < rows; ++row) {
      if (m[row][col] == 0) continue;
      Q factor = m[row][col] / m[pivot_row][col];
      for (size_t j = col; j < cols; ++j) {
        m[row][j] -= factor * m[pivot_row][j];
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace

void verify_independence(const Basis& basis) {
  long rows = basis.sturm() + 1;
  // Quasi-modular lists (raw E_2 dilations) fall outside the Sturm
  // argument; past the largest dilation the E_2 columns are triangular at
  // the dilation exponents, which restores a proof of independence.
  for (const BasisElement& element : basis.elements) {
    if (element.kind == ElementKind::kEisenstein) {
      rows = std::max(rows, element.dilation + 1);
    }
  }
  std::vector<std::vector<Q>> matrix(
      static_cast<size_t>(rows),
      std::vector<Q>(basis.elements.size(), Q(0)));
  for (size_t j = 0; j < basis.elements.size(); ++j) {
    const BasisElement& element = basis.elements[j];
    if (element.is_cusp() && element.constant_term() != 0) {
      throw BadInput(element.label + " is marked cuspidal but has a nonzero "
                     "constant term");
    }
    FracQSeries expansion = element.series(rows);
    for (long n = 0; n < rows; ++n) {
      matrix[static_cast<size_t>(n)][j] = coeff(expansion, n);
    }
  }
  if (rank_of(matrix) < basis.declared_dimension()) {
    throw BadInput("elements of " + basis.label +
                   " are linearly dependent up to the Sturm bound");
  }
}

Basis assemble_basis(const std::string& space_label) {
  Basis basis = BasisRegistry::instance().space(space_label);
  verify_independence(basis);
  return basis;
}

Basis assemble_basis(long k, long N, const Z& disc) {
  Basis basis = BasisRegistry::instance().space(k, N, disc);
  return assemble_basis(basis.label);
}

}  // namespace qform
