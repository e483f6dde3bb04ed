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

#include "qform/decomp.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qform/arith.hpp"
#include "qform/errors.hpp"

namespace qform {

namespace {

long quasi_extension(const Basis& basis) {
  long extension = 0;
  for (const BasisElement& element : basis.elements) {
    if (element.kind == ElementKind::kEisenstein) {
      extension = std::max(extension, element.dilation);
    }
  }
  return extension;
}

}  // namespace

Decomposition decompose(const FracQSeries& target, const Basis& basis,
                        long verify_to) {
  long sturm = basis.sturm();
  if (verify_to < sturm) {
    throw BadInput("verification range must reach the Sturm bound");
  }
  if (target.offset.get_den() != 1 || target.offset < 0) {
    throw BadInput("target must start on a nonnegative integer exponent");
  }
  long solve_rows = std::max(sturm, quasi_extension(basis)) + 1;
  long checked = std::max(verify_to, solve_rows - 1);
  if (target.high_exponent() < checked) {
    throw OutOfPrecision("target window too short to verify the solution");
  }

  long cols = basis.declared_dimension();
  std::vector<FracQSeries> expansions;
  expansions.reserve(static_cast<size_t>(cols));
  for (const BasisElement& element : basis.elements) {
    expansions.push_back(element.series(checked + 1));
  }

  // Row-reduce the augmented coefficient system on the solve rows.
  std::vector<std::vector<Q>> m(
      static_cast<size_t>(solve_rows),
      std::vector<Q>(static_cast<size_t>(cols) + 1, Q(0)));
  for (long n = 0; n < solve_rows; ++n) {
    auto& row = m[static_cast<size_t>(n)];
    for (long j = 0; j < cols; ++j) {
      row[static_cast<size_t>(j)] = coeff(expansions[static_cast<size_t>(j)], n);
    }
    row[static_cast<size_t>(cols)] = coeff(target, n);
  }
  std::vector<long> pivot_of_col(static_cast<size_t>(cols), -1);
  long pivot_row = 0;
  for (long col = 0; col < cols && pivot_row < solve_rows; ++col) {
    long selected = pivot_row;
    while (selected < solve_rows && m[static_cast<size_t>(selected)]
                                        [static_cast<size_t>(col)] == 0) {
      ++selected;
    }
    if (selected == solve_rows) continue;
    std::swap(m[static_cast<size_t>(selected)],
              m[static_cast<size_t>(pivot_row)]);
    const Q pivot = m[static_cast<size_t>(pivot_row)][static_cast<size_t>(col)];
    for (auto& value : m[static_cast<size_t>(pivot_row)]) value /= pivot;
    for (long row = 0; row < solve_rows; ++row) {
      if (row == pivot_row) continue;
      Q factor = m[static_cast<size_t>(row)][static_cast<size_t>(col)];
      if (factor == 0) continue;
      for (long j = col; j <= cols; ++j) {
        m[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
            factor * m[static_cast<size_t>(pivot_row)][static_cast<size_t>(j)];
      }
    }
    pivot_of_col[static_cast<size_t>(col)] = pivot_row;
    ++pivot_row;
  }
  for (long row = pivot_row; row < solve_rows; ++row) {
    if (m[static_cast<size_t>(row)][static_cast<size_t>(cols)] != 0) {
      throw NoSolution("target is outside the span of " + basis.label);
    }
  }
  for (long col = 0; col < cols; ++col) {
    if (pivot_of_col[static_cast<size_t>(col)] < 0) {
      throw UnderdeterminedBasis("solve rows leave " +
                                 basis.elements[static_cast<size_t>(col)].label +
                                 " undetermined in " + basis.label);
    }
  }

  Decomposition d;
  d.space_label = basis.label;
  d.weight = basis.weight;
  d.level = basis.level;
  d.coefficients.assign(static_cast<size_t>(cols), Q(0));
  for (long col = 0; col < cols; ++col) {
    d.element_labels.push_back(basis.elements[static_cast<size_t>(col)].label);
    d.coefficients[static_cast<size_t>(col)] =
        m[static_cast<size_t>(pivot_of_col[static_cast<size_t>(col)])]
         [static_cast<size_t>(cols)];
  }
  for (long n = 0; n <= checked; ++n) {
    Q built = 0;
    for (long j = 0; j < cols; ++j) {
      built += d.coefficients[static_cast<size_t>(j)] *
               coeff(expansions[static_cast<size_t>(j)], n);
    }
    if (built != coeff(target, n)) {
      std::ostringstream what;
      what << "solution over " << basis.label
           << " fails verification at exponent " << n;
      throw NoSolution(what.str());
    }
  }
  d.verified_up_to = checked;
  return d;
}

FracQSeries reconstruct(const Decomposition& d, long prec) {
  const BasisRegistry& registry = BasisRegistry::instance();
  FracQSeries out = constant_series(Q(0), prec);
  for (size_t j = 0; j < d.element_labels.size(); ++j) {
    if (d.coefficients[j] == 0) continue;
    out = add(out, scale(registry.element(d.element_labels[j]).series(prec),
                         d.coefficients[j]));
  }
  return truncate_to(out, prec);
}

namespace {

// One summand of the closed formula, with enough semantics kept around to
// evaluate it exactly.
struct Term {
  enum class Kind { kSigma, kSigmaTwisted, kCusp };
  Kind kind = Kind::kSigma;
  std::string symbol;  // display form, e.g. "σ₃(n/3)"
  Q multiplier = 0;
  long power = 1;      // divisor power for sigma kinds
  long dilation = 1;   // argument divisor a in (n/a)
  Z chi = 1;           // twisted pair
  Z psi = 1;
  std::string cusp_label;  // registry label for cusp terms
};

std::string subscript_digits(long value) {
  static const char* kSubscripts[10] = {"₀", "₁", "₂", "₃", "₄",
                                        "₅", "₆", "₇", "₈", "₉"};
  std::string digits = std::to_string(value);
  std::string out;
  for (char c : digits) out += kSubscripts[c - '0'];
  return out;
}

std::string argument(long dilation) {
  if (dilation == 1) return "(n)";
  return "(n/" + std::to_string(dilation) + ")";
}

std::string sigma_symbol(long power, long dilation) {
  std::string out = "σ";
  if (power != 1) out += subscript_digits(power);
  return out + argument(dilation);
}

std::string character_name(const Z& disc) {
  if (disc == 1) return "1";
  std::string out = "χ";
  if (disc < 0) out += "−";
  Z magnitude = disc < 0 ? Z(-disc) : disc;
  out += magnitude.get_str();
  return out;
}

std::string twisted_symbol(long power, const Z& chi, const Z& psi,
                           long dilation) {
  std::ostringstream out;
  out << "σ_{" << power << ";" << character_name(chi) << ","
      << character_name(psi) << "}" << argument(dilation);
  return out.str();
}

// Display symbol of a cusp element: the coefficient letter replaces the
// form letter (Δ -> τ, f -> a) and a dilation suffix becomes the argument.
std::string cusp_symbol(const std::string& label, long* dilation_out) {
  std::string base = label;
  long dilation = 1;
  auto at = base.rfind("@");
  if (at != std::string::npos) {
    dilation = std::stol(base.substr(at + 1));
    base = base.substr(0, at);
  }
  *dilation_out = dilation;
  const std::string delta = "Δ";
  if (base.compare(0, delta.size(), delta) == 0) {
    base = "τ" + base.substr(delta.size());
  } else if (base.compare(0, 2, "f_") == 0) {
    base = "a" + base.substr(1);
  }
  return base + argument(dilation);
}

void merge_term(std::vector<Term>* terms, Term term) {
  for (Term& existing : *terms) {
    if (existing.symbol == term.symbol) {
      existing.multiplier += term.multiplier;
      return;
    }
  }
  terms->push_back(std::move(term));
}

std::vector<Term> build_terms(const Decomposition& d) {
  const BasisRegistry& registry = BasisRegistry::instance();
  std::vector<Term> terms;
  BernoulliTable bernoulli;
  for (size_t j = 0; j < d.element_labels.size(); ++j) {
    const Q& t = d.coefficients[j];
    const BasisElement& element = registry.element(d.element_labels[j]);
    switch (element.kind) {
      case ElementKind::kEisenstein: {
        Term term;
        term.kind = Term::Kind::kSigma;
        term.power = element.weight - 1;
        term.dilation = element.dilation;
        term.multiplier =
            t * Q(-2 * element.weight) / bernoulli.number(element.weight);
        term.symbol = sigma_symbol(term.power, term.dilation);
        merge_term(&terms, std::move(term));
        break;
      }
      case ElementKind::kWeight2Combo: {
        Term head;
        head.kind = Term::Kind::kSigma;
        head.power = 1;
        head.dilation = 1;
        head.multiplier = t * Q(-24);
        head.symbol = sigma_symbol(1, 1);
        merge_term(&terms, std::move(head));
        Term tail;
        tail.kind = Term::Kind::kSigma;
        tail.power = 1;
        tail.dilation = element.phi_b;
        tail.multiplier = t * Q(24 * element.phi_b);
        tail.symbol = sigma_symbol(1, element.phi_b);
        merge_term(&terms, std::move(tail));
        break;
      }
      case ElementKind::kEisensteinTwisted: {
        Term term;
        term.kind = Term::Kind::kSigmaTwisted;
        term.power = element.weight - 1;
        term.dilation = element.dilation;
        term.chi = element.chi;
        term.psi = element.psi;
        term.multiplier = t;
        term.symbol =
            twisted_symbol(term.power, element.chi, element.psi, term.dilation);
        merge_term(&terms, std::move(term));
        break;
      }
      case ElementKind::kCuspEta:
      case ElementKind::kCuspEtaDifference:
      case ElementKind::kCuspEtaPhi: {
        Term term;
        term.kind = Term::Kind::kCusp;
        term.cusp_label = element.label;
        term.multiplier = t;
        long dilation = 1;
        term.symbol = cusp_symbol(element.label, &dilation);
        term.dilation = dilation;
        merge_term(&terms, std::move(term));
        break;
      }
      case ElementKind::kUndefined:
        throw IncompleteBasis("no expansion on record for " + element.label);
    }
  }
  std::vector<Term> nonzero;
  for (Term& term : terms) {
    if (term.multiplier != 0) nonzero.push_back(std::move(term));
  }
  return nonzero;
}

std::string magnitude_string(const Q& value) {
  Q magnitude = value < 0 ? Q(-value) : value;
  std::ostringstream out;
  out << magnitude;
  return out.str();
}

}  // namespace

std::string render_formula(const Decomposition& d,
                           const RenderOptions& options) {
  std::vector<Term> terms = build_terms(d);
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& term : terms) {
    bool negative = term.multiplier < 0;
    if (first) {
      if (negative) out += "−";
      first = false;
    } else {
      out += negative ? " − " : " + ";
    }
    Q magnitude = negative ? Q(-term.multiplier) : term.multiplier;
    if (magnitude == 1) {
      if (options.explicit_units) out += "1·";
    } else {
      out += magnitude_string(term.multiplier);
    }
    out += term.symbol;
  }
  return out;
}

Q evaluate(const Decomposition& d, long n) {
  if (n < 0) throw BadInput("formula argument must be nonnegative");
  const BasisRegistry& registry = BasisRegistry::instance();
  if (n == 0) {
    Q balance = 0;
    for (size_t j = 0; j < d.element_labels.size(); ++j) {
      balance += d.coefficients[j] *
                 registry.element(d.element_labels[j]).constant_term();
    }
    return balance;
  }
  Q value = 0;
  for (const Term& term : build_terms(d)) {
    switch (term.kind) {
      case Term::Kind::kSigma:
        value += term.multiplier * sigma(term.power, Q(n) / term.dilation);
        break;
      case Term::Kind::kSigmaTwisted: {
        if (n % term.dilation != 0) break;
        DirichletCharacter chi = term.chi == 1 ? trivial_character()
                                               : quadratic_character(term.chi);
        DirichletCharacter psi = term.psi == 1 ? trivial_character()
                                               : quadratic_character(term.psi);
        value += term.multiplier *
                 Q(sigma_twisted(term.power, chi, psi, n / term.dilation));
        break;
      }
      case Term::Kind::kCusp: {
        const BasisElement& element = registry.element(term.cusp_label);
        value += term.multiplier * coeff(element.series(n + 1), n);
        break;
      }
    }
  }
  return value;
}

}  // namespace qform
