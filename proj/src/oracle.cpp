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

#include "qform/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "qform/arith.hpp"
#include "qform/errors.hpp"

namespace qform {

namespace {

// Multiplicity table of one component: table[v] = number of lattice points
// of the component taking value v, for 0 <= v <= budget.
using ValueTable = std::vector<Z>;

ValueTable hex_table(long c, long budget) {
  ValueTable table(static_cast<size_t>(budget + 1), Z(0));
  long bound = 1;
  while (3 * c * bound * bound <= 4 * budget) ++bound;
  for (long m = -bound; m <= bound; ++m)
    for (long n = -bound; n <= bound; ++n) {
      long value = c * (m * m + m * n + n * n);
      if (value <= budget) table[value] += 1;
    }
  return table;
}

ValueTable square_table(long c, long budget) {
  ValueTable table(static_cast<size_t>(budget + 1), Z(0));
  table[0] = 1;
  for (long z = 1; c * z * z <= budget; ++z) table[c * z * z] += 2;
  return table;
}

ValueTable triangular_table(long c, long budget) {
  ValueTable table(static_cast<size_t>(budget + 1), Z(0));
  for (long n = 0; c * (n * (n + 1) / 2) <= budget; ++n)
    table[c * (n * (n + 1) / 2)] += 1;
  return table;
}

ValueTable figurate_table(long a, long c, long budget) {
  if (a == 1) return triangular_table(c, budget);
  ValueTable table(static_cast<size_t>(budget + 1), Z(0));
  for (long n = 0; c * figurate_number(a, n) <= budget; ++n)
    table[c * figurate_number(a, n)] += 1;
  for (long n = -1; c * figurate_number(a, n) <= budget; --n)
    table[c * figurate_number(a, n)] += 1;
  return table;
}

// Bounded search over component values, one recursion level per component,
// memoized on (level, remaining budget).
class TableCounter {
 public:
  explicit TableCounter(std::vector<ValueTable> tables)
      : tables_(std::move(tables)), memo_(tables_.size()) {
    // Sparser components first (largest smallest-positive-value), so the
    // search prunes on the coarse strides before the dense ones.
    std::sort(tables_.begin(), tables_.end(),
              [](const ValueTable& x, const ValueTable& y) {
                return first_positive(x) > first_positive(y);
              });
  }

  Z total(long n) { return n < 0 ? Z(0) : search(0, n); }

 private:
  static long first_positive(const ValueTable& table) {
    for (size_t v = 1; v < table.size(); ++v)
      if (table[v] != 0) return static_cast<long>(v);
    return static_cast<long>(table.size());
  }

  Z search(size_t level, long remaining) {
    if (level == tables_.size()) return remaining == 0 ? Z(1) : Z(0);
    auto cached = memo_[level].find(remaining);
    if (cached != memo_[level].end()) return cached->second;
    const ValueTable& table = tables_[level];
    Z total(0);
    for (long v = 0; v <= remaining; ++v)
      if (table[v] != 0) total += table[v] * search(level + 1, remaining - v);
    memo_[level].emplace(remaining, total);
    return total;
  }

  std::vector<ValueTable> tables_;
  std::vector<std::unordered_map<long, Z>> memo_;
};

std::vector<ValueTable> spec_tables(const FormSpec& spec, long budget) {
  std::vector<ValueTable> tables;
  for (long c : spec.hex) tables.push_back(hex_table(c, budget));
  for (long c : spec.squares) tables.push_back(square_table(c, budget));
  for (long c : spec.triangular) tables.push_back(triangular_table(c, budget));
  for (const auto& group : spec.figurate)
    for (long c : group.coeffs)
      tables.push_back(figurate_table(group.a, c, budget));
  return tables;
}

ValueTable odd_square_table(long c, long budget) {
  ValueTable table(static_cast<size_t>(budget + 1), Z(0));
  for (long y = 1; c * y * y <= budget; y += 2) table[c * y * y] += 1;
  return table;
}

Z delta_count(const std::vector<long>& C, long n) {
  FormSpec spec;
  spec.triangular = C;
  return count(spec, n);
}

Z square_count(const std::vector<long>& C, long n) {
  FormSpec spec;
  spec.squares = C;
  return count(spec, n);
}

std::vector<long> ones(long k) { return std::vector<long>(k, 1); }

}  // namespace

Z count(const FormSpec& spec, long n) {
  validate(spec);
  if (n < 0) return Z(0);
  return TableCounter(spec_tables(spec, n)).total(n);
}

Z count_odd_squares(const std::vector<long>& C, long m) {
  if (C.empty()) throw BadInput("form spec has no components");
  for (long c : C)
    if (c <= 0) throw BadInput("square dilations must be positive");
  if (m < 0) return Z(0);
  std::vector<ValueTable> tables;
  for (long c : C) tables.push_back(odd_square_table(c, m));
  return TableCounter(std::move(tables)).total(m);
}

std::pair<Z, Z> check_odd_square_bijection(const std::vector<long>& C,
                                           long n) {
  long h = 0;
  for (long c : C) h += c;
  return {delta_count(C, n), count_odd_squares(C, 8 * n + h)};
}

std::pair<Q, Q> check_convolution(ConvolutionKind kind,
                                  const std::vector<long>& C, long n) {
  switch (kind) {
    case ConvolutionKind::kSquareTriangular: {
      std::vector<long> doubled = C;
      doubled.insert(doubled.end(), C.begin(), C.end());
      Z lhs = delta_count(doubled, n);
      Z rhs(0);
      for (long b = 0; 2 * b <= n; ++b)
        rhs += square_count(C, n - 2 * b) * delta_count(C, b);
      return {Q(lhs), Q(rhs)};
    }
    case ConvolutionKind::kDelta4: {
      Z rhs(0);
      for (long b = 0; 2 * b <= n; ++b)
        rhs += square_count(ones(2), n - 2 * b) *
               square_count(ones(2), 8 * b + 2);
      return {Q(delta_count(ones(4), n)), Q(rhs) / 4};
    }
    case ConvolutionKind::kDelta6: {
      Z rhs(0);
      for (long b = 0; 2 * b <= n; ++b)
        rhs += square_count(ones(3), n - 2 * b) *
               square_count(ones(3), 8 * b + 3);
      return {Q(delta_count(ones(6), n)), Q(rhs) / 8};
    }
    case ConvolutionKind::kDelta8: {
      Z rhs(0);
      for (long b = 0; 2 * b <= n; ++b) {
        Q s = sigma(1, Q(2 * b + 1));
        rhs += square_count(ones(4), n - 2 * b) * s.get_num();
      }
      return {Q(delta_count(ones(8), n)), Q(rhs)};
    }
    case ConvolutionKind::kDelta12: {
      Z rhs(0);
      DirichletCharacter one = trivial_character();
      DirichletCharacter chi4 = quadratic_character(-4);
      for (long b = 0; 2 * b <= n; ++b)
        rhs += square_count(ones(6), n - 2 * b) *
               sigma_twisted(2, one, chi4, 4 * b + 3);
      return {Q(delta_count(ones(12), n)), Q(rhs) / -8};
    }
    case ConvolutionKind::kDelta16: {
      Z rhs(0);
      for (long b = 0; 2 * b <= n; ++b)
        rhs += square_count(ones(8), n - 2 * b) * sigma_sharp3(b + 1);
      return {Q(delta_count(ones(16), n)), Q(rhs)};
    }
  }
  throw BadInput("unknown convolution kind");
}

EllipsoidCheck ellipsoid_count(const std::vector<long>& C, const Q& r_squared) {
  if (C.empty()) throw BadInput("form spec has no components");
  for (long c : C)
    if (c <= 0) throw BadInput("dilations must be positive");
  long k = static_cast<long>(C.size());
  long h = 0;
  for (long c : C) h += c;

  EllipsoidCheck result;

  // Direct enumeration: z_i in Z with sum c_i (z_i - 1/2)^2 <= R^2, i.e.
  // odd x_i = 2 z_i - 1 with sum c_i x_i^2 <= 4 R^2. The positive-odd count
  // picks up a factor 2 per coordinate for the sign choices.
  Z budget_z = floor_q(Q(4) * r_squared);
  if (budget_z < 0) {
    result.lattice_points = 0;
  } else {
    long budget = static_cast<long>(budget_z.get_si());
    std::vector<ValueTable> tables;
    for (long c : C) tables.push_back(odd_square_table(c, budget));
    TableCounter counter(std::move(tables));
    Z positive_orthant(0);
    for (long m = 0; m <= budget; ++m) positive_orthant += counter.total(m);
    result.lattice_points = positive_orthant << k;
  }

  Z upper = floor_q(r_squared / 2 - make_frac(h, 8));
  long M = upper < 0 ? -1 : static_cast<long>(upper.get_si());
  Z sum_from_one(0);
  for (long n = 1; n <= M; ++n) sum_from_one += delta_count(C, n);
  result.reading_from_one = sum_from_one << k;
  Z sum_from_zero = sum_from_one + (M >= 0 ? delta_count(C, 0) : Z(0));
  result.reading_from_zero = sum_from_zero << k;
  return result;
}

}  // namespace qform
