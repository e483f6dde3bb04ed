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

#include "qform/genfun.hpp"

#include <utility>

#include "qform/errors.hpp"

namespace qform {

namespace {

// Smallest base precision whose dilated window (length m*(prec-1) + 1)
// still covers [0, prec).
long base_precision(long prec, long dilation) {
  return (prec - 2 + dilation) / dilation + 1;
}

// Base series computed at reduced precision, then dilated and trimmed so the
// result certifies exactly [0, prec).
FracQSeries dilated(FracQSeries (*base)(long), long dilation, long prec) {
  FracQSeries expanded = dilate(base(base_precision(prec, dilation)), dilation);
  return truncate_to(expanded, prec);
}

FracQSeries dilated_phi(long a, long dilation, long prec) {
  long base_prec = base_precision(prec, dilation);
  return truncate_to(dilate(phi_series(a, base_prec), dilation), prec);
}

}  // namespace

void validate(const FormSpec& spec) {
  if (spec.empty()) throw BadInput("form spec has no components");
  for (long c : spec.hex)
    if (c <= 0) throw BadInput("hex dilations must be positive");
  for (long c : spec.squares)
    if (c <= 0) throw BadInput("square dilations must be positive");
  for (long c : spec.triangular)
    if (c <= 0) throw BadInput("triangular dilations must be positive");
  for (const auto& group : spec.figurate) {
    if (group.a < 1) throw BadInput("figurate parameter must be at least 1");
    if (group.coeffs.empty())
      throw BadInput("figurate group has no dilations");
    for (long c : group.coeffs)
      if (c <= 0) throw BadInput("figurate dilations must be positive");
  }
}

long figurate_number(long a, long n) {
  return n * (a * n - (a - 2)) / 2;
}

FracQSeries psi_series(long prec) {
  std::vector<Q> coeffs(static_cast<size_t>(prec), Q(0));
  for (long n = 0; n * (n + 1) / 2 < prec; ++n) coeffs[n * (n + 1) / 2] = 1;
  return FracQSeries{Q(0), std::move(coeffs)};
}

FracQSeries theta_series(long prec) {
  std::vector<Q> coeffs(static_cast<size_t>(prec), Q(0));
  coeffs[0] = 1;
  for (long z = 1; z * z < prec; ++z) coeffs[z * z] = 2;
  return FracQSeries{Q(0), std::move(coeffs)};
}

FracQSeries phi_series(long a, long prec) {
  if (a < 1) throw BadInput("figurate parameter must be at least 1");
  if (a == 1) return psi_series(prec);
  std::vector<Q> coeffs(static_cast<size_t>(prec), Q(0));
  for (long n = 0; figurate_number(a, n) < prec; ++n)
    coeffs[figurate_number(a, n)] += 1;
  for (long n = -1; figurate_number(a, n) < prec; --n)
    coeffs[figurate_number(a, n)] += 1;
  return FracQSeries{Q(0), std::move(coeffs)};
}

FracQSeries hex_series(long prec) {
  std::vector<Q> coeffs(static_cast<size_t>(prec), Q(0));
  // m^2 + m n + n^2 >= 3 max(m^2, n^2) / 4, so both |m| and |n| are bounded
  // by sqrt(4 prec / 3).
  long bound = 1;
  while (3 * bound * bound < 4 * prec) ++bound;
  for (long m = -bound; m <= bound; ++m)
    for (long n = -bound; n <= bound; ++n) {
      long value = m * m + m * n + n * n;
      if (value < prec) coeffs[value] += 1;
    }
  return FracQSeries{Q(0), std::move(coeffs)};
}

FracQSeries form_series(const FormSpec& spec, long prec) {
  validate(spec);
  if (prec <= 0) throw BadInput("precision must be positive");
  FracQSeries result = constant_series(Q(1), prec);
  for (long c : spec.hex) result = mul(result, dilated(hex_series, c, prec));
  for (long c : spec.squares)
    result = mul(result, dilated(theta_series, c, prec));
  for (long c : spec.triangular)
    result = mul(result, dilated(psi_series, c, prec));
  for (const auto& group : spec.figurate)
    for (long c : group.coeffs)
      result = mul(result, dilated_phi(group.a, c, prec));
  return result;
}

Q normalizing_shift(const FormSpec& spec) {
  Q shift(0);
  for (long c : spec.triangular) shift += make_frac(c, 8);
  for (const auto& group : spec.figurate) {
    long a = group.a;
    for (long c : group.coeffs)
      shift += make_frac((a - 2) * (a - 2) * c, 8 * a);
  }
  return shift;
}

FracQSeries normalized_form_series(const FormSpec& spec, long prec) {
  Q s = normalizing_shift(spec);
  if (!is_integer(s))
    throw NotModularShift("normalizing shift " + q_to_string(s) +
                          " is not an integer");
  return shift(form_series(spec, prec), s);
}

}  // namespace qform
