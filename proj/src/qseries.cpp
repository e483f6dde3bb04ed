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

#include "qform/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "qform/errors.hpp"

namespace qform {

namespace {

void require_valid(const FracQSeries& a, const char* where) {
  if (a.coeffs.empty()) {
    throw std::invalid_argument(std::string(where) +
                                ": series must store at least one coefficient");
  }
}

// Certified value of a at exponent e; caller guarantees e <= high_exponent.
// Below the offset and off the lattice the value is exactly zero.
Q certified_value(const FracQSeries& a, const Q& e) {
  Q gap = e - a.offset;
  if (gap < 0 || !is_integer(gap)) return Q(0);
  return a.coeffs[static_cast<size_t>(to_long(gap))];
}

}  // namespace

FracQSeries constant_series(const Q& value, long prec) {
  if (prec < 1) throw std::invalid_argument("constant_series: prec must be >= 1");
  FracQSeries s;
  s.offset = 0;
  s.coeffs.assign(static_cast<size_t>(prec), Q(0));
  s.coeffs[0] = value;
  return s;
}

FracQSeries monomial(const Q& value, const Q& exponent, long prec) {
  FracQSeries s = constant_series(value, prec);
  s.offset = exponent;
  return s;
}

FracQSeries add(const FracQSeries& a, const FracQSeries& b) {
  require_valid(a, "add");
  require_valid(b, "add");
  Q gap = a.offset - b.offset;
  if (!is_integer(gap)) {
    throw NonIntegerOffsetGap("add: offsets " + q_to_string(a.offset) + " and " +
                              q_to_string(b.offset) +
                              " differ by the non-integer " + q_to_string(gap));
  }
  // The sum is certified wherever both inputs are: from the lower of the two
  // offsets (each series is exactly zero below its own offset) up to the
  // smaller of the two window tops.
  Q lo = std::min(a.offset, b.offset);
  Q hi = std::min(a.high_exponent(), b.high_exponent());
  long prec = to_long(hi - lo) + 1;
  FracQSeries out;
  out.offset = lo;
  out.coeffs.reserve(static_cast<size_t>(prec));
  for (long i = 0; i < prec; ++i) {
    Q e = lo + Q(i);
    out.coeffs.push_back(certified_value(a, e) + certified_value(b, e));
  }
  return out;
}

FracQSeries sub(const FracQSeries& a, const FracQSeries& b) {
  return add(a, negate(b));
}

FracQSeries negate(const FracQSeries& a) { return scale(a, Q(-1)); }

FracQSeries scale(const FracQSeries& a, const Q& s) {
  FracQSeries out = a;
  for (Q& c : out.coeffs) c *= s;
  return out;
}

FracQSeries mul(const FracQSeries& a, const FracQSeries& b) {
  require_valid(a, "mul");
  require_valid(b, "mul");
  long prec = std::min(a.prec(), b.prec());
  FracQSeries out;
  out.offset = a.offset + b.offset;
  out.coeffs.assign(static_cast<size_t>(prec), Q(0));
  for (long i = 0; i < prec; ++i) {
    if (a.coeffs[static_cast<size_t>(i)] == 0) continue;
    long top = prec - i;
    for (long j = 0; j < top; ++j) {
      const Q& bj = b.coeffs[static_cast<size_t>(j)];
      if (bj == 0) continue;
      out.coeffs[static_cast<size_t>(i + j)] +=
          a.coeffs[static_cast<size_t>(i)] * bj;
    }
  }
  return out;
}

FracQSeries invert(const FracQSeries& a) {
  require_valid(a, "invert");
  if (a.coeffs[0] == 0) {
    throw ZeroLeadingCoefficient(
        "invert: leading stored coefficient is zero (offset " +
        q_to_string(a.offset) + ")");
  }
  long prec = a.prec();
  FracQSeries out;
  out.offset = -a.offset;
  out.coeffs.assign(static_cast<size_t>(prec), Q(0));
  Q lead_inverse = Q(1) / a.coeffs[0];
  out.coeffs[0] = lead_inverse;
  for (long k = 1; k < prec; ++k) {
    Q acc = 0;
    for (long i = 1; i <= k; ++i) {
      if (a.coeffs[static_cast<size_t>(i)] == 0) continue;
      acc += a.coeffs[static_cast<size_t>(i)] *
             out.coeffs[static_cast<size_t>(k - i)];
    }
    out.coeffs[static_cast<size_t>(k)] = -lead_inverse * acc;
  }
  return out;
}

FracQSeries dilate(const FracQSeries& a, long m) {
  require_valid(a, "dilate");
  if (m < 1) throw std::invalid_argument("dilate: m must be >= 1");
  if (m == 1) return a;
  FracQSeries out;
  out.offset = a.offset * Q(m);
  out.coeffs.assign(static_cast<size_t>(m * (a.prec() - 1) + 1), Q(0));
  for (long i = 0; i < a.prec(); ++i) {
    out.coeffs[static_cast<size_t>(m * i)] = a.coeffs[static_cast<size_t>(i)];
  }
  return out;
}

FracQSeries pow(const FracQSeries& a, long e) {
  require_valid(a, "pow");
  if (e < 0) {
    if (a.coeffs[0] == 0) {
      throw ZeroLeadingCoefficient(
          "pow: negative exponent needs a nonzero leading coefficient");
    }
    return pow(invert(a), -e);
  }
  FracQSeries result = constant_series(Q(1), a.prec());
  FracQSeries base = a;
  long remaining = e;
  while (remaining > 0) {
    if (remaining & 1) result = mul(result, base);
    remaining >>= 1;
    if (remaining > 0) base = mul(base, base);
  }
  return result;
}

FracQSeries shift(const FracQSeries& a, const Q& delta) {
  FracQSeries out = a;
  out.offset += delta;
  return out;
}

FracQSeries truncate_to(const FracQSeries& a, long prec) {
  require_valid(a, "truncate_to");
  if (prec < 1 || prec > a.prec()) {
    throw std::invalid_argument("truncate_to: prec out of range");
  }
  FracQSeries out;
  out.offset = a.offset;
  out.coeffs.assign(a.coeffs.begin(), a.coeffs.begin() + prec);
  return out;
}

Q coeff(const FracQSeries& a, const Q& n) {
  require_valid(a, "coeff");
  Q gap = n - a.offset;
  if (gap < 0 || !is_integer(gap)) return Q(0);
  Z index = gap.get_num();
  if (index >= a.prec()) {
    throw OutOfPrecision("coeff: exponent " + q_to_string(n) +
                         " beyond certified window ending at " +
                         q_to_string(a.high_exponent()));
  }
  return a.coeffs[static_cast<size_t>(to_long(index))];
}

Q coeff(const FracQSeries& a, long n) { return coeff(a, Q(n)); }

bool operator==(const FracQSeries& a, const FracQSeries& b) {
  // Compare on every exponent certified by both windows. A position stored
  // by one series and below (or off the lattice of) the other compares
  // against an exact zero.
  Q limit = std::min(a.high_exponent(), b.high_exponent());
  for (long i = 0; i < a.prec(); ++i) {
    Q e = a.offset + Q(i);
    if (e > limit) break;
    if (a.coeffs[static_cast<size_t>(i)] != certified_value(b, e)) return false;
  }
  for (long j = 0; j < b.prec(); ++j) {
    Q e = b.offset + Q(j);
    if (e > limit) break;
    if (b.coeffs[static_cast<size_t>(j)] != certified_value(a, e)) return false;
  }
  return true;
}

}  // namespace qform
