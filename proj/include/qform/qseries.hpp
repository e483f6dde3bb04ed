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

#ifndef QFORM_QSERIES_HPP_
#define QFORM_QSERIES_HPP_

#include <vector>

#include "qform/rational.hpp"

namespace qform {

// Exact truncated power series in q with a rational exponent offset:
//
//   coeffs[i] is the coefficient of q^(offset + i).
//
// The offset carries fractional prefactors such as q^(1/24) or q^(-1/8).
// A series certifies every exponent e <= offset + prec - 1: exponents below
// the offset (or off the offset + Z lattice) are exactly zero; exponents
// beyond the stored window are unknown, never silently zero.
//
// Values are immutable after construction and every operation is a pure
// function, so series may be shared across threads freely.
struct FracQSeries {
  Q offset;               // exponent of the first stored coefficient
  std::vector<Q> coeffs;  // stored window; size is the certified precision

  long prec() const { return static_cast<long>(coeffs.size()); }

  // Largest certified exponent offset + prec - 1.
  Q high_exponent() const { return offset + Q(prec() - 1); }
};

// Constant series c * q^0 with the given window length.
FracQSeries constant_series(const Q& value, long prec);

// Monomial c * q^exponent with the given window length.
FracQSeries monomial(const Q& value, const Q& exponent, long prec);

// Sum. Requires the offsets to differ by an integer (common exponent
// lattice); throws NonIntegerOffsetGap otherwise. The result window is the
// largest range certified by both inputs.
FracQSeries add(const FracQSeries& a, const FracQSeries& b);

// Difference, same lattice rule as add.
FracQSeries sub(const FracQSeries& a, const FracQSeries& b);

// Scalar multiples (precision preserved).
FracQSeries negate(const FracQSeries& a);
FracQSeries scale(const FracQSeries& a, const Q& s);

// Cauchy product; offsets add, precision is the pessimistic min.
FracQSeries mul(const FracQSeries& a, const FracQSeries& b);

// Multiplicative inverse; requires a nonzero leading stored coefficient
// (throws ZeroLeadingCoefficient). The offset negates.
FracQSeries invert(const FracQSeries& a);

// Substitution q -> q^m for m >= 1. The offset multiplies by m; the result
// certifies the full dilated window (length m*(prec-1) + 1).
FracQSeries dilate(const FracQSeries& a, long m);

// Integer power via repeated multiplication; negative exponents go through
// invert and require a nonzero leading coefficient.
FracQSeries pow(const FracQSeries& a, long e);

// Shifts the exponent offset by delta (multiplication by q^delta).
FracQSeries shift(const FracQSeries& a, const Q& delta);

// First `prec` coefficients of a (prec <= a.prec()).
FracQSeries truncate_to(const FracQSeries& a, long prec);

// Coefficient of q^n. Exponents below the offset or off the exponent
// lattice are exactly zero; beyond the certified window throws
// OutOfPrecision.
Q coeff(const FracQSeries& a, const Q& n);
Q coeff(const FracQSeries& a, long n);

// Equality as certified expansions: on every exponent both windows certify,
// coefficients must agree (leading exponents certified by only one side
// must be zero there).
bool operator==(const FracQSeries& a, const FracQSeries& b);
inline bool operator!=(const FracQSeries& a, const FracQSeries& b) {
  return !(a == b);
}

// Operator sugar over the named operations.
inline FracQSeries operator+(const FracQSeries& a, const FracQSeries& b) {
  return add(a, b);
}
inline FracQSeries operator-(const FracQSeries& a, const FracQSeries& b) {
  return sub(a, b);
}
inline FracQSeries operator*(const FracQSeries& a, const FracQSeries& b) {
  return mul(a, b);
}
inline FracQSeries operator*(const Q& s, const FracQSeries& a) {
  return scale(a, s);
}

}  // namespace qform

#endif  // QFORM_QSERIES_HPP_
