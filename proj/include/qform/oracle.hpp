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

#ifndef QFORM_ORACLE_HPP_
#define QFORM_ORACLE_HPP_

#include <utility>
#include <vector>

#include "qform/genfun.hpp"
#include "qform/rational.hpp"

namespace qform {

// Brute-force representation counts by direct lattice enumeration. Nothing
// here touches the q-series engine; these counts are the independent ground
// truth the series and the derived formulas are checked against.

// Number of representations of n by the form, honoring each component's
// counting convention (hex pairs in Z^2, squares in Z, triangular indices
// n >= 0 once, figurate indices in Z).
Z count(const FormSpec& spec, long n);

// Representations of m as sum of c_i y_i^2 with every y_i a positive odd
// integer.
Z count_odd_squares(const std::vector<long>& C, long m);

// Both sides of the odd-square correspondence
//   delta_k(C; n) = q_k(C; 8n + h),   h = sum(C):
// triangular count on the left, positive-odd-square count on the right.
std::pair<Z, Z> check_odd_square_bijection(const std::vector<long>& C, long n);

// Named convolution identities relating triangular counts to square counts
// and divisor sums. Each evaluates both sides at n by brute force (divisor
// sums aside) and returns them as exact rationals.
enum class ConvolutionKind {
  kSquareTriangular,  // delta_{2k}(C,C; n) = sum_{a+2b=n} r_k(C;a) delta_k(C;b)
  kDelta4,            // delta_4(n) = (1/4) sum r_2(a) r_2(8b + 2)
  kDelta6,            // delta_6(n) = (1/8) sum r_3(a) r_3(8b + 3)
  kDelta8,            // delta_8(n) = sum r_4(a) sigma(2b + 1)
  kDelta12,           // delta_12(n) = -(1/8) sum r_6(a) sigma_{2;1,chi_-4}(4b+3)
  kDelta16,           // delta_16(n) = sum r_8(a) sigma_3^#(b + 1)
};

// (lhs, rhs) of the identity at n. C is consulted only by
// kSquareTriangular; the numbered identities fix C = (1, ..., 1).
std::pair<Q, Q> check_convolution(ConvolutionKind kind,
                                  const std::vector<long>& C, long n);

// Lattice points of the shifted ellipsoid sum c_i (z_i - 1/2)^2 <= R^2
// against the two candidate readings of the closed-form count
// 2^k * sum of delta_k(C; n): the inner sum starting at n = 1 as printed,
// and starting at n = 0. The upper limit is floor(R^2/2 - h/8) in both.
struct EllipsoidCheck {
  Z lattice_points;
  Z reading_from_one;
  Z reading_from_zero;
};

EllipsoidCheck ellipsoid_count(const std::vector<long>& C, const Q& r_squared);

}  // namespace qform

#endif  // QFORM_ORACLE_HPP_
