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
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "qform/arith.hpp"
#include "qform/errors.hpp"
#include "qform/oracle.hpp"

using namespace qform;

namespace {

FormSpec tri(std::vector<long> C) {
  FormSpec spec;
  spec.triangular = std::move(C);
  return spec;
}

FormSpec sq(std::vector<long> B) {
  FormSpec spec;
  spec.squares = std::move(B);
  return spec;
}

std::vector<long> ones(long k) { return std::vector<long>(k, 1); }

}  // namespace

TEST_CASE("counting conventions per component") {
  // Two triangular variables: 1 = 0 + 1 = 1 + 0.
  CHECK(count(tri({1, 1}), 1) == 2);
  // Four: 1 has the four placements of the single 1.
  CHECK(count(tri(ones(4)), 1) == 4);

  // Squares count all integer signs: 1 = (+-1)^2 + 0^2 in 4 ways.
  CHECK(count(sq({1, 1}), 1) == 4);
  CHECK(count(sq({1, 1}), 2) == 4);
  CHECK(count(sq({1, 1}), 3) == 0);
  CHECK(count(sq({1, 1}), 25) == 12);

  // Hexagonal pairs (m, n) over Z^2.
  FormSpec hex;
  hex.hex = {1};
  CHECK(count(hex, 0) == 1);
  CHECK(count(hex, 1) == 6);
  CHECK(count(hex, 2) == 0);
  CHECK(count(hex, 3) == 6);
  CHECK(count(hex, 4) == 6);
  CHECK(count(hex, 7) == 12);

  // Figurate a = 3 hits each value once: 0, 1, 2, 5, 7, 12, ...
  FormSpec fig;
  fig.figurate = {{3, {1}}};
  std::set<long> support = {0, 1, 2, 5, 7, 12, 15};
  for (long n = 0; n <= 16; ++n)
    CHECK(count(fig, n) == (support.count(n) ? 1 : 0));

  CHECK_THROWS_AS(count(FormSpec{}, 1), BadInput);
  CHECK(count(tri({1}), -3) == 0);
}

TEST_CASE("closed forms for small triangular counts") {
  DirichletCharacter one = trivial_character();
  DirichletCharacter chi4 = quadratic_character(-4);
  for (long n = 0; n <= 25; ++n) {
    // delta_2(n) = r_2(8n + 2) / 4 and delta_3(n) = r_3(8n + 3) / 8.
    CHECK(4 * count(tri(ones(2)), n) == count(sq(ones(2)), 8 * n + 2));
    CHECK(8 * count(tri(ones(3)), n) == count(sq(ones(3)), 8 * n + 3));
    // delta_4(n) = sigma(2n + 1).
    CHECK(Q(count(tri(ones(4)), n)) == sigma(1, Q(2 * n + 1)));
    // delta_6(n) = -sigma_{2;1,chi_-4}(4n + 3) / 8.
    CHECK(-8 * count(tri(ones(6)), n) == sigma_twisted(2, one, chi4, 4 * n + 3));
    // delta_8(n) = sigma_3^#(n + 1).
    CHECK(count(tri(ones(8)), n) == sigma_sharp3(n + 1));
  }
}

TEST_CASE("square counts match their divisor-sum formulas") {
  DirichletCharacter one = trivial_character();
  DirichletCharacter chi4 = quadratic_character(-4);
  for (long n = 1; n <= 30; ++n) {
    CHECK(Q(count(sq(ones(4)), n)) == 8 * sigma(1, Q(n)) - 32 * sigma(1, make_frac(n, 4)));
    CHECK(count(sq(ones(6)), n) == -4 * sigma_twisted(2, one, chi4, n) +
                                       16 * sigma_twisted(2, chi4, one, n));
    CHECK(Q(count(sq(ones(8)), n)) == 16 * sigma(3, Q(n)) -
                                          32 * sigma(3, make_frac(n, 2)) +
                                          256 * sigma(3, make_frac(n, 4)));
  }
}

TEST_CASE("triangular counts correspond to positive odd square counts") {
  auto [lhs, rhs] = check_odd_square_bijection({1, 1}, 3);
  CHECK(lhs == 2);
  CHECK(rhs == 2);

  std::mt19937 rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    long k = 1 + static_cast<long>(rng() % 4);
    std::vector<long> C;
    for (long i = 0; i < k; ++i) C.push_back(1 + static_cast<long>(rng() % 4));
    long n = static_cast<long>(rng() % 16);
    auto [l, r] = check_odd_square_bijection(C, n);
    INFO("trial ", trial, " n=", n);
    CHECK(l == r);
  }
}

TEST_CASE("convolution identities hold by brute force") {
  for (long n = 0; n <= 15; ++n) {
    auto [l, r] = check_convolution(ConvolutionKind::kSquareTriangular, {1, 2}, n);
    CHECK(l == r);
  }
  for (long n = 0; n <= 12; ++n) {
    auto [l4, r4] = check_convolution(ConvolutionKind::kDelta4, {}, n);
    CHECK(l4 == r4);
    auto [l6, r6] = check_convolution(ConvolutionKind::kDelta6, {}, n);
    CHECK(l6 == r6);
    auto [l8, r8] = check_convolution(ConvolutionKind::kDelta8, {}, n);
    CHECK(l8 == r8);
  }
  for (long n = 0; n <= 8; ++n) {
    auto [l12, r12] = check_convolution(ConvolutionKind::kDelta12, {}, n);
    CHECK(l12 == r12);
    auto [l16, r16] = check_convolution(ConvolutionKind::kDelta16, {}, n);
    CHECK(l16 == r16);
  }
}

TEST_CASE("ellipsoid lattice count matches the zero-based reading") {
  EllipsoidCheck check = ellipsoid_count({1}, Q(10));
  // x odd with x^2 <= 40: +-1, +-3, +-5.
  CHECK(check.lattice_points == 6);
  CHECK(check.reading_from_zero == 6);
  CHECK(check.reading_from_one == 4);

  std::mt19937 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    long k = 1 + static_cast<long>(rng() % 3);
    std::vector<long> C;
    for (long i = 0; i < k; ++i) C.push_back(1 + static_cast<long>(rng() % 3));
    Q r2 = make_frac(1 + static_cast<long>(rng() % 120), 1 + static_cast<long>(rng() % 3));
    EllipsoidCheck e = ellipsoid_count(C, r2);
    INFO("trial ", trial);
    CHECK(e.lattice_points == e.reading_from_zero);
    if (e.lattice_points > 0) {
      Z orthants = Z(1) << k;
      CHECK(e.reading_from_zero - e.reading_from_one == orthants);
    }
  }
}
