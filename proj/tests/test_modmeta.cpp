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
#include <numeric>
#include <vector>

#include "doctest.h"
#include "qform/errors.hpp"
#include "qform/modmeta.hpp"

using namespace qform;

TEST_CASE("triangular spaces (figurate a = 1)") {
  SpaceMeta eight = figurate_meta(1, std::vector<long>(8, 1));
  CHECK(eight.weight == 4);
  CHECK(eight.level == 2);
  CHECK(eight.character.discriminant == 4);
  CHECK(eight.character.principal);
  CHECK(eight.character.label() == "chi_0");
  CHECK(eight.shift == 1);

  SpaceMeta two4 = figurate_meta(1, {2, 2, 2, 2});
  CHECK(two4.weight == 2);
  CHECK(two4.level == 4);
  CHECK(two4.character.label() == "chi_0");
  CHECK(two4.shift == 1);

  CHECK_THROWS_AS(figurate_meta(1, {1, 1, 1, 1}), DivisibilityViolated);
  try {
    figurate_meta(1, {1, 1, 1, 1});
  } catch (const DivisibilityViolated& e) {
    CHECK(e.h == 4);
    CHECK(e.modulus == 8);
  }
}

TEST_CASE("figurate spaces for a = 3") {
  SpaceMeta meta = figurate_meta(3, {2, 2, 2, 2, 4, 4, 4, 4});
  CHECK(meta.weight == 4);
  CHECK(meta.level == 24);
  CHECK(meta.shift == 1);
  CHECK(meta.character.principal);

  // 8a/d = 24 for a = 3, so sum(C) = 24 is the smallest admissible h.
  CHECK_THROWS_AS(figurate_meta(3, std::vector<long>(8, 1)),
                  DivisibilityViolated);
  SpaceMeta ones24 = figurate_meta(3, std::vector<long>(24, 1));
  CHECK(ones24.weight == 12);
  CHECK(ones24.level == 6);
  CHECK(ones24.shift == 1);

  CHECK_THROWS_AS(figurate_meta(2, {8, 8}), BadInput);
  CHECK_THROWS_AS(figurate_meta(3, {8, 8, 8}), BadInput);
}

TEST_CASE("even figurate parameter halves the level") {
  // a = 4: d = gcd(4, 16) = 4, so 8 | h; level is a * lcm(C).
  SpaceMeta meta = figurate_meta(4, {1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(meta.level == 4);
  CHECK(meta.weight == 4);
  CHECK(meta.shift == 1);
}

TEST_CASE("hexagonal plus triangular spaces") {
  SpaceMeta meta = lt_meta({1}, {2, 6});
  CHECK(meta.weight == 2);
  CHECK(meta.level == 12);
  CHECK(meta.shift == 1);
  // ((-1) * 4 * 12 / .) twisted by (-3 / .): discriminant 144, a square.
  CHECK(meta.character.principal);

  CHECK_THROWS_AS(lt_meta({1}, {1, 3}), DivisibilityViolated);
  CHECK_THROWS_AS(lt_meta({}, {2, 6}), BadInput);
  CHECK_THROWS_AS(lt_meta({1}, {8}), BadInput);
}

TEST_CASE("square plus triangular spaces") {
  SpaceMeta meta = st_meta({1, 1}, {4, 4});
  CHECK(meta.weight == 2);
  CHECK(meta.level == 8);
  CHECK(meta.shift == 1);
  CHECK(meta.character.principal);

  // Odd-odd split uses the 8-discriminant shape.
  SpaceMeta odd = st_meta({3}, {8});
  CHECK(odd.weight == 1);
  CHECK(odd.level == std::lcm(12L, 16L));
  CHECK(odd.character.fundamental == -3);

  CHECK_THROWS_AS(st_meta({1}, {2, 2}), BadInput);
  CHECK_THROWS_AS(st_meta({1}, {2}), DivisibilityViolated);
}

TEST_CASE("full mixed spaces") {
  SpaceMeta meta = mixed_meta({1}, {1, 3}, {2, 6});
  CHECK(meta.weight == 3);
  CHECK(meta.level == 12);
  CHECK(meta.shift == 1);
  CHECK(meta.character.fundamental == -3);
  CHECK(meta.character.label() == "chi_-3");

  // Two hexagonal components leave the character untwisted.
  SpaceMeta two_hex = mixed_meta({1, 1}, {1, 3}, {2, 6});
  CHECK(two_hex.weight == 4);
  CHECK(two_hex.character.principal);
}

TEST_CASE("dispatch over form specs") {
  FormSpec tri;
  tri.triangular = std::vector<long>(8, 1);
  CHECK(space_meta(tri).weight == 4);

  FormSpec fig;
  fig.figurate = {{3, std::vector<long>(24, 1)}};
  CHECK(space_meta(fig).weight == 12);

  FormSpec mixed;
  mixed.hex = {1};
  mixed.squares = {1, 3};
  mixed.triangular = {2, 6};
  CHECK(space_meta(mixed).level == 12);

  FormSpec fig_mixed;
  fig_mixed.figurate = {{3, {1}}};
  fig_mixed.squares = {1};
  CHECK_THROWS_AS(space_meta(fig_mixed), UnsupportedSpace);

  FormSpec empty;
  CHECK_THROWS_AS(space_meta(empty), BadInput);
}

TEST_CASE("families without a triangular part") {
  // theta(tau)^2: weight 1 on Gamma_0(4) with character (-4/.).
  FormSpec squares_only;
  squares_only.squares = {1, 1};
  SpaceMeta theta2 = space_meta(squares_only);
  CHECK(theta2.weight == 1);
  CHECK(theta2.level == 4);
  CHECK(theta2.character.fundamental == -4);
  CHECK(theta2.shift == 0);

  // Odd square count keeps a half-integral weight: rejected.
  CHECK_THROWS_AS(st_meta({1}, {}), BadInput);

  // A single hexagonal factor: weight 1 on Gamma_0(3), character (-3/.).
  FormSpec hex_only;
  hex_only.hex = {1};
  SpaceMeta hex1 = space_meta(hex_only);
  CHECK(hex1.weight == 1);
  CHECK(hex1.level == 3);
  CHECK(hex1.character.fundamental == -3);
  CHECK(hex1.shift == 0);

  SpaceMeta hex2 = lt_meta({1, 2}, {});
  CHECK(hex2.weight == 2);
  CHECK(hex2.level == 6);
  CHECK(hex2.character.principal);

  // Hexagonal-with-square mix, no triangular part: weight 4 level 12.
  FormSpec ls;
  ls.hex = {2};
  ls.squares = {1, 1, 1, 3, 3, 3};
  SpaceMeta both = space_meta(ls);
  CHECK(both.weight == 4);
  CHECK(both.level == 12);
  CHECK(both.character.principal);
  CHECK(both.shift == 0);
}
