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

#include "qform/modmeta.hpp"

#include <numeric>

#include "qform/errors.hpp"

namespace qform {

namespace {

long sum_of(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

long lcm_of(const std::vector<long>& v) {
  long l = 1;
  for (long x : v) l = std::lcm(l, x);
  return l;
}

Z product_of(const std::vector<long>& v) {
  Z p(1);
  for (long x : v) p *= x;
  return p;
}

void require_positive(const std::vector<long>& v, const char* what) {
  for (long x : v)
    if (x <= 0) throw BadInput(std::string(what) + " must be positive");
}

// The space character for discriminant D on Gamma_0(N): principal mod N
// when D reduces to a square, otherwise the Kronecker character (D/.)
// displayed as given and evaluated through its fundamental reduction.
DirichletCharacter space_character(const Z& discriminant, long level) {
  if (fundamental_discriminant(discriminant) == 1) {
    DirichletCharacter chi = principal_character(level);
    chi.discriminant = discriminant;
    return chi;
  }
  DirichletCharacter chi = quadratic_character(discriminant);
  chi.modulus = level;
  return chi;
}

// ((-1)^w * base * prod / .), the recurring character discriminant shape.
Z signed_discriminant(long w, long base, const Z& prod) {
  Z d = Z(base) * prod;
  return (w % 2 != 0) ? Z(-d) : d;
}

}  // namespace

SpaceMeta figurate_meta(long a, const std::vector<long>& C) {
  if (a < 1) throw BadInput("figurate parameter must be at least 1");
  if (a == 2)
    throw BadInput("a = 2 components are squares; use the square route");
  require_positive(C, "dilations");
  long k = static_cast<long>(C.size());
  if (k == 0 || k % 2 != 0)
    throw BadInput("figurate component count must be a positive even number");
  long h = sum_of(C);
  long d = std::gcd((a - 2) * (a - 2), 4 * a);
  long modulus = 8 * a / d;
  if (h % modulus != 0) throw DivisibilityViolated(h, modulus);

  SpaceMeta meta;
  meta.weight = k / 2;
  meta.level = (a % 2 != 0) ? 2 * a * lcm_of(C) : a * lcm_of(C);
  meta.character =
      space_character(signed_discriminant(k / 2, 4, product_of(C)),
                      meta.level);
  meta.shift = make_frac((a - 2) * (a - 2) * h, 8 * a);
  return meta;
}

SpaceMeta lt_meta(const std::vector<long>& A, const std::vector<long>& C) {
  require_positive(A, "dilations");
  require_positive(C, "dilations");
  long u = static_cast<long>(A.size());
  long k = static_cast<long>(C.size());
  if (u < 1) throw BadInput("at least one hexagonal component required");
  if (k % 2 != 0)
    throw BadInput("triangular component count must be even");
  long h = sum_of(C);
  if (h % 8 != 0) throw DivisibilityViolated(h, 8);

  SpaceMeta meta;
  meta.weight = u + k / 2;
  meta.level = C.empty() ? 3 * lcm_of(A)
                         : std::lcm(3 * lcm_of(A), 2 * lcm_of(C));
  Z disc = signed_discriminant(k / 2, 4, product_of(C));
  if (u % 2 != 0) disc *= -3;
  meta.character = space_character(disc, meta.level);
  meta.shift = make_frac(h, 8);
  return meta;
}

SpaceMeta st_meta(const std::vector<long>& B, const std::vector<long>& C) {
  require_positive(B, "dilations");
  require_positive(C, "dilations");
  long v = static_cast<long>(B.size());
  long k = static_cast<long>(C.size());
  if (v < 1) throw BadInput("at least one square component required");
  if ((v + k) % 2 != 0)
    throw BadInput("square plus triangular component count must be even");
  long h = sum_of(C);
  if (h % 8 != 0) throw DivisibilityViolated(h, 8);

  SpaceMeta meta;
  meta.weight = (v + k) / 2;
  meta.level = C.empty() ? 4 * lcm_of(B)
                         : std::lcm(4 * lcm_of(B), 2 * lcm_of(C));
  long base = (v % 2 == 0) ? 4 : 8;
  meta.character = space_character(
      signed_discriminant((v + k) / 2, base, product_of(B) * product_of(C)),
      meta.level);
  meta.shift = make_frac(h, 8);
  return meta;
}

SpaceMeta mixed_meta(const std::vector<long>& A, const std::vector<long>& B,
                     const std::vector<long>& C) {
  require_positive(A, "dilations");
  if (A.empty()) throw BadInput("at least one hexagonal component required");
  SpaceMeta meta = st_meta(B, C);
  meta.weight += static_cast<long>(A.size());
  meta.level = std::lcm(3 * lcm_of(A), meta.level);
  Z disc = meta.character.discriminant;
  if (A.size() % 2 != 0) disc *= -3;
  meta.character = space_character(disc, meta.level);
  return meta;
}

SpaceMeta space_meta(const FormSpec& spec) {
  validate(spec);
  if (!spec.figurate.empty()) {
    if (spec.figurate.size() != 1 || !spec.hex.empty() ||
        !spec.squares.empty() || !spec.triangular.empty())
      throw UnsupportedSpace(
          "figurate components cannot be mixed with other families");
    return figurate_meta(spec.figurate[0].a, spec.figurate[0].coeffs);
  }
  if (spec.hex.empty() && spec.squares.empty())
    return figurate_meta(1, spec.triangular);
  if (spec.squares.empty()) return lt_meta(spec.hex, spec.triangular);
  if (spec.hex.empty()) return st_meta(spec.squares, spec.triangular);
  return mixed_meta(spec.hex, spec.squares, spec.triangular);
}

}  // namespace qform
