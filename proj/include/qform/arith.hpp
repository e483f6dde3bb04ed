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

#ifndef QFORM_ARITH_HPP_
#define QFORM_ARITH_HPP_

#include <string>
#include <vector>

#include "qform/rational.hpp"

namespace qform {

// ------------------------------------------------------------------------ //
// Kronecker symbol and real Dirichlet characters                           //
// ------------------------------------------------------------------------ //

// Fully extended Kronecker symbol (m/n), defined for all integers n
// including n <= 0.
int kronecker(const Z& m, const Z& n);
int kronecker(long m, long n);

// A real Dirichlet character. Two modes:
//   * Kronecker mode: chi(n) = (discriminant / n). The discriminant is kept
//     as given for display; evaluation goes through the reduced fundamental
//     discriminant, which generates the same primitive character.
//   * principal mode: chi_0 mod `modulus`, the indicator of
//     gcd(n, modulus) = 1. Distinct from the trivial character (different
//     zero set), which is Kronecker mode with discriminant 1.
struct DirichletCharacter {
  long modulus = 1;       // modulus the character is considered mod
  Z discriminant = 1;     // top argument as displayed (may be non-fundamental)
  Z fundamental = 1;      // reduced fundamental discriminant, used to evaluate
  bool principal = false; // principal-character mode flag

  // chi(n), in {-1, 0, 1}.
  int value(const Z& n) const;
  int value(long n) const { return value(Z(n)); }
  int operator()(long n) const { return value(Z(n)); }

  bool is_trivial() const { return !principal && fundamental == 1; }
  bool is_odd() const;  // chi(-1) = -1

  // Short display label: "1" (trivial), "chi_0" (principal), "chi_-4", ...
  std::string label() const;

  bool operator==(const DirichletCharacter& other) const;
};

// The trivial character, constant 1 on every integer.
DirichletCharacter trivial_character();

// The principal character chi_0 mod N.
DirichletCharacter principal_character(long modulus);

// The real character chi_m = (m/.). The discriminant m need not be
// fundamental; it is reduced internally for evaluation. The stated modulus
// defaults to |fundamental discriminant| (the conductor).
DirichletCharacter quadratic_character(const Z& m);
DirichletCharacter quadratic_character(long m);

// Reduced fundamental discriminant D0 of the character (m/.): the unique
// fundamental discriminant with m = D0 * square, or 1 if m is a square.
Z fundamental_discriminant(const Z& m);

// ------------------------------------------------------------------------ //
// Divisor sums                                                             //
// ------------------------------------------------------------------------ //

// sigma_r(n) = sum of d^r over divisors d of n, with the convention that a
// non-integer or non-positive argument contributes 0 (so sigma(n/c) can be
// written unconditionally in coefficient formulas).
Q sigma(long r, const Q& n);

// Twisted divisor sum sigma_{k;chi,psi}(n) = sum over d | n of
// psi(d) * chi(n/d) * d^k.
Z sigma_twisted(long k, const DirichletCharacter& chi,
                const DirichletCharacter& psi, long n);

// sigma_3^#(n) = sum of d^3 over divisors d of n whose cofactor n/d is odd.
Z sigma_sharp3(long n);

// Ascending list of the positive divisors of n (n >= 1).
std::vector<long> divisors(long n);

// ------------------------------------------------------------------------ //
// Bernoulli machinery and the periodic P2 polynomial                       //
// ------------------------------------------------------------------------ //

// P2(x) = {x}^2 - {x} + 1/6, the periodized second Bernoulli polynomial.
Q p2(const Q& x);

// f(x) = 1/12 + P2(2x)/2 - P2(x); nonnegative everywhere, period 1.
Q positivity_f(const Q& x);

// Cache of Bernoulli numbers B_k under the x/(e^x - 1) convention
// (B_1 = -1/2), with exact Bernoulli-polynomial evaluation.
class BernoulliTable {
 public:
  BernoulliTable() = default;

  // B_k; grows the cache on demand.
  const Q& number(long k);

  // B_k(x) by the explicit binomial expansion, exact.
  Q polynomial_at(long k, const Q& x);

 private:
  std::vector<Q> numbers_;
};

// Generalized Bernoulli number B_{k,psi} = N^{k-1} * sum over a = 1..N of
// psi(a) * B_k(a/N), where N is the modulus of psi.
Q gen_bernoulli(long k, const DirichletCharacter& psi);

}  // namespace qform

#endif  // QFORM_ARITH_HPP_
