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

#include "qform/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace qform {

// ------------------------------------------------------------------------ //
// Kronecker symbol and characters                                          //
// ------------------------------------------------------------------------ //

int kronecker(const Z& m, const Z& n) {
  // GMP implements the full Kronecker extension, including n <= 0.
  return mpz_kronecker(m.get_mpz_t(), n.get_mpz_t());
}

int kronecker(long m, long n) { return kronecker(Z(m), Z(n)); }

Z fundamental_discriminant(const Z& m) {
  if (m == 0) {
    throw std::invalid_argument("fundamental_discriminant: m = 0");
  }
  // Strip the square part: m = sign * squarefree * square.
  Z a = abs(m);
  Z squarefree = 1;
  for (Z p = 2; p * p <= a; ++p) {
    if (a % p != 0) continue;
    int count = 0;
    while (a % p == 0) {
      a /= p;
      ++count;
    }
    if (count % 2 == 1) squarefree *= p;
  }
  squarefree *= a;  // leftover prime, if any
  if (m < 0) squarefree = -squarefree;
  if (squarefree == 1) return Z(1);
  // d = 1 mod 4 is already a fundamental discriminant; otherwise 4d is.
  Z residue = ((squarefree % 4) + 4) % 4;
  return residue == 1 ? squarefree : 4 * squarefree;
}

int DirichletCharacter::value(const Z& n) const {
  if (principal) {
    Z g = gcd(n, Z(modulus));
    return g == 1 ? 1 : 0;
  }
  return kronecker(fundamental, n);
}

bool DirichletCharacter::is_odd() const { return value(Z(-1)) == -1; }

std::string DirichletCharacter::label() const {
  if (principal) return "chi_0";
  if (fundamental == 1) return "1";
  return "chi_" + fundamental.get_str();
}

bool DirichletCharacter::operator==(const DirichletCharacter& other) const {
  if (principal != other.principal) return false;
  if (principal) return modulus == other.modulus;
  return fundamental == other.fundamental;
}

DirichletCharacter trivial_character() { return DirichletCharacter{}; }

DirichletCharacter principal_character(long modulus) {
  DirichletCharacter chi;
  chi.modulus = modulus;
  chi.principal = true;
  return chi;
}

DirichletCharacter quadratic_character(const Z& m) {
  DirichletCharacter chi;
  chi.discriminant = m;
  chi.fundamental = fundamental_discriminant(m);
  Z conductor = abs(chi.fundamental);
  chi.modulus = conductor.fits_slong_p() ? conductor.get_si() : 0;
  return chi;
}

DirichletCharacter quadratic_character(long m) {
  return quadratic_character(Z(m));
}

// ------------------------------------------------------------------------ //
// Divisor sums                                                             //
// ------------------------------------------------------------------------ //

std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Q sigma(long r, const Q& n) {
  if (!is_integer(n) || n <= 0) return Q(0);
  Z total = 0;
  for (long d : divisors(to_long(n))) {
    Z power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(r));
    total += power;
  }
  return Q(total);
}

Z sigma_twisted(long k, const DirichletCharacter& chi,
                const DirichletCharacter& psi, long n) {
  if (n < 1) throw std::invalid_argument("sigma_twisted: n must be positive");
  Z total = 0;
  for (long d : divisors(n)) {
    int psi_d = psi.value(Z(d));
    if (psi_d == 0) continue;
    int chi_cofactor = chi.value(Z(n / d));
    if (chi_cofactor == 0) continue;
    Z power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(k));
    total += Z(psi_d * chi_cofactor) * power;
  }
  return total;
}

Z sigma_sharp3(long n) {
  if (n < 1) throw std::invalid_argument("sigma_sharp3: n must be positive");
  Z total = 0;
  for (long d : divisors(n)) {
    if ((n / d) % 2 == 0) continue;
    total += Z(d) * d * d;
  }
  return total;
}

// ------------------------------------------------------------------------ //
// Bernoulli machinery and P2                                               //
// ------------------------------------------------------------------------ //

Q p2(const Q& x) {
  Q f = frac_part(x);
  return f * f - f + make_frac(1, 6);
}

Q positivity_f(const Q& x) {
  return make_frac(1, 12) + p2(2 * x) / 2 - p2(x);
}

const Q& BernoulliTable::number(long k) {
  if (k < 0) throw std::invalid_argument("BernoulliTable: negative index");
  if (numbers_.empty()) numbers_.emplace_back(1);
  // Recurrence: sum over j = 0..m of C(m+1, j) B_j = 0, which realizes the
  // x/(e^x - 1) convention (B_1 = -1/2).
  while (static_cast<long>(numbers_.size()) <= k) {
    long m = static_cast<long>(numbers_.size());
    Q sum = 0;
    for (long j = 0; j < m; ++j) {
      Z binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                   static_cast<unsigned long>(j));
      sum += Q(binom) * numbers_[j];
    }
    numbers_.push_back(-sum / (m + 1));
  }
  return numbers_[k];
}

Q BernoulliTable::polynomial_at(long k, const Q& x) {
  // B_k(x) = sum over j of C(k, j) B_j x^(k-j), all exact.
  Q total = 0;
  Q x_power = 1;  // runs x^0, x^1, ... while j runs k, k-1, ...
  for (long j = k; j >= 0; --j) {
    Z binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                 static_cast<unsigned long>(j));
    total += Q(binom) * number(j) * x_power;
    x_power *= x;
  }
  return total;
}

Q gen_bernoulli(long k, const DirichletCharacter& psi) {
  if (k < 1) throw std::invalid_argument("gen_bernoulli: k must be >= 1");
  BernoulliTable table;
  long modulus = psi.modulus;
  if (modulus < 1) {
    throw std::invalid_argument("gen_bernoulli: character needs a modulus");
  }
  Q sum = 0;
  for (long a = 1; a <= modulus; ++a) {
    int psi_a = psi.value(Z(a));
    if (psi_a == 0) continue;
    sum += Q(psi_a) * table.polynomial_at(k, make_frac(a, modulus));
  }
  Z power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(modulus),
                static_cast<unsigned long>(k - 1));
  return Q(power) * sum;
}

}  // namespace qform
