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

#include "qform/etagen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "qform/arith.hpp"
#include "qform/errors.hpp"

namespace qform {

namespace {

// Canonical residue with eta_{delta,g} = eta_{delta,delta-g} folded to the
// smaller representative.
long canonical_residue(long delta, long g) {
  g %= delta;
  if (g < 0) g += delta;
  return std::min(g, (delta - g) % delta);
}

bool is_even_integer(const Q& x) {
  return x.get_den() == 1 && mpz_even_p(x.get_num().get_mpz_t());
}

}  // namespace

void validate(const EtaQuotientSpec& spec) {
  std::set<long> seen;
  for (const auto& f : spec.factors) {
    if (f.delta <= 0) throw BadInput("eta factor dilation must be positive");
    if (f.r == 0) throw BadInput("eta factor exponent must be nonzero");
    if (!seen.insert(f.delta).second)
      throw BadInput("eta factor dilations must be distinct");
  }
}

void validate(const GenEtaQuotientSpec& spec) {
  std::set<std::pair<long, long>> seen;
  for (const auto& f : spec.factors) {
    if (f.delta <= 0)
      throw BadInput("generalized eta factor dilation must be positive");
    if (f.g < 0 || f.g >= f.delta)
      throw BadInput("generalized eta residue must satisfy 0 <= g < delta");
    if (f.r == 0)
      throw BadInput("generalized eta factor exponent must be nonzero");
    const Z& den = f.r.get_den();
    if (den != 1 && den != 2)
      throw BadInput("generalized eta exponent denominator must be 1 or 2");
    if (den == 2 && f.g != 0 && 2 * f.g != f.delta)
      throw BadInput(
          "half-integral exponent only allowed at g = 0 or g = delta/2");
    if (!seen.insert({f.delta, f.g}).second)
      throw BadInput("generalized eta factor (delta, g) pairs must be distinct");
  }
}

EtaQuotientSpec aggregate(const std::vector<EtaFactor>& factors) {
  std::map<long, long> merged;
  for (const auto& f : factors) {
    if (f.delta <= 0) throw BadInput("eta factor dilation must be positive");
    merged[f.delta] += f.r;
  }
  EtaQuotientSpec spec;
  for (const auto& [delta, r] : merged)
    if (r != 0) spec.factors.push_back({delta, r});
  validate(spec);
  return spec;
}

GenEtaQuotientSpec aggregate_gen(const std::vector<GenEtaFactor>& factors) {
  std::map<std::pair<long, long>, Q> merged;
  for (const auto& f : factors) {
    if (f.delta <= 0)
      throw BadInput("generalized eta factor dilation must be positive");
    merged[{f.delta, canonical_residue(f.delta, f.g)}] += f.r;
  }
  GenEtaQuotientSpec spec;
  for (const auto& [key, r] : merged)
    if (r != 0) spec.factors.push_back({key.first, key.second, r});
  validate(spec);
  return spec;
}

FracQSeries eta_series(long delta, long prec) {
  if (delta <= 0) throw BadInput("eta dilation must be positive");
  if (prec <= 0) throw BadInput("precision must be positive");
  std::vector<Q> coeffs(static_cast<size_t>(prec), Q(0));
  coeffs[0] = 1;
  for (long k = 1;; ++k) {
    long e_pos = delta * (k * (3 * k - 1) / 2);
    long e_neg = delta * (k * (3 * k + 1) / 2);
    if (e_pos >= prec) break;
    Q sign = (k % 2 == 0) ? Q(1) : Q(-1);
    coeffs[static_cast<size_t>(e_pos)] += sign;
    if (e_neg < prec) coeffs[static_cast<size_t>(e_neg)] += sign;
  }
  return FracQSeries{make_frac(delta, 24), std::move(coeffs)};
}

FracQSeries gen_eta_series(long delta, long g, long prec) {
  if (delta <= 0) throw BadInput("eta dilation must be positive");
  if (prec <= 0) throw BadInput("precision must be positive");
  g %= delta;
  if (g < 0) g += delta;
  Q offset = Q(delta) * p2(make_frac(g, delta)) / 2;
  std::vector<Q> coeffs(static_cast<size_t>(prec), Q(0));
  coeffs[0] = 1;
  long g_neg = (delta - g) % delta;
  for (long n = 1; n < prec; ++n) {
    long m = n % delta;
    int mult = (m == g ? 1 : 0) + (m == g_neg ? 1 : 0);
    for (int t = 0; t < mult; ++t)
      for (long j = prec - 1; j >= n; --j) coeffs[j] -= coeffs[j - n];
  }
  return FracQSeries{offset, std::move(coeffs)};
}

FracQSeries eta_quotient_series(const EtaQuotientSpec& spec, long prec) {
  validate(spec);
  FracQSeries result = constant_series(Q(1), prec);
  for (const auto& f : spec.factors)
    result = mul(result, pow(eta_series(f.delta, prec), f.r));
  return result;
}

namespace {

// Single congruence-class product q^(delta P2(g/delta) / 4)
// * prod_{n >= 1, n = g mod delta} (1 - q^n), the square root of
// eta_{delta,g} when the two classes of the double product coincide.
FracQSeries gen_eta_half_series(long delta, long g, long prec) {
  Q offset = Q(delta) * p2(make_frac(g, delta)) / 4;
  std::vector<Q> coeffs(static_cast<size_t>(prec), Q(0));
  coeffs[0] = 1;
  for (long n = 1; n < prec; ++n)
    if (n % delta == g)
      for (long j = prec - 1; j >= n; --j) coeffs[j] -= coeffs[j - n];
  return FracQSeries{offset, std::move(coeffs)};
}

}  // namespace

FracQSeries gen_eta_quotient_series(const GenEtaQuotientSpec& spec,
                                    long prec) {
  validate(spec);
  FracQSeries result = constant_series(Q(1), prec);
  for (const auto& f : spec.factors) {
    if (f.r.get_den() == 1) {
      result =
          mul(result, pow(gen_eta_series(f.delta, f.g, prec), to_long(f.r)));
    } else {
      result = mul(result, pow(gen_eta_half_series(f.delta, f.g, prec),
                               to_long(Q(2) * f.r)));
    }
  }
  return result;
}

std::vector<std::pair<long, Q>> eta_quotient_cusp_orders(
    const EtaQuotientSpec& spec, long N) {
  validate(spec);
  if (N <= 0) throw BadInput("level must be positive");
  for (const auto& f : spec.factors)
    if (N % f.delta != 0)
      throw DeltaNotDividingLevel("dilation " + std::to_string(f.delta) +
                                  " does not divide level " +
                                  std::to_string(N));
  std::vector<std::pair<long, Q>> orders;
  for (long d : divisors(N)) {
    Q sum(0);
    for (const auto& f : spec.factors) {
      long gd = std::gcd(d, f.delta);
      sum += make_frac(gd * gd * f.r, std::gcd(d, N / d) * d * f.delta);
    }
    orders.emplace_back(d, make_frac(N, 24) * sum);
  }
  return orders;
}

Q gen_eta_cusp_order(const GenEtaQuotientSpec& spec, long N, const Cusp& cusp) {
  validate(spec);
  if (N <= 0) throw BadInput("level must be positive");
  if (cusp.epsilon <= 0 || N % cusp.epsilon != 0)
    throw BadInput("cusp denominator epsilon must divide the level");
  if (std::gcd(cusp.lambda, N) != 1 || std::gcd(cusp.mu, N) != 1)
    throw BadInput("cusp parameters lambda, mu must be coprime to the level");
  Q sum(0);
  for (const auto& f : spec.factors) {
    if (N % f.delta != 0)
      throw DeltaNotDividingLevel("dilation " + std::to_string(f.delta) +
                                  " does not divide level " +
                                  std::to_string(N));
    long gd = std::gcd(f.delta, cusp.epsilon);
    sum += make_frac(gd * gd, f.delta * cusp.epsilon) *
           p2(make_frac(cusp.lambda * f.g, gd)) * f.r;
  }
  return sum;
}

std::vector<Cusp> cusp_sweep(long N) {
  if (N <= 0) throw BadInput("level must be positive");
  std::vector<Cusp> cusps;
  for (long eps : divisors(N))
    for (long lambda = 1; lambda <= N; ++lambda)
      if (std::gcd(lambda, N) == 1) cusps.push_back({lambda, 1, eps});
  return cusps;
}

TheoremAReport theorem_a_conditions(const GenEtaQuotientSpec& spec, long N) {
  validate(spec);
  if (N <= 0) throw BadInput("level must be positive");
  for (const auto& f : spec.factors)
    if (N % f.delta != 0)
      throw DeltaNotDividingLevel("dilation " + std::to_string(f.delta) +
                                  " does not divide level " +
                                  std::to_string(N));
  Q sum_delta(0), sum_codelta(0), weight(0);
  for (const auto& f : spec.factors) {
    sum_delta += Q(f.delta) * p2(make_frac(f.g, f.delta)) * f.r;
    sum_codelta += Q(N / f.delta) * p2(Q(0)) * f.r;
    if (f.g == 0) weight += f.r;
  }
  TheoremAReport report;
  report.cond_i_holds =
      is_even_integer(sum_delta) && is_even_integer(sum_codelta);
  report.weight = weight / 2;
  report.cond_ii_nonneg_everywhere = true;
  for (const Cusp& cusp : cusp_sweep(N)) {
    if (gen_eta_cusp_order(spec, N, cusp) < 0) {
      report.cond_ii_nonneg_everywhere = false;
      break;
    }
  }
  return report;
}

EtaQuotientSpec triangular_eta_spec(const std::vector<long>& C) {
  std::vector<EtaFactor> factors;
  for (long c : C) {
    if (c <= 0) throw BadInput("dilations must be positive");
    factors.push_back({2 * c, 2});
    factors.push_back({c, -1});
  }
  return aggregate(factors);
}

EtaQuotientSpec theta_eta_spec(long b) {
  if (b <= 0) throw BadInput("dilations must be positive");
  return aggregate({{2 * b, 5}, {b, -2}, {4 * b, -2}});
}

EtaQuotientSpec square_triangular_eta_spec(const std::vector<long>& B,
                                           const std::vector<long>& C) {
  std::vector<EtaFactor> factors;
  for (long b : B) {
    if (b <= 0) throw BadInput("dilations must be positive");
    factors.push_back({2 * b, 5});
    factors.push_back({b, -2});
    factors.push_back({4 * b, -2});
  }
  for (long c : C) {
    if (c <= 0) throw BadInput("dilations must be positive");
    factors.push_back({2 * c, 2});
    factors.push_back({c, -1});
  }
  return aggregate(factors);
}

GenEtaQuotientSpec figurate_gen_eta_spec(long a, const std::vector<long>& C) {
  if (a <= 0) throw BadInput("figurate parameter must be positive");
  std::vector<GenEtaFactor> factors;
  for (long c : C) {
    if (c <= 0) throw BadInput("dilations must be positive");
    factors.push_back({a * c, 0, make_frac(1, 2)});
    factors.push_back({2 * a * c, (2 * c) % (2 * a * c), Q(1)});
    factors.push_back({a * c, c % (a * c), Q(-1)});
  }
  return aggregate_gen(factors);
}

}  // namespace qform
