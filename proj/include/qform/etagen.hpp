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

#ifndef QFORM_ETAGEN_HPP_
#define QFORM_ETAGEN_HPP_

#include <utility>
#include <vector>

#include "qform/qseries.hpp"
#include "qform/rational.hpp"

namespace qform {

// One dilated eta factor eta(delta * tau)^r.
struct EtaFactor {
  long delta;  // dilation, positive
  long r;      // exponent, nonzero
};

// A finite eta quotient: product of eta(delta_i * tau)^(r_i) with distinct
// dilations and nonzero exponents.
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;
};

// One generalized eta factor eta_{delta,g}(tau)^r. The exponent may be a
// half-integer, but only when g = 0 or g = delta/2 (where the two congruence
// classes of the defining product coincide).
struct GenEtaFactor {
  long delta;  // positive
  long g;      // residue, 0 <= g < delta
  Q r;         // exponent; denominator 1 or 2, the latter only at g = 0, delta/2
};

struct GenEtaQuotientSpec {
  std::vector<GenEtaFactor> factors;
};

// A cusp lambda / (mu * epsilon) of Gamma_0(N) with epsilon | N and
// gcd(lambda, N) = gcd(mu, N) = 1.
struct Cusp {
  long lambda;
  long mu;
  long epsilon;
};

// Throws BadInput when the invariants above are violated.
void validate(const EtaQuotientSpec& spec);
void validate(const GenEtaQuotientSpec& spec);

// Merge repeated dilations / (delta, g) pairs and drop zero exponents.
EtaQuotientSpec aggregate(const std::vector<EtaFactor>& factors);
GenEtaQuotientSpec aggregate_gen(const std::vector<GenEtaFactor>& factors);

// q-expansion of eta(delta * tau) = q^(delta/24) * product of
// (1 - q^(delta n)), expanded sparsely by the pentagonal-number theorem.
FracQSeries eta_series(long delta, long prec);

// q-expansion of the generalized eta function
//   eta_{delta,g}(tau) = q^(delta P2(g/delta) / 2)
//                        * prod_{n >= 1, n = g mod delta} (1 - q^n)
//                        * prod_{n >= 1, n = -g mod delta} (1 - q^n).
// Both products are taken as written even when the two classes coincide
// (g = 0 or delta/2), so eta_{1,0} = eta^2.
FracQSeries gen_eta_series(long delta, long g, long prec);

// q-expansion of an eta quotient; offset is sum(delta * r) / 24.
FracQSeries eta_quotient_series(const EtaQuotientSpec& spec, long prec);

// q-expansion of a generalized eta quotient. Half-integral exponents occur
// only at g = 0 or g = delta/2, where the defining double product is a
// perfect square; the half power is taken as the single congruence-class
// product (so eta_{delta,0}^(1/2) = eta(delta tau)).
FracQSeries gen_eta_quotient_series(const GenEtaQuotientSpec& spec, long prec);

// Vanishing orders of an eta quotient at the cusp classes d | N of
// Gamma_0(N), in the normalization
//   order(d) = (N/24) * sum_delta gcd(d,delta)^2 r_delta
//                       / (gcd(d, N/d) * d * delta).
// Only the sign carries meaning for modularity checks. Throws
// DeltaNotDividingLevel when some dilation does not divide N.
std::vector<std::pair<long, Q>> eta_quotient_cusp_orders(
    const EtaQuotientSpec& spec, long N);

// Vanishing order of a generalized eta quotient at one cusp of Gamma_0(N):
//   sum over factors of gcd(delta,eps)^2/(delta*eps)
//                       * P2(lambda g / gcd(delta,eps)) * r.
Q gen_eta_cusp_order(const GenEtaQuotientSpec& spec, long N, const Cusp& cusp);

// Modularity certificate data for a generalized eta quotient on Gamma_0(N):
//   cond_i_holds: both congruence sums
//     sum(delta P2(g/delta) r) and sum((N/delta) P2(0) r)
//   are even integers;
//   cond_ii_nonneg_everywhere: the cusp order above is >= 0 at every cusp;
//   weight: (1/2) * sum of the g = 0 exponents, exactly as the source
//   criterion states it (callers wanting the analytic weight of the series
//   should consult the space metadata instead).
struct TheoremAReport {
  bool cond_i_holds;
  bool cond_ii_nonneg_everywhere;
  Q weight;
};

TheoremAReport theorem_a_conditions(const GenEtaQuotientSpec& spec, long N);

// ------------------------------------------------------------------------ //
// Builders for the quotients the engine certifies                          //
// ------------------------------------------------------------------------ //

// Triangular part: prod eta^2(2 c_i tau) / eta(c_i tau), the integer-offset
// companion of the triangular generating function.
EtaQuotientSpec triangular_eta_spec(const std::vector<long>& C);

// theta(b tau) = eta^5(2b tau) / (eta^2(b tau) eta^2(4b tau)).
EtaQuotientSpec theta_eta_spec(long b);

// Squares+triangular mixed quotient: product of the theta quotients over B
// times the triangular quotient over C, aggregated.
EtaQuotientSpec square_triangular_eta_spec(const std::vector<long>& B,
                                           const std::vector<long>& C);

// Generalized eta quotient of the (shift-normalized) figurate generating
// function for a >= 3:
//   prod_i eta_{a c_i,0}^(1/2) * eta_{2a c_i, 2c_i} / eta_{a c_i, c_i}.
GenEtaQuotientSpec figurate_gen_eta_spec(long a, const std::vector<long>& C);

// All divisors of n in ascending order lives in arith.hpp; cusp sweep helper:
// every cusp representative class (lambda, epsilon) of Gamma_0(N) with
// lambda running over units mod N and epsilon | N (mu fixed to 1).
std::vector<Cusp> cusp_sweep(long N);

}  // namespace qform

#endif  // QFORM_ETAGEN_HPP_
