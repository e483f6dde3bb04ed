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
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "qform/arith.hpp"
#include "qform/errors.hpp"
#include "qform/etagen.hpp"

using namespace qform;

TEST_CASE("eta series is the sparse pentagonal expansion") {
  FracQSeries eta = eta_series(1, 60);
  CHECK(eta.offset == make_frac(1, 24));
  // 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + q^22 + q^26 - q^35 - q^40 + ...
  std::set<long> plus = {0, 5, 7, 22, 26, 51, 57};
  std::set<long> minus = {1, 2, 12, 15, 35, 40};
  for (long n = 0; n < 60; ++n) {
    Q expected = plus.count(n) ? Q(1) : (minus.count(n) ? Q(-1) : Q(0));
    CHECK(eta.coeffs[n] == expected);
  }

  FracQSeries eta2 = eta_series(2, 50);
  CHECK(eta2.offset == make_frac(1, 12));
  CHECK(eta2 == dilate(eta_series(1, 25), 2));
}

TEST_CASE("generalized eta at g = 0 doubles the classical product") {
  // eta_{1,0} = eta^2: the two congruence classes coincide and each factor
  // appears twice.
  FracQSeries lhs = gen_eta_series(1, 0, 50);
  FracQSeries rhs = pow(eta_series(1, 50), 2);
  CHECK(lhs.offset == make_frac(1, 12));
  CHECK(lhs == rhs);

  // eta_{delta,0} = eta(delta tau)^2 for a few dilations.
  for (long delta : {2L, 3L, 5L}) {
    CHECK(gen_eta_series(delta, 0, 40) == pow(eta_series(delta, 40), 2));
  }
}

TEST_CASE("generalized eta at g = delta/2 matches an eta quotient") {
  // eta_{2,1} = eta(tau)^2 / eta(2 tau)^2.
  FracQSeries lhs = gen_eta_series(2, 1, 50);
  FracQSeries rhs = mul(pow(eta_series(1, 50), 2),
                        pow(eta_series(2, 50), -2));
  CHECK(lhs.offset == make_frac(-1, 12));
  CHECK(lhs == rhs);
}

TEST_CASE("generalized eta off the special residues") {
  // eta_{3,1} = eta(tau) / eta(3 tau).
  FracQSeries lhs = gen_eta_series(3, 1, 50);
  FracQSeries rhs = mul(eta_series(1, 50), pow(eta_series(3, 50), -1));
  CHECK(lhs.offset == make_frac(-1, 12));
  CHECK(lhs == rhs);

  // Mirror residue gives the same function.
  CHECK(gen_eta_series(5, 4, 40) == gen_eta_series(5, 1, 40));
}

TEST_CASE("duplication: eta_{delta,g}(c tau) = eta_{c delta, c g}(tau)") {
  FracQSeries left = dilate(gen_eta_series(3, 1, 60), 2);
  CHECK(left == gen_eta_series(6, 2, 2 * 59 + 1));

  std::mt19937 rng(0x5eed);
  for (int trial = 0; trial < 50; ++trial) {
    long delta = 1 + static_cast<long>(rng() % 4);
    long g = static_cast<long>(rng() % delta);
    long c = 1 + static_cast<long>(rng() % 4);
    FracQSeries dilated = dilate(gen_eta_series(delta, g, 30), c);
    FracQSeries direct = gen_eta_series(c * delta, c * g, c * 29 + 1);
    CHECK(dilated == direct);
  }
}

TEST_CASE("theta quotient expands to the squares series") {
  FracQSeries theta = eta_quotient_series(theta_eta_spec(1), 50);
  CHECK(theta.offset == 0);
  for (long n = 0; n < 50; ++n) {
    long root = static_cast<long>(std::lround(std::sqrt(double(n))));
    bool square = root * root == n;
    CHECK(theta.coeffs[n] == (n == 0 ? Q(1) : (square ? Q(2) : Q(0))));
  }
}

TEST_CASE("triangular quotient expands to the triangular series") {
  FracQSeries psi = eta_quotient_series(triangular_eta_spec({1}), 50);
  CHECK(psi.offset == make_frac(1, 8));
  std::set<long> triangular;
  for (long m = 0; m * (m + 1) / 2 < 50; ++m) triangular.insert(m * (m + 1) / 2);
  for (long n = 0; n < 50; ++n) {
    CHECK(psi.coeffs[n] == (triangular.count(n) ? Q(1) : Q(0)));
  }
}

TEST_CASE("level six weight four cusp quotient") {
  EtaQuotientSpec spec = aggregate({{1, 2}, {2, 2}, {3, 2}, {6, 2}});
  FracQSeries f = eta_quotient_series(spec, 40);
  CHECK(f.offset == 1);
  CHECK(f.coeffs[0] == 1);
  // Independent route: multiply the four pentagonal expansions directly.
  FracQSeries direct = eta_series(1, 40);
  direct = mul(direct, eta_series(1, 40));
  for (long d : {2L, 3L, 6L})
    direct = mul(mul(direct, eta_series(d, 40)), eta_series(d, 40));
  CHECK(f == direct);
  // Strictly positive order at every cusp of level 6.
  for (const auto& [d, ord] : eta_quotient_cusp_orders(spec, 6)) {
    INFO("cusp class ", d);
    CHECK(ord > 0);
  }
}

TEST_CASE("eta^24 has order one at the single cusp of level one") {
  EtaQuotientSpec delta_spec = aggregate({{1, 24}});
  auto orders = eta_quotient_cusp_orders(delta_spec, 1);
  REQUIRE(orders.size() == 1);
  CHECK(orders[0].first == 1);
  CHECK(orders[0].second == 1);
}

TEST_CASE("theta quotient cusp orders at level four") {
  auto orders = eta_quotient_cusp_orders(theta_eta_spec(1), 4);
  REQUIRE(orders.size() == 3);
  CHECK(orders[0] == std::pair<long, Q>(1, Q(0)));
  CHECK(orders[1] == std::pair<long, Q>(2, make_frac(1, 4)));
  CHECK(orders[2] == std::pair<long, Q>(4, Q(0)));
}

TEST_CASE("cusp orders reject dilations outside the level") {
  CHECK_THROWS_AS(eta_quotient_cusp_orders(theta_eta_spec(1), 2),
                  DeltaNotDividingLevel);
  GenEtaQuotientSpec fig = figurate_gen_eta_spec(3, {1});
  CHECK_THROWS_AS(gen_eta_cusp_order(fig, 3, {1, 1, 1}),
                  DeltaNotDividingLevel);
}

TEST_CASE("mixed square-triangular quotient aggregates with cancellation") {
  EtaQuotientSpec spec = square_triangular_eta_spec({1}, {2});
  // eta^5(2)/eta^2(1)eta^2(4) * eta^2(4)/eta(2) = eta^4(2)/eta^2(1).
  REQUIRE(spec.factors.size() == 2);
  CHECK(spec.factors[0].delta == 1);
  CHECK(spec.factors[0].r == -2);
  CHECK(spec.factors[1].delta == 2);
  CHECK(spec.factors[1].r == 4);
}

TEST_CASE("figurate quotient builder") {
  SUBCASE("a = 1 collapses to the triangular quotient") {
    GenEtaQuotientSpec spec = figurate_gen_eta_spec(1, {1});
    REQUIRE(spec.factors.size() == 2);
    CHECK(spec.factors[0].delta == 1);
    CHECK(spec.factors[0].g == 0);
    CHECK(spec.factors[0].r == make_frac(-1, 2));
    CHECK(spec.factors[1].delta == 2);
    CHECK(spec.factors[1].g == 0);
    CHECK(spec.factors[1].r == 1);
    CHECK(gen_eta_quotient_series(spec, 60) ==
          eta_quotient_series(triangular_eta_spec({1}), 60));
  }

  SUBCASE("a = 2 collapses to the squares quotient") {
    CHECK(gen_eta_quotient_series(figurate_gen_eta_spec(2, {1}), 50) ==
          eta_quotient_series(theta_eta_spec(1), 50));
  }

  SUBCASE("a = 3 is supported on the shifted pentagonal-like exponents") {
    FracQSeries phi = gen_eta_quotient_series(figurate_gen_eta_spec(3, {1}), 40);
    // Offset is the normalizing shift (a-2)^2/(8a) = 1/24; exponents are
    // 1/24 + n(3n-1)/2 over integer n.
    CHECK(phi.offset == make_frac(1, 24));
    std::set<long> support;
    for (long m = -10; m <= 10; ++m) {
      long e = m * (3 * m - 1) / 2;
      if (e >= 0 && e < 40) support.insert(e);
    }
    for (long n = 0; n < 40; ++n) {
      CHECK(phi.coeffs[n] == (support.count(n) ? Q(1) : Q(0)));
    }
  }
}

TEST_CASE("cusp order matches the per-factor case split") {
  // For one figurate factor group (a, c) at level N = 2ac the order at a
  // cusp with denominator eps splits by whether gcd(2ac, eps) doubles
  // gcd(ac, eps):
  //   doubled:  g1^2/(ac eps) * (1/12 + P2(lambda c / g1))
  //   not:      g1^2/(ac eps) * f(lambda c / g1)
  // with g1 = gcd(ac, eps) and f the nonnegative combination from arith.
  for (long a : {3L, 4L, 5L}) {
    for (long c : {1L, 2L, 3L}) {
      GenEtaQuotientSpec spec = figurate_gen_eta_spec(a, {c});
      long N = 2 * a * c;
      for (const Cusp& cusp : cusp_sweep(N)) {
        Q got = gen_eta_cusp_order(spec, N, cusp);
        long g1 = std::gcd(a * c, cusp.epsilon);
        Q x = make_frac(cusp.lambda * c, g1);
        Q expected;
        if (std::gcd(2 * a * c, cusp.epsilon) == 2 * g1) {
          expected = make_frac(g1 * g1, a * c * cusp.epsilon) *
                     (make_frac(1, 12) + p2(x));
        } else {
          expected = make_frac(g1 * g1, a * c * cusp.epsilon) * positivity_f(x);
        }
        INFO("a=", a, " c=", c, " lambda=", cusp.lambda, " eps=", cusp.epsilon);
        CHECK(got == expected);
        CHECK(got >= 0);
      }
    }
  }
}

TEST_CASE("modularity conditions for the figurate quotient") {
  // h factor groups with a = 3, c = 1: the first congruence sum is h/12,
  // an even integer exactly when 24 | h.
  auto repeated = [](long h) {
    return figurate_gen_eta_spec(3, std::vector<long>(h, 1));
  };
  TheoremAReport pass = theorem_a_conditions(repeated(24), 6);
  CHECK(pass.cond_i_holds);
  CHECK(pass.cond_ii_nonneg_everywhere);
  // Weight per the quoted criterion: half the sum of g = 0 exponents.
  CHECK(pass.weight == 6);

  TheoremAReport fail = theorem_a_conditions(repeated(23), 6);
  CHECK_FALSE(fail.cond_i_holds);
  CHECK(fail.cond_ii_nonneg_everywhere);
}

TEST_CASE("quotient series invert to one") {
  EtaQuotientSpec spec = theta_eta_spec(3);
  EtaQuotientSpec inverse;
  for (const auto& f : spec.factors) inverse.factors.push_back({f.delta, -f.r});
  FracQSeries prod =
      mul(eta_quotient_series(spec, 40), eta_quotient_series(inverse, 40));
  CHECK(prod == constant_series(Q(1), 40));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate(EtaQuotientSpec{{{2, 1}, {2, 1}}}), BadInput);
  CHECK_THROWS_AS(validate(EtaQuotientSpec{{{3, 0}}}), BadInput);
  CHECK_THROWS_AS(validate(GenEtaQuotientSpec{{{5, 1, make_frac(1, 2)}}}),
                  BadInput);
  CHECK_THROWS_AS(validate(GenEtaQuotientSpec{{{5, 5, Q(1)}}}), BadInput);
  CHECK_NOTHROW(validate(GenEtaQuotientSpec{{{5, 0, make_frac(3, 2)}}}));
  CHECK_NOTHROW(validate(GenEtaQuotientSpec{{{6, 3, make_frac(-1, 2)}}}));

  // aggregate_gen folds mirror residues into one factor.
  GenEtaQuotientSpec folded = aggregate_gen({{5, 4, Q(1)}, {5, 1, Q(1)}});
  REQUIRE(folded.factors.size() == 1);
  CHECK(folded.factors[0].delta == 5);
  CHECK(folded.factors[0].g == 1);
  CHECK(folded.factors[0].r == 2);
}
