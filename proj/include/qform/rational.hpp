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

#ifndef QFORM_RATIONAL_HPP_
#define QFORM_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

namespace qform {

// Exact arithmetic aliases. Everything in the engine is big-integer /
// big-rational; no floating point appears anywhere in any code path.
using Z = mpz_class;  // arbitrary-precision integer
using Q = mpq_class;  // arbitrary-precision rational, kept canonical

// Builds the canonical fraction num/den. mpq_class(num, den) does not
// canonicalize on its own, so raw fractions are constructed through here.
Q make_frac(long num, long den);
Q make_frac(const Z& num, const Z& den);

// floor(x) as an exact integer (correct for negative x).
Z floor_q(const Q& x);

// Fractional part {x} = x - floor(x), always in [0, 1).
Q frac_part(const Q& x);

// True when x is an integer (denominator 1 in canonical form).
bool is_integer(const Q& x);

// x as a machine long; precondition: x integral and within long range.
long to_long(const Q& x);
long to_long(const Z& x);

// Exact "num/den" rendering; integer values render without a "/1" tail.
// Never produces a decimal expansion.
std::string q_to_string(const Q& x);

}  // namespace qform

#endif  // QFORM_RATIONAL_HPP_
