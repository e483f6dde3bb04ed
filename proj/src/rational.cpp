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

#include "qform/rational.hpp"

#include <stdexcept>

namespace qform {

Q make_frac(long num, long den) {
  Q x(num, den);
  x.canonicalize();
  return x;
}

Q make_frac(const Z& num, const Z& den) {
  Q x(num, den);
  x.canonicalize();
  return x;
}

Z floor_q(const Q& x) {
  Z r;
  // fdiv = floor division, exact for negative numerators as well.
  mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

Q frac_part(const Q& x) { return x - Q(floor_q(x)); }

bool is_integer(const Q& x) { return x.get_den() == 1; }

long to_long(const Q& x) {
  if (!is_integer(x)) {
    throw std::invalid_argument("to_long: value is not an integer: " +
                                q_to_string(x));
  }
  return to_long(x.get_num());
}

long to_long(const Z& x) {
  if (!x.fits_slong_p()) {
    throw std::overflow_error("to_long: value out of range");
  }
  return x.get_si();
}

std::string q_to_string(const Q& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace qform
