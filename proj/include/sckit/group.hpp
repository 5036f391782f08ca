/*
 * Copyright 2026 The sckit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Modular arithmetic over Schnorr groups: exponentiation, inversion,
// parameter generation and validation, and uniform scalar sampling.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sckit/integer.hpp"
#include "sckit/random.hpp"

namespace sckit {

inline constexpr int kMillerRabinRounds = 40;
inline constexpr std::size_t kMinGroupBits = 16;
inline constexpr std::size_t kDefaultCandidateBudget = 10000;

/// Public (p, q, g): g generates the order-q subgroup of Z_p^*.
struct GroupParams {
  Integer p;
  Integer q;
  Integer g;

  std::size_t bit_length() const { return sckit::bit_length(p); }
  std::size_t q_bit_length() const { return sckit::bit_length(q); }
  std::size_t p_bytes() const { return byte_length(p); }
  std::size_t q_bytes() const { return byte_length(q); }

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.p == b.p && a.q == b.q && a.g == b.g;
  }
};

inline Integer mod_pow(const Integer& base, const Integer& exponent, const Integer& modulus) {
  if (modulus < 2) throw ParameterError("mod_pow: modulus must be >= 2");
  if (exponent < 0) throw ParameterError("mod_pow: negative exponent");
  Integer b = base % modulus;
  if (b < 0) b += modulus;
  Integer out;
  mpz_powm(out.get_mpz_t(), b.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

inline Integer mod_inverse(const Integer& a, const Integer& modulus) {
  if (modulus < 2) throw ParameterError("mod_inverse: modulus must be >= 2");
  Integer out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw NotInvertible("mod_inverse: element has no inverse");
  }
  return out;
}

inline Integer mod_reduce(const Integer& a, const Integer& modulus) {
  Integer r = a % modulus;
  if (r < 0) r += modulus;
  return r;
}

inline bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), kMillerRabinRounds) > 0;
}

inline bool in_subgroup(const GroupParams& params, const Integer& element) {
  return element >= 1 && element < params.p && mod_pow(element, params.q, params.p) == 1;
}

enum class Validation { kOff, kOn };

/// base^(-exponent) mod p, computed in the exponent as base^(q - exponent).
inline Integer neg_pow(const GroupParams& params, const Integer& base, const Integer& exponent,
                       Validation validation = Validation::kOff) {
  if (exponent < 0 || exponent >= params.q) {
    throw ParameterError("neg_pow: exponent outside [0, q)");
  }
  if (validation == Validation::kOn && !in_subgroup(params, base)) {
    throw ParameterError("neg_pow: base is not in the order-q subgroup");
  }
  return mod_pow(base, params.q - exponent, params.p);
}

// The inverse route; must agree with neg_pow for subgroup elements.
inline Integer neg_pow_via_inverse(const GroupParams& params, const Integer& base,
                                   const Integer& exponent) {
  return mod_inverse(mod_pow(base, exponent, params.p), params.p);
}

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate_params(const GroupParams& c) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  if (!is_probable_prime(c.p)) fail("p is not prime");
  if (!is_probable_prime(c.q)) fail("q is not prime");
  if (c.q <= 0 || c.p <= 1 || (c.p - 1) % c.q != 0) fail("q does not divide p - 1");
  if (c.g == 1) fail("g = 1");
  if (c.g <= 1 || c.g >= c.p) fail("g outside (1, p)");
  if (c.p >= 2 && c.q >= 0 && c.g > 1 && c.g < c.p && mod_pow(c.g, c.q, c.p) != 1) {
    fail("g does not have order q");
  }
  return report;
}

/// Uniform integer with exactly `bits` bits or fewer: candidate drawn from
/// ceil(bits/8) bytes with the excess high bits masked.
inline Integer random_bits(std::size_t bits, RandomSource& rng) {
  if (bits == 0) return 0;
  Bytes buf = rng.bytes((bits + 7) / 8);
  std::size_t excess = buf.size() * 8 - bits;
  buf[0] &= static_cast<std::uint8_t>(0xffu >> excess);
  return from_bytes_be(buf);
}

/// Uniform integer in [lo, hi] by rejection.
inline Integer random_in_range(const Integer& lo, const Integer& hi, RandomSource& rng) {
  if (hi < lo) throw ParameterError("random_in_range: empty range");
  Integer span = hi - lo;
  std::size_t bits = bit_length(span);
  for (;;) {
    Integer c = random_bits(bits, rng);
    if (c <= span) return lo + c;
  }
}

/// Scalar in [1, q - 1], never 0 and never >= q.
class RandomScalar {
 public:
  RandomScalar(const GroupParams& params, Integer value) : value_(std::move(value)) {
    if (value_ < 1 || value_ >= params.q) throw ParameterError("scalar outside [1, q-1]");
  }
  const Integer& value() const { return value_; }

 private:
  Integer value_;
};

inline RandomScalar random_scalar(const GroupParams& params, RandomSource& rng) {
  if (params.q < 2) throw ParameterError("random_scalar: q < 2");
  const std::size_t bits = params.q_bit_length();
  for (;;) {
    Integer c = random_bits(bits, rng);
    if (c >= 1 && c < params.q) return RandomScalar(params, std::move(c));
  }
}

inline Integer random_prime(std::size_t bits, RandomSource& rng, std::size_t& budget) {
  while (budget > 0) {
    --budget;
    Integer c = random_bits(bits, rng);
    mpz_setbit(c.get_mpz_t(), bits - 1);
    mpz_setbit(c.get_mpz_t(), 0);
    if (is_probable_prime(c)) return c;
  }
  throw GenerationFailure("no prime found within candidate budget");
}

/// Random q of q_bits bits, then p = k*q + 1 of exactly `bits` bits, then
/// g = h^((p-1)/q) for random h until g != 1. Every primality candidate
/// counts against `candidate_budget`.
inline GroupParams generate_params(std::size_t bits, std::size_t q_bits, RandomSource& rng,
                                   std::size_t candidate_budget = kDefaultCandidateBudget) {
  if (bits < kMinGroupBits) throw ParameterError("generate_params: p must have at least 16 bits");
  if (q_bits < 2 || q_bits >= bits) {
    throw ParameterError("generate_params: need 2 <= q_bits < p_bits");
  }
  std::size_t budget = candidate_budget;
  const Integer p_min = Integer(1) << (bits - 1);
  const Integer p_max = (Integer(1) << bits) - 1;
  while (budget > 0) {
    Integer q = random_prime(q_bits, rng, budget);
    // k even so that p is odd; k in [k_lo, k_hi] keeps p inside [p_min, p_max].
    Integer k_lo = (p_min - 1 + q - 1) / q;
    Integer k_hi = (p_max - 1) / q;
    if (k_lo % 2 != 0) ++k_lo;
    if (k_hi % 2 != 0) --k_hi;
    if (k_hi < k_lo) continue;
    // Retry p for this q a bounded number of times before drawing a new q.
    for (int attempt = 0; attempt < 4096 && budget > 0; ++attempt) {
      --budget;
      Integer half = random_in_range(k_lo / 2, k_hi / 2, rng);
      Integer p = 2 * half * q + 1;
      if (!is_probable_prime(p)) continue;
      const Integer cofactor = (p - 1) / q;
      for (int h_try = 0; h_try < 64; ++h_try) {
        Integer h = random_in_range(2, p - 2, rng);
        Integer g = mod_pow(h, cofactor, p);
        if (g != 1) return GroupParams{p, q, g};
      }
    }
  }
  throw GenerationFailure("generate_params: candidate budget exhausted");
}

}  // namespace sckit
