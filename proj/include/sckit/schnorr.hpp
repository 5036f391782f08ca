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

// Schnorr signatures over a Schnorr group: r = g^k, e = H(M || r) mod q,
// s = k - x*e mod q; verification recomputes r_v = g^s * y^e.

#pragma once

#include <array>
#include <optional>

#include "sckit/group.hpp"
#include "sckit/ops.hpp"
#include "sckit/primitives.hpp"

namespace sckit {

struct SchnorrKeyPair {
  Integer x;  // private, [1, q-1]
  Integer y;  // g^x mod p
};

struct SchnorrSignature {
  Integer s;
  Integer e;

  friend bool operator==(const SchnorrSignature&, const SchnorrSignature&) = default;
};

inline SchnorrKeyPair schnorr_keypair_from_private(const GroupParams& params, const Integer& x) {
  RandomScalar checked(params, x);
  return {checked.value(), mod_pow(params.g, checked.value(), params.p)};
}

inline SchnorrKeyPair schnorr_keygen(const GroupParams& params, RandomSource& rng) {
  return schnorr_keypair_from_private(params, random_scalar(params, rng).value());
}

/// H(M || r) reduced mod q. M is prefixed with its 64-bit big-endian length
/// so that the split between M and r is unambiguous.
inline Integer schnorr_challenge(const GroupParams& params, ByteView message, const Integer& r,
                                 const PrimitiveProfile& profile) {
  std::array<std::uint8_t, 8> len{};
  const std::uint64_t n = message.size();
  for (int i = 0; i < 8; ++i) len[i] = static_cast<std::uint8_t>(n >> (56 - 8 * i));
  auto digest = Digest(detail::require_hash(profile))
                    .update(len)
                    .update(message)
                    .update(encode_integer(r, profile.encoding))
                    .finish();
  return tag_to_scalar(digest, params.q);
}

struct SchnorrSignTrace {
  SchnorrSignature sig;
  Integer nonce;
  Integer r;
};

template <class Ops = PlainOps>
SchnorrSignTrace schnorr_sign_traced(const GroupParams& params, const SchnorrKeyPair& keys,
                                     ByteView message, RandomSource& rng,
                                     const PrimitiveProfile& profile, Ops ops = {}) {
  // random_scalar never returns 0 mod q.
  Integer k = random_scalar(params, rng).value();
  Integer r = ops.pow(params.g, k, params.p);
  ops.hashed();
  Integer e = schnorr_challenge(params, message, r, profile);
  Integer s = mod_reduce(k - ops.mul(keys.x, e, params.q), params.q);
  return {{s, e}, k, r};
}

template <class Ops = PlainOps>
SchnorrSignature schnorr_sign(const GroupParams& params, const SchnorrKeyPair& keys,
                              ByteView message, RandomSource& rng,
                              const PrimitiveProfile& profile, Ops ops = {}) {
  return schnorr_sign_traced(params, keys, message, rng, profile, ops).sig;
}

struct SchnorrVerifyTrace {
  bool valid = false;
  std::optional<Integer> r_v;  // empty when rejected before recomputation
};

template <class Ops = PlainOps>
SchnorrVerifyTrace schnorr_verify_traced(const GroupParams& params, const Integer& public_y,
                                         ByteView message, const SchnorrSignature& sig,
                                         const PrimitiveProfile& profile, Ops ops = {}) {
  if (sig.s < 0 || sig.s >= params.q || sig.e < 0 || sig.e >= params.q) return {};
  if (public_y < 1 || public_y >= params.p) return {};
  Integer r_v = ops.mul(ops.pow(params.g, sig.s, params.p), ops.pow(public_y, sig.e, params.p),
                        params.p);
  ops.hashed();
  Integer e_v = schnorr_challenge(params, message, r_v, profile);
  return {e_v == sig.e, r_v};
}

template <class Ops = PlainOps>
bool schnorr_verify(const GroupParams& params, const Integer& public_y, ByteView message,
                    const SchnorrSignature& sig, const PrimitiveProfile& profile, Ops ops = {}) {
  return schnorr_verify_traced(params, public_y, message, sig, profile, ops).valid;
}

}  // namespace sckit
