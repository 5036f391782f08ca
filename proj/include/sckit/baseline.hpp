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

// Sign-then-encrypt reference point for the cost comparison: a Schnorr
// signature followed by hashed-ElGamal hybrid encryption of m || s || e.

#pragma once

#include <optional>

#include "sckit/group.hpp"
#include "sckit/ops.hpp"
#include "sckit/primitives.hpp"
#include "sckit/schnorr.hpp"

namespace sckit {

struct BaselineCiphertext {
  Integer u;  // g^t
  Bytes c;    // E_k(m || s || e), s and e fixed-width
};

inline std::size_t baseline_overhead_bytes(const GroupParams& params) {
  return params.p_bytes() + 2 * params.q_bytes();
}

inline std::size_t baseline_wire_size(const GroupParams& params, const BaselineCiphertext& ct) {
  return params.p_bytes() + ct.c.size();
}

template <class Ops = PlainOps>
BaselineCiphertext sign_then_encrypt(const GroupParams& params, const PrimitiveProfile& profile,
                                     const SchnorrKeyPair& sender, const Integer& receiver_y,
                                     ByteView message, RandomSource& rng, Ops ops = {}) {
  SchnorrSignature sig = schnorr_sign(params, sender, message, rng, profile, ops);
  Integer t = random_scalar(params, rng).value();
  Integer u = ops.pow(params.g, t, params.p);
  Integer shared = ops.pow(receiver_y, t, params.p);
  ops.hashed();
  Bytes key = derive_key_material(shared, profile);
  Bytes body(message.begin(), message.end());
  for (const Integer* v : {&sig.s, &sig.e}) {
    Bytes b = to_bytes_be(*v, params.q_bytes());
    body.insert(body.end(), b.begin(), b.end());
  }
  return {std::move(u), sym_encrypt(key, body, profile)};
}

template <class Ops = PlainOps>
std::optional<Bytes> decrypt_then_verify(const GroupParams& params,
                                         const PrimitiveProfile& profile,
                                         const Integer& receiver_x, const Integer& sender_y,
                                         const BaselineCiphertext& ct, Ops ops = {}) {
  const std::size_t tail = 2 * params.q_bytes();
  if (ct.c.size() < tail || ct.u < 1 || ct.u >= params.p) return std::nullopt;
  Integer shared = ops.pow(ct.u, receiver_x, params.p);
  ops.hashed();
  Bytes body = sym_decrypt(derive_key_material(shared, profile), ct.c, profile);
  const std::size_t mlen = body.size() - tail;
  ByteView view(body);
  SchnorrSignature sig{from_bytes_be(view.subspan(mlen, params.q_bytes())),
                       from_bytes_be(view.subspan(mlen + params.q_bytes(), params.q_bytes()))};
  Bytes message(body.begin(), body.begin() + static_cast<std::ptrdiff_t>(mlen));
  if (!schnorr_verify(params, sender_y, message, sig, profile, ops)) return std::nullopt;
  return message;
}

}  // namespace sckit
