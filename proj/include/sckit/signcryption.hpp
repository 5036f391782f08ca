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

// The five-algorithm signcryption interface (Setup, KeyGenS, KeyGenR,
// Signcrypt, Unsigncrypt) for SCS1, SCS2 and Schnorr signcryption.
//
//   k = hash(Yb^x mod p), (k1, k2) = split(k), r = KH_k2(m), c = E_k1(m)
//   SCS1:       s = x / (r + Xa) mod q        Ya = g^Xa
//   SCS2:       s = x / (1 + Xa*r) mod q      Ya = g^Xa
//   SCHNORR_SC: s = x + r*Xa mod q            Ya = g^-Xa
//
// The receiver rebuilds Yb^x from (r, s, Ya, Xb) and accepts m only when
// KH_k2(m) equals the transmitted r.

#pragma once

#include <openssl/crypto.h>

#include <functional>
#include <optional>
#include <string_view>

#include "sckit/group.hpp"
#include "sckit/ops.hpp"
#include "sckit/primitives.hpp"

namespace sckit {

inline constexpr int kSigncryptRetryBudget = 64;

enum class SchemeId { kScs1, kScs2, kSchnorrSc };

inline constexpr std::array<SchemeId, 3> kAllSchemes = {SchemeId::kScs1, SchemeId::kScs2,
                                                        SchemeId::kSchnorrSc};

inline std::string_view scheme_token(SchemeId id) {
  switch (id) {
    case SchemeId::kScs1: return "scs1";
    case SchemeId::kScs2: return "scs2";
    case SchemeId::kSchnorrSc: return "schnorr-sc";
  }
  return "?";
}

inline std::optional<SchemeId> parse_scheme(std::string_view token) {
  for (auto id : kAllSchemes) {
    if (scheme_token(id) == token) return id;
  }
  return std::nullopt;
}

/// Sign of the private exponent in the public key: g^x or g^-x.
enum class KeyConvention { kPositive, kNegative };

inline KeyConvention convention_for(SchemeId id) {
  return id == SchemeId::kSchnorrSc ? KeyConvention::kNegative : KeyConvention::kPositive;
}

inline Integer public_element(SchemeId scheme, const GroupParams& params, const Integer& x) {
  return convention_for(scheme) == KeyConvention::kNegative ? neg_pow(params, params.g, x)
                                                            : mod_pow(params.g, x, params.p);
}

enum class KeyRole { kSender, kReceiver };

template <KeyRole Role>
struct PartyKeys {
  SchemeId scheme;
  Integer x;  // private exponent (Xa or Xb)
  Integer y;  // public element (Ya or Yb)

  KeyConvention convention() const { return convention_for(scheme); }
  friend bool operator==(const PartyKeys&, const PartyKeys&) = default;
};

using SenderKeys = PartyKeys<KeyRole::kSender>;
using ReceiverKeys = PartyKeys<KeyRole::kReceiver>;

template <KeyRole Role>
PartyKeys<Role> keys_from_private(SchemeId scheme, const GroupParams& params, const Integer& x) {
  RandomScalar checked(params, x);
  return {scheme, checked.value(), public_element(scheme, params, checked.value())};
}

inline bool keys_consistent(SchemeId scheme, const GroupParams& params, const Integer& x,
                            const Integer& y) {
  return x >= 1 && x < params.q && public_element(scheme, params, x) == y;
}

inline SenderKeys keygen_sender(SchemeId scheme, const GroupParams& params, RandomSource& rng) {
  return keys_from_private<KeyRole::kSender>(scheme, params, random_scalar(params, rng).value());
}

inline ReceiverKeys keygen_receiver(SchemeId scheme, const GroupParams& params,
                                    RandomSource& rng) {
  return keys_from_private<KeyRole::kReceiver>(scheme, params,
                                               random_scalar(params, rng).value());
}

/// The scheme's `param`: group plus primitive choices.
struct SchemeParams {
  GroupParams group;
  PrimitiveProfile profile;
};

inline SchemeParams setup(std::size_t bits, std::size_t q_bits, const PrimitiveProfile& profile,
                          RandomSource& rng) {
  if (!profile_is_valid(profile)) throw ParameterError("setup: invalid primitive profile");
  return {generate_params(bits, q_bits, rng), profile};
}

/// The transmitted triple (r, s, c).
struct Signcryptext {
  Bytes r;    // full keyed-hash tag
  Integer s;  // in [0, q-1]
  Bytes c;    // symmetric ciphertext

  friend bool operator==(const Signcryptext&, const Signcryptext&) = default;
};

inline const Integer& reduction_modulus(const GroupParams& params,
                                        const PrimitiveProfile& profile) {
  return profile.tag_reduction == TagReduction::kModP ? params.p : params.q;
}

/// Test and harness hooks. Production callers leave these empty.
struct SigncryptHooks {
  std::optional<Integer> forced_nonce;
  // Applied to (k1, k2) right after the split, on both sides.
  std::function<void(KeySplit&)> key_tamper;
};

/// s from the ephemeral nonce, tag scalar and sender exponent. Throws
/// NotInvertible for SCS1/SCS2 when the divisor vanishes mod q.
template <class Ops = PlainOps>
Integer compute_s(SchemeId scheme, const GroupParams& params, const Integer& sender_x,
                  const Integer& nonce, const Integer& r_int, Ops ops = {}) {
  const Integer& q = params.q;
  switch (scheme) {
    case SchemeId::kSchnorrSc:
      return mod_reduce(nonce + ops.mul(r_int, sender_x, q), q);
    case SchemeId::kScs1: {
      Integer divisor = mod_reduce(r_int + sender_x, q);
      if (divisor == 0) throw NotInvertible("scs1: r + Xa = 0 mod q");
      return ops.mul(nonce, ops.inv(divisor, q), q);
    }
    case SchemeId::kScs2: {
      Integer divisor = mod_reduce(1 + ops.mul(sender_x, r_int, q), q);
      if (divisor == 0) throw NotInvertible("scs2: 1 + Xa*r = 0 mod q");
      return ops.mul(nonce, ops.inv(divisor, q), q);
    }
  }
  throw ParameterError("unknown scheme");
}

/// Receiver side: rebuilds Yb^x from (r_int, s) without knowing x.
template <class Ops = PlainOps>
Integer recover_dh(SchemeId scheme, const GroupParams& params, const Integer& receiver_x,
                   const Integer& sender_pub, const Integer& r_int, const Integer& s,
                   Ops ops = {}) {
  const Integer& p = params.p;
  const Integer& q = params.q;
  switch (scheme) {
    case SchemeId::kSchnorrSc: {
      // (g^s * Ya^r)^(-Xb), with the negative exponent taken as q - Xb.
      Integer base = ops.mul(ops.pow(params.g, s, p), ops.pow(sender_pub, r_int, p), p);
      return ops.pow(base, q - receiver_x, p);
    }
    case SchemeId::kScs1: {
      Integer base = ops.mul(sender_pub, ops.pow(params.g, r_int, p), p);
      return ops.pow(base, ops.mul(s, receiver_x, q), p);
    }
    case SchemeId::kScs2: {
      Integer base = ops.mul(params.g, ops.pow(sender_pub, r_int, p), p);
      return ops.pow(base, ops.mul(s, receiver_x, q), p);
    }
  }
  throw ParameterError("unknown scheme");
}

struct SigncryptTrace {
  Signcryptext ct;
  Integer nonce;
  Integer dh;
  Integer r_int;
  KeySplit keys;
  int attempts = 0;
};

template <class Ops = PlainOps>
SigncryptTrace signcrypt_traced(SchemeId scheme, const GroupParams& params,
                                const PrimitiveProfile& profile, const SenderKeys& sender,
                                const Integer& receiver_pub, ByteView message,
                                RandomSource& rng, const SigncryptHooks& hooks = {},
                                Ops ops = {}) {
  if (sender.scheme != scheme) throw ParameterError("signcrypt: sender key is for another scheme");
  if (receiver_pub < 2 || receiver_pub >= params.p) {
    throw ParameterError("signcrypt: receiver public key outside [2, p-1]");
  }
  for (int attempt = 1; attempt <= kSigncryptRetryBudget; ++attempt) {
    Integer nonce = hooks.forced_nonce ? RandomScalar(params, *hooks.forced_nonce).value()
                                       : random_scalar(params, rng).value();
    Integer dh = ops.pow(receiver_pub, nonce, params.p);
    ops.hashed();
    KeySplit keys = split_key(derive_key_material(dh, profile));
    if (hooks.key_tamper) hooks.key_tamper(keys);
    ops.hashed();
    Bytes tag = keyed_hash(keys.k2, message, profile);
    Integer r_int = tag_to_scalar(tag, reduction_modulus(params, profile));
    Integer s;
    try {
      s = compute_s(scheme, params, sender.x, nonce, r_int, ops);
    } catch (const NotInvertible&) {
      if (hooks.forced_nonce) throw;
      continue;
    }
    Bytes c = sym_encrypt(keys.k1, message, profile);
    return {{std::move(tag), std::move(s), std::move(c)}, nonce, dh, r_int, std::move(keys),
            attempt};
  }
  throw RetryBudgetExhausted("signcrypt: divisor non-invertible for every sampled nonce");
}

template <class Ops = PlainOps>
Signcryptext signcrypt(SchemeId scheme, const GroupParams& params, const PrimitiveProfile& profile,
                       const SenderKeys& sender, const Integer& receiver_pub, ByteView message,
                       RandomSource& rng, const SigncryptHooks& hooks = {}, Ops ops = {}) {
  return signcrypt_traced(scheme, params, profile, sender, receiver_pub, message, rng, hooks, ops)
      .ct;
}

/// Throws ParameterError for structural problems (s >= q, wrong tag length).
inline void check_structure(const GroupParams& params, const PrimitiveProfile& profile,
                            const Signcryptext& ct) {
  if (ct.s < 0 || ct.s >= params.q) throw ParameterError("signcryptext: s outside [0, q)");
  if (ct.r.size() != profile.digest_length_bytes) {
    throw ParameterError("signcryptext: tag length does not match profile digest length");
  }
}

struct UnsigncryptTrace {
  std::optional<Bytes> message;  // nullopt is the rejection symbol
  Integer dh;
  Integer r_int;
};

template <class Ops = PlainOps>
UnsigncryptTrace unsigncrypt_traced(SchemeId scheme, const GroupParams& params,
                                    const PrimitiveProfile& profile, const ReceiverKeys& receiver,
                                    const Integer& sender_pub, const Signcryptext& ct,
                                    const SigncryptHooks& hooks = {}, Ops ops = {}) {
  if (receiver.scheme != scheme) {
    throw ParameterError("unsigncrypt: receiver key is for another scheme");
  }
  if (sender_pub < 2 || sender_pub >= params.p) {
    throw ParameterError("unsigncrypt: sender public key outside [2, p-1]");
  }
  check_structure(params, profile, ct);
  Integer r_int = tag_to_scalar(ct.r, reduction_modulus(params, profile));
  Integer dh = recover_dh(scheme, params, receiver.x, sender_pub, r_int, ct.s, ops);
  ops.hashed();
  KeySplit keys = split_key(derive_key_material(dh, profile));
  if (hooks.key_tamper) hooks.key_tamper(keys);
  Bytes m = sym_decrypt(keys.k1, ct.c, profile);
  ops.hashed();
  Bytes expected = keyed_hash(keys.k2, m, profile);
  UnsigncryptTrace out{std::nullopt, std::move(dh), std::move(r_int)};
  if (expected.size() == ct.r.size() &&
      CRYPTO_memcmp(expected.data(), ct.r.data(), expected.size()) == 0) {
    out.message = std::move(m);
  }
  return out;
}

template <class Ops = PlainOps>
std::optional<Bytes> unsigncrypt(SchemeId scheme, const GroupParams& params,
                                 const PrimitiveProfile& profile, const ReceiverKeys& receiver,
                                 const Integer& sender_pub, const Signcryptext& ct,
                                 const SigncryptHooks& hooks = {}, Ops ops = {}) {
  return unsigncrypt_traced(scheme, params, profile, receiver, sender_pub, ct, hooks, ops).message;
}

}  // namespace sckit
