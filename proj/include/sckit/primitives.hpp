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

// Hash H, keyed hash KH, key-material derivation and split, and the
// symmetric cipher (E, D), selected through a named primitive profile.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "sckit/hash.hpp"
#include "sckit/integer.hpp"

namespace sckit {

/// How integers are turned into bytes before hashing.
enum class IntegerEncoding {
  kDecimalString,     // ASCII decimal digits
  kBigEndianMinimal,  // minimal big-endian bytes, 0 as 0x00
};

/// Modulus used to turn the transmitted tag r into the exponent scalar.
enum class TagReduction { kModP, kModQ };

struct PrimitiveProfile {
  std::string name;
  std::string hash_id;
  std::string keyed_hash_id;
  std::string cipher_id;
  std::size_t digest_length_bytes = 0;
  IntegerEncoding encoding = IntegerEncoding::kBigEndianMinimal;
  TagReduction tag_reduction = TagReduction::kModQ;
};

inline constexpr std::string_view kPaperCompat = "paper-compat";
inline constexpr std::string_view kModernDefault = "modern-default";

namespace detail {

inline std::optional<HashAlgorithm> hash_by_id(std::string_view id) {
  if (id == "sha1") return HashAlgorithm::kSha1;
  if (id == "sha256") return HashAlgorithm::kSha256;
  return std::nullopt;
}

enum class KeyedMode { kHmac, kPrefix };

struct KeyedHashImpl {
  HashAlgorithm alg;
  KeyedMode mode;
};

inline std::optional<KeyedHashImpl> keyed_hash_by_id(std::string_view id) {
  if (id == "hmac-sha1") return KeyedHashImpl{HashAlgorithm::kSha1, KeyedMode::kHmac};
  if (id == "hmac-sha256") return KeyedHashImpl{HashAlgorithm::kSha256, KeyedMode::kHmac};
  if (id == "prefix-sha1") return KeyedHashImpl{HashAlgorithm::kSha1, KeyedMode::kPrefix};
  if (id == "prefix-sha256") return KeyedHashImpl{HashAlgorithm::kSha256, KeyedMode::kPrefix};
  return std::nullopt;
}

inline std::optional<HashAlgorithm> cipher_by_id(std::string_view id) {
  if (id == "sha1-ctr") return HashAlgorithm::kSha1;
  if (id == "sha256-ctr") return HashAlgorithm::kSha256;
  return std::nullopt;
}

inline HashAlgorithm require_hash(const PrimitiveProfile& p) {
  auto h = hash_by_id(p.hash_id);
  if (!h) throw ParameterError("unregistered hash_id: " + p.hash_id);
  return *h;
}

inline KeyedHashImpl require_keyed(const PrimitiveProfile& p) {
  auto k = keyed_hash_by_id(p.keyed_hash_id);
  if (!k) throw ParameterError("unregistered keyed_hash_id: " + p.keyed_hash_id);
  return *k;
}

inline HashAlgorithm require_cipher(const PrimitiveProfile& p) {
  auto c = cipher_by_id(p.cipher_id);
  if (!c) throw ParameterError("unregistered cipher_id: " + p.cipher_id);
  return *c;
}

}  // namespace detail

/// Checks digest length and that every identifier resolves.
inline bool profile_is_valid(const PrimitiveProfile& p) {
  auto h = detail::hash_by_id(p.hash_id);
  auto k = detail::keyed_hash_by_id(p.keyed_hash_id);
  auto c = detail::cipher_by_id(p.cipher_id);
  return h && k && c && p.digest_length_bytes >= 16 &&
         digest_size(*h) == p.digest_length_bytes && digest_size(k->alg) == p.digest_length_bytes;
}

/// SHA-1, HMAC-SHA1, decimal encoding, tag reduced mod p. Reproduces the
/// printed digests of the 23/11/2 worked example.
inline PrimitiveProfile paper_compat_profile() {
  return {std::string(kPaperCompat), "sha1", "hmac-sha1", "sha1-ctr", 20,
          IntegerEncoding::kDecimalString, TagReduction::kModP};
}

inline PrimitiveProfile modern_default_profile() {
  return {std::string(kModernDefault), "sha256", "hmac-sha256", "sha256-ctr", 32,
          IntegerEncoding::kBigEndianMinimal, TagReduction::kModQ};
}

inline std::optional<PrimitiveProfile> find_profile(std::string_view token) {
  if (token == kPaperCompat) return paper_compat_profile();
  if (token == kModernDefault) return modern_default_profile();
  return std::nullopt;
}

inline Bytes encode_integer(const Integer& n, IntegerEncoding encoding) {
  if (n < 0) throw ParameterError("encode_integer: negative");
  if (encoding == IntegerEncoding::kDecimalString) return to_bytes(n.get_str(10));
  return to_bytes_be(n);
}

inline Bytes hash_message(ByteView data, const PrimitiveProfile& profile) {
  return hash_bytes(detail::require_hash(profile), data);
}

/// hash(encode(dh_value)).
inline Bytes derive_key_material(const Integer& dh_value, const PrimitiveProfile& profile) {
  if (dh_value < 0) throw ParameterError("derive_key_material: negative value");
  return hash_message(encode_integer(dh_value, profile.encoding), profile);
}

struct KeySplit {
  Bytes k1;  // cipher key
  Bytes k2;  // tag key
};

/// k1 takes floor(n/2) bytes, k2 the rest.
inline KeySplit split_key(ByteView material) {
  if (material.size() < 2) throw ParameterError("split_key: material shorter than 2 bytes");
  const std::size_t half = material.size() / 2;
  return {Bytes(material.begin(), material.begin() + half),
          Bytes(material.begin() + half, material.end())};
}

inline Bytes keyed_hash(ByteView key, ByteView message, const PrimitiveProfile& profile) {
  auto impl = detail::require_keyed(profile);
  if (impl.mode == detail::KeyedMode::kHmac) return hmac_bytes(impl.alg, key, message);
  return Digest(impl.alg).update(key).update(message).finish();
}

/// Big-endian tag value reduced mod `reduction_modulus`.
inline Integer tag_to_scalar(ByteView tag, const Integer& reduction_modulus) {
  if (reduction_modulus < 2) throw ParameterError("tag_to_scalar: modulus must be >= 2");
  return from_bytes_be(tag) % reduction_modulus;
}

namespace detail {

// XOR with H(key || be32(i)) blocks; encrypt and decrypt are the same map.
inline Bytes keystream_xor(HashAlgorithm alg, ByteView key, ByteView data) {
  Bytes out(data.begin(), data.end());
  std::size_t pos = 0;
  for (std::uint32_t block = 0; pos < out.size(); ++block) {
    std::array<std::uint8_t, 4> ctr{static_cast<std::uint8_t>(block >> 24),
                                    static_cast<std::uint8_t>(block >> 16),
                                    static_cast<std::uint8_t>(block >> 8),
                                    static_cast<std::uint8_t>(block)};
    auto ks = Digest(alg).update(key).update(ctr).finish();
    for (std::size_t i = 0; i < ks.size() && pos < out.size(); ++i, ++pos) out[pos] ^= ks[i];
  }
  return out;
}

}  // namespace detail

inline Bytes sym_encrypt(ByteView key, ByteView plaintext, const PrimitiveProfile& profile) {
  if (key.empty()) throw ParameterError("sym_encrypt: empty key");
  return detail::keystream_xor(detail::require_cipher(profile), key, plaintext);
}

inline Bytes sym_decrypt(ByteView key, ByteView ciphertext, const PrimitiveProfile& profile) {
  if (key.empty()) throw ParameterError("sym_decrypt: empty key");
  return detail::keystream_xor(detail::require_cipher(profile), key, ciphertext);
}

// Ciphertext length minus plaintext length for the profile's cipher.
inline std::size_t cipher_overhead(const PrimitiveProfile& profile) {
  detail::require_cipher(profile);
  return 0;
}

}  // namespace sckit
