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

// Thin wrappers over libcrypto digests and HMAC.

#pragma once

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <string_view>

#include "sckit/integer.hpp"

namespace sckit {

enum class HashAlgorithm { kSha1, kSha256 };

inline const EVP_MD* evp_md(HashAlgorithm alg) {
  return alg == HashAlgorithm::kSha1 ? EVP_sha1() : EVP_sha256();
}

inline std::size_t digest_size(HashAlgorithm alg) {
  return alg == HashAlgorithm::kSha1 ? 20 : 32;
}

// Incremental digest; avoids concatenating large inputs.
class Digest {
 public:
  explicit Digest(HashAlgorithm alg) : alg_(alg), ctx_(EVP_MD_CTX_new()) {
    if (ctx_ == nullptr || EVP_DigestInit_ex(ctx_, evp_md(alg), nullptr) != 1) {
      EVP_MD_CTX_free(ctx_);
      throw Error("EVP_DigestInit_ex failed");
    }
  }
  Digest(const Digest&) = delete;
  Digest& operator=(const Digest&) = delete;
  ~Digest() { EVP_MD_CTX_free(ctx_); }

  Digest& update(ByteView data) {
    if (!data.empty() && EVP_DigestUpdate(ctx_, data.data(), data.size()) != 1) {
      throw Error("EVP_DigestUpdate failed");
    }
    return *this;
  }

  Bytes finish() {
    Bytes out(digest_size(alg_));
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_, out.data(), &len) != 1) throw Error("EVP_DigestFinal_ex failed");
    out.resize(len);
    return out;
  }

 private:
  HashAlgorithm alg_;
  EVP_MD_CTX* ctx_;
};

inline Bytes hash_bytes(HashAlgorithm alg, ByteView data) {
  return Digest(alg).update(data).finish();
}

inline Bytes hmac_bytes(HashAlgorithm alg, ByteView key, ByteView message) {
  Bytes out(digest_size(alg));
  unsigned int len = 0;
  // HMAC() treats a null key pointer as an error even for zero length.
  static const std::uint8_t kEmpty = 0;
  const std::uint8_t* key_ptr = key.empty() ? &kEmpty : key.data();
  const std::uint8_t* msg_ptr = message.empty() ? &kEmpty : message.data();
  if (HMAC(evp_md(alg), key_ptr, static_cast<int>(key.size()), msg_ptr, message.size(),
           out.data(), &len) == nullptr) {
    throw Error("HMAC failed");
  }
  out.resize(len);
  return out;
}

inline Bytes sha256(ByteView data) { return hash_bytes(HashAlgorithm::kSha256, data); }

}  // namespace sckit
