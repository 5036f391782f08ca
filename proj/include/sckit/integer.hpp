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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sckit {

using Integer = mpz_class;
using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input to an operation: out-of-range modulus, malformed field, wrong
// key convention. Distinct from a cryptographic rejection.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

class RetryBudgetExhausted : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

inline std::size_t bit_length(const Integer& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline std::size_t byte_length(const Integer& n) {
  return (bit_length(n) + 7) / 8;
}

// Big-endian unsigned bytes. width == 0 means minimal (at least one byte).
inline Bytes to_bytes_be(const Integer& n, std::size_t width = 0) {
  if (n < 0) throw ParameterError("to_bytes_be: negative integer");
  std::size_t need = byte_length(n);
  if (width == 0) width = need == 0 ? 1 : need;
  if (need > width) throw ParameterError("to_bytes_be: integer wider than field");
  Bytes out(width, 0);
  if (need > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (width - need), &written, 1, 1, 1, 0, n.get_mpz_t());
  }
  return out;
}

inline Integer from_bytes_be(ByteView bytes) {
  Integer n;
  if (!bytes.empty()) mpz_import(n.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return n;
}

inline std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

// Accepts upper or lower case; rejects odd length and non-hex characters.
inline Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw FormatError("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw FormatError("invalid hex character");
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return out;
}

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

inline Integer integer_from_string(const std::string& decimal) {
  Integer n;
  if (n.set_str(decimal, 10) != 0) throw ParameterError("not a decimal integer: " + decimal);
  return n;
}

}  // namespace sckit
