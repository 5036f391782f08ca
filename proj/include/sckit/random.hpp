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

#include <openssl/rand.h>

#include <array>
#include <cstring>
#include <deque>

#include "sckit/hash.hpp"
#include "sckit/integer.hpp"

namespace sckit {

/// Source of random bytes injected into every probabilistic operation.
/// Implementations are not required to be thread-safe; give each caller its
/// own instance.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  Bytes bytes(std::size_t n) {
    Bytes out(n);
    fill(out);
    return out;
  }

  std::uint64_t next_u64() {
    std::array<std::uint8_t, 8> b{};
    fill(b);
    std::uint64_t v = 0;
    for (auto x : b) v = v << 8 | x;
    return v;
  }

  // Uniform in [0, bound) by rejection.
  std::uint64_t uniform(std::uint64_t bound) {
    if (bound == 0) throw ParameterError("uniform: zero bound");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      std::uint64_t v = next_u64();
      if (v < limit) return v % bound;
    }
  }

  bool coin() { return (bytes(1)[0] & 1) != 0; }
};

class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override {
    if (!out.empty() && RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
      throw Error("RAND_bytes failed");
    }
  }
};

/// Deterministic SHA-256 counter generator. Block i is
/// SHA-256("sckit-drbg" || be64(seed) || be64(i)).
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : seed_(seed) {}

  void fill(std::span<std::uint8_t> out) override {
    std::size_t pos = 0;
    while (pos < out.size()) {
      if (offset_ == block_.size()) refill();
      std::size_t n = std::min(out.size() - pos, block_.size() - offset_);
      std::memcpy(out.data() + pos, block_.data() + offset_, n);
      offset_ += n;
      pos += n;
    }
  }

  // Child stream for sub-computations (per-run seeds, adversary coins).
  SeededRandom fork() { return SeededRandom(next_u64()); }

 private:
  void refill() {
    static constexpr std::string_view kLabel = "sckit-drbg";
    std::array<std::uint8_t, 16> ctr{};
    for (int i = 0; i < 8; ++i) {
      ctr[i] = static_cast<std::uint8_t>(seed_ >> (56 - 8 * i));
      ctr[8 + i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
    }
    ++counter_;
    Digest d(HashAlgorithm::kSha256);
    d.update(ByteView(reinterpret_cast<const std::uint8_t*>(kLabel.data()), kLabel.size()));
    d.update(ctr);
    auto digest = d.finish();
    std::memcpy(block_.data(), digest.data(), block_.size());
    offset_ = 0;
  }

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t offset_ = 32;
};

/// Replays a fixed byte script, then fails. Used to force small exponents in
/// tests: with q = 11 a script byte 0x03 yields the scalar 3.
class ScriptedRandom final : public RandomSource {
 public:
  explicit ScriptedRandom(Bytes script) : script_(script.begin(), script.end()) {}

  void fill(std::span<std::uint8_t> out) override {
    for (auto& b : out) {
      if (script_.empty()) throw Error("ScriptedRandom: script exhausted");
      b = script_.front();
      script_.pop_front();
    }
  }

  std::size_t remaining() const { return script_.size(); }

 private:
  std::deque<std::uint8_t> script_;
};

}  // namespace sckit
