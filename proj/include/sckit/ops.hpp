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

// Arithmetic policies threaded through the scheme templates. PlainOps is the
// production path and compiles down to direct group.hpp calls; CountingOps
// tallies every modular operation for the cost benchmark.

#pragma once

#include "sckit/group.hpp"

namespace sckit {

struct OpTally {
  std::uint64_t mod_exps = 0;
  std::uint64_t mod_muls = 0;
  std::uint64_t mod_invs = 0;
  std::uint64_t hash_calls = 0;

  friend bool operator==(const OpTally&, const OpTally&) = default;
};

struct PlainOps {
  Integer pow(const Integer& b, const Integer& e, const Integer& m) const { return mod_pow(b, e, m); }
  Integer mul(const Integer& a, const Integer& b, const Integer& m) const {
    return mod_reduce(a * b, m);
  }
  Integer inv(const Integer& a, const Integer& m) const { return mod_inverse(a, m); }
  void hashed() const {}
};

class CountingOps {
 public:
  explicit CountingOps(OpTally& tally) : tally_(&tally) {}

  Integer pow(const Integer& b, const Integer& e, const Integer& m) const {
    ++tally_->mod_exps;
    return mod_pow(b, e, m);
  }
  Integer mul(const Integer& a, const Integer& b, const Integer& m) const {
    ++tally_->mod_muls;
    return mod_reduce(a * b, m);
  }
  Integer inv(const Integer& a, const Integer& m) const {
    ++tally_->mod_invs;
    return mod_inverse(a, m);
  }
  void hashed() const { ++tally_->hash_calls; }

 private:
  OpTally* tally_;
};

}  // namespace sckit
