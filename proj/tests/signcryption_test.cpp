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

#include <gtest/gtest.h>

#include "sckit/serialization.hpp"
#include "sckit/signcryption.hpp"
#include "test_support.hpp"
#include "test_vectors.hpp"

namespace sckit {
namespace {

using testing::group64;
using testing::profile_by_name;

struct Parties {
  SenderKeys sender;
  ReceiverKeys receiver;
};

Parties small_parties(SchemeId scheme) {
  const auto g = vectors::small_group();
  return {keys_from_private<KeyRole::kSender>(scheme, g, 4),
          keys_from_private<KeyRole::kReceiver>(scheme, g, 5)};
}

TEST(SchemeId, Tokens) {
  EXPECT_EQ(scheme_token(SchemeId::kScs1), "scs1");
  EXPECT_EQ(scheme_token(SchemeId::kScs2), "scs2");
  EXPECT_EQ(scheme_token(SchemeId::kSchnorrSc), "schnorr-sc");
  for (auto id : kAllSchemes) EXPECT_EQ(parse_scheme(scheme_token(id)), id);
  EXPECT_FALSE(parse_scheme("SCS1").has_value());
}

TEST(KeyGen, ForcedExponentsFollowConventions) {
  auto schnorr = small_parties(SchemeId::kSchnorrSc);
  EXPECT_EQ(schnorr.sender.y, 13);
  EXPECT_EQ(schnorr.receiver.y, 18);
  EXPECT_EQ(schnorr.sender.convention(), KeyConvention::kNegative);
  auto scs1 = small_parties(SchemeId::kScs1);
  EXPECT_EQ(scs1.sender.y, 16);
  EXPECT_EQ(scs1.receiver.y, 9);
  EXPECT_EQ(scs1.sender.convention(), KeyConvention::kPositive);
  const auto g = vectors::small_group();
  EXPECT_FALSE(keys_consistent(SchemeId::kScs1, g, 4, 13));
  EXPECT_TRUE(keys_consistent(SchemeId::kSchnorrSc, g, 4, 13));
}

TEST(KeyGen, GeneratedKeysSatisfyConvention) {
  SeededRandom rng(1);
  for (auto scheme : kAllSchemes) {
    for (int i = 0; i < 100; ++i) {
      auto s = keygen_sender(scheme, group64(), rng);
      auto r = keygen_receiver(scheme, group64(), rng);
      EXPECT_TRUE(keys_consistent(scheme, group64(), s.x, s.y));
      EXPECT_TRUE(keys_consistent(scheme, group64(), r.x, r.y));
    }
  }
}

TEST(Setup, ValidAndDeterministic) {
  SeededRandom a(5), b(5);
  auto pa = setup(32, 16, modern_default_profile(), a);
  auto pb = setup(32, 16, modern_default_profile(), b);
  EXPECT_EQ(pa.group, pb.group);
  EXPECT_TRUE(validate_params(pa.group).ok());
  auto bad = modern_default_profile();
  bad.hash_id = "unknown";
  EXPECT_THROW(setup(32, 16, bad, a), ParameterError);
}

TEST(SchnorrSignCryption, WorkedExampleSteps) {
  const auto g = vectors::small_group();
  auto parties = small_parties(SchemeId::kSchnorrSc);
  EXPECT_EQ(mod_pow(parties.receiver.y, 3, g.p), 13);
  EXPECT_EQ(compute_s(SchemeId::kSchnorrSc, g, parties.sender.x, 3, 3), 4);
  EXPECT_EQ(recover_dh(SchemeId::kSchnorrSc, g, parties.receiver.x, parties.sender.y, 3, 4), 13);
  // Intermediate g^s * Ya^r = 8 before the negative power.
  EXPECT_EQ(mod_reduce(mod_pow(2, 4, 23) * mod_pow(13, 3, 23), 23), 8);
}

TEST(Signcrypt, ForcedNonceMatchesStraightLineOracle) {
  const auto g = vectors::small_group();
  const Bytes m = to_bytes(vectors::kVectorMessage);
  for (const auto& v : vectors::kSigncryptVectors) {
    SchemeId scheme = *parse_scheme(v.scheme);
    auto profile = profile_by_name(v.profile);
    auto parties = small_parties(scheme);
    SeededRandom unused(0);
    SigncryptHooks hooks;
    hooks.forced_nonce = 3;
    auto trace = signcrypt_traced(scheme, g, profile, parties.sender, parties.receiver.y, m,
                                  unused, hooks);
    SCOPED_TRACE(std::string(v.scheme) + "/" + std::string(v.profile));
    EXPECT_EQ(trace.dh, v.dh);
    EXPECT_EQ(to_hex(trace.ct.r), v.r_hex);
    EXPECT_EQ(trace.r_int, v.r_int);
    EXPECT_EQ(trace.ct.s, v.s);
    EXPECT_EQ(to_hex(trace.ct.c), v.c_hex);
    auto back =
        unsigncrypt_traced(scheme, g, profile, parties.receiver, parties.sender.y, trace.ct);
    EXPECT_EQ(back.dh, v.dh);
    ASSERT_TRUE(back.message.has_value());
    EXPECT_EQ(*back.message, m);
  }
}

TEST(Signcrypt, CompletenessProperty) {
  SeededRandom rng(2024);
  for (auto scheme : kAllSchemes) {
    for (int i = 0; i < 1000; ++i) {
      const auto profile = i % 2 ? paper_compat_profile() : modern_default_profile();
      auto s = keygen_sender(scheme, group64(), rng);
      auto r = keygen_receiver(scheme, group64(), rng);
      Bytes m = rng.bytes(rng.uniform(4097));
      auto ct = signcrypt(scheme, group64(), profile, s, r.y, m, rng);
      ASSERT_EQ(ct.r.size(), profile.digest_length_bytes);
      ASSERT_LT(ct.s, group64().q);
      auto back = unsigncrypt(scheme, group64(), profile, r, s.y, ct);
      ASSERT_TRUE(back.has_value()) << scheme_token(scheme) << " trial " << i;
      ASSERT_EQ(*back, m);
    }
  }
}

TEST(Signcrypt, CoreAlgebraicIdentities) {
  SeededRandom rng(77);
  const auto& g = group64();
  for (auto scheme : kAllSchemes) {
    for (int i = 0; i < 1000; ++i) {
      auto s = keygen_sender(scheme, g, rng);
      auto r = keygen_receiver(scheme, g, rng);
      auto t = signcrypt_traced(scheme, g, modern_default_profile(), s, r.y, rng.bytes(8), rng);
      const Integer gx = mod_pow(g.g, t.nonce, g.p);
      Integer lhs;
      switch (scheme) {
        case SchemeId::kSchnorrSc:
          lhs = mod_reduce(mod_pow(g.g, t.ct.s, g.p) * mod_pow(s.y, t.r_int, g.p), g.p);
          break;
        case SchemeId::kScs1:
          lhs = mod_pow(mod_reduce(s.y * mod_pow(g.g, t.r_int, g.p), g.p), t.ct.s, g.p);
          break;
        case SchemeId::kScs2:
          lhs = mod_pow(mod_reduce(g.g * mod_pow(s.y, t.r_int, g.p), g.p), t.ct.s, g.p);
          break;
      }
      ASSERT_EQ(lhs, gx) << scheme_token(scheme);
      ASSERT_EQ(t.dh, mod_pow(r.y, t.nonce, g.p));
    }
  }
}

TEST(Unsigncrypt, TagSubstitutionRejected) {
  SeededRandom rng(3);
  for (auto scheme : kAllSchemes) {
    auto s = keygen_sender(scheme, group64(), rng);
    auto r = keygen_receiver(scheme, group64(), rng);
    int accepted = 0;
    for (int i = 0; i < 1000; ++i) {
      auto ct = signcrypt(scheme, group64(), modern_default_profile(), s, r.y, rng.bytes(40), rng);
      Bytes other = rng.bytes(32);
      if (other == ct.r) continue;
      ct.r = other;
      accepted += unsigncrypt(scheme, group64(), modern_default_profile(), r, s.y, ct).has_value();
    }
    EXPECT_EQ(accepted, 0) << scheme_token(scheme);
  }
}

TEST(Unsigncrypt, WrongReceiverKeyRejected) {
  SeededRandom rng(4);
  for (auto scheme : kAllSchemes) {
    auto s = keygen_sender(scheme, group64(), rng);
    auto r = keygen_receiver(scheme, group64(), rng);
    int accepted = 0;
    for (int i = 0; i < 1000; ++i) {
      auto ct =
          signcrypt(scheme, group64(), modern_default_profile(), s, r.y, rng.bytes(32), rng);
      auto wrong = keygen_receiver(scheme, group64(), rng);
      if (wrong.x == r.x) continue;
      accepted += unsigncrypt(scheme, group64(), modern_default_profile(), wrong, s.y, ct)
                      .has_value();
    }
    EXPECT_EQ(accepted, 0) << scheme_token(scheme);
  }
}

TEST(Unsigncrypt, SingleBitFlipsRejected) {
  SeededRandom rng(5);
  for (auto scheme : kAllSchemes) {
    auto s = keygen_sender(scheme, group64(), rng);
    auto r = keygen_receiver(scheme, group64(), rng);
    int accepted = 0;
    for (int i = 0; i < 300; ++i) {
      auto ct = signcrypt(scheme, group64(), paper_compat_profile(), s, r.y,
                          rng.bytes(1 + rng.uniform(100)), rng);
      ct.c[rng.uniform(ct.c.size())] ^= static_cast<std::uint8_t>(1u << rng.uniform(8));
      accepted += unsigncrypt(scheme, group64(), paper_compat_profile(), r, s.y, ct).has_value();
    }
    EXPECT_EQ(accepted, 0);
  }
}

TEST(Unsigncrypt, StructuralErrorsAreDistinctFromRejection) {
  SeededRandom rng(6);
  auto scheme = SchemeId::kSchnorrSc;
  auto s = keygen_sender(scheme, group64(), rng);
  auto r = keygen_receiver(scheme, group64(), rng);
  auto ct = signcrypt(scheme, group64(), modern_default_profile(), s, r.y, to_bytes("m"), rng);
  auto big_s = ct;
  big_s.s += group64().q;
  EXPECT_THROW(unsigncrypt(scheme, group64(), modern_default_profile(), r, s.y, big_s),
               ParameterError);
  auto short_tag = ct;
  short_tag.r.pop_back();
  EXPECT_THROW(unsigncrypt(scheme, group64(), modern_default_profile(), r, s.y, short_tag),
               ParameterError);
  // Keys for another scheme are not interchangeable.
  ReceiverKeys scs1_receiver{SchemeId::kScs1, r.x, r.y};
  EXPECT_THROW(unsigncrypt(scheme, group64(), modern_default_profile(), scs1_receiver, s.y, ct),
               ParameterError);
  EXPECT_THROW(signcrypt(scheme, group64(), modern_default_profile(), s, 1, to_bytes("m"), rng),
               ParameterError);
}

TEST(Signcrypt, EmptyMessage) {
  SeededRandom rng(7);
  for (auto scheme : kAllSchemes) {
    auto s = keygen_sender(scheme, group64(), rng);
    auto r = keygen_receiver(scheme, group64(), rng);
    auto ct = signcrypt(scheme, group64(), modern_default_profile(), s, r.y, Bytes{}, rng);
    EXPECT_TRUE(ct.c.empty());
    auto back = unsigncrypt(scheme, group64(), modern_default_profile(), r, s.y, ct);
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(back->empty());
  }
}

// On q = 11, a fair fraction of nonces make the SCS1/SCS2 divisor vanish.
// Find one, then check the forced path fails and the sampled path retries.
TEST(Signcrypt, NonInvertibleDivisorResamples) {
  const auto g = vectors::small_group();
  for (auto scheme : {SchemeId::kScs1, SchemeId::kScs2}) {
    auto parties = small_parties(scheme);
    std::optional<std::pair<Bytes, int>> bad;
    std::optional<int> good;
    for (int msg = 0; msg < 50 && !(bad && good); ++msg) {
      Bytes m = to_bytes("probe-" + std::to_string(msg));
      bad.reset();
      good.reset();
      for (int n = 1; n < 11; ++n) {
        SigncryptHooks hooks;
        hooks.forced_nonce = n;
        SeededRandom unused(0);
        try {
          signcrypt(scheme, g, modern_default_profile(), parties.sender, parties.receiver.y, m,
                    unused, hooks);
          if (!good) good = n;
        } catch (const NotInvertible&) {
          if (!bad) bad = std::pair{m, n};
        }
      }
    }
    ASSERT_TRUE(bad && good) << scheme_token(scheme);
    ScriptedRandom script({static_cast<std::uint8_t>(bad->second),
                           static_cast<std::uint8_t>(*good)});
    auto t = signcrypt_traced(scheme, g, modern_default_profile(), parties.sender,
                              parties.receiver.y, bad->first, script);
    EXPECT_EQ(t.attempts, 2);
    EXPECT_EQ(t.nonce, *good);
    auto back = unsigncrypt(scheme, g, modern_default_profile(), parties.receiver,
                            parties.sender.y, t.ct);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, bad->first);

    ScriptedRandom always_bad(Bytes(kSigncryptRetryBudget, static_cast<std::uint8_t>(bad->second)));
    EXPECT_THROW(signcrypt(scheme, g, modern_default_profile(), parties.sender,
                           parties.receiver.y, bad->first, always_bad),
                 RetryBudgetExhausted);
  }
}

TEST(Signcrypt, OverheadMatchesDigestPlusQ) {
  SeededRandom rng(8);
  const auto& g = group64();
  for (auto profile : {paper_compat_profile(), modern_default_profile()}) {
    for (auto scheme : kAllSchemes) {
      auto s = keygen_sender(scheme, g, rng);
      auto r = keygen_receiver(scheme, g, rng);
      for (std::size_t n : {0u, 1u, 100u}) {
        auto ct = signcrypt(scheme, g, profile, s, r.y, rng.bytes(n), rng);
        Bytes wire = encode_wire(g, ct);
        EXPECT_EQ(wire.size() - n, profile.digest_length_bytes + (g.q_bit_length() + 7) / 8);
        EXPECT_EQ(decode_wire(g, profile, wire), ct);
      }
    }
  }
}

TEST(Signcrypt, SeededRegressionIsDeterministic) {
  for (auto scheme : kAllSchemes) {
    SeededRandom a(9), b(9);
    auto sa = keygen_sender(scheme, group64(), a);
    auto ra = keygen_receiver(scheme, group64(), a);
    auto sb = keygen_sender(scheme, group64(), b);
    auto rb = keygen_receiver(scheme, group64(), b);
    EXPECT_EQ(sa, sb);
    EXPECT_EQ(signcrypt(scheme, group64(), modern_default_profile(), sa, ra.y, to_bytes("x"), a),
              signcrypt(scheme, group64(), modern_default_profile(), sb, rb.y, to_bytes("x"), b));
  }
}

}  // namespace
}  // namespace sckit
