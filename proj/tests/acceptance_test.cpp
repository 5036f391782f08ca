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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "sckit/sckit.hpp"
#include "test_support.hpp"
#include "test_vectors.hpp"

namespace sckit {
namespace {

using testing::base64;
using testing::group1024;
using testing::group64;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (!pass) detail << "; ";
      detail << "violated: " << what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Bytes random_message(RandomSource& rng, std::size_t max_len) {
  return rng.bytes(rng.uniform(max_len + 1));
}

void worked_example(Outcome& o) {
  const GroupParams g{23, 11, 2};
  const auto t0 = std::chrono::steady_clock::now();
  auto sender = keys_from_private<KeyRole::kSender>(SchemeId::kSchnorrSc, g, 4);
  auto receiver = keys_from_private<KeyRole::kReceiver>(SchemeId::kSchnorrSc, g, 5);
  Integer dh = mod_pow(receiver.y, 3, g.p);
  Integer s = compute_s(SchemeId::kSchnorrSc, g, sender.x, 3, 3);
  Integer back = recover_dh(SchemeId::kSchnorrSc, g, receiver.x, sender.y, 3, s);
  const double us = seconds_since(t0) * 1e6;
  o.require(sender.y == 13, "Ya = 13");
  o.require(receiver.y == 18, "Yb = 18");
  o.require(dh == 13, "dh = 13");
  o.require(s == 4, "s = 4");
  o.require(back == 13, "recovered dh = 13");
  o.require(us < 1000, "under 1 ms");
  o.detail << (o.pass ? "" : "; ") << "Ya=" << sender.y << " Yb=" << receiver.y << " dh=" << dh
           << " s=" << s << " recovered=" << back << " in " << us << " us";
}

void digest_compatibility(Outcome& o) {
  Bytes k = derive_key_material(13, paper_compat_profile());
  KeySplit split = split_key(k);
  o.require(base64(k) == vectors::kLegacyDigestB64, "hash(13) rendering");
  o.require(base64(split.k1) == vectors::kLegacyK1B64, "k1 rendering");
  o.require(base64(split.k2) == vectors::kLegacyK2B64, "k2 rendering");
  o.detail << (o.pass ? "" : "; ") << "hash(13)=" << base64(k) << " k1=" << base64(split.k1)
           << " k2=" << base64(split.k2);
}

void completeness(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  SeededRandom rng(3);
  std::size_t ok = 0, total = 0;
  for (auto scheme : kAllSchemes) {
    for (auto [group, runs] : {std::pair{group64(), 1000}, std::pair{GroupParams{23, 11, 2}, 100}}) {
      for (int i = 0; i < runs; ++i) {
        const auto& profile = i % 2 ? paper_compat_profile() : modern_default_profile();
        SenderKeys a = keygen_sender(scheme, group, rng);
        ReceiverKeys b = keygen_receiver(scheme, group, rng);
        Bytes m = random_message(rng, 512);
        auto ct = signcrypt(scheme, group, profile, a, b.y, m, rng);
        auto out = unsigncrypt(scheme, group, profile, b, a.y, ct);
        ++total;
        ok += out && *out == m ? 1 : 0;
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(ok == total, "every round-trip recovers the message");
  o.require(total == 3 * 1100, "run count");
  o.require(secs < 30, "under 30 s");
  o.detail << ok << "/" << total << " round-trips in " << secs << " s";
}

void tamper_rejection(Outcome& o) {
  SeededRandom rng(4);
  const auto& group = group64();
  std::ostringstream summary;
  for (auto scheme : kAllSchemes) {
    std::size_t rejected = 0, accepted = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto& profile = i % 2 ? paper_compat_profile() : modern_default_profile();
      SenderKeys a = keygen_sender(scheme, group, rng);
      ReceiverKeys b = keygen_receiver(scheme, group, rng);
      Bytes m = rng.bytes(1 + rng.uniform(256));
      Signcryptext ct = signcrypt(scheme, group, profile, a, b.y, m, rng);
      switch (i % 3) {
        case 0:
          ct.r[rng.uniform(ct.r.size())] ^= static_cast<std::uint8_t>(1u << rng.uniform(8));
          break;
        case 1: {
          Integer flipped;
          do {
            flipped = ct.s ^ (Integer(1) << static_cast<unsigned long>(rng.uniform(group.q_bit_length())));
          } while (flipped >= group.q);
          ct.s = flipped;
          break;
        }
        default:
          ct.c[rng.uniform(ct.c.size())] ^= static_cast<std::uint8_t>(1u << rng.uniform(8));
      }
      (unsigncrypt(scheme, group, profile, b, a.y, ct) ? accepted : rejected)++;
    }
    o.require(rejected == 1000 && accepted == 0, std::string(scheme_token(scheme)) + " rejects");
    summary << (summary.tellp() == 0 ? "" : ", ") << scheme_token(scheme) << " " << rejected
            << "/1000 rejected";
  }
  o.detail << (o.pass ? "" : "; ") << summary.str();
}

void schnorr_identity(Outcome& o) {
  SeededRandom rng(5);
  std::size_t verified = 0, identity = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& profile = i % 2 ? paper_compat_profile() : modern_default_profile();
    auto keys = schnorr_keygen(group64(), rng);
    Bytes m = random_message(rng, 256);
    auto signed_ = schnorr_sign_traced(group64(), keys, m, rng, profile);
    auto check = schnorr_verify_traced(group64(), keys.y, m, signed_.sig, profile);
    verified += check.valid ? 1 : 0;
    identity += check.r_v && *check.r_v == signed_.r ? 1 : 0;
  }
  o.require(verified == 1000, "all verify");
  o.require(identity == 1000, "r_v = r");
  o.detail << verified << "/1000 verified, r_v = r in " << identity << "/1000";
}

void overhead_formula(Outcome& o) {
  for (auto scheme : kAllSchemes) {
    for (const auto& row : measure_expansion(scheme, group1024(), paper_compat_profile(),
                                             {0, 64, 1024})) {
      o.require(row.overhead_bytes == 40, std::string(scheme_token(scheme)) + " overhead 40 at " +
                                              std::to_string(row.plaintext_bytes) + " bytes");
    }
  }
  if (o.pass) o.detail << "headerless overhead 40 bytes for all schemes at 0/64/1024-byte messages";
}

void operation_counts(Outcome& o) {
  SeededRandom rng(7);
  const auto profile = paper_compat_profile();
  auto scs1 = count_ops(SchemeId::kScs1, group1024(), profile, 30, rng);
  auto scs2 = count_ops(SchemeId::kScs2, group1024(), profile, 30, rng);
  auto ssc = count_ops(SchemeId::kSchnorrSc, group1024(), profile, 30, rng);
  o.require(ssc.sender.mod_exps == 1, "schnorr-sc sender exps = 1");
  o.require(ssc.receiver.mod_exps == 3, "schnorr-sc receiver exps = 3");
  o.require(scs2.sender.mod_muls == scs1.sender.mod_muls + 1, "scs2 muls = scs1 muls + 1");
  o.require(ssc.exps_invariant && scs1.exps_invariant && scs2.exps_invariant, "exact counts");
  o.detail << (o.pass ? "" : "; ") << "schnorr-sc exps " << ssc.sender.mod_exps << "/"
           << ssc.receiver.mod_exps << ", sender muls scs1=" << scs1.sender.mod_muls
           << " scs2=" << scs2.sender.mod_muls;
}

void efficiency_ordering(Outcome& o) {
  SeededRandom rng(8);
  auto rows = time_schemes({SchemeId::kSchnorrSc}, group1024(), paper_compat_profile(), 30, rng);
  double ssc = 0, base = 0;
  for (const auto& r : rows) {
    if (r.phase == "signcrypt") (r.label == kBaselineLabel ? base : ssc) = r.median_us;
  }
  auto exp = measure_expansion(SchemeId::kSchnorrSc, group1024(), paper_compat_profile(), {64});
  o.require(ssc < base, "schnorr-sc sender faster than baseline sender");
  o.require(exp[0].overhead_bytes < exp[0].baseline_overhead_bytes, "smaller overhead");
  o.detail << (o.pass ? "" : "; ") << "sender median " << ssc << " us vs baseline " << base
           << " us; overhead " << exp[0].overhead_bytes << " vs "
           << exp[0].baseline_overhead_bytes << " bytes";
}

void game_harness(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  GameConfig config;  // 64-bit p generated per run
  NullAdversary null;
  auto null_stats = run_games(config, null, 2000, 9);
  RestrictionTester tester;
  SeededRandom rng(10);
  auto t = run_confidentiality_game(config, tester, rng);
  SabotageExploiter exploiter;
  GameConfig broken = config;
  broken.sabotaged = true;
  auto sab = run_games(broken, exploiter, 1000, 11);
  const double secs = seconds_since(t0);
  o.require(null_stats.win_rate() >= 0.45 && null_stats.win_rate() <= 0.55, "null in [0.45, 0.55]");
  o.require(t.forbidden_query_attempts >= 1, "forbidden query attempted");
  o.require(tester.last_blocked_reply.status == OracleStatus::kBlocked &&
                !tester.last_blocked_reply.message,
            "challenge query blocked");
  o.require(sab.win_rate() >= 0.99, "sabotage exploiter >= 0.99");
  o.require(secs < 60, "under 60 s");
  o.detail << (o.pass ? "" : "; ") << "null " << null_stats.win_rate() << ", forbidden "
           << t.forbidden_query_attempts << " (blocked), sabotage " << sab.win_rate() << " in "
           << secs << " s";
}

void forgery_probes(Outcome& o) {
  SeededRandom rng(12);
  std::size_t outsider = 0, insider = 0, trials = 0;
  for (auto scheme : kAllSchemes) {
    GameConfig config;
    config.scheme = scheme;
    config.profile = paper_compat_profile();  // 160-bit tags
    config.params = group64();
    auto out = run_outsider_authenticity_probe(config, rng, 10000);
    auto in = run_insider_nonrepudiation_probe(config, rng, 10000);
    outsider += out.accepts;
    insider += in.accepts;
    trials += out.trials;
    o.require(out.trials == 10000 && in.trials == 10000, "10,000 trials each");
  }
  o.require(outsider == 0, "no outsider forgery accepted");
  o.require(insider == 0, "no insider forgery accepted");
  o.detail << (o.pass ? "" : "; ") << "outsider " << outsider << "/" << trials << ", insider "
           << insider << "/" << trials << " accepted";
}

}  // namespace
}  // namespace sckit

int main() {
  using namespace sckit;
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"worked example reproduction", worked_example},
      {"legacy digest compatibility", digest_compatibility},
      {"signcryption completeness", completeness},
      {"tamper rejection", tamper_rejection},
      {"schnorr signature identity", schnorr_identity},
      {"headerless overhead formula", overhead_formula},
      {"operation counts", operation_counts},
      {"efficiency ordering", efficiency_ordering},
      {"game harness sanity", game_harness},
      {"forgery probes", forgery_probes},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s [%2d] %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
