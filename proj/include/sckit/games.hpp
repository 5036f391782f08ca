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

// Executable confidentiality game (two-stage adversary, chosen-ciphertext
// oracles, challenge restriction) in the two-user and multi-user settings,
// for outsider and insider adversaries, plus randomized forgery probes.
//
// The adversary only ever sees a PublicView, oracle handles and the
// challenge. Private exponents live in detail::GameState, which is not
// reachable through any adversary-facing type.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sckit/group.hpp"
#include "sckit/primitives.hpp"
#include "sckit/random.hpp"
#include "sckit/serialization.hpp"
#include "sckit/signcryption.hpp"

namespace sckit {

inline constexpr std::size_t kDefaultQueryBudget = 256;

enum class Setting { kTwoUser, kMultiUser };
enum class Position { kOutsider, kInsider };

inline std::string_view setting_token(Setting s) {
  return s == Setting::kTwoUser ? "two-user" : "multi-user";
}
inline std::string_view position_token(Position p) {
  return p == Position::kOutsider ? "outsider" : "insider";
}
inline std::optional<Setting> parse_setting(std::string_view t) {
  if (t == "two-user") return Setting::kTwoUser;
  if (t == "multi-user") return Setting::kMultiUser;
  return std::nullopt;
}
inline std::optional<Position> parse_position(std::string_view t) {
  if (t == "outsider") return Position::kOutsider;
  if (t == "insider") return Position::kInsider;
  return std::nullopt;
}

struct GameConfig {
  SchemeId scheme = SchemeId::kSchnorrSc;
  Setting setting = Setting::kMultiUser;
  Position adversary_position = Position::kOutsider;
  std::size_t query_budget = kDefaultQueryBudget;  // per stage
  PrimitiveProfile profile = modern_default_profile();
  // Setup reuses these when present, otherwise generates p_bits/q_bits.
  std::optional<GroupParams> params;
  std::size_t p_bits = 64;
  std::size_t q_bits = 32;
  // Deliberately broken variant: k1 forced to zero bytes on both sides.
  bool sabotaged = false;
};

/// Everything an adversary is allowed to know.
struct PublicView {
  SchemeId scheme;
  Setting setting;
  Position position;
  GroupParams params;
  PrimitiveProfile profile;
  Integer receiver_pub;
  std::optional<Integer> sender_pub;  // outsider games only

  std::vector<std::pair<std::string, Integer>> visible_integers() const {
    std::vector<std::pair<std::string, Integer>> out = {
        {"p", params.p}, {"q", params.q}, {"g", params.g}, {"pk_R", receiver_pub}};
    if (sender_pub) out.emplace_back("pk_S", *sender_pub);
    return out;
  }
};

enum class OracleStatus { kOk, kBottom, kRefused, kBlocked };

struct SigncryptReply {
  OracleStatus status = OracleStatus::kRefused;
  std::optional<Signcryptext> ct;
};

struct UnsigncryptReply {
  OracleStatus status = OracleStatus::kRefused;
  std::optional<Bytes> message;
};

struct QueryRecord {
  std::string tag;
  std::string digest_hex;
};

struct GameTranscript {
  std::vector<QueryRecord> queries;
  int challenge_bit = 0;
  int guess = 0;
  bool win = false;
  std::size_t forbidden_query_attempts = 0;
  std::optional<std::string> fault;  // adversary fault; always a loss
};

namespace detail {
struct GameState;
}

/// Adversary-facing oracle handle. Valid only during the stage it was passed to.
class Oracles {
 public:
  SigncryptReply signcrypt(const Integer& receiver_pub, ByteView message);
  UnsigncryptReply unsigncrypt(const Integer& sender_pub, const Signcryptext& ct);

 private:
  friend struct detail::GameState;
  explicit Oracles(detail::GameState& state) : state_(&state) {}
  detail::GameState* state_;
};

struct Stage1Output {
  Bytes m0;
  Bytes m1;
  Bytes state;  // the adversary's alpha
  std::optional<SenderKeys> sender_keys;  // required in insider games
};

/// Two-stage adversary A = (A1, A2). Per-game state must travel through
/// Stage1Output::state so transcripts depend only on (config, adversary, seed).
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string_view name() const = 0;
  virtual Stage1Output stage1(const PublicView& view, Oracles& oracles, RandomSource& coins) = 0;
  virtual int stage2(const PublicView& view, const Signcryptext& challenge, ByteView state,
                     Oracles& oracles, RandomSource& coins) = 0;
};

inline Bytes zero_cipher_key(const PrimitiveProfile& profile) {
  return Bytes(profile.digest_length_bytes / 2, 0);
}

namespace detail {

inline SigncryptHooks sabotage_hooks(bool sabotaged) {
  SigncryptHooks hooks;
  if (sabotaged) {
    hooks.key_tamper = [](KeySplit& keys) { std::fill(keys.k1.begin(), keys.k1.end(), 0); };
  }
  return hooks;
}

inline std::string query_digest(const Integer& key, ByteView payload) {
  Digest d(HashAlgorithm::kSha256);
  d.update(to_bytes(encode_field_integer(key))).update(payload);
  return to_hex(d.finish());
}

inline Bytes ct_bytes(const Signcryptext& ct) {
  return to_bytes(encode_field_bytes(ct.r) + encode_field_integer(ct.s) + encode_field_bytes(ct.c));
}

struct GameState {
  GameConfig config;
  GroupParams params;
  SigncryptHooks hooks;
  std::optional<SenderKeys> sender;
  ReceiverKeys receiver;
  std::optional<Signcryptext> challenge;
  int stage = 1;
  std::size_t used = 0;
  SeededRandom oracle_rng;
  GameTranscript transcript;

  GameState(GameConfig cfg, GroupParams group, ReceiverKeys r, std::uint64_t oracle_seed)
      : config(std::move(cfg)),
        params(std::move(group)),
        hooks(sabotage_hooks(config.sabotaged)),
        receiver(std::move(r)),
        oracle_rng(oracle_seed) {}

  Oracles handle() { return Oracles(*this); }

  bool valid_key(const Integer& pk) const { return pk >= 2 && in_subgroup(params, pk); }

  bool take_budget() {
    if (used >= config.query_budget) return false;
    ++used;
    return true;
  }

  void begin_stage(int s) {
    stage = s;
    used = 0;
  }

  SigncryptReply on_signcrypt(const Integer& pk, ByteView m) {
    if (config.adversary_position == Position::kInsider || !sender) return {};
    if (!take_budget()) return {};
    transcript.queries.push_back({"signcrypt", query_digest(pk, m)});
    bool allowed = config.setting == Setting::kTwoUser ? pk == receiver.y : valid_key(pk);
    if (!allowed) return {};
    try {
      return {OracleStatus::kOk, signcrypt(config.scheme, params, config.profile, *sender, pk, m,
                                           oracle_rng, hooks)};
    } catch (const RetryBudgetExhausted&) {
      return {};
    }
  }

  UnsigncryptReply on_unsigncrypt(const Integer& pk, const Signcryptext& ct) {
    if (!take_budget()) return {};
    const Bytes payload = ct_bytes(ct);
    if (stage == 2 && sender && pk == sender->y && challenge && ct == *challenge) {
      ++transcript.forbidden_query_attempts;
      transcript.queries.push_back({"unsigncrypt-blocked", query_digest(pk, payload)});
      return {OracleStatus::kBlocked, std::nullopt};
    }
    transcript.queries.push_back({"unsigncrypt", query_digest(pk, payload)});
    bool allowed = config.setting == Setting::kTwoUser ? (sender && pk == sender->y)
                                                       : valid_key(pk);
    if (!allowed) return {};
    try {
      auto m = unsigncrypt(config.scheme, params, config.profile, receiver, pk, ct, hooks);
      if (!m) return {OracleStatus::kBottom, std::nullopt};
      return {OracleStatus::kOk, std::move(m)};
    } catch (const ParameterError&) {
      return {OracleStatus::kBottom, std::nullopt};
    }
  }
};

inline GroupParams game_setup(const GameConfig& config, RandomSource& rng) {
  if (config.params) return *config.params;
  return generate_params(config.p_bits, config.q_bits, rng);
}

}  // namespace detail

inline SigncryptReply Oracles::signcrypt(const Integer& receiver_pub, ByteView message) {
  return state_->on_signcrypt(receiver_pub, message);
}

inline UnsigncryptReply Oracles::unsigncrypt(const Integer& sender_pub, const Signcryptext& ct) {
  return state_->on_unsigncrypt(sender_pub, ct);
}

/// One run of the indistinguishability game. Adversary exceptions and
/// contract violations end the run as a loss with `fault` set.
inline GameTranscript run_confidentiality_game(const GameConfig& config, Adversary& adversary,
                                               RandomSource& rng) {
  // 1-2. Setup and key generation.
  GroupParams group = detail::game_setup(config, rng);
  ReceiverKeys receiver = keygen_receiver(config.scheme, group, rng);
  std::optional<SenderKeys> sender;
  if (config.adversary_position == Position::kOutsider) {
    sender = keygen_sender(config.scheme, group, rng);
  }
  SeededRandom coins(rng.next_u64());
  detail::GameState state(config, group, receiver, rng.next_u64());
  state.sender = sender;
  const int b = rng.coin() ? 1 : 0;

  PublicView view{config.scheme, config.setting, config.adversary_position, group, config.profile,
                  receiver.y, std::nullopt};
  if (sender) view.sender_pub = sender->y;

  auto fault = [&](std::string why) {
    state.transcript.challenge_bit = b;
    state.transcript.guess = 1 - b;
    state.transcript.win = false;
    state.transcript.fault = std::move(why);
    return state.transcript;
  };

  // 3-4. Stage-1 queries, then the challenge pair.
  Stage1Output out;
  try {
    Oracles oracles = state.handle();
    out = adversary.stage1(view, oracles, coins);
  } catch (const std::exception& e) {
    return fault(std::string("stage1: ") + e.what());
  }
  if (out.m0.size() != out.m1.size()) return fault("challenge messages differ in length");
  if (config.adversary_position == Position::kInsider) {
    if (!out.sender_keys) return fault("insider adversary supplied no sender key pair");
    const auto& k = *out.sender_keys;
    if (k.scheme != config.scheme || !keys_consistent(config.scheme, group, k.x, k.y) || k.y < 2) {
      return fault("insider sender key pair violates the scheme's key convention");
    }
    state.sender = k;
  }

  try {
    state.challenge = signcrypt(config.scheme, group, config.profile, *state.sender, receiver.y,
                                b == 0 ? out.m0 : out.m1, state.oracle_rng, state.hooks);
  } catch (const RetryBudgetExhausted&) {
    return fault("challenge signcryption failed");
  }

  // 5-6. Stage-2 queries under the restriction, then the guess.
  state.begin_stage(2);
  int guess = 0;
  try {
    Oracles oracles = state.handle();
    guess = adversary.stage2(view, *state.challenge, out.state, oracles, coins);
  } catch (const std::exception& e) {
    return fault(std::string("stage2: ") + e.what());
  }
  if (guess != 0 && guess != 1) return fault("guess is not a bit");
  state.transcript.challenge_bit = b;
  state.transcript.guess = guess;
  state.transcript.win = guess == b;
  return state.transcript;
}

/// QUERY <tag> <hex-digest> lines followed by one RESULT line.
inline std::string format_transcript(const GameTranscript& t) {
  std::string out;
  for (const auto& q : t.queries) out += "QUERY " + q.tag + " " + q.digest_hex + "\n";
  out += "RESULT b=" + std::to_string(t.challenge_bit) + " guess=" + std::to_string(t.guess) +
         " win=" + std::to_string(t.win ? 1 : 0) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Shipped adversaries. They validate the harness; none attacks the schemes.

namespace detail {

inline std::optional<SenderKeys> insider_keys(const PublicView& view, RandomSource& coins) {
  if (view.position != Position::kInsider) return std::nullopt;
  return keygen_sender(view.scheme, view.params, coins);
}

}  // namespace detail

/// Random equal-length messages, no queries, coin-flip guess.
class NullAdversary final : public Adversary {
 public:
  std::string_view name() const override { return "null"; }
  Stage1Output stage1(const PublicView& view, Oracles&, RandomSource& coins) override {
    return {coins.bytes(16), coins.bytes(16), {}, detail::insider_keys(view, coins)};
  }
  int stage2(const PublicView&, const Signcryptext&, ByteView, Oracles&,
             RandomSource& coins) override {
    return coins.coin() ? 1 : 0;
  }
};

/// Replays the challenge under the attacked sender key (must be blocked),
/// then under a different claimed sender key (must reach the oracle). Any
/// message leaking from the first query decides the guess, so a harness that
/// fails to block shows up as a win rate of 1.
class RestrictionTester final : public Adversary {
 public:
  std::string_view name() const override { return "restriction-tester"; }

  Stage1Output stage1(const PublicView& view, Oracles&, RandomSource& coins) override {
    Stage1Output out{to_bytes("restriction-m0"), to_bytes("restriction-m1"), {},
                     detail::insider_keys(view, coins)};
    const Integer& pk_s = out.sender_keys ? out.sender_keys->y : *view.sender_pub;
    out.state = to_bytes_be(pk_s);
    return out;
  }

  int stage2(const PublicView& view, const Signcryptext& challenge, ByteView state,
             Oracles& oracles, RandomSource& coins) override {
    const Integer pk_s = from_bytes_be(state);
    last_blocked_reply = oracles.unsigncrypt(pk_s, challenge);
    const Integer other = pk_s == view.params.g ? mod_pow(view.params.g, 2, view.params.p)
                                                : view.params.g;
    last_other_key_reply = oracles.unsigncrypt(other, challenge);
    if (last_blocked_reply.message) return *last_blocked_reply.message == to_bytes("restriction-m1");
    return coins.coin() ? 1 : 0;
  }

  // Inspection for tests; not part of the game contract.
  UnsigncryptReply last_blocked_reply;
  UnsigncryptReply last_other_key_reply;
};

/// Decrypts the challenge with the all-zero cipher key. Wins always against
/// the sabotaged variant and at chance level against the real schemes.
class SabotageExploiter final : public Adversary {
 public:
  std::string_view name() const override { return "sabotage-exploiter"; }

  Stage1Output stage1(const PublicView& view, Oracles&, RandomSource& coins) override {
    return {Bytes(24, 0x00), Bytes(24, 0xff), {}, detail::insider_keys(view, coins)};
  }

  int stage2(const PublicView& view, const Signcryptext& challenge, ByteView, Oracles&,
             RandomSource& coins) override {
    Bytes m = sym_decrypt(zero_cipher_key(view.profile), challenge.c, view.profile);
    if (m == Bytes(24, 0x00)) return 0;
    if (m == Bytes(24, 0xff)) return 1;
    return coins.coin() ? 1 : 0;
  }
};

inline std::vector<std::string_view> adversary_names() {
  return {"null", "restriction-tester", "sabotage-exploiter"};
}

inline std::unique_ptr<Adversary> make_adversary(std::string_view name) {
  if (name == "null") return std::make_unique<NullAdversary>();
  if (name == "restriction-tester") return std::make_unique<RestrictionTester>();
  if (name == "sabotage-exploiter") return std::make_unique<SabotageExploiter>();
  return nullptr;
}

struct GameStatistics {
  std::size_t runs = 0;
  std::size_t wins = 0;
  std::size_t faults = 0;
  std::size_t queries = 0;
  std::size_t forbidden_query_attempts = 0;
  double win_rate() const { return runs == 0 ? 0.0 : static_cast<double>(wins) / runs; }
};

/// Independent runs with per-run seeds derived from the master seed.
inline GameStatistics run_games(const GameConfig& config, Adversary& adversary, std::size_t runs,
                                std::uint64_t seed, std::vector<GameTranscript>* keep = nullptr) {
  GameStatistics stats;
  SeededRandom master(seed);
  for (std::size_t i = 0; i < runs; ++i) {
    SeededRandom run_rng = master.fork();
    GameTranscript t = run_confidentiality_game(config, adversary, run_rng);
    ++stats.runs;
    stats.wins += t.win ? 1 : 0;
    stats.faults += t.fault ? 1 : 0;
    stats.queries += t.queries.size();
    stats.forbidden_query_attempts += t.forbidden_query_attempts;
    if (keep) keep->push_back(std::move(t));
  }
  return stats;
}

// ---------------------------------------------------------------------------
// Forgery probes.

enum class ForgeryStrategy { kMixed, kRandomTriples, kMutations };

struct ForgeryStats {
  std::size_t trials = 0;
  std::size_t accepts = 0;
  std::size_t random_triples = 0;
  std::size_t mutations = 0;
  std::size_t replays = 0;         // verbatim honest replays, not forgeries
  std::size_t replay_accepts = 0;
};

namespace detail {

struct ProbeWorld {
  GroupParams params;
  SenderKeys sender;
  ReceiverKeys receiver;
  std::vector<std::pair<Bytes, Signcryptext>> honest;
};

inline ProbeWorld probe_world(const GameConfig& config, RandomSource& rng, std::size_t honest) {
  GroupParams group = game_setup(config, rng);
  ProbeWorld w{group, keygen_sender(config.scheme, group, rng),
               keygen_receiver(config.scheme, group, rng), {}};
  for (std::size_t i = 0; i < honest; ++i) {
    Bytes m = rng.bytes(16 + rng.uniform(48));
    w.honest.emplace_back(m, signcrypt(config.scheme, group, config.profile, w.sender,
                                       w.receiver.y, m, rng));
  }
  return w;
}

inline bool accepts(const GameConfig& config, const ProbeWorld& w, const Signcryptext& ct) {
  try {
    return unsigncrypt(config.scheme, w.params, config.profile, w.receiver, w.sender.y, ct)
        .has_value();
  } catch (const ParameterError&) {
    return false;
  }
}

inline Signcryptext mutate(const GroupParams& params, const Signcryptext& base,
                           RandomSource& rng) {
  Signcryptext ct = base;
  const auto flip = static_cast<std::uint8_t>(1 + rng.uniform(255));
  switch (ct.c.empty() ? rng.uniform(2) : rng.uniform(3)) {
    case 0:
      ct.r[rng.uniform(ct.r.size())] ^= flip;
      break;
    case 1: {
      Bytes s = to_bytes_be(ct.s, params.q_bytes());
      s[rng.uniform(s.size())] ^= flip;
      ct.s = from_bytes_be(s);
      break;
    }
    default:
      ct.c[rng.uniform(ct.c.size())] ^= flip;
  }
  return ct;
}

}  // namespace detail

/// Outsider forger: fresh random triples and byte mutations of honest
/// signcryptexts, submitted to the receiver for the fixed sender. Verbatim
/// replays are tallied separately.
inline ForgeryStats run_outsider_authenticity_probe(const GameConfig& config, RandomSource& rng,
                                                    std::size_t trials,
                                                    ForgeryStrategy strategy = ForgeryStrategy::kMixed) {
  if (trials < 1) throw ParameterError("probe: trials must be >= 1");
  detail::ProbeWorld w = detail::probe_world(config, rng, 16);
  ForgeryStats stats;
  for (const auto& [m, ct] : w.honest) {
    ++stats.replays;
    stats.replay_accepts += detail::accepts(config, w, ct) ? 1 : 0;
  }
  auto is_replay = [&](const Signcryptext& ct) {
    for (const auto& h : w.honest) {
      if (h.second == ct) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < trials; ++i) {
    bool random_triple = strategy == ForgeryStrategy::kRandomTriples ||
                         (strategy == ForgeryStrategy::kMixed && i % 2 == 0);
    Signcryptext cand;
    do {
      if (random_triple) {
        cand.r = rng.bytes(config.profile.digest_length_bytes);
        cand.s = random_in_range(0, w.params.q - 1, rng);
        cand.c = rng.bytes(rng.uniform(65));
      } else {
        const auto& base = w.honest[rng.uniform(w.honest.size())].second;
        do {
          cand = detail::mutate(w.params, base, rng);
        } while (cand.s >= w.params.q);
      }
    } while (is_replay(cand));
    ++(random_triple ? stats.random_triples : stats.mutations);
    ++stats.trials;
    stats.accepts += detail::accepts(config, w, cand) ? 1 : 0;
  }
  return stats;
}

struct InsiderProbeOptions {
  // Sanity inversion: hand the forger the sender's private key as well.
  bool forger_has_sender_key = false;
};

/// Receiver-equipped forger. With skR it can open any (r, s) to (k1, k2), so
/// it tries (a) random (r, s) with c = E_k1(m*) for a fresh m*, and (b)
/// honest (r, s) re-encrypting a different message under the recovered k1.
inline ForgeryStats run_insider_nonrepudiation_probe(const GameConfig& config, RandomSource& rng,
                                                     std::size_t trials,
                                                     InsiderProbeOptions options = {}) {
  if (trials < 1) throw ParameterError("probe: trials must be >= 1");
  detail::ProbeWorld w = detail::probe_world(config, rng, 16);
  ForgeryStats stats;
  auto fresh_message = [&]() {
    for (;;) {
      Bytes m = rng.bytes(32);
      bool seen = false;
      for (const auto& h : w.honest) seen = seen || h.first == m;
      if (!seen) return m;
    }
  };
  const Integer& mod = reduction_modulus(w.params, config.profile);
  for (std::size_t i = 0; i < trials; ++i) {
    Bytes target = fresh_message();
    Signcryptext cand;
    if (options.forger_has_sender_key) {
      cand = signcrypt(config.scheme, w.params, config.profile, w.sender, w.receiver.y, target, rng);
      ++stats.random_triples;
    } else if (i % 2 == 0) {
      cand.r = rng.bytes(config.profile.digest_length_bytes);
      cand.s = random_in_range(0, w.params.q - 1, rng);
      Integer dh = recover_dh(config.scheme, w.params, w.receiver.x, w.sender.y,
                              tag_to_scalar(cand.r, mod), cand.s);
      KeySplit keys = split_key(derive_key_material(dh, config.profile));
      cand.c = sym_encrypt(keys.k1, target, config.profile);
      ++stats.random_triples;
    } else {
      const auto& base = w.honest[rng.uniform(w.honest.size())].second;
      Integer dh = recover_dh(config.scheme, w.params, w.receiver.x, w.sender.y,
                              tag_to_scalar(base.r, mod), base.s);
      KeySplit keys = split_key(derive_key_material(dh, config.profile));
      cand = base;
      cand.c = sym_encrypt(keys.k1, target, config.profile);
      ++stats.mutations;
    }
    ++stats.trials;
    stats.accepts += detail::accepts(config, w, cand) ? 1 : 0;
  }
  return stats;
}

}  // namespace sckit
