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

// Command implementations for the sckit tool. `run` is the whole CLI and is
// callable in-process; main() in sckit.cpp only forwards argv.
//
// Exit codes: 0 ok, 2 bad flags, 3 generation failure, 4 invalid or
// mismatched files, 5 signcryption retry budget exhausted, 6 rejected
// (unsigncryption bottom or signature verification failure).

#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sckit/sckit.hpp"

namespace sckit::cli {

enum ExitCode : int {
  kOk = 0,
  kBadFlags = 2,
  kGenerationFailed = 3,
  kBadFile = 4,
  kRetryExhausted = 5,
  kRejected = 6,
};

#ifdef SCKIT_TEST_HOOKS
inline constexpr bool kTestHooks = true;
#else
inline constexpr bool kTestHooks = false;
#endif

namespace detail {

struct CommandError {
  int code;
  std::string message;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kBadFile, "cannot read " + path};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size()))) {
    throw CommandError{kBadFile, "cannot write " + path};
  }
}

template <class F>
auto parse_or_fail(const std::string& path, F&& parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw CommandError{kBadFile, path + ": " + e.what()};
  }
}

inline KeyFile load_key(const std::string& path) {
  return parse_or_fail(path, [](const std::string& t) { return parse_key_file(t); });
}

inline std::unique_ptr<RandomSource> make_rng(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

inline PrimitiveProfile profile_flag(const std::string& token) {
  auto p = find_profile(token);
  if (!p) throw CommandError{kBadFlags, "unknown profile: " + token};
  return *p;
}

inline std::string fingerprint(std::string_view text) {
  return to_hex(sha256(ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size())));
}

inline void require_role(const KeyFile& f, FileRole role, bool need_private,
                         const std::string& what) {
  if (f.role != role) throw CommandError{kBadFile, what + ": wrong key role"};
  if (need_private && !f.x) throw CommandError{kBadFile, what + ": private exponent missing"};
}

inline void require_same_domain(const KeyFile& a, const KeyFile& b) {
  if (!(a.params == b.params) || a.profile.name != b.profile.name || a.scheme != b.scheme) {
    throw CommandError{kBadFile, "key files disagree on params, profile or scheme"};
  }
}

inline void check_scheme_flag(const std::string& flag, const KeyFile& key) {
  if (!flag.empty() && flag != key.scheme_token()) {
    throw CommandError{kBadFile, "scheme flag does not match key files"};
  }
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::CommandError;

  CLI::App app{"Signcryption toolkit: SCS1, SCS2 and Schnorr signcryption"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  std::string profile_token = std::string(kModernDefault);

  // paramgen
  std::size_t p_bits = 1024, q_bits = 160;
  std::string out_path;
  auto* paramgen = app.add_subcommand("paramgen", "Generate a Schnorr group parameter file");
  paramgen->add_option("--p-bits", p_bits, "Bits of p")->capture_default_str();
  paramgen->add_option("--q-bits", q_bits, "Bits of q")->capture_default_str();
  paramgen->add_option("--profile", profile_token, "Primitive profile")->capture_default_str();
  paramgen->add_option("--seed", seed, "Deterministic seed");
  paramgen->add_option("--out", out_path, "Output params file")->required();

  // keygen
  std::string scheme_flag, role_flag, params_path, pub_path;
  std::optional<std::string> force_exponent;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--scheme", scheme_flag, "scs1 | scs2 | schnorr-sc | schnorr-sig");
  keygen->add_option("--role", role_flag, "sender | receiver | schnorr")->required();
  keygen->add_option("--params", params_path, "Params file")->required();
  keygen->add_option("--seed", seed, "Deterministic seed");
  keygen->add_option("--out", out_path, "Private key file")->required();
  keygen->add_option("--pub", pub_path, "Public key file")->required();
  if (kTestHooks) keygen->add_option("--force-exponent", force_exponent, "Test hook");

  // signcrypt / unsigncrypt
  std::string sender_path, receiver_path, in_path;
  std::optional<std::string> force_nonce;
  auto* sc = app.add_subcommand("signcrypt", "Signcrypt a file");
  sc->add_option("--scheme", scheme_flag, "Expected scheme");
  sc->add_option("--sender", sender_path, "Sender private key file")->required();
  sc->add_option("--receiver", receiver_path, "Receiver public key file")->required();
  sc->add_option("--in", in_path, "Plaintext input")->required();
  sc->add_option("--out", out_path, "Ciphertext output")->required();
  sc->add_option("--seed", seed, "Deterministic seed");
  if (kTestHooks) sc->add_option("--force-nonce", force_nonce, "Test hook");

  auto* usc = app.add_subcommand("unsigncrypt", "Unsigncrypt a file");
  usc->add_option("--scheme", scheme_flag, "Expected scheme");
  usc->add_option("--receiver", receiver_path, "Receiver private key file")->required();
  usc->add_option("--sender", sender_path, "Sender public key file")->required();
  usc->add_option("--in", in_path, "Ciphertext input")->required();
  usc->add_option("--out", out_path, "Plaintext output")->required();

  // sign / verify
  std::string key_path, sig_path;
  auto* sign = app.add_subcommand("sign", "Schnorr-sign a file");
  sign->add_option("--key", key_path, "Schnorr private key file")->required();
  sign->add_option("--in", in_path, "Input")->required();
  sign->add_option("--sig", sig_path, "Signature output")->required();
  sign->add_option("--seed", seed, "Deterministic seed");

  auto* verify = app.add_subcommand("verify", "Verify a Schnorr signature");
  verify->add_option("--pub", key_path, "Schnorr public key file")->required();
  verify->add_option("--in", in_path, "Input")->required();
  verify->add_option("--sig", sig_path, "Signature file")->required();

  // game
  std::string game_scheme = "schnorr-sc", setting_flag = "multi-user", position_flag = "outsider";
  std::string adversary_flag = "null", transcript_path;
  std::size_t runs = 2000, budget = kDefaultQueryBudget, game_p_bits = 64, game_q_bits = 32;
  bool sabotaged = false;
  auto* game = app.add_subcommand("game", "Run the confidentiality game");
  game->add_option("--scheme", game_scheme)->capture_default_str();
  game->add_option("--setting", setting_flag, "two-user | multi-user")->capture_default_str();
  game->add_option("--position", position_flag, "outsider | insider")->capture_default_str();
  game->add_option("--adversary", adversary_flag, "null | restriction-tester | sabotage-exploiter")
      ->capture_default_str();
  game->add_option("--runs", runs)->capture_default_str();
  game->add_option("--seed", seed, "Master seed");
  game->add_option("--p-bits", game_p_bits)->capture_default_str();
  game->add_option("--q-bits", game_q_bits)->capture_default_str();
  game->add_option("--budget", budget, "Oracle queries per stage")->capture_default_str();
  game->add_option("--profile", profile_token)->capture_default_str();
  game->add_flag("--sabotaged", sabotaged, "Use the broken zero-k1 scheme variant");
  game->add_option("--transcript", transcript_path, "Write QUERY/RESULT lines here");

  // bench
  std::string schemes_flag = "scs1,scs2,schnorr-sc", sizes_flag = "0,64,1024";
  std::size_t trials = 30;
  bool csv = false, no_timing = false;
  std::size_t bench_p_bits = 1024, bench_q_bits = 160;
  auto* bench = app.add_subcommand("bench", "Operation counts, expansion and timing");
  bench->add_option("--schemes", schemes_flag)->capture_default_str();
  bench->add_option("--sizes", sizes_flag, "Message sizes in bytes")->capture_default_str();
  bench->add_option("--trials", trials)->capture_default_str();
  bench->add_option("--p-bits", bench_p_bits)->capture_default_str();
  bench->add_option("--q-bits", bench_q_bits)->capture_default_str();
  bench->add_option("--profile", profile_token)->capture_default_str();
  bench->add_option("--seed", seed);
  bench->add_flag("--csv", csv, "Comma-separated output");
  bench->add_flag("--no-timing", no_timing, "Skip wall-clock measurements");

  std::vector<const char*> argv;
  argv.push_back("sckit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), const_cast<char**>(argv.data()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadFlags;
  }

  try {
    if (paramgen->parsed()) {
      if (p_bits < kMinGroupBits || q_bits < 2 || q_bits >= p_bits) {
        throw CommandError{kBadFlags, "need p-bits >= 16 and 2 <= q-bits < p-bits"};
      }
      PrimitiveProfile profile = detail::profile_flag(profile_token);
      auto rng = detail::make_rng(seed);
      SchemeParams sp;
      try {
        sp = setup(p_bits, q_bits, profile, *rng);
      } catch (const GenerationFailure& e) {
        throw CommandError{kGenerationFailed, e.what()};
      }
      KeyFile f{FileRole::kParams, std::nullopt, profile, sp.group, std::nullopt, std::nullopt};
      std::string text = serialize_key_file(f);
      detail::write_file(out_path, text);
      out << "fingerprint " << detail::fingerprint(text) << "\n";
      return kOk;
    }

    if (keygen->parsed()) {
      auto role = parse_role(role_flag);
      if (!role || *role == FileRole::kParams) throw CommandError{kBadFlags, "bad --role"};
      std::optional<SchemeId> scheme;
      if (*role == FileRole::kSchnorr) {
        if (!scheme_flag.empty() && scheme_flag != kSignatureScheme) {
          throw CommandError{kBadFlags, "role schnorr requires scheme schnorr-sig"};
        }
      } else {
        scheme = parse_scheme(scheme_flag);
        if (!scheme) throw CommandError{kBadFlags, "bad or missing --scheme"};
      }
      KeyFile params = detail::load_key(params_path);
      detail::require_role(params, FileRole::kParams, false, params_path);
      auto rng = detail::make_rng(seed);
      Integer x;
      if (force_exponent) {
        try {
          x = RandomScalar(params.params, integer_from_string(*force_exponent)).value();
        } catch (const ParameterError& e) {
          throw CommandError{kBadFlags, e.what()};
        }
      } else {
        x = random_scalar(params.params, *rng).value();
      }
      KeyFile key = params;
      key.role = *role;
      key.scheme = scheme;
      key.x = x;
      key.y = scheme ? public_element(*scheme, params.params, x)
                     : mod_pow(params.params.g, x, params.params.p);
      detail::write_file(out_path, serialize_key_file(key));
      detail::write_file(pub_path, serialize_key_file(key.public_part()));
      out << "public " << key.y->get_str(10) << "\n";
      return kOk;
    }

    if (sc->parsed()) {
      KeyFile sender = detail::load_key(sender_path);
      KeyFile receiver = detail::load_key(receiver_path);
      detail::require_role(sender, FileRole::kSender, true, sender_path);
      detail::require_role(receiver, FileRole::kReceiver, false, receiver_path);
      detail::require_same_domain(sender, receiver);
      detail::check_scheme_flag(scheme_flag, sender);
      std::string data = detail::read_file(in_path);
      auto rng = detail::make_rng(seed);
      SigncryptHooks hooks;
      if (force_nonce) {
        try {
          hooks.forced_nonce = RandomScalar(sender.params, integer_from_string(*force_nonce)).value();
        } catch (const ParameterError& e) {
          throw CommandError{kBadFlags, e.what()};
        }
      }
      SenderKeys keys{*sender.scheme, *sender.x, *sender.y};
      CiphertextFile ct{*sender.scheme, sender.profile, {}};
      try {
        ct.ct = signcrypt(*sender.scheme, sender.params, sender.profile, keys, *receiver.y,
                          to_bytes(data), *rng, hooks);
      } catch (const RetryBudgetExhausted& e) {
        throw CommandError{kRetryExhausted, e.what()};
      } catch (const NotInvertible& e) {
        throw CommandError{kRetryExhausted, e.what()};
      }
      detail::write_file(out_path, serialize_ciphertext_file(ct));
      return kOk;
    }

    if (usc->parsed()) {
      KeyFile receiver = detail::load_key(receiver_path);
      KeyFile sender = detail::load_key(sender_path);
      detail::require_role(receiver, FileRole::kReceiver, true, receiver_path);
      detail::require_role(sender, FileRole::kSender, false, sender_path);
      detail::require_same_domain(sender, receiver);
      detail::check_scheme_flag(scheme_flag, receiver);
      CiphertextFile ct = detail::parse_or_fail(
          in_path, [](const std::string& t) { return parse_ciphertext_file(t); });
      if (ct.scheme != *receiver.scheme || ct.profile.name != receiver.profile.name) {
        throw CommandError{kBadFile, "ciphertext scheme or profile does not match keys"};
      }
      ReceiverKeys keys{*receiver.scheme, *receiver.x, *receiver.y};
      std::optional<Bytes> m;
      try {
        m = unsigncrypt(ct.scheme, receiver.params, receiver.profile, keys, *sender.y, ct.ct);
      } catch (const ParameterError& e) {
        throw CommandError{kBadFile, e.what()};
      }
      if (!m) {
        err << "REJECTED\n";
        return kRejected;
      }
      detail::write_file(out_path, std::string(m->begin(), m->end()));
      return kOk;
    }

    if (sign->parsed()) {
      KeyFile key = detail::load_key(key_path);
      detail::require_role(key, FileRole::kSchnorr, true, key_path);
      std::string data = detail::read_file(in_path);
      auto rng = detail::make_rng(seed);
      auto sig = schnorr_sign(key.params, SchnorrKeyPair{*key.x, *key.y}, to_bytes(data), *rng,
                              key.profile);
      detail::write_file(sig_path, serialize_signature_file({key.profile, sig}));
      return kOk;
    }

    if (verify->parsed()) {
      KeyFile key = detail::load_key(key_path);
      detail::require_role(key, FileRole::kSchnorr, false, key_path);
      std::string data = detail::read_file(in_path);
      SignatureFile sig = detail::parse_or_fail(
          sig_path, [](const std::string& t) { return parse_signature_file(t); });
      if (sig.profile.name != key.profile.name) {
        throw CommandError{kBadFile, "signature profile does not match key"};
      }
      if (!schnorr_verify(key.params, *key.y, to_bytes(data), sig.sig, key.profile)) {
        err << "INVALID\n";
        return kRejected;
      }
      out << "OK\n";
      return kOk;
    }

    if (game->parsed()) {
      GameConfig config;
      auto scheme = parse_scheme(game_scheme);
      auto setting = parse_setting(setting_flag);
      auto position = parse_position(position_flag);
      auto adversary = make_adversary(adversary_flag);
      if (!scheme || !setting || !position || !adversary || runs < 1) {
        throw CommandError{kBadFlags, "bad game flags"};
      }
      if (game_p_bits < kMinGroupBits || game_q_bits < 2 || game_q_bits >= game_p_bits) {
        throw CommandError{kBadFlags, "bad group size"};
      }
      config.scheme = *scheme;
      config.setting = *setting;
      config.adversary_position = *position;
      config.query_budget = budget;
      config.profile = detail::profile_flag(profile_token);
      config.p_bits = game_p_bits;
      config.q_bits = game_q_bits;
      config.sabotaged = sabotaged;
      const std::uint64_t master = seed ? *seed : SystemRandom().next_u64();
      std::vector<GameTranscript> transcripts;
      GameStatistics stats;
      try {
        stats = run_games(config, *adversary, runs, master,
                          transcript_path.empty() ? nullptr : &transcripts);
      } catch (const GenerationFailure& e) {
        throw CommandError{kGenerationFailed, e.what()};
      }
      if (!transcript_path.empty()) {
        std::string text;
        for (const auto& t : transcripts) text += format_transcript(t);
        detail::write_file(transcript_path, text);
      }
      char rate[32];
      std::snprintf(rate, sizeof rate, "%.4f", stats.win_rate());
      out << "adversary " << adversary->name() << "\n"
          << "runs " << stats.runs << "\n"
          << "wins " << stats.wins << "\n"
          << "win_rate " << rate << "\n"
          << "faults " << stats.faults << "\n"
          << "queries " << stats.queries << "\n"
          << "forbidden_query_attempts " << stats.forbidden_query_attempts << "\n";
      return kOk;
    }

    if (bench->parsed()) {
      std::vector<SchemeId> schemes;
      for (const auto& t : detail::split_list(schemes_flag)) {
        auto id = parse_scheme(t);
        if (!id) throw CommandError{kBadFlags, "unknown scheme: " + t};
        schemes.push_back(*id);
      }
      std::vector<std::size_t> sizes;
      for (const auto& t : detail::split_list(sizes_flag)) {
        try {
          std::size_t used = 0;
          sizes.push_back(std::stoul(t, &used));
          if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
          throw CommandError{kBadFlags, "bad size: " + t};
        }
      }
      if (schemes.empty() || trials < 10 || bench_p_bits < kMinGroupBits ||
          bench_q_bits < 2 || bench_q_bits >= bench_p_bits) {
        throw CommandError{kBadFlags, "bad bench flags"};
      }
      PrimitiveProfile profile = detail::profile_flag(profile_token);
      auto rng = detail::make_rng(seed);
      GroupParams params;
      try {
        params = generate_params(bench_p_bits, bench_q_bits, *rng);
      } catch (const GenerationFailure& e) {
        throw CommandError{kGenerationFailed, e.what()};
      }
      BenchReport report;
      for (SchemeId s : schemes) {
        report.counts.push_back(count_ops(s, params, profile, trials, *rng));
      }
      report.counts.push_back(count_baseline_ops(params, profile, trials, *rng));
      for (SchemeId s : schemes) {
        auto rows = measure_expansion(s, params, profile, sizes);
        report.expansion.insert(report.expansion.end(), rows.begin(), rows.end());
      }
      if (!no_timing) report.timing = time_schemes(schemes, params, profile, trials, *rng);
      out << (csv ? render_csv(report) : render_text(report));
      return kOk;
    }
  } catch (const CommandError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kBadFlags;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadFile;
  }
  return kBadFlags;
}

}  // namespace sckit::cli
