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

// Cost accounting for the three schemes and the sign-then-encrypt baseline:
// exact operation counts from CountingOps, headerless message expansion,
// and wall-clock timing per phase.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sckit/baseline.hpp"
#include "sckit/ops.hpp"
#include "sckit/serialization.hpp"
#include "sckit/signcryption.hpp"

namespace sckit {

inline constexpr std::string_view kBaselineLabel = "sign-then-encrypt";

struct PhaseCounts {
  double mod_exps = 0;
  double mod_muls = 0;
  double mod_invs = 0;
  double hash_calls = 0;
};

struct OpCounts {
  std::string label;
  PhaseCounts sender;    // signcrypt
  PhaseCounts receiver;  // unsigncrypt
  std::size_t trials = 0;
  // Exponentiation counts matched across every trial.
  bool exps_invariant = true;
  // Nonces discarded for a non-invertible divisor; their work is not tallied.
  std::size_t resampled_nonces = 0;
};

namespace detail {

inline PhaseCounts average(const OpTally& t, std::size_t trials) {
  const double n = static_cast<double>(trials);
  return {t.mod_exps / n, t.mod_muls / n, t.mod_invs / n, t.hash_calls / n};
}

// `run(sender_tally, receiver_tally)` performs one round-trip and returns the
// number of discarded nonces.
template <class Run>
OpCounts tally_runs(std::string label, std::size_t trials, Run&& run) {
  if (trials < 1) throw ParameterError("count_ops: trials must be >= 1");
  OpTally sender_total, receiver_total;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_exps;
  bool invariant = true;
  std::size_t resampled = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    OpTally s, r;
    resampled += run(s, r);
    if (!first_exps) first_exps = {s.mod_exps, r.mod_exps};
    invariant = invariant && first_exps->first == s.mod_exps && first_exps->second == r.mod_exps;
    sender_total.mod_exps += s.mod_exps;
    sender_total.mod_muls += s.mod_muls;
    sender_total.mod_invs += s.mod_invs;
    sender_total.hash_calls += s.hash_calls;
    receiver_total.mod_exps += r.mod_exps;
    receiver_total.mod_muls += r.mod_muls;
    receiver_total.mod_invs += r.mod_invs;
    receiver_total.hash_calls += r.hash_calls;
  }
  return {std::move(label), average(sender_total, trials), average(receiver_total, trials), trials,
          invariant, resampled};
}

}  // namespace detail

inline OpCounts count_ops(SchemeId scheme, const GroupParams& params,
                          const PrimitiveProfile& profile, std::size_t trials, RandomSource& rng) {
  SenderKeys sender = keygen_sender(scheme, params, rng);
  ReceiverKeys receiver = keygen_receiver(scheme, params, rng);
  return detail::tally_runs(
      std::string(scheme_token(scheme)), trials,
      [&](OpTally& send_tally, OpTally& recv_tally) {
        Bytes m = rng.bytes(rng.uniform(257));
        std::size_t discarded = 0;
        Signcryptext ct;
        for (;;) {
          SigncryptHooks hooks;
          hooks.forced_nonce = random_scalar(params, rng).value();
          send_tally = {};
          try {
            ct = signcrypt(scheme, params, profile, sender, receiver.y, m, rng, hooks,
                           CountingOps(send_tally));
            break;
          } catch (const NotInvertible&) {
            if (++discarded == kSigncryptRetryBudget) throw RetryBudgetExhausted("count_ops");
          }
        }
        auto back = unsigncrypt(scheme, params, profile, receiver, sender.y, ct, {},
                                CountingOps(recv_tally));
        if (!back || *back != m) throw Error("count_ops: round-trip failed");
        return discarded;
      });
}

inline OpCounts count_baseline_ops(const GroupParams& params, const PrimitiveProfile& profile,
                                   std::size_t trials, RandomSource& rng) {
  SchnorrKeyPair sender = schnorr_keygen(params, rng);
  SchnorrKeyPair receiver = schnorr_keygen(params, rng);
  return detail::tally_runs(
      std::string(kBaselineLabel), trials,
      [&](OpTally& send_tally, OpTally& recv_tally) {
        Bytes m = rng.bytes(rng.uniform(257));
        auto ct = sign_then_encrypt(params, profile, sender, receiver.y, m, rng,
                                    CountingOps(send_tally));
        auto back = decrypt_then_verify(params, profile, receiver.x, sender.y, ct,
                                        CountingOps(recv_tally));
        if (!back || *back != m) throw Error("count_baseline_ops: round-trip failed");
        return std::size_t{0};
      });
}

struct ExpansionReport {
  std::string label;
  std::size_t plaintext_bytes = 0;
  std::size_t ciphertext_total_bytes = 0;  // headerless wire size
  std::size_t overhead_bytes = 0;
  std::size_t header_bytes = 0;  // framing reported separately
  std::size_t baseline_overhead_bytes = 0;
};

/// Headerless sizes are independent of the randomness, so a fixed internal
/// seed is used for the keys and nonces.
inline std::vector<ExpansionReport> measure_expansion(SchemeId scheme, const GroupParams& params,
                                                      const PrimitiveProfile& profile,
                                                      const std::vector<std::size_t>& sizes) {
  SeededRandom rng(0x5eed);
  SenderKeys sender = keygen_sender(scheme, params, rng);
  ReceiverKeys receiver = keygen_receiver(scheme, params, rng);
  SchnorrKeyPair bs = schnorr_keygen(params, rng), br = schnorr_keygen(params, rng);
  const std::size_t header = wire_header(scheme, profile).size();
  std::vector<ExpansionReport> out;
  for (std::size_t n : sizes) {
    Bytes m = rng.bytes(n);
    auto ct = signcrypt(scheme, params, profile, sender, receiver.y, m, rng);
    const std::size_t total = encode_wire(params, ct).size();
    auto base = sign_then_encrypt(params, profile, bs, br.y, m, rng);
    out.push_back({std::string(scheme_token(scheme)), n, total, total - n, header,
                   baseline_wire_size(params, base) - n});
  }
  return out;
}

struct TimingRow {
  std::string label;
  std::string phase;  // "signcrypt" or "unsigncrypt"
  std::size_t trials = 0;
  double median_us = 0;
  double q1_us = 0;
  double q3_us = 0;
};

namespace detail {

inline double quantile(std::vector<double> v, double f) {
  std::sort(v.begin(), v.end());
  const double pos = f * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (v[hi] - v[lo]) * (pos - static_cast<double>(lo));
}

template <class F>
double time_us(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(t1 - t0).count();
}

inline void push_rows(std::vector<TimingRow>& rows, std::string label,
                      const std::vector<double>& send, const std::vector<double>& recv) {
  rows.push_back({label, "signcrypt", send.size(), quantile(send, 0.5), quantile(send, 0.25),
                  quantile(send, 0.75)});
  rows.push_back({label, "unsigncrypt", recv.size(), quantile(recv, 0.5), quantile(recv, 0.25),
                  quantile(recv, 0.75)});
}

}  // namespace detail

/// Median and interquartile wall time per (scheme, phase), baseline last.
inline std::vector<TimingRow> time_schemes(const std::vector<SchemeId>& schemes,
                                           const GroupParams& params,
                                           const PrimitiveProfile& profile,
                                           std::size_t trials, RandomSource& rng,
                                           std::size_t message_bytes = 64) {
  if (trials < 10) throw ParameterError("time_schemes: trials must be >= 10");
  std::vector<TimingRow> rows;
  const Bytes m = rng.bytes(message_bytes);
  for (SchemeId scheme : schemes) {
    SenderKeys sender = keygen_sender(scheme, params, rng);
    ReceiverKeys receiver = keygen_receiver(scheme, params, rng);
    std::vector<double> send, recv;
    for (std::size_t i = 0; i < trials; ++i) {
      Signcryptext ct;
      send.push_back(detail::time_us(
          [&] { ct = signcrypt(scheme, params, profile, sender, receiver.y, m, rng); }));
      std::optional<Bytes> back;
      recv.push_back(detail::time_us(
          [&] { back = unsigncrypt(scheme, params, profile, receiver, sender.y, ct); }));
      if (!back) throw Error("time_schemes: round-trip failed");
    }
    detail::push_rows(rows, std::string(scheme_token(scheme)), send, recv);
  }
  SchnorrKeyPair bs = schnorr_keygen(params, rng), br = schnorr_keygen(params, rng);
  std::vector<double> send, recv;
  for (std::size_t i = 0; i < trials; ++i) {
    BaselineCiphertext ct;
    send.push_back(
        detail::time_us([&] { ct = sign_then_encrypt(params, profile, bs, br.y, m, rng); }));
    std::optional<Bytes> back;
    recv.push_back(
        detail::time_us([&] { back = decrypt_then_verify(params, profile, br.x, bs.y, ct); }));
    if (!back) throw Error("time_schemes: baseline round-trip failed");
  }
  detail::push_rows(rows, std::string(kBaselineLabel), send, recv);
  return rows;
}

// ---------------------------------------------------------------------------
// Reports. CSV rows are section,label,phase,metric,value.

struct BenchReport {
  std::vector<OpCounts> counts;
  std::vector<ExpansionReport> expansion;
  std::vector<TimingRow> timing;
};

inline std::string render_text(const BenchReport& r) {
  std::ostringstream out;
  char line[160];
  out << "operation counts (per run)\n";
  std::snprintf(line, sizeof line, "  %-18s %-12s %8s %8s %8s %8s\n", "scheme", "phase", "exps",
                "muls", "invs", "hashes");
  out << line;
  for (const auto& c : r.counts) {
    for (auto [phase, pc] : {std::pair{"signcrypt", c.sender}, std::pair{"unsigncrypt", c.receiver}}) {
      std::snprintf(line, sizeof line, "  %-18s %-12s %8.2f %8.2f %8.2f %8.2f\n", c.label.c_str(),
                    phase, pc.mod_exps, pc.mod_muls, pc.mod_invs, pc.hash_calls);
      out << line;
    }
  }
  out << "message expansion (bytes, headerless)\n";
  std::snprintf(line, sizeof line, "  %-18s %10s %10s %10s %8s %10s\n", "scheme", "plaintext",
                "total", "overhead", "header", "baseline");
  out << line;
  for (const auto& e : r.expansion) {
    std::snprintf(line, sizeof line, "  %-18s %10zu %10zu %10zu %8zu %10zu\n", e.label.c_str(),
                  e.plaintext_bytes, e.ciphertext_total_bytes, e.overhead_bytes, e.header_bytes,
                  e.baseline_overhead_bytes);
    out << line;
  }
  if (!r.timing.empty()) {
    out << "wall time (microseconds)\n";
    std::snprintf(line, sizeof line, "  %-18s %-12s %8s %10s %10s %10s\n", "scheme", "phase",
                  "trials", "median", "q1", "q3");
    out << line;
    for (const auto& t : r.timing) {
      std::snprintf(line, sizeof line, "  %-18s %-12s %8zu %10.1f %10.1f %10.1f\n",
                    t.label.c_str(), t.phase.c_str(), t.trials, t.median_us, t.q1_us, t.q3_us);
      out << line;
    }
  }
  return out.str();
}

inline std::string render_csv(const BenchReport& r) {
  std::ostringstream out;
  out << "section,label,phase,metric,value\n";
  auto row = [&](std::string_view section, std::string_view label, std::string_view phase,
                 std::string_view metric, auto value) {
    out << section << ',' << label << ',' << phase << ',' << metric << ',' << value << '\n';
  };
  for (const auto& c : r.counts) {
    for (auto [phase, pc] : {std::pair{"signcrypt", c.sender}, std::pair{"unsigncrypt", c.receiver}}) {
      row("ops", c.label, phase, "mod_exps", pc.mod_exps);
      row("ops", c.label, phase, "mod_muls", pc.mod_muls);
      row("ops", c.label, phase, "mod_invs", pc.mod_invs);
      row("ops", c.label, phase, "hash_calls", pc.hash_calls);
    }
  }
  for (const auto& e : r.expansion) {
    const std::string size = std::to_string(e.plaintext_bytes);
    row("expansion", e.label, size, "ciphertext_total_bytes", e.ciphertext_total_bytes);
    row("expansion", e.label, size, "overhead_bytes", e.overhead_bytes);
    row("expansion", e.label, size, "header_bytes", e.header_bytes);
    row("expansion", e.label, size, "baseline_overhead_bytes", e.baseline_overhead_bytes);
  }
  for (const auto& t : r.timing) {
    row("timing", t.label, t.phase, "median_us", t.median_us);
    row("timing", t.label, t.phase, "q1_us", t.q1_us);
    row("timing", t.label, t.phase, "q3_us", t.q3_us);
  }
  return out.str();
}

}  // namespace sckit
