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

// Canonical text formats for key, ciphertext and signature files, plus the
// headerless binary wire encoding used for message-expansion accounting.
//
// Text files are newline-terminated "name value" lines in a fixed order.
// Integers and byte strings are written as "<n>:<hex>" where n is the
// decimal count of the lowercase hex characters that follow.

#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sckit/group.hpp"
#include "sckit/primitives.hpp"
#include "sckit/schnorr.hpp"
#include "sckit/signcryption.hpp"

namespace sckit {

inline constexpr std::string_view kKeyMagic = "SCKIT1";
inline constexpr std::string_view kCiphertextMagic = "SCKIT1-CT";
inline constexpr std::string_view kSignatureMagic = "SCKIT1-SIG";
inline constexpr std::string_view kNoScheme = "none";
inline constexpr std::string_view kSignatureScheme = "schnorr-sig";

inline std::string encode_field_bytes(ByteView bytes) {
  std::string hex = to_hex(bytes);
  return std::to_string(hex.size()) + ":" + hex;
}

inline std::string encode_field_integer(const Integer& n) { return encode_field_bytes(to_bytes_be(n)); }

inline Bytes decode_field_bytes(std::string_view field) {
  auto colon = field.find(':');
  if (colon == std::string_view::npos || colon == 0) throw FormatError("field missing length prefix");
  std::string_view len_text = field.substr(0, colon);
  std::string_view hex = field.substr(colon + 1);
  if (len_text.size() > 1 && len_text[0] == '0') throw FormatError("length prefix has leading zero");
  std::size_t len = 0;
  auto [ptr, ec] = std::from_chars(len_text.data(), len_text.data() + len_text.size(), len);
  if (ec != std::errc{} || ptr != len_text.data() + len_text.size()) {
    throw FormatError("length prefix is not a decimal number");
  }
  if (len != hex.size()) throw FormatError("length prefix does not match field size");
  for (char c : hex) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) {
      throw FormatError("field is not lowercase hex");
    }
  }
  return from_hex(hex);
}

inline Integer decode_field_integer(std::string_view field) {
  Bytes b = decode_field_bytes(field);
  if (b.empty()) throw FormatError("integer field is empty");
  if (b.size() > 1 && b[0] == 0) throw FormatError("integer field is not minimal");
  return from_bytes_be(b);
}

namespace detail {

class LineWriter {
 public:
  LineWriter& line(std::string_view name, std::string_view value) {
    out_ << name << ' ' << value << '\n';
    return *this;
  }
  LineWriter& magic(std::string_view m) {
    out_ << m << '\n';
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

// Strict reader: every line must be "name value" with the expected name, in
// order, and the text must end right after the last newline.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  void expect_magic(std::string_view magic) {
    if (next_line() != magic) throw FormatError("bad magic");
  }

  std::string_view field(std::string_view name) {
    std::string_view l = next_line();
    if (l.size() <= name.size() || l.substr(0, name.size()) != name || l[name.size()] != ' ') {
      throw FormatError("expected field '" + std::string(name) + "'");
    }
    return l.substr(name.size() + 1);
  }

  std::optional<std::string_view> optional_field(std::string_view name) {
    if (at_end()) return std::nullopt;
    std::string_view rest = text_.substr(pos_);
    if (rest.size() <= name.size() || rest.substr(0, name.size()) != name ||
        rest[name.size()] != ' ') {
      return std::nullopt;
    }
    return field(name);
  }

  bool at_end() const { return pos_ == text_.size(); }

  void expect_end() const {
    if (!at_end()) throw FormatError("trailing data");
  }

 private:
  std::string_view next_line() {
    auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) throw FormatError("truncated file");
    std::string_view l = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return l;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline PrimitiveProfile parse_profile_token(std::string_view token) {
  auto p = find_profile(token);
  if (!p) throw FormatError("unknown profile token");
  return *p;
}

}  // namespace detail

enum class FileRole { kParams, kSender, kReceiver, kSchnorr };

inline std::string_view role_token(FileRole role) {
  switch (role) {
    case FileRole::kParams: return "params";
    case FileRole::kSender: return "sender";
    case FileRole::kReceiver: return "receiver";
    case FileRole::kSchnorr: return "schnorr";
  }
  return "?";
}

inline std::optional<FileRole> parse_role(std::string_view token) {
  for (auto r : {FileRole::kParams, FileRole::kSender, FileRole::kReceiver, FileRole::kSchnorr}) {
    if (role_token(r) == token) return r;
  }
  return std::nullopt;
}

/// Params, public keys and private keys share one layout. Public-only files
/// omit the x line; params files carry neither y nor x.
struct KeyFile {
  FileRole role = FileRole::kParams;
  std::optional<SchemeId> scheme;  // set for sender/receiver roles only
  PrimitiveProfile profile;
  GroupParams params;
  std::optional<Integer> y;
  std::optional<Integer> x;

  std::string_view scheme_token() const {
    if (role == FileRole::kSchnorr) return kSignatureScheme;
    return scheme ? sckit::scheme_token(*scheme) : kNoScheme;
  }

  KeyFile public_part() const {
    KeyFile pub = *this;
    pub.x.reset();
    return pub;
  }

  friend bool operator==(const KeyFile& a, const KeyFile& b) {
    return a.role == b.role && a.scheme == b.scheme && a.profile.name == b.profile.name &&
           a.params == b.params && a.y == b.y && a.x == b.x;
  }
};

inline std::string serialize_key_file(const KeyFile& f) {
  detail::LineWriter w;
  w.magic(kKeyMagic)
      .line("role", role_token(f.role))
      .line("scheme", f.scheme_token())
      .line("profile", f.profile.name)
      .line("p", encode_field_integer(f.params.p))
      .line("q", encode_field_integer(f.params.q))
      .line("g", encode_field_integer(f.params.g));
  if (f.y) w.line("y", encode_field_integer(*f.y));
  if (f.x) w.line("x", encode_field_integer(*f.x));
  return w.str();
}

/// Parses and fully validates: group parameters, subgroup membership of y,
/// and the scheme's key convention when x is present.
inline KeyFile parse_key_file(std::string_view text) {
  detail::LineReader in(text);
  in.expect_magic(kKeyMagic);
  KeyFile f;
  auto role = parse_role(in.field("role"));
  if (!role) throw FormatError("unknown role token");
  f.role = *role;
  std::string_view scheme = in.field("scheme");
  switch (f.role) {
    case FileRole::kParams:
      if (scheme != kNoScheme) throw FormatError("params file must use scheme 'none'");
      break;
    case FileRole::kSchnorr:
      if (scheme != kSignatureScheme) throw FormatError("schnorr key must use scheme 'schnorr-sig'");
      break;
    default:
      f.scheme = parse_scheme(scheme);
      if (!f.scheme) throw FormatError("unknown scheme token");
  }
  f.profile = detail::parse_profile_token(in.field("profile"));
  f.params.p = decode_field_integer(in.field("p"));
  f.params.q = decode_field_integer(in.field("q"));
  f.params.g = decode_field_integer(in.field("g"));
  if (auto y = in.optional_field("y")) f.y = decode_field_integer(*y);
  if (auto x = in.optional_field("x")) f.x = decode_field_integer(*x);
  in.expect_end();

  if (!validate_params(f.params).ok()) throw FormatError("invalid group parameters");
  if (f.role == FileRole::kParams) {
    if (f.y || f.x) throw FormatError("params file carries key material");
    return f;
  }
  if (!f.y) throw FormatError("key file missing public element");
  if (*f.y < 2 || !in_subgroup(f.params, *f.y)) throw FormatError("public element not in subgroup");
  if (f.x) {
    bool ok = f.role == FileRole::kSchnorr
                  ? (*f.x >= 1 && *f.x < f.params.q && mod_pow(f.params.g, *f.x, f.params.p) == *f.y)
                  : keys_consistent(*f.scheme, f.params, *f.x, *f.y);
    if (!ok) throw FormatError("private exponent does not match public element");
  }
  return f;
}

struct CiphertextFile {
  SchemeId scheme;
  PrimitiveProfile profile;
  Signcryptext ct;

  friend bool operator==(const CiphertextFile& a, const CiphertextFile& b) {
    return a.scheme == b.scheme && a.profile.name == b.profile.name && a.ct == b.ct;
  }
};

inline std::string serialize_ciphertext_file(const CiphertextFile& f) {
  return detail::LineWriter()
      .magic(kCiphertextMagic)
      .line("scheme", scheme_token(f.scheme))
      .line("profile", f.profile.name)
      .line("r", encode_field_bytes(f.ct.r))
      .line("s", encode_field_integer(f.ct.s))
      .line("c", encode_field_bytes(f.ct.c))
      .str();
}

/// Rejects anything that is not a structurally valid triple for its
/// profile. The s < q check needs the group and happens at unsigncryption.
inline CiphertextFile parse_ciphertext_file(std::string_view text) {
  detail::LineReader in(text);
  in.expect_magic(kCiphertextMagic);
  auto scheme = parse_scheme(in.field("scheme"));
  if (!scheme) throw FormatError("unknown scheme token");
  CiphertextFile f{*scheme, detail::parse_profile_token(in.field("profile")), {}};
  f.ct.r = decode_field_bytes(in.field("r"));
  f.ct.s = decode_field_integer(in.field("s"));
  f.ct.c = decode_field_bytes(in.field("c"));
  in.expect_end();
  if (f.ct.r.size() != f.profile.digest_length_bytes) throw FormatError("tag length mismatch");
  return f;
}

struct SignatureFile {
  PrimitiveProfile profile;
  SchnorrSignature sig;

  friend bool operator==(const SignatureFile& a, const SignatureFile& b) {
    return a.profile.name == b.profile.name && a.sig == b.sig;
  }
};

inline std::string serialize_signature_file(const SignatureFile& f) {
  return detail::LineWriter()
      .magic(kSignatureMagic)
      .line("profile", f.profile.name)
      .line("s", encode_field_integer(f.sig.s))
      .line("e", encode_field_integer(f.sig.e))
      .str();
}

inline SignatureFile parse_signature_file(std::string_view text) {
  detail::LineReader in(text);
  in.expect_magic(kSignatureMagic);
  SignatureFile f{detail::parse_profile_token(in.field("profile")), {}};
  f.sig.s = decode_field_integer(in.field("s"));
  f.sig.e = decode_field_integer(in.field("e"));
  in.expect_end();
  return f;
}

// Binary wire form: r || s (fixed ceil(q_bits/8) bytes) || c.
inline Bytes encode_wire(const GroupParams& params, const Signcryptext& ct) {
  Bytes out = ct.r;
  Bytes s = to_bytes_be(ct.s, params.q_bytes());
  out.insert(out.end(), s.begin(), s.end());
  out.insert(out.end(), ct.c.begin(), ct.c.end());
  return out;
}

inline Signcryptext decode_wire(const GroupParams& params, const PrimitiveProfile& profile,
                                ByteView wire) {
  const std::size_t fixed = profile.digest_length_bytes + params.q_bytes();
  if (wire.size() < fixed) throw FormatError("wire encoding truncated");
  Signcryptext ct;
  ct.r.assign(wire.begin(), wire.begin() + profile.digest_length_bytes);
  ct.s = from_bytes_be(wire.subspan(profile.digest_length_bytes, params.q_bytes()));
  ct.c.assign(wire.begin() + fixed, wire.end());
  return ct;
}

/// Framing that precedes a wire body: magic, scheme and profile tokens, each
/// NUL-terminated.
inline Bytes wire_header(SchemeId scheme, const PrimitiveProfile& profile) {
  std::string h;
  h.append(kCiphertextMagic).push_back('\0');
  h.append(scheme_token(scheme)).push_back('\0');
  h.append(profile.name).push_back('\0');
  return to_bytes(h);
}

}  // namespace sckit
