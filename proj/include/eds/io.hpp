#pragma once

#include <json.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "eds/curve.hpp"
#include "eds/recurrence.hpp"
#include "eds/reduction.hpp"
#include "eds/sequences.hpp"

namespace eds {

// Insertion-ordered JSON so serialized field order is stable.
using json = nlohmann::ordered_json;

inline std::string trim(std::string_view s) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return std::string(s.substr(begin, end - begin));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(trim(s.substr(pos)));
      return parts;
    }
    parts.push_back(trim(s.substr(pos, next - pos)));
    pos = next + 1;
  }
}

/// Strict decimal integer: optional sign, then digits.
inline Int parse_int(const std::string& s) {
  std::string t = trim(s);
  std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (t.size() == start)
    fail(errc::parse_error, "empty integer in '" + s + "'");
  for (std::size_t i = start; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      fail(errc::parse_error, "invalid integer '" + s + "'");
  return Int(t);
}

/// "num/den" or plain integer.
inline Rat parse_rational(const std::string& s) {
  std::vector<std::string> parts = split(s, '/');
  if (parts.size() == 1) return Rat(parse_int(parts[0]));
  if (parts.size() != 2) fail(errc::parse_error, "invalid rational '" + s + "'");
  Int den = parse_int(parts[1]);
  if (den == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
  return make_rat(parse_int(parts[0]), den);
}

/// "a1,a2,a3,a4,a6".
inline WeierstrassCurve parse_curve(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() != 5)
    fail(errc::parse_error, "curve must be 'a1,a2,a3,a4,a6', got '" + s + "'");
  return make_curve(parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2]),
                    parse_int(parts[3]), parse_int(parts[4]));
}

/// "x,y" with rational components.
inline RationalPoint parse_point(const std::string& s) {
  std::vector<std::string> parts = split(s, ',');
  if (parts.size() != 2)
    fail(errc::parse_error, "point must be 'x,y', got '" + s + "'");
  return RationalPoint(parse_rational(parts[0]), parse_rational(parts[1]));
}

inline json to_json(const SequenceRecord& rec) {
  json j;
  j["n"] = rec.n;
  j["is_identity"] = rec.is_identity;
  j["B"] = dec(rec.B);
  j["beta"] = dec(rec.beta);
  j["h"] = dec(rec.h);
  j["g"] = dec(rec.g);
  if (rec.x) j["x"] = dec(*rec.x);
  return j;
}

inline json to_json(const ReductionProfile& profile) {
  json j;
  j["delta"] = dec(profile.delta);
  json primes = json::array();
  for (const PrimeEntry& e : profile.primes) {
    json entry;
    entry["p"] = dec(e.p);
    entry["ord_delta"] = e.ord_delta;
    entry["r"] = e.r;
    primes.push_back(std::move(entry));
  }
  j["primes"] = std::move(primes);
  j["M"] = profile.M;
  return j;
}

inline json to_json(const TripleCheckResult& t) {
  json j;
  j["m"] = t.m;
  j["n"] = t.n;
  j["r"] = t.r;
  j["qualifying"] = t.qualifying;
  j["defect"] = dec(t.defect);
  return j;
}

}  // namespace eds
