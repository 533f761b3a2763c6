// Copyright 2026 The tugame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tugame/gamefile.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace tugame {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

long parse_long(std::string_view s, int line, const std::string& what) {
  const std::string str(trim(s));
  if (str.empty()) throw GameFileError(line, "missing " + what);
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(str, &used);
  } catch (const std::exception&) {
    throw GameFileError(line, "invalid " + what + ": '" + str + "'");
  }
  if (used != str.size()) {
    throw GameFileError(line, "invalid " + what + ": '" + str + "'");
  }
  return value;
}

Coalition parse_coalition(std::string_view token, int n, int line) {
  token = trim(token);
  if (token.empty()) throw GameFileError(line, "missing coalition");
  if (token.starts_with("m:")) {
    const long mask = parse_long(token.substr(2), line, "coalition mask");
    if (mask <= 0 || mask >= (1L << n)) {
      throw GameFileError(line, "coalition mask out of range: '" + std::string(token) + "'");
    }
    return Coalition(static_cast<std::uint32_t>(mask));
  }
  Coalition s;
  for (std::string_view part : split(token, ',')) {
    const long p = parse_long(part, line, "player id");
    if (p < 1 || p > n) {
      throw GameFileError(line, "player id out of range: " + std::to_string(p));
    }
    if (s.contains(static_cast<int>(p))) {
      throw GameFileError(line, "repeated player id: " + std::to_string(p));
    }
    s = s | Coalition::single(static_cast<int>(p));
  }
  return s;
}

}  // namespace

TuGame parse_game_text(std::string_view text, int max_players) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;

  int n = -1;
  std::vector<Rational> values;
  std::vector<bool> assigned;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (n < 0) {
      if (!line.starts_with("players")) {
        throw GameFileError(lineno, "expected header 'players <n>'");
      }
      const long players = parse_long(line.substr(7), lineno, "player count");
      if (players < 2) throw GameFileError(lineno, "need at least 2 players");
      if (players > max_players) {
        throw GameFileError(lineno, "player count " + std::to_string(players) +
                                        " exceeds the limit " + std::to_string(max_players));
      }
      n = static_cast<int>(players);
      values.assign(std::size_t{1} << n, Rational());
      assigned.assign(std::size_t{1} << n, false);
      continue;
    }

    const std::size_t sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) {
      throw GameFileError(lineno, "expected '<coalition> <value>'");
    }
    const Coalition s = parse_coalition(line.substr(0, sp), n, lineno);
    if (s.empty()) {
      throw GameFileError(lineno, "the empty coalition may not be assigned");
    }
    if (assigned[s.mask()]) {
      throw GameFileError(lineno, "duplicate value for coalition " + s.str());
    }
    Rational value;
    try {
      value = Rational::from_string(trim(line.substr(sp + 1)));
    } catch (const std::invalid_argument& e) {
      throw GameFileError(lineno, e.what());
    }
    values[s.mask()] = std::move(value);
    assigned[s.mask()] = true;
  }

  if (n < 0) throw GameFileError(0, "missing header 'players <n>'");
  if (values.back().sign() <= 0) {
    throw GameFileError(0, "grand coalition value required and positive (v(N) > 0)");
  }
  return TuGame::from_values(n, std::move(values));
}

TuGame parse_game_file(const std::filesystem::path& path, int max_players) {
  std::ifstream in(path);
  if (!in) throw GameFileError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game_text(buf.str(), max_players);
}

std::string serialize_game(const TuGame& v) {
  std::ostringstream out;
  out << "players " << v.n() << "\n";
  for (std::uint32_t m = 1; m < v.num_coalitions(); ++m) {
    if (v.values()[m].is_zero()) continue;
    const Coalition s(m);
    bool first = true;
    for (int p : s.players()) {
      out << (first ? "" : ",") << p;
      first = false;
    }
    out << " " << v.values()[m].str() << "\n";
  }
  return out.str();
}

std::string game_digest(const TuGame& v) {
  const std::string text = serialize_game(v);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

Allocation parse_allocation_csv(std::string_view text, int n) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " components, got " +
                                std::to_string(parts.size()));
  }
  Allocation x;
  for (auto part : parts) x.push_back(Rational::from_string(trim(part)));
  return x;
}

Coalition parse_coalition_token(std::string_view text, int n) {
  try {
    return parse_coalition(text, n, 0);
  } catch (const GameFileError& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace tugame
