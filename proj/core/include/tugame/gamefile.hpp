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

#ifndef TUGAME_GAMEFILE_HPP
#define TUGAME_GAMEFILE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tugame/game.hpp"

namespace tugame {

/// Parse or validation failure, carrying the 1-based line (0 when the error
/// is not tied to a line).
class GameFileError : public std::runtime_error {
 public:
  GameFileError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Game file format:
//   players <n>
//   <coalition> <rational>     one line per coalition, any order
// Coalitions are comma-separated 1-based member lists ("1,3,4") or masks
// ("m:13"); rationals are "p" or "p/q". Omitted coalitions default to 0; the
// empty coalition may not be assigned; duplicates are an error; v(N) must be
// present and positive. Blank lines and text after '#' are ignored.

TuGame parse_game_text(std::string_view text, int max_players = 12);
TuGame parse_game_file(const std::filesystem::path& path, int max_players = 12);

/// Canonical form: header, then every nonzero coalition in mask order as a
/// member list. Re-parses to an identical game.
std::string serialize_game(const TuGame& v);

/// FNV-1a 64-bit digest of the canonical serialization, as fixed-width hex.
std::string game_digest(const TuGame& v);

/// "x1,x2,..." with rational components; must have exactly n entries.
Allocation parse_allocation_csv(std::string_view text, int n);

/// Member list "1,3,4" or mask "m:13"; validated against n.
Coalition parse_coalition_token(std::string_view text, int n);

}  // namespace tugame

#endif  // TUGAME_GAMEFILE_HPP
