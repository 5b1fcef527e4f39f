// Copyright 2026 The coocwsd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COOCWSD_TYPES_H_
#define COOCWSD_TYPES_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coocwsd {

// Closed part-of-speech set. Only N, V and ADJ count as content words.
enum class Pos { kNoun, kVerb, kAdj, kAdv, kParticle, kAux, kOther };

std::optional<Pos> ParsePos(std::string_view text);
std::string_view PosName(Pos pos);
inline bool IsContent(Pos pos) {
  return pos == Pos::kNoun || pos == Pos::kVerb || pos == Pos::kAdj;
}

// Structural position a co-occurring word was taken from. R1..R4 are the
// four collection rules; P5..P7 come from the extended priority schedule.
enum class RuleTag { kR1, kR2, kR3, kR4, kP5, kP6, kP7 };

std::optional<RuleTag> ParseRuleTag(std::string_view text);
std::string_view RuleTagName(RuleTag tag);

// Governor and dependent positions count double.
inline int RuleWeight(RuleTag tag) {
  return (tag == RuleTag::kR2 || tag == RuleTag::kR4) ? 2 : 1;
}

// Positional comparison class. Level-5 words sit where R3 words sit.
inline RuleTag RuleClass(RuleTag tag) {
  return tag == RuleTag::kP5 ? RuleTag::kR3 : tag;
}

// Input-format error carrying the offending line number (1-based, 0 when
// not tied to a line).
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : std::move(what)),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A concept id or sense that is not present in the loaded resources.
class UnknownIdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace coocwsd

#endif  // COOCWSD_TYPES_H_
