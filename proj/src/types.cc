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

#include "coocwsd/types.h"

#include <array>
#include <utility>

namespace coocwsd {
namespace {

constexpr std::array<std::pair<std::string_view, Pos>, 7> kPosNames = {{
    {"N", Pos::kNoun},
    {"V", Pos::kVerb},
    {"ADJ", Pos::kAdj},
    {"ADV", Pos::kAdv},
    {"P", Pos::kParticle},
    {"AUX", Pos::kAux},
    {"OTHER", Pos::kOther},
}};

constexpr std::array<std::pair<std::string_view, RuleTag>, 7> kRuleNames = {{
    {"R1", RuleTag::kR1},
    {"R2", RuleTag::kR2},
    {"R3", RuleTag::kR3},
    {"R4", RuleTag::kR4},
    {"P5", RuleTag::kP5},
    {"P6", RuleTag::kP6},
    {"P7", RuleTag::kP7},
}};

}  // namespace

std::optional<Pos> ParsePos(std::string_view text) {
  for (const auto& [name, pos] : kPosNames) {
    if (name == text) return pos;
  }
  return std::nullopt;
}

std::string_view PosName(Pos pos) {
  return kPosNames[static_cast<std::size_t>(pos)].first;
}

std::optional<RuleTag> ParseRuleTag(std::string_view text) {
  for (const auto& [name, tag] : kRuleNames) {
    if (name == text) return tag;
  }
  return std::nullopt;
}

std::string_view RuleTagName(RuleTag tag) {
  return kRuleNames[static_cast<std::size_t>(tag)].first;
}

}  // namespace coocwsd
