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

#include "coocwsd/context_rules.h"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>

namespace coocwsd {
namespace {

// Structural view of the pivot: its compound unit, the unit member that
// attaches outward (after following coord links to the final conjunct) and
// the governor it attaches to.
struct PivotFrame {
  const ParsedSentence* s;
  int pivot;
  std::vector<int> unit;
  int attach = 0;    // token that carries the dep link to governor
  int governor = 0;  // 0 when the unit is a root

  bool InUnit(int i) const {
    return std::find(unit.begin(), unit.end(), i) != unit.end();
  }
};

PivotFrame Frame(const ParsedSentence& s, int pivot) {
  if (!s.IsValidIndex(pivot)) {
    throw std::out_of_range("pivot " + std::to_string(pivot) +
                            " out of range in sentence '" + s.id() + "'");
  }
  PivotFrame f{&s, pivot, s.CompoundOf(pivot)};
  int cur = f.unit.back();
  for (int steps = 0; s.at(cur).rel == Relation::kCoord && steps < s.size();
       ++steps) {
    cur = s.at(cur).head;
  }
  f.attach = cur;
  int g = s.at(cur).head;
  if (g != 0 && !f.InUnit(g)) f.governor = g;
  return f;
}

bool Emittable(const PivotFrame& f, int i) {
  const Token& t = f.s->at(i);
  return IsContent(t.pos) && !f.InUnit(i) &&
         t.lemma != f.s->at(f.pivot).lemma;
}

ExtractedWord Make(const ParsedSentence& s, int i, RuleTag tag) {
  return {s.at(i).lemma, tag, RuleWeight(tag), i};
}

// dep-children of any token in `targets`, ascending.
std::vector<int> DepChildren(const ParsedSentence& s,
                             const std::vector<int>& targets) {
  std::vector<int> out;
  for (const Token& t : s.tokens()) {
    if (t.rel == Relation::kDep &&
        std::find(targets.begin(), targets.end(), t.head) != targets.end() &&
        std::find(targets.begin(), targets.end(), t.index) == targets.end()) {
      out.push_back(t.index);
    }
  }
  return out;
}

std::vector<int> Compound(const PivotFrame& f) {
  std::vector<int> out;
  for (int i : f.unit) {
    if (i != f.pivot && IsContent(f.s->at(i).pos) &&
        f.s->at(i).lemma != f.s->at(f.pivot).lemma) {
      out.push_back(i);
    }
  }
  return out;
}

std::optional<int> Governor(const PivotFrame& f) {
  if (f.governor != 0 && Emittable(f, f.governor)) return f.governor;
  return std::nullopt;
}

std::vector<int> GovernorSiblings(const PivotFrame& f) {
  std::vector<int> out;
  if (f.governor == 0) return out;
  for (int i : DepChildren(*f.s, {f.governor})) {
    if (Emittable(f, i)) out.push_back(i);
  }
  return out;
}

std::vector<int> UnitDependents(const PivotFrame& f) {
  std::vector<int> out;
  for (int i : DepChildren(*f.s, f.unit)) {
    if (Emittable(f, i)) out.push_back(i);
  }
  return out;
}

// Tokens reachable from `seeds` over coord links in either direction.
std::vector<int> CoordClosure(const ParsedSentence& s,
                              const std::vector<int>& seeds) {
  std::set<int> seen(seeds.begin(), seeds.end());
  std::deque<int> queue(seeds.begin(), seeds.end());
  std::vector<int> out;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    std::vector<int> next;
    if (s.at(cur).rel == Relation::kCoord) next.push_back(s.at(cur).head);
    for (const Token& t : s.tokens()) {
      if (t.rel == Relation::kCoord && t.head == cur) next.push_back(t.index);
    }
    for (int n : next) {
      if (seen.insert(n).second) {
        out.push_back(n);
        queue.push_back(n);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ContentDepChildren(const ParsedSentence& s, int head) {
  std::vector<int> out;
  for (int i : DepChildren(s, {head})) {
    if (IsContent(s.at(i).pos)) out.push_back(i);
  }
  return out;
}

std::vector<int> Level6(const PivotFrame& f) {
  const ParsedSentence& s = *f.s;
  std::set<int> level5;
  for (int i : GovernorSiblings(f)) level5.insert(i);
  std::set<int> out;
  for (int w : level5) {
    for (int d : DepChildren(s, s.CompoundOf(w))) {
      for (int m : s.CompoundOf(d)) {
        if (m != f.governor && !level5.count(m) && Emittable(f, m)) {
          out.insert(m);
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> Level7(const PivotFrame& f) {
  const ParsedSentence& s = *f.s;
  std::set<int> out;
  auto add_unit = [&](int i) {
    for (int m : s.CompoundOf(i)) {
      if (Emittable(f, m)) out.insert(m);
    }
  };
  // Word-level coordination with the pivot's own unit.
  for (int c : CoordClosure(s, f.unit)) {
    if (!f.InUnit(c)) add_unit(c);
  }
  // Clause-level coordination of the governor: same ordinal slot among the
  // parallel governor's content dependents.
  if (f.governor != 0) {
    std::vector<int> slots = ContentDepChildren(s, f.governor);
    auto it = std::find(slots.begin(), slots.end(), f.attach);
    if (it != slots.end()) {
      std::size_t rank = static_cast<std::size_t>(it - slots.begin());
      for (int c : CoordClosure(s, {f.governor})) {
        std::vector<int> parallel = ContentDepChildren(s, c);
        if (rank < parallel.size()) add_unit(parallel[rank]);
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<ExtractedWord> ExtractByRules(const ParsedSentence& sentence,
                                          int pivot) {
  PivotFrame f = Frame(sentence, pivot);
  std::vector<ExtractedWord> out;
  for (int i : Compound(f)) out.push_back(Make(sentence, i, RuleTag::kR1));
  if (auto g = Governor(f)) out.push_back(Make(sentence, *g, RuleTag::kR2));
  for (int i : GovernorSiblings(f)) out.push_back(Make(sentence, i, RuleTag::kR3));
  for (int i : UnitDependents(f)) out.push_back(Make(sentence, i, RuleTag::kR4));
  return out;
}

std::vector<ExtractedWord> ExtractAtLevel(const ParsedSentence& sentence,
                                          int pivot, int level) {
  if (level < 1 || level > kNumLevels) {
    throw std::out_of_range("priority level " + std::to_string(level) +
                            " outside 1.." + std::to_string(kNumLevels));
  }
  PivotFrame f = Frame(sentence, pivot);
  std::vector<ExtractedWord> out;
  auto verb = [&](int i) { return sentence.at(i).pos == Pos::kVerb; };
  switch (level) {
    case 1:
    case 2:
      if (auto g = Governor(f); g && verb(*g) == (level == 1)) {
        out.push_back(Make(sentence, *g, RuleTag::kR2));
      }
      break;
    case 3:
    case 4:
      for (int i : UnitDependents(f)) {
        if (verb(i) == (level == 3)) out.push_back(Make(sentence, i, RuleTag::kR4));
      }
      break;
    case 5:
      for (int i : GovernorSiblings(f)) out.push_back(Make(sentence, i, RuleTag::kP5));
      break;
    case 6:
      for (int i : Level6(f)) out.push_back(Make(sentence, i, RuleTag::kP6));
      break;
    case 7:
      for (int i : Level7(f)) out.push_back(Make(sentence, i, RuleTag::kP7));
      break;
  }
  return out;
}

}  // namespace coocwsd
