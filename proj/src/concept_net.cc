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

#include "coocwsd/concept_net.h"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "tsv.h"

namespace coocwsd {

using internal::HasSpace;
using internal::ReadLine;
using internal::SplitTabs;

void HierarchyBuilder::AddRoot(std::string id, std::string gloss, int line) {
  records_.push_back({std::move(id), std::string(), std::move(gloss), line});
}

void HierarchyBuilder::AddEdge(std::string child, std::string parent,
                               std::string gloss, int line) {
  records_.push_back(
      {std::move(child), std::move(parent), std::move(gloss), line});
}

ConceptHierarchy HierarchyBuilder::Build() && {
  ConceptHierarchy h;
  std::optional<int> root;
  int root_line = 0;

  auto intern = [&h](const std::string& id, const std::string& gloss) {
    auto [it, inserted] = h.index_.emplace(id, static_cast<int>(h.ids_.size()));
    if (inserted) {
      h.ids_.push_back(id);
      h.glosses_.push_back(gloss);
      h.parents_.emplace_back();
      h.adjacent_.emplace_back();
    }
    return it->second;
  };

  for (const Record& r : records_) {
    if (r.child.empty() || HasSpace(r.child)) {
      throw FormatError("invalid concept id '" + r.child + "'", r.line);
    }
    int id = intern(r.child, r.gloss);
    if (r.parent.empty()) {
      if (root) throw FormatError("duplicate root '" + r.child + "'", r.line);
      root = id;
      root_line = r.line;
    }
  }
  if (!root) throw FormatError("missing root (no line with parent '-')", 0);
  h.root_ = *root;

  std::map<std::pair<int, int>, int> edge_lines;
  for (const Record& r : records_) {
    if (r.parent.empty()) continue;
    int child = h.index_.at(r.child);
    auto parent_it = h.index_.find(r.parent);
    if (parent_it == h.index_.end()) {
      throw FormatError("unknown parent '" + r.parent + "'", r.line);
    }
    int parent = parent_it->second;
    if (child == h.root_) {
      throw FormatError("root '" + r.child + "' also declared at line " +
                            std::to_string(root_line) + " cannot have a parent",
                        r.line);
    }
    if (child == parent) {
      throw FormatError("cycle: '" + r.child + "' is its own parent", r.line);
    }
    if (!edge_lines.emplace(std::pair(child, parent), r.line).second) {
      throw FormatError("duplicate edge " + r.child + " -> " + r.parent, r.line);
    }
    h.parents_[child].push_back(parent);
    h.adjacent_[child].push_back(parent);
    h.adjacent_[parent].push_back(child);
  }

  // Iterative three-colour DFS over child->parent edges.
  enum : char { kWhite, kGray, kBlack };
  std::vector<char> colour(h.ids_.size(), kWhite);
  for (std::size_t start = 0; start < h.ids_.size(); ++start) {
    if (colour[start] != kWhite) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(start), 0}};
    colour[start] = kGray;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == h.parents_[node].size()) {
        colour[node] = kBlack;
        stack.pop_back();
        continue;
      }
      int parent = h.parents_[node][next++];
      if (colour[parent] == kGray) {
        throw FormatError("cycle through " + h.ids_[node] + " -> " +
                              h.ids_[parent],
                          edge_lines.at({node, parent}));
      }
      if (colour[parent] == kWhite) {
        colour[parent] = kGray;
        stack.push_back({parent, 0});
      }
    }
  }
  // Acyclic and every non-root node has a parent, so all nodes reach root.
  for (std::size_t i = 0; i < h.ids_.size(); ++i) {
    if (static_cast<int>(i) != h.root_ && h.parents_[i].empty()) {
      throw FormatError("concept '" + h.ids_[i] + "' has no parent", 0);
    }
  }
  return h;
}

ConceptHierarchy ConceptHierarchy::Load(std::istream& in) {
  HierarchyBuilder builder;
  std::string line;
  int line_no = 0;
  while (ReadLine(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 3) {
      throw FormatError("expected 3 tab-separated columns, got " +
                            std::to_string(fields.size()),
                        line_no);
    }
    if (fields[1].empty()) throw FormatError("empty parent column", line_no);
    if (fields[1] == "-") {
      builder.AddRoot(std::string(fields[0]), std::string(fields[2]), line_no);
    } else {
      builder.AddEdge(std::string(fields[0]), std::string(fields[1]),
                      std::string(fields[2]), line_no);
    }
  }
  return std::move(builder).Build();
}

void ConceptHierarchy::Save(std::ostream& out) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (static_cast<int>(i) == root_) {
      out << ids_[i] << "\t-\t" << glosses_[i] << '\n';
    }
    for (int parent : parents_[i]) {
      out << ids_[i] << '\t' << ids_[parent] << '\t' << glosses_[i] << '\n';
    }
  }
}

bool ConceptHierarchy::Contains(std::string_view id) const {
  return index_.count(std::string(id)) > 0;
}

int ConceptHierarchy::IndexOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw UnknownIdError("unknown concept '" + std::string(id) + "'");
  }
  return it->second;
}

std::vector<std::string> ConceptHierarchy::ParentsOf(std::string_view id) const {
  std::vector<std::string> out;
  for (int p : parents_[IndexOf(id)]) out.push_back(ids_[p]);
  return out;
}

const std::string& ConceptHierarchy::Gloss(std::string_view id) const {
  return glosses_[IndexOf(id)];
}

std::vector<int> ConceptHierarchy::DistancesFrom(int index) const {
  std::vector<int> dist(ids_.size(), -1);
  std::deque<int> queue{index};
  dist[index] = 0;
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    for (int next : adjacent_[node]) {
      if (dist[next] < 0) {
        dist[next] = dist[node] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

std::optional<int> ConceptHierarchy::Distance(std::string_view a,
                                              std::string_view b) const {
  int ia = IndexOf(a);
  int ib = IndexOf(b);
  if (ia == ib) return 0;
  int d = DistancesFrom(ia)[ib];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<std::string> ConceptHierarchy::NeighborsWithin(std::string_view c,
                                                           int radius) const {
  int ic = IndexOf(c);
  std::vector<int> dist = DistancesFrom(ic);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (static_cast<int>(i) != ic && dist[i] >= 0 && dist[i] <= radius) {
      out.push_back(ids_[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const ConceptHierarchy& a, const ConceptHierarchy& b) {
  return a.ids_ == b.ids_ && a.glosses_ == b.glosses_ &&
         a.parents_ == b.parents_ && a.root_ == b.root_;
}

Lexicon Lexicon::Load(std::istream& in, const ConceptHierarchy& hierarchy) {
  std::vector<LexEntry> entries;
  std::string line;
  int line_no = 0;
  std::set<std::tuple<std::string, Pos, std::string>> seen;
  while (ReadLine(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 4) {
      throw FormatError("expected 4 tab-separated columns, got " +
                            std::to_string(fields.size()),
                        line_no);
    }
    auto pos = ParsePos(fields[2]);
    if (!pos) {
      throw FormatError("unknown part of speech '" + std::string(fields[2]) + "'",
                        line_no);
    }
    if (fields[1].empty()) throw FormatError("empty lemma", line_no);
    if (!hierarchy.Contains(fields[3])) {
      throw FormatError("unknown concept '" + std::string(fields[3]) + "'",
                        line_no);
    }
    LexEntry e{std::string(fields[0]), std::string(fields[1]), *pos,
               std::string(fields[3])};
    if (!seen.emplace(e.lemma, e.pos, e.sense).second) {
      throw FormatError("duplicate entry " + e.lemma + "/" +
                            std::string(PosName(e.pos)) + "/" + e.sense,
                        line_no);
    }
    entries.push_back(std::move(e));
  }
  return FromEntries(std::move(entries), hierarchy);
}

Lexicon Lexicon::FromEntries(std::vector<LexEntry> entries,
                             const ConceptHierarchy& hierarchy) {
  Lexicon lex;
  std::set<std::tuple<std::string, Pos, std::string>> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const LexEntry& e = entries[i];
    if (!hierarchy.Contains(e.sense)) {
      throw UnknownIdError("lexicon sense '" + e.sense + "' not in hierarchy");
    }
    if (!seen.emplace(e.lemma, e.pos, e.sense).second) {
      throw FormatError("duplicate entry " + e.lemma + "/" + e.sense, 0);
    }
    lex.by_lemma_[e.lemma].push_back(i);
    auto& lemmas = lex.by_concept_[e.sense];
    if (std::find(lemmas.begin(), lemmas.end(), e.lemma) == lemmas.end()) {
      lemmas.push_back(e.lemma);
    }
  }
  lex.entries_ = std::move(entries);
  return lex;
}

std::vector<Sense> Lexicon::SensesOf(std::string_view lemma) const {
  std::vector<Sense> out;
  auto it = by_lemma_.find(std::string(lemma));
  if (it == by_lemma_.end()) return out;
  for (std::size_t i : it->second) {
    out.push_back({entries_[i].pos, entries_[i].sense});
  }
  return out;
}

std::vector<std::string> Lexicon::ConceptsOf(std::string_view lemma) const {
  std::vector<std::string> out;
  for (const Sense& s : SensesOf(lemma)) {
    if (std::find(out.begin(), out.end(), s.concept_id) == out.end()) {
      out.push_back(s.concept_id);
    }
  }
  return out;
}

std::vector<std::string> Lexicon::LemmasOf(std::string_view concept_id) const {
  auto it = by_concept_.find(std::string(concept_id));
  if (it == by_concept_.end()) return {};
  return it->second;
}

std::optional<WordDistance> MinWordDistance(const ConceptHierarchy& hierarchy,
                                            const Lexicon& lexicon,
                                            std::string_view lemma_a,
                                            std::string_view lemma_b) {
  std::optional<WordDistance> best;
  std::vector<std::string> senses_b = lexicon.ConceptsOf(lemma_b);
  if (senses_b.empty()) return best;
  for (const std::string& a : lexicon.ConceptsOf(lemma_a)) {
    std::vector<int> dist = hierarchy.DistancesFrom(hierarchy.IndexOf(a));
    for (const std::string& b : senses_b) {
      int d = dist[hierarchy.IndexOf(b)];
      if (d >= 0 && (!best || d < best->distance)) best = WordDistance{d, a, b};
    }
  }
  return best;
}

DistanceField::DistanceField(const ConceptHierarchy& hierarchy,
                             const Lexicon& lexicon, std::string_view lemma)
    : hierarchy_(&hierarchy), lexicon_(&lexicon) {
  for (const std::string& c : lexicon.ConceptsOf(lemma)) {
    std::vector<int> d = hierarchy.DistancesFrom(hierarchy.IndexOf(c));
    if (dist_.empty()) {
      dist_ = std::move(d);
    } else {
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] >= 0 && (dist_[i] < 0 || d[i] < dist_[i])) dist_[i] = d[i];
      }
    }
    empty_ = false;
  }
}

std::optional<int> DistanceField::To(std::string_view lemma) const {
  if (empty_) return std::nullopt;
  std::optional<int> best;
  for (const std::string& c : lexicon_->ConceptsOf(lemma)) {
    int d = dist_[hierarchy_->IndexOf(c)];
    if (d >= 0 && (!best || d < *best)) best = d;
  }
  return best;
}

}  // namespace coocwsd
