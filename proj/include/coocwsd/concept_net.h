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

#ifndef COOCWSD_CONCEPT_NET_H_
#define COOCWSD_CONCEPT_NET_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coocwsd/types.h"

namespace coocwsd {

class ConceptHierarchy;

// Accumulates nodes and child->parent edges, then validates them into a
// ConceptHierarchy. Line numbers are only used for error messages.
class HierarchyBuilder {
 public:
  // Declares id as the root (parent "-").
  void AddRoot(std::string id, std::string gloss, int line = 0);
  void AddEdge(std::string child, std::string parent, std::string gloss,
               int line = 0);

  // Throws FormatError on missing/duplicate root, unknown parent, a parent
  // edge on the root, or a cycle.
  ConceptHierarchy Build() &&;

 private:
  struct Record {
    std::string child;
    std::string parent;  // empty for the root line
    std::string gloss;
    int line;
  };
  std::vector<Record> records_;
};

// Rooted DAG of concepts. Immutable once built.
class ConceptHierarchy {
 public:
  ConceptHierarchy() = default;

  // Reads the tab-separated `concept <TAB> parent <TAB> gloss` format.
  static ConceptHierarchy Load(std::istream& in);
  void Save(std::ostream& out) const;

  std::size_t size() const { return ids_.size(); }
  const std::string& root() const { return ids_[root_]; }
  bool Contains(std::string_view id) const;
  // Node ids in first-declaration order.
  const std::vector<std::string>& ids() const { return ids_; }
  std::vector<std::string> ParentsOf(std::string_view id) const;
  const std::string& Gloss(std::string_view id) const;

  // Dense index of a concept; throws UnknownIdError.
  int IndexOf(std::string_view id) const;
  const std::string& IdAt(int index) const { return ids_[index]; }

  // Undirected edge count of the shortest path, nullopt when unreachable.
  std::optional<int> Distance(std::string_view a, std::string_view b) const;
  // Distance from `index` to every node, -1 for unreachable.
  std::vector<int> DistancesFrom(int index) const;
  // All concepts within `radius` of c, excluding c, sorted by id.
  std::vector<std::string> NeighborsWithin(std::string_view c,
                                           int radius) const;

  friend bool operator==(const ConceptHierarchy& a, const ConceptHierarchy& b);

 private:
  friend class HierarchyBuilder;

  std::vector<std::string> ids_;
  std::vector<std::string> glosses_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<int>> adjacent_;  // parents and children
  std::unordered_map<std::string, int> index_;
  int root_ = 0;
};

struct LexEntry {
  std::string surface;
  std::string lemma;
  Pos pos;
  std::string sense;
};

struct Sense {
  Pos pos;
  std::string concept_id;

  friend bool operator==(const Sense&, const Sense&) = default;
};

// Word dictionary mapping lemmas to concepts of a companion hierarchy.
class Lexicon {
 public:
  Lexicon() = default;

  // Reads `surface <TAB> lemma <TAB> pos <TAB> concept`. Every concept must
  // exist in `hierarchy`; a repeated (lemma, pos, concept) is an error.
  static Lexicon Load(std::istream& in, const ConceptHierarchy& hierarchy);
  static Lexicon FromEntries(std::vector<LexEntry> entries,
                             const ConceptHierarchy& hierarchy);

  const std::vector<LexEntry>& entries() const { return entries_; }

  // Entries matching lemma, in file order.
  std::vector<Sense> SensesOf(std::string_view lemma) const;
  // Distinct concept ids of lemma, in first-seen order.
  std::vector<std::string> ConceptsOf(std::string_view lemma) const;
  // Distinct lemmas mapped to the concept, in first-seen order.
  std::vector<std::string> LemmasOf(std::string_view concept_id) const;

 private:
  std::vector<LexEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_lemma_;
  std::unordered_map<std::string, std::vector<std::string>> by_concept_;
};

struct WordDistance {
  int distance;
  std::string sense_a;
  std::string sense_b;
};

// Minimum concept distance over the two lemmas' sense pairs; nullopt when
// either lemma is unknown or no pair is connected. The attaining pair is
// the first minimum in sense order.
std::optional<WordDistance> MinWordDistance(const ConceptHierarchy& hierarchy,
                                            const Lexicon& lexicon,
                                            std::string_view lemma_a,
                                            std::string_view lemma_b);

// Per-lemma nearest-distance table: min distance from any sense of a
// source lemma to every concept. Reused by the thesaurus stage so each key
// costs one BFS per sense instead of one per comparison.
class DistanceField {
 public:
  DistanceField(const ConceptHierarchy& hierarchy, const Lexicon& lexicon,
                std::string_view lemma);

  bool empty() const { return empty_; }
  // Distance to the nearest sense of `lemma`, nullopt if incomparable.
  std::optional<int> To(std::string_view lemma) const;

 private:
  const ConceptHierarchy* hierarchy_;
  const Lexicon* lexicon_;
  std::vector<int> dist_;
  bool empty_ = true;
};

}  // namespace coocwsd

#endif  // COOCWSD_CONCEPT_NET_H_
