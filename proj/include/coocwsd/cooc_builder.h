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

#ifndef COOCWSD_COOC_BUILDER_H_
#define COOCWSD_COOC_BUILDER_H_

#include <cstdint>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coocwsd/concept_net.h"
#include "coocwsd/corpus.h"
#include "coocwsd/types.h"

namespace coocwsd {

inline constexpr int kDefaultSynonymRadius = 2;
inline constexpr std::size_t kDefaultSynonymCap = 64;

struct SynonymSet {
  std::string target_lemma;
  std::string sense;
  std::vector<std::string> synonyms;  // nearest first, then by lemma
};

// Lemmas with a sense within `radius` of `sense`, minus the target and the
// exclusions, ordered by (distance, lemma) and cut to `cap`. Throws
// UnknownIdError when `sense` is not a sense of `target_lemma`.
SynonymSet HarvestSynonyms(const ConceptHierarchy& hierarchy,
                           const Lexicon& lexicon,
                           std::string_view target_lemma,
                           std::string_view sense, int radius,
                           std::size_t cap,
                           const std::set<std::string>& exclusions = {});

struct Occurrence {
  std::string sentence_id;
  int token_index;
  std::string lemma;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Every token whose lemma is one of the synonyms, in corpus order.
std::vector<Occurrence> FindExamples(std::span<const ParsedSentence> corpus,
                                     const SynonymSet& synonyms);

// Weighted multiset of words co-occurring with one sense, each count keyed
// by the rule that produced it. total() is the inflated multiset size.
class CoocBag {
 public:
  using Key = std::pair<std::string, RuleTag>;

  CoocBag() = default;
  CoocBag(std::string target_lemma, std::string sense)
      : target_lemma_(std::move(target_lemma)), sense_(std::move(sense)) {}

  const std::string& target_lemma() const { return target_lemma_; }
  const std::string& sense() const { return sense_; }

  // amount must be positive.
  void Add(std::string_view lemma, RuleTag rule, std::int64_t amount);

  std::int64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<Key, std::int64_t>& counts() const { return counts_; }

  // Occurrences of lemma under any rule.
  std::int64_t Count(std::string_view lemma) const;
  // Occurrences of lemma under rules of the given positional class.
  std::int64_t CountInClass(std::string_view lemma, RuleTag rule_class) const;
  // Distinct lemmas, sorted.
  std::vector<std::string> Lemmas() const;

  friend bool operator==(const CoocBag&, const CoocBag&) = default;

 private:
  std::string target_lemma_;
  std::string sense_;
  std::map<Key, std::int64_t> counts_;
  std::int64_t total_ = 0;
};

// Bags of one target lemma, keyed by sense id.
using SenseBags = std::map<std::string, CoocBag>;
// Bags of several targets, keyed by target lemma.
using BagStore = std::map<std::string, SenseBags>;

struct BuildOptions {
  // Count R2/R4 occurrences twice. Disabled only for ablations.
  bool weight_collection = true;
};

// One bag per synonym set. All sets must share one target lemma.
SenseBags BuildBags(std::span<const ParsedSentence> corpus,
                    std::span<const SynonymSet> synonym_sets,
                    const BuildOptions& options = {});

// `target <TAB> sense <TAB> lemma <TAB> rule <TAB> count`, sorted by
// (target, sense, lemma, rule). Empty bags produce no rows.
void SaveBags(std::ostream& out, const BagStore& store);
BagStore LoadBags(std::istream& in);

}  // namespace coocwsd

#endif  // COOCWSD_COOC_BUILDER_H_
