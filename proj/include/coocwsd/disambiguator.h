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

#ifndef COOCWSD_DISAMBIGUATOR_H_
#define COOCWSD_DISAMBIGUATOR_H_

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coocwsd/concept_net.h"
#include "coocwsd/context_rules.h"
#include "coocwsd/cooc_builder.h"
#include "coocwsd/corpus.h"

namespace coocwsd {

struct SenseScore {
  std::string sense;
  double score;
};

struct ScoreOptions {
  // Only compare a key against bag entries from the same structural class.
  bool positional = false;
  // Multiply each key's contribution by its rule weight.
  bool weight_query = true;
};

// score(sense) = sum over keys of weight(key) * count(key) / total, one
// entry per bag in sense order. Empty bags score 0.
std::vector<SenseScore> ScoreOverlap(std::span<const ExtractedWord> keys,
                                     const SenseBags& bags,
                                     const ScoreOptions& options = {});

enum class Stage { kUnanswered, kOverlap, kThesaurus, kSequential };

struct Decision {
  Stage stage = Stage::kUnanswered;
  std::string sense;  // empty when unanswered
  double score = 0.0;
  int level = 0;  // priority level for Stage::kSequential

  bool answered() const { return stage != Stage::kUnanswered; }
  // "overlap", "thesaurus", "sequential-level-<k>" or "unanswered".
  std::string StageName() const;

  static Decision Unanswered() { return {}; }
};

// Senses sharing the maximal positive score (ties within 1e-12 relative).
std::vector<std::string> TopSenses(std::span<const SenseScore> scores);

// Answers only with a unique maximum strictly above `threshold`.
Decision DecideByOverlap(std::span<const SenseScore> scores,
                         double threshold = 0.0);

// Picks the sense whose bag holds the word nearest (in the thesaurus) to
// any key. Several senses at the minimum distance are separated by the
// attaining word's share of its bag; a remaining tie or no comparable pair
// leaves the item unanswered. `restrict_to`, when non-empty, limits the
// candidate senses.
Decision DecideByThesaurus(std::span<const ExtractedWord> keys,
                           const SenseBags& bags,
                           const ConceptHierarchy& hierarchy,
                           const Lexicon& lexicon,
                           const ScoreOptions& options = {},
                           std::span<const std::string> restrict_to = {});

struct DisambiguatorConfig {
  ScoreOptions scoring;
  // A stage answers only above this overlap score.
  double min_score = 0.0;
  // Priority levels tried by DisambiguateSequential, in order.
  std::vector<int> level_order = {1, 2, 3, 4, 5, 6, 7};
};

class NoBagsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Overlap on all four-rule keys, then the thesaurus fallback (limited to
// the tied senses when the overlap stage tied). Throws NoBagsError when
// `bags` is empty.
Decision Disambiguate(const ParsedSentence& sentence, int pivot,
                      const SenseBags& bags, const ConceptHierarchy& hierarchy,
                      const Lexicon& lexicon,
                      const DisambiguatorConfig& config = {});

// Tries each priority level's keys alone; the first level whose overlap
// decides wins. Falls back to Disambiguate.
Decision DisambiguateSequential(const ParsedSentence& sentence, int pivot,
                                const SenseBags& bags,
                                const ConceptHierarchy& hierarchy,
                                const Lexicon& lexicon,
                                const DisambiguatorConfig& config = {});

// One output line of the disambiguate command.
struct DecisionRecord {
  std::string sentence_id;
  int token_index = 0;
  std::string target_lemma;
  Decision decision;
};

std::string FormatScore(double score);

// `sid <TAB> index <TAB> lemma <TAB> sense|- <TAB> score|- <TAB> stage`
void WriteDecisions(std::ostream& out, std::span<const DecisionRecord> records);
std::vector<DecisionRecord> LoadDecisions(std::istream& in);

}  // namespace coocwsd

#endif  // COOCWSD_DISAMBIGUATOR_H_
