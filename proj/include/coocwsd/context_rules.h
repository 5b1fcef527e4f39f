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

#ifndef COOCWSD_CONTEXT_RULES_H_
#define COOCWSD_CONTEXT_RULES_H_

#include <string>
#include <vector>

#include "coocwsd/corpus.h"
#include "coocwsd/types.h"

namespace coocwsd {

struct ExtractedWord {
  std::string lemma;
  RuleTag rule;
  int weight;       // always RuleWeight(rule)
  int token_index;  // where in the sentence the word was found

  friend bool operator==(const ExtractedWord&, const ExtractedWord&) = default;
};

inline constexpr int kNumLevels = 7;

// Applies the four positional rules around `pivot`:
//   R1  other members of the pivot's compound
//   R2  the word the pivot's unit depends on (its governor)
//   R3  other words depending on the governor
//   R4  words depending on the pivot's unit
// Only content words are emitted, never the pivot or its lemma. Ordered by
// rule, then token index. Throws std::out_of_range on a bad pivot.
std::vector<ExtractedWord> ExtractByRules(const ParsedSentence& sentence,
                                          int pivot);

// Query-side name for the same extraction.
inline std::vector<ExtractedWord> ExtractKeys(const ParsedSentence& sentence,
                                              int pivot) {
  return ExtractByRules(sentence, pivot);
}

// Words at exactly one level of the priority schedule:
//   1 governing verb              (R2)
//   2 governing noun / adjective  (R2)
//   3 dependent verb              (R4)
//   4 dependent noun / adjective  (R4)
//   5 other dependents of the governor                 (P5)
//   6 dependents of level-5 words, with their compounds (P6)
//   7 coordination-parallel words                       (P7)
std::vector<ExtractedWord> ExtractAtLevel(const ParsedSentence& sentence,
                                          int pivot, int level);

}  // namespace coocwsd

#endif  // COOCWSD_CONTEXT_RULES_H_
