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

#ifndef COOCWSD_EVALUATOR_H_
#define COOCWSD_EVALUATOR_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "coocwsd/concept_net.h"
#include "coocwsd/corpus.h"
#include "coocwsd/disambiguator.h"

namespace coocwsd {

struct EvalRow {
  std::string lemma;
  int sense_count = 0;  // -1 renders as "-" (totals row)
  std::int64_t n = 0;
  std::int64_t correct = 0;
  std::int64_t wrong = 0;
  std::int64_t unanswered = 0;

  std::int64_t answered() const { return correct + wrong; }
  // 100 * answered / n, 0 when n is 0.
  double answer_rate() const;
  // 100 * correct / answered, 0 when nothing was answered.
  double accuracy() const;
};

// Percentage num/den to one decimal, rounded half up, computed in integer
// arithmetic so that 13/28 renders as "46.4" on every platform. "0.0" when
// den is 0.
std::string FormatPercent(std::int64_t num, std::int64_t den);

struct EvalReport {
  std::vector<EvalRow> rows;  // sorted by lemma
  EvalRow total;              // lemma "TOTAL"
  // Decisions without gold and gold without decisions, one message each.
  std::vector<std::string> exceptions;
};

// Decision is correct iff answered with a sense in the gold set. Items are
// matched on (sentence id, token index); unmatched ones are reported in
// `exceptions` and left out of the counts.
EvalReport Evaluate(std::span<const DecisionRecord> decisions,
                    std::span<const GoldAnnotation> gold,
                    const Lexicon& lexicon);

struct StagedReports {
  EvalReport overlap;    // decided by overlap or a sequential level
  EvalReport thesaurus;  // reached the thesaurus fallback
};

StagedReports StagedEvaluate(std::span<const DecisionRecord> decisions,
                             std::span<const GoldAnnotation> gold,
                             const Lexicon& lexicon);

// Expected accuracy of picking a sense uniformly at random, in percent:
// 100 * mean of |correct| / |senses|. Throws UnknownIdError for a lemma
// without senses.
double RandomBaseline(std::span<const GoldAnnotation> gold,
                      const Lexicon& lexicon);

// lemma senses n correct wrong unanswered answer_rate accuracy, then TOTAL.
void RenderReport(std::ostream& out, const EvalReport& report);
// Fallback-stage layout: same columns without answer_rate.
void RenderThesaurusReport(std::ostream& out, const EvalReport& report);
std::string RenderRow(const EvalRow& row);
std::string RenderThesaurusRow(const EvalRow& row);

}  // namespace coocwsd

#endif  // COOCWSD_EVALUATOR_H_
