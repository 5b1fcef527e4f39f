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

#include "coocwsd/evaluator.h"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <utility>

namespace coocwsd {
namespace {

using ItemKey = std::pair<std::string, int>;

std::string ItemName(const std::string& sid, int index) {
  return sid + ":" + std::to_string(index);
}

void AddTo(EvalRow& row, const Decision& d, const GoldAnnotation& g) {
  ++row.n;
  if (!d.answered()) {
    ++row.unanswered;
  } else if (std::find(g.correct_senses.begin(), g.correct_senses.end(),
                       d.sense) != g.correct_senses.end()) {
    ++row.correct;
  } else {
    ++row.wrong;
  }
}

EvalReport Aggregate(
    const std::vector<std::pair<const DecisionRecord*, const GoldAnnotation*>>& items,
    const Lexicon& lexicon) {
  EvalReport report;
  std::map<std::string, EvalRow> rows;
  for (const auto& [d, g] : items) {
    auto [it, inserted] = rows.try_emplace(g->target_lemma);
    if (inserted) {
      it->second.lemma = g->target_lemma;
      it->second.sense_count =
          static_cast<int>(lexicon.ConceptsOf(g->target_lemma).size());
    }
    AddTo(it->second, d->decision, *g);
  }
  report.total.lemma = "TOTAL";
  report.total.sense_count = -1;
  for (auto& [lemma, row] : rows) {
    report.total.n += row.n;
    report.total.correct += row.correct;
    report.total.wrong += row.wrong;
    report.total.unanswered += row.unanswered;
    report.rows.push_back(std::move(row));
  }
  return report;
}

struct Matched {
  std::vector<std::pair<const DecisionRecord*, const GoldAnnotation*>> items;
  std::vector<std::string> exceptions;
};

Matched Match(std::span<const DecisionRecord> decisions,
              std::span<const GoldAnnotation> gold) {
  Matched m;
  std::map<ItemKey, const GoldAnnotation*> by_item;
  for (const GoldAnnotation& g : gold) {
    if (!by_item.emplace(ItemKey(g.sentence_id, g.token_index), &g).second) {
      m.exceptions.push_back("duplicate gold item " +
                             ItemName(g.sentence_id, g.token_index));
    }
  }
  std::set<ItemKey> used;
  for (const DecisionRecord& d : decisions) {
    ItemKey key(d.sentence_id, d.token_index);
    auto it = by_item.find(key);
    if (it == by_item.end()) {
      m.exceptions.push_back("decision without gold " +
                             ItemName(d.sentence_id, d.token_index));
      continue;
    }
    if (!used.insert(key).second) {
      m.exceptions.push_back("duplicate decision " +
                             ItemName(d.sentence_id, d.token_index));
      continue;
    }
    m.items.emplace_back(&d, it->second);
  }
  for (const auto& [key, g] : by_item) {
    if (!used.count(key)) {
      m.exceptions.push_back("gold without decision " +
                             ItemName(key.first, key.second));
    }
  }
  return m;
}

}  // namespace

double EvalRow::answer_rate() const {
  return n == 0 ? 0.0 : 100.0 * static_cast<double>(answered()) / n;
}

double EvalRow::accuracy() const {
  return answered() == 0 ? 0.0
                         : 100.0 * static_cast<double>(correct) / answered();
}

std::string FormatPercent(std::int64_t num, std::int64_t den) {
  if (den <= 0) return "0.0";
  // tenths of a percent, half up: floor((2000 * num + den) / (2 * den))
  std::int64_t tenths = (2000 * num + den) / (2 * den);
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

EvalReport Evaluate(std::span<const DecisionRecord> decisions,
                    std::span<const GoldAnnotation> gold,
                    const Lexicon& lexicon) {
  Matched m = Match(decisions, gold);
  EvalReport report = Aggregate(m.items, lexicon);
  report.exceptions = std::move(m.exceptions);
  return report;
}

StagedReports StagedEvaluate(std::span<const DecisionRecord> decisions,
                             std::span<const GoldAnnotation> gold,
                             const Lexicon& lexicon) {
  Matched m = Match(decisions, gold);
  decltype(m.items) early;
  decltype(m.items) fallback;
  for (const auto& item : m.items) {
    Stage stage = item.first->decision.stage;
    if (stage == Stage::kOverlap || stage == Stage::kSequential) {
      early.push_back(item);
    } else {
      fallback.push_back(item);
    }
  }
  StagedReports out{Aggregate(early, lexicon), Aggregate(fallback, lexicon)};
  out.overlap.exceptions = m.exceptions;
  out.thesaurus.exceptions = std::move(m.exceptions);
  return out;
}

double RandomBaseline(std::span<const GoldAnnotation> gold,
                      const Lexicon& lexicon) {
  if (gold.empty()) return 0.0;
  double sum = 0.0;
  for (const GoldAnnotation& g : gold) {
    std::size_t senses = lexicon.ConceptsOf(g.target_lemma).size();
    if (senses == 0) {
      throw UnknownIdError("'" + g.target_lemma + "' has no senses");
    }
    sum += static_cast<double>(g.correct_senses.size()) / senses;
  }
  return 100.0 * sum / static_cast<double>(gold.size());
}

std::string RenderRow(const EvalRow& row) {
  return row.lemma + '\t' +
         (row.sense_count < 0 ? std::string("-")
                              : std::to_string(row.sense_count)) +
         '\t' + std::to_string(row.n) + '\t' + std::to_string(row.correct) +
         '\t' + std::to_string(row.wrong) + '\t' +
         std::to_string(row.unanswered) + '\t' +
         FormatPercent(row.answered(), row.n) + '\t' +
         FormatPercent(row.correct, row.answered());
}

std::string RenderThesaurusRow(const EvalRow& row) {
  return row.lemma + '\t' +
         (row.sense_count < 0 ? std::string("-")
                              : std::to_string(row.sense_count)) +
         '\t' + std::to_string(row.n) + '\t' + std::to_string(row.correct) +
         '\t' + std::to_string(row.wrong) + '\t' +
         std::to_string(row.unanswered) + '\t' +
         FormatPercent(row.correct, row.answered());
}

void RenderReport(std::ostream& out, const EvalReport& report) {
  out << "lemma\tsenses\tn\tcorrect\twrong\tunanswered\tanswer_rate\taccuracy\n";
  for (const EvalRow& row : report.rows) out << RenderRow(row) << '\n';
  out << RenderRow(report.total) << '\n';
}

void RenderThesaurusReport(std::ostream& out, const EvalReport& report) {
  out << "lemma\tsenses\tn\tcorrect\twrong\tunanswered\taccuracy\n";
  for (const EvalRow& row : report.rows) out << RenderThesaurusRow(row) << '\n';
  out << RenderThesaurusRow(report.total) << '\n';
}

}  // namespace coocwsd
