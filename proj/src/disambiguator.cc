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

#include "coocwsd/disambiguator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

#include "tsv.h"

namespace coocwsd {
namespace {

constexpr double kTieTolerance = 1e-12;

bool NearlyEqual(double a, double b) {
  return std::fabs(a - b) <= kTieTolerance * std::max(1.0, std::fabs(a));
}

std::int64_t KeyCount(const CoocBag& bag, const ExtractedWord& key,
                      std::string_view lemma, bool positional) {
  return positional ? bag.CountInClass(lemma, key.rule) : bag.Count(lemma);
}

// count / total as an exact fraction for tie-breaking.
struct Share {
  std::int64_t count = 0;
  std::int64_t total = 1;

  friend bool operator<(const Share& a, const Share& b) {
    return static_cast<__int128>(a.count) * b.total <
           static_cast<__int128>(b.count) * a.total;
  }
  friend bool operator==(const Share& a, const Share& b) {
    return static_cast<__int128>(a.count) * b.total ==
           static_cast<__int128>(b.count) * a.total;
  }
};

}  // namespace

std::vector<SenseScore> ScoreOverlap(std::span<const ExtractedWord> keys,
                                     const SenseBags& bags,
                                     const ScoreOptions& options) {
  std::vector<SenseScore> scores;
  scores.reserve(bags.size());
  for (const auto& [sense, bag] : bags) {
    double score = 0.0;
    if (!bag.empty()) {
      const double total = static_cast<double>(bag.total());
      for (const ExtractedWord& key : keys) {
        std::int64_t count = KeyCount(bag, key, key.lemma, options.positional);
        if (count == 0) continue;
        const double weight = options.weight_query ? key.weight : 1;
        score += weight * (static_cast<double>(count) / total);
      }
    }
    scores.push_back({sense, score});
  }
  return scores;
}

std::string Decision::StageName() const {
  switch (stage) {
    case Stage::kOverlap:
      return "overlap";
    case Stage::kThesaurus:
      return "thesaurus";
    case Stage::kSequential:
      return "sequential-level-" + std::to_string(level);
    case Stage::kUnanswered:
      break;
  }
  return "unanswered";
}

std::vector<std::string> TopSenses(std::span<const SenseScore> scores) {
  std::vector<std::string> top;
  double best = 0.0;
  for (const SenseScore& s : scores) best = std::max(best, s.score);
  if (best <= 0.0) return top;
  for (const SenseScore& s : scores) {
    if (NearlyEqual(s.score, best)) top.push_back(s.sense);
  }
  return top;
}

Decision DecideByOverlap(std::span<const SenseScore> scores, double threshold) {
  std::vector<std::string> top = TopSenses(scores);
  if (top.size() != 1) return Decision::Unanswered();
  auto it = std::find_if(scores.begin(), scores.end(),
                         [&](const SenseScore& s) { return s.sense == top[0]; });
  if (!(it->score > threshold)) return Decision::Unanswered();
  return {Stage::kOverlap, it->sense, it->score, 0};
}

Decision DecideByThesaurus(std::span<const ExtractedWord> keys,
                           const SenseBags& bags,
                           const ConceptHierarchy& hierarchy,
                           const Lexicon& lexicon, const ScoreOptions& options,
                           std::span<const std::string> restrict_to) {
  std::vector<const CoocBag*> candidates;
  for (const auto& [sense, bag] : bags) {
    if (bag.empty()) continue;
    if (!restrict_to.empty() &&
        std::find(restrict_to.begin(), restrict_to.end(), sense) ==
            restrict_to.end()) {
      continue;
    }
    candidates.push_back(&bag);
  }

  std::map<std::string, DistanceField> fields;
  auto field_for = [&](const std::string& lemma) -> const DistanceField& {
    auto it = fields.find(lemma);
    if (it == fields.end()) {
      it = fields.emplace(lemma, DistanceField(hierarchy, lexicon, lemma)).first;
    }
    return it->second;
  };

  struct Hit {
    const CoocBag* bag;
    int distance;
    Share share;
  };
  std::vector<Hit> hits;
  std::optional<int> best;
  for (const ExtractedWord& key : keys) {
    const DistanceField& field = field_for(key.lemma);
    if (field.empty()) continue;
    for (const CoocBag* bag : candidates) {
      for (const std::string& word : bag->Lemmas()) {
        std::int64_t count = KeyCount(*bag, key, word, options.positional);
        if (count == 0) continue;
        std::optional<int> d = field.To(word);
        if (!d) continue;
        hits.push_back({bag, *d, {count, bag->total()}});
        if (!best || *d < *best) best = *d;
      }
    }
  }
  if (!best) return Decision::Unanswered();

  // Largest share of an attaining word, per sense.
  std::map<std::string, Share> attaining;
  for (const Hit& h : hits) {
    if (h.distance != *best) continue;
    auto [it, inserted] = attaining.emplace(h.bag->sense(), h.share);
    if (!inserted && it->second < h.share) it->second = h.share;
  }
  auto winner = attaining.begin();
  bool tied = false;
  for (auto it = std::next(attaining.begin()); it != attaining.end(); ++it) {
    if (winner->second < it->second) {
      winner = it;
      tied = false;
    } else if (it->second == winner->second) {
      tied = true;
    }
  }
  if (tied) return Decision::Unanswered();
  return {Stage::kThesaurus, winner->first,
          static_cast<double>(winner->second.count) /
              static_cast<double>(winner->second.total),
          0};
}

Decision Disambiguate(const ParsedSentence& sentence, int pivot,
                      const SenseBags& bags, const ConceptHierarchy& hierarchy,
                      const Lexicon& lexicon,
                      const DisambiguatorConfig& config) {
  if (bags.empty()) {
    throw NoBagsError("no co-occurrence bags for '" +
                      sentence.at(pivot).lemma + "'");
  }
  std::vector<ExtractedWord> keys = ExtractKeys(sentence, pivot);
  std::vector<SenseScore> scores = ScoreOverlap(keys, bags, config.scoring);
  Decision d = DecideByOverlap(scores, config.min_score);
  if (d.answered()) return d;
  std::vector<std::string> tied = TopSenses(scores);
  if (tied.size() < 2) tied.clear();
  return DecideByThesaurus(keys, bags, hierarchy, lexicon, config.scoring, tied);
}

Decision DisambiguateSequential(const ParsedSentence& sentence, int pivot,
                                const SenseBags& bags,
                                const ConceptHierarchy& hierarchy,
                                const Lexicon& lexicon,
                                const DisambiguatorConfig& config) {
  if (bags.empty()) {
    throw NoBagsError("no co-occurrence bags for '" +
                      sentence.at(pivot).lemma + "'");
  }
  for (int level : config.level_order) {
    std::vector<ExtractedWord> keys = ExtractAtLevel(sentence, pivot, level);
    if (keys.empty()) continue;
    Decision d = DecideByOverlap(ScoreOverlap(keys, bags, config.scoring),
                                 config.min_score);
    if (d.answered()) {
      d.stage = Stage::kSequential;
      d.level = level;
      return d;
    }
  }
  return Disambiguate(sentence, pivot, bags, hierarchy, lexicon, config);
}

std::string FormatScore(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", score);
  return buf;
}

void WriteDecisions(std::ostream& out, std::span<const DecisionRecord> records) {
  for (const DecisionRecord& r : records) {
    const Decision& d = r.decision;
    out << r.sentence_id << '\t' << r.token_index << '\t' << r.target_lemma
        << '\t' << (d.answered() ? d.sense : "-") << '\t'
        << (d.answered() ? FormatScore(d.score) : "-") << '\t' << d.StageName()
        << '\n';
  }
}

std::vector<DecisionRecord> LoadDecisions(std::istream& in) {
  std::vector<DecisionRecord> out;
  std::string line;
  int line_no = 0;
  while (internal::ReadLine(in, line)) {
    ++line_no;
    if (internal::IsBlank(line) || line[0] == '#') continue;
    auto f = internal::SplitTabs(line);
    if (f.size() != 6) {
      throw FormatError("expected 6 tab-separated columns, got " +
                            std::to_string(f.size()),
                        line_no);
    }
    DecisionRecord r;
    r.sentence_id = f[0];
    auto index = internal::ParseInt<int>(f[1]);
    if (!index) throw FormatError("bad token index '" + std::string(f[1]) + "'", line_no);
    r.token_index = *index;
    r.target_lemma = f[2];
    std::string_view stage = f[5];
    Decision& d = r.decision;
    static constexpr std::string_view kSeq = "sequential-level-";
    if (stage == "unanswered") {
      d.stage = Stage::kUnanswered;
    } else if (stage == "overlap") {
      d.stage = Stage::kOverlap;
    } else if (stage == "thesaurus") {
      d.stage = Stage::kThesaurus;
    } else if (stage.starts_with(kSeq)) {
      auto level = internal::ParseInt<int>(stage.substr(kSeq.size()));
      if (!level || *level < 1 || *level > kNumLevels) {
        throw FormatError("bad stage '" + std::string(stage) + "'", line_no);
      }
      d.stage = Stage::kSequential;
      d.level = *level;
    } else {
      throw FormatError("bad stage '" + std::string(stage) + "'", line_no);
    }
    if (d.answered()) {
      if (f[3] == "-" || f[3].empty()) {
        throw FormatError("answered decision without a sense", line_no);
      }
      d.sense = f[3];
      char* end = nullptr;
      std::string score(f[4]);
      d.score = std::strtod(score.c_str(), &end);
      if (score.empty() || *end != '\0') {
        throw FormatError("bad score '" + score + "'", line_no);
      }
    } else if (f[3] != "-" || f[4] != "-") {
      throw FormatError("unanswered decision must use '-' for sense and score",
                        line_no);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace coocwsd
