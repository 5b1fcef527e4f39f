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

#include "coocwsd/cooc_builder.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "coocwsd/context_rules.h"
#include "tsv.h"

namespace coocwsd {

SynonymSet HarvestSynonyms(const ConceptHierarchy& hierarchy,
                           const Lexicon& lexicon,
                           std::string_view target_lemma,
                           std::string_view sense, int radius,
                           std::size_t cap,
                           const std::set<std::string>& exclusions) {
  std::vector<std::string> senses = lexicon.ConceptsOf(target_lemma);
  if (std::find(senses.begin(), senses.end(), sense) == senses.end()) {
    throw UnknownIdError("'" + std::string(sense) + "' is not a sense of '" +
                         std::string(target_lemma) + "'");
  }
  std::vector<int> dist = hierarchy.DistancesFrom(hierarchy.IndexOf(sense));

  std::map<std::string, int> nearest;
  for (std::size_t c = 0; c < dist.size(); ++c) {
    if (dist[c] < 0 || dist[c] > radius) continue;
    for (const std::string& lemma :
         lexicon.LemmasOf(hierarchy.IdAt(static_cast<int>(c)))) {
      if (lemma == target_lemma || exclusions.count(lemma)) continue;
      auto [it, inserted] = nearest.emplace(lemma, dist[c]);
      if (!inserted) it->second = std::min(it->second, dist[c]);
    }
  }
  std::vector<std::pair<int, std::string>> ranked;
  for (auto& [lemma, d] : nearest) ranked.emplace_back(d, lemma);
  std::sort(ranked.begin(), ranked.end());
  if (ranked.size() > cap) ranked.resize(cap);

  SynonymSet out{std::string(target_lemma), std::string(sense), {}};
  for (auto& [d, lemma] : ranked) out.synonyms.push_back(std::move(lemma));
  return out;
}

std::vector<Occurrence> FindExamples(std::span<const ParsedSentence> corpus,
                                     const SynonymSet& synonyms) {
  std::unordered_set<std::string> wanted(synonyms.synonyms.begin(),
                                         synonyms.synonyms.end());
  std::vector<Occurrence> out;
  for (const ParsedSentence& s : corpus) {
    for (const Token& t : s.tokens()) {
      if (t.lemma != synonyms.target_lemma && wanted.count(t.lemma)) {
        out.push_back({s.id(), t.index, t.lemma});
      }
    }
  }
  return out;
}

void CoocBag::Add(std::string_view lemma, RuleTag rule, std::int64_t amount) {
  if (amount <= 0) {
    throw std::invalid_argument("co-occurrence increment must be positive");
  }
  counts_[Key(std::string(lemma), rule)] += amount;
  total_ += amount;
}

std::int64_t CoocBag::Count(std::string_view lemma) const {
  std::int64_t n = 0;
  for (auto it = counts_.lower_bound(Key(std::string(lemma), RuleTag::kR1));
       it != counts_.end() && it->first.first == lemma; ++it) {
    n += it->second;
  }
  return n;
}

std::int64_t CoocBag::CountInClass(std::string_view lemma,
                                   RuleTag rule_class) const {
  std::int64_t n = 0;
  for (auto it = counts_.lower_bound(Key(std::string(lemma), RuleTag::kR1));
       it != counts_.end() && it->first.first == lemma; ++it) {
    if (RuleClass(it->first.second) == RuleClass(rule_class)) n += it->second;
  }
  return n;
}

std::vector<std::string> CoocBag::Lemmas() const {
  std::vector<std::string> out;
  for (const auto& [key, count] : counts_) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

SenseBags BuildBags(std::span<const ParsedSentence> corpus,
                    std::span<const SynonymSet> synonym_sets,
                    const BuildOptions& options) {
  SenseBags bags;
  if (synonym_sets.empty()) return bags;
  const std::string& target = synonym_sets.front().target_lemma;
  for (const SynonymSet& syn : synonym_sets) {
    if (syn.target_lemma != target) {
      throw std::invalid_argument("synonym sets mix targets '" + target +
                                  "' and '" + syn.target_lemma + "'");
    }
    bags.try_emplace(syn.sense, target, syn.sense);
  }

  std::unordered_map<std::string, const ParsedSentence*> by_id;
  for (const ParsedSentence& s : corpus) by_id.emplace(s.id(), &s);

  for (const SynonymSet& syn : synonym_sets) {
    CoocBag& bag = bags.at(syn.sense);
    for (const Occurrence& occ : FindExamples(corpus, syn)) {
      const ParsedSentence& s = *by_id.at(occ.sentence_id);
      for (const ExtractedWord& w : ExtractByRules(s, occ.token_index)) {
        bag.Add(w.lemma, w.rule, options.weight_collection ? w.weight : 1);
      }
    }
  }
  return bags;
}

void SaveBags(std::ostream& out, const BagStore& store) {
  for (const auto& [target, bags] : store) {
    for (const auto& [sense, bag] : bags) {
      for (const auto& [key, count] : bag.counts()) {
        out << target << '\t' << sense << '\t' << key.first << '\t'
            << RuleTagName(key.second) << '\t' << count << '\n';
      }
    }
  }
}

BagStore LoadBags(std::istream& in) {
  BagStore store;
  std::string line;
  int line_no = 0;
  while (internal::ReadLine(in, line)) {
    ++line_no;
    if (internal::IsBlank(line) || line[0] == '#') continue;
    auto f = internal::SplitTabs(line);
    if (f.size() != 5) {
      throw FormatError("expected 5 tab-separated columns, got " +
                            std::to_string(f.size()),
                        line_no);
    }
    for (int i = 0; i < 3; ++i) {
      if (f[i].empty()) throw FormatError("empty column " + std::to_string(i + 1), line_no);
    }
    auto rule = ParseRuleTag(f[3]);
    if (!rule) {
      throw FormatError("unknown rule tag '" + std::string(f[3]) + "'", line_no);
    }
    auto count = internal::ParseInt<std::int64_t>(f[4]);
    if (!count) throw FormatError("bad count '" + std::string(f[4]) + "'", line_no);
    if (*count <= 0) throw FormatError("count must be positive", line_no);

    std::string target(f[0]);
    std::string sense(f[1]);
    CoocBag& bag =
        store[target].try_emplace(sense, target, sense).first->second;
    if (bag.counts().count(CoocBag::Key(std::string(f[2]), *rule))) {
      throw FormatError("duplicate row for " + std::string(f[2]) + "/" +
                            std::string(f[3]),
                        line_no);
    }
    bag.Add(f[2], *rule, *count);
  }
  return store;
}

}  // namespace coocwsd
