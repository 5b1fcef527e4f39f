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

#include "coocwsd/commands.h"

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "coocwsd/concept_net.h"
#include "coocwsd/corpus.h"
#include "coocwsd/disambiguator.h"
#include "coocwsd/evaluator.h"
#include "tsv.h"

namespace coocwsd {
namespace {

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream OpenInput(const std::string& path, const char* what) {
  if (path.empty()) throw CommandError(std::string("no ") + what + " path configured");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot open " + std::string(what) + " '" + path + "'");
  return in;
}

// Loader errors get the file name prepended.
template <typename Fn>
auto LoadFile(const std::string& path, const char* what, Fn&& load) {
  std::ifstream in = OpenInput(path, what);
  try {
    return load(in);
  } catch (const FormatError& e) {
    throw CommandError(path + ": " + e.what());
  }
}

struct Resources {
  ConceptHierarchy hierarchy;
  Lexicon lexicon;
};

Resources LoadResources(const Config& c) {
  Resources r;
  r.hierarchy = LoadFile(c.hierarchy_path, "hierarchy",
                         [](std::istream& in) { return ConceptHierarchy::Load(in); });
  r.lexicon = LoadFile(c.lexicon_path, "lexicon", [&](std::istream& in) {
    return Lexicon::Load(in, r.hierarchy);
  });
  return r;
}

std::set<std::string> LoadExclusions(const std::string& path) {
  std::set<std::string> out;
  if (path.empty()) return out;
  std::ifstream in = OpenInput(path, "exclusions");
  std::string line;
  while (internal::ReadLine(in, line)) {
    if (internal::IsBlank(line) || line[0] == '#') continue;
    out.insert(line);
  }
  return out;
}

// Writes through `fallback` when path is empty; otherwise to the file.
void Emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ostringstream buffer;
  write(buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw CommandError("cannot write '" + path + "'");
  file << buffer.str();
  if (!file.flush()) throw CommandError("write failed for '" + path + "'");
}

template <typename Fn>
int Run(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

DisambiguatorConfig MakeDisambiguatorConfig(const Config& c) {
  DisambiguatorConfig d;
  d.scoring.positional = c.positional;
  d.scoring.weight_query = c.weight_query;
  return d;
}

}  // namespace

void ValidateConfig(const Config& config) {
  if (config.synonym_radius < 0) {
    throw std::invalid_argument("synonym radius must be >= 0");
  }
  if (config.synonym_cap < 1) {
    throw std::invalid_argument("synonym cap must be >= 1");
  }
}

int CmdBuild(const Config& config, std::ostream& out, std::ostream& err) {
  return Run(err, [&] {
    ValidateConfig(config);
    if (config.targets.empty()) throw CommandError("build needs at least one --target");
    if (config.bags_path.empty()) throw CommandError("no bags path configured");
    Resources res = LoadResources(config);
    std::vector<ParsedSentence> corpus =
        LoadFile(config.corpus_path, "corpus", [](std::istream& in) { return LoadCorpus(in); });
    std::set<std::string> exclusions = LoadExclusions(config.exclusions_path);
    BuildOptions options{config.weight_collection};

    BagStore store;
    std::ostringstream summary;
    summary << "target\tsense\tsynonyms\toccurrences\ttotal\n";
    for (const std::string& target : std::set<std::string>(
             config.targets.begin(), config.targets.end())) {
      std::vector<std::string> senses = res.lexicon.ConceptsOf(target);
      if (senses.empty()) throw CommandError("target '" + target + "' is not in the lexicon");
      std::vector<SynonymSet> sets;
      for (const std::string& sense : senses) {
        SynonymSet syn = HarvestSynonyms(res.hierarchy, res.lexicon, target, sense,
                                         config.synonym_radius, config.synonym_cap,
                                         exclusions);
        if (syn.synonyms.empty()) {
          err << "warning: sense " << sense << " of '" << target
              << "' has no synonyms; skipped\n";
          continue;
        }
        sets.push_back(std::move(syn));
      }
      SenseBags bags = BuildBags(corpus, sets, options);
      for (const SynonymSet& syn : sets) {
        summary << target << '\t' << syn.sense << '\t' << syn.synonyms.size()
                << '\t' << FindExamples(corpus, syn).size() << '\t'
                << bags.at(syn.sense).total() << '\n';
      }
      store.emplace(target, std::move(bags));
    }
    Emit(config.bags_path, out, [&](std::ostream& o) { SaveBags(o, store); });
    out << summary.str();
    return 0;
  });
}

int CmdDisambiguate(const Config& config, std::ostream& out, std::ostream& err) {
  return Run(err, [&] {
    ValidateConfig(config);
    Resources res = LoadResources(config);
    std::vector<ParsedSentence> corpus =
        LoadFile(config.corpus_path, "corpus", [](std::istream& in) { return LoadCorpus(in); });
    BagStore store =
        LoadFile(config.bags_path, "bags", [](std::istream& in) { return LoadBags(in); });
    std::set<std::string> targets(config.targets.begin(), config.targets.end());
    for (const std::string& t : targets) {
      if (!store.count(t)) throw CommandError("missing bags for '" + t + "'");
    }

    struct Item {
      const ParsedSentence* sentence;
      int index;
      std::string lemma;
    };
    std::vector<Item> items;
    std::unordered_map<std::string, const ParsedSentence*> by_id;
    for (const ParsedSentence& s : corpus) by_id.emplace(s.id(), &s);

    if (!config.gold_path.empty()) {
      std::vector<GoldAnnotation> gold =
          LoadFile(config.gold_path, "gold", [](std::istream& in) { return LoadGold(in); });
      for (const GoldAnnotation& g : gold) {
        if (!targets.empty() && !targets.count(g.target_lemma)) continue;
        auto it = by_id.find(g.sentence_id);
        if (it == by_id.end()) {
          throw CommandError("gold sentence '" + g.sentence_id + "' not in corpus");
        }
        if (!it->second->IsValidIndex(g.token_index) ||
            it->second->at(g.token_index).lemma != g.target_lemma) {
          throw CommandError("gold item " + g.sentence_id + ":" +
                             std::to_string(g.token_index) + " is not '" +
                             g.target_lemma + "'");
        }
        items.push_back({it->second, g.token_index, g.target_lemma});
      }
    } else {
      if (targets.empty()) throw CommandError("disambiguate needs --target or a gold file");
      for (const ParsedSentence& s : corpus) {
        for (const Token& t : s.tokens()) {
          if (targets.count(t.lemma)) items.push_back({&s, t.index, t.lemma});
        }
      }
    }

    DisambiguatorConfig dconf = MakeDisambiguatorConfig(config);
    std::vector<DecisionRecord> records;
    records.reserve(items.size());
    for (const Item& item : items) {
      auto bags = store.find(item.lemma);
      if (bags == store.end()) throw CommandError("missing bags for '" + item.lemma + "'");
      Decision d = config.strategy == Strategy::kSequential
                       ? DisambiguateSequential(*item.sentence, item.index, bags->second,
                                                res.hierarchy, res.lexicon, dconf)
                       : Disambiguate(*item.sentence, item.index, bags->second,
                                      res.hierarchy, res.lexicon, dconf);
      records.push_back({item.sentence->id(), item.index, item.lemma, std::move(d)});
    }
    Emit(config.decisions_path, out,
         [&](std::ostream& o) { WriteDecisions(o, records); });
    return 0;
  });
}

int CmdEvaluate(const Config& config, std::ostream& out, std::ostream& err) {
  return Run(err, [&] {
    Resources res = LoadResources(config);
    std::vector<GoldAnnotation> gold =
        LoadFile(config.gold_path, "gold", [](std::istream& in) { return LoadGold(in); });
    std::vector<DecisionRecord> decisions = LoadFile(
        config.decisions_path, "decisions", [](std::istream& in) { return LoadDecisions(in); });

    EvalReport report = Evaluate(decisions, gold, res.lexicon);
    double baseline = RandomBaseline(gold, res.lexicon);
    Emit(config.report_path, out, [&](std::ostream& o) {
      RenderReport(o, report);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", baseline);
      o << "random_baseline\t" << buf << '\n';
      if (config.staged) {
        StagedReports staged = StagedEvaluate(decisions, gold, res.lexicon);
        o << "\n# stage: overlap\n";
        RenderReport(o, staged.overlap);
        o << "\n# stage: thesaurus\n";
        RenderThesaurusReport(o, staged.thesaurus);
      }
      if (!report.exceptions.empty()) {
        o << "\n# exceptions\n";
        for (const std::string& e : report.exceptions) o << e << '\n';
      }
    });
    if (!report.exceptions.empty()) {
      err << "error: " << report.exceptions.size()
          << " unmatched decision/gold item(s); see exceptions section\n";
      return 1;
    }
    return 0;
  });
}

int CmdDistance(const Config& config, const std::string& lemma_a,
                const std::string& lemma_b, std::ostream& out,
                std::ostream& err) {
  return Run(err, [&] {
    Resources res = LoadResources(config);
    auto d = MinWordDistance(res.hierarchy, res.lexicon, lemma_a, lemma_b);
    if (!d) {
      out << "unreachable\n";
    } else {
      out << d->distance << '\t' << d->sense_a << '\t' << d->sense_b << '\n';
    }
    return 0;
  });
}

}  // namespace coocwsd
