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

// Acceptance checks for the disambiguation engine. Prints one PASS/FAIL
// line per criterion and exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coocwsd/commands.h"
#include "coocwsd/concept_net.h"
#include "coocwsd/context_rules.h"
#include "coocwsd/cooc_builder.h"
#include "coocwsd/disambiguator.h"
#include "coocwsd/evaluator.h"
#include "fixtures.h"
#include "random_dag.h"
#include "synthetic.h"
#include "temp_dir.h"

namespace coocwsd {
namespace {

using Clock = std::chrono::steady_clock;

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::string s;
    for (const std::string& f : failures_) s += "\n    - " + f;
    if (failed_ > static_cast<int>(failures_.size())) {
      s += "\n    - ... " + std::to_string(failed_ - failures_.size()) + " more";
    }
    return s;
  }

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
};

std::string Words(const std::vector<ExtractedWord>& words) {
  std::string s;
  for (const ExtractedWord& w : words) {
    if (!s.empty()) s += ", ";
    s += "(" + w.lemma + "," + std::string(RuleTagName(w.rule)) + "," + std::to_string(w.weight) + ")";
  }
  return "[" + s + "]";
}

void Crit1(Check& c, std::string& detail) {
  auto corpus = testing::ExampleCorpus();
  auto keys = ExtractKeys(testing::FindSentence(corpus, "day-night"), 11);
  auto scores = ScoreOverlap(keys, testing::WorkedBags());
  const std::map<std::string, double> expected{
      {"正午の時分", 0.2}, {"昼の食事", 0.0}, {"朝から夕方までの間", 0.8}};
  c.Expect(scores.size() == 3, "three scores");
  for (const SenseScore& s : scores) {
    auto it = expected.find(s.sense);
    c.Expect(it != expected.end() && std::fabs(it->second - s.score) <= 1e-9,
             "score of " + s.sense + " = " + FormatScore(s.score));
    detail += (detail.empty() ? "" : " ") + s.sense + "=" + FormatScore(s.score);
  }
  Decision d = DecideByOverlap(scores);
  c.Expect(d.answered() && d.sense == "朝から夕方までの間", "decision " + d.sense);
}

// Each example sentence illustrates particular rules; only the words those
// rules extract are compared.
void Crit2(Check& c, std::string& detail) {
  auto corpus = testing::ExampleCorpus();
  auto expect = [&](const char* sid, int pivot, std::set<RuleTag> rules,
                    std::vector<ExtractedWord> want, bool keys) {
    const ParsedSentence& s = testing::FindSentence(corpus, sid);
    std::vector<ExtractedWord> got;
    for (const ExtractedWord& w : keys ? ExtractKeys(s, pivot) : ExtractByRules(s, pivot)) {
      if (rules.count(w.rule)) got.push_back(w);
    }
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].lemma == want[i].lemma && got[i].rule == want[i].rule &&
             got[i].weight == want[i].weight;
    }
    c.Expect(same, std::string(sid) + " gave " + Words(got));
    detail += (detail.empty() ? "" : "; ") + std::string(sid) + " " + Words(got);
  };
  const std::set<RuleTag> all{RuleTag::kR1, RuleTag::kR2, RuleTag::kR3, RuleTag::kR4};
  expect("lunch-canteen", 3, {RuleTag::kR2, RuleTag::kR3},
         {{"食べる", RuleTag::kR2, 2, 5}, {"食堂", RuleTag::kR3, 1, 1}}, false);
  expect("lunch-tasty", 5, {RuleTag::kR4}, {{"食べる", RuleTag::kR4, 2, 3}}, false);
  expect("lunch-after", 3, {RuleTag::kR1}, {{"過ぎ", RuleTag::kR1, 1, 4}}, false);
  expect("day-night", 11, all,
         {{"適応する", RuleTag::kR2, 2, 13},
          {"生物", RuleTag::kR3, 1, 3},
          {"手段", RuleTag::kR3, 1, 7},
          {"夜", RuleTag::kR3, 1, 9}},
         true);
}

// Bags for the footprint and rain fixtures: characteristic words per sense.
SenseBags FootprintBags() {
  CoocBag achievement("足跡", "業績");
  achievement.Add("福祉", RuleTag::kR3, 1);
  achievement.Add("行政", RuleTag::kR3, 1);
  achievement.Add("偉大", RuleTag::kR4, 2);
  CoocBag track("足跡", "歩いた跡");
  track.Add("つく", RuleTag::kR2, 2);
  track.Add("ネズミ", RuleTag::kR4, 2);
  CoocBag path("足跡", "経路");
  path.Add("追及", RuleTag::kR1, 1);
  path.Add("通る", RuleTag::kR2, 2);
  return {{achievement.sense(), achievement}, {track.sense(), track}, {path.sense(), path}};
}

SenseBags RainBags() {
  CoocBag water("雨", "降る水");
  water.Add("吸う", RuleTag::kR2, 2);
  water.Add("降る", RuleTag::kR2, 2);
  water.Add("ためる", RuleTag::kR2, 2);
  CoocBag weather("雨", "雨天");
  weather.Add("高い", RuleTag::kR4, 4);
  weather.Add("草木", RuleTag::kR3, 1);
  weather.Add("続く", RuleTag::kR2, 2);
  return {{water.sense(), water}, {weather.sense(), weather}};
}

void Crit3(Check& c, std::string& detail) {
  ConceptHierarchy h = testing::ToyHierarchy();
  Lexicon lex = testing::ToyLexicon(h);
  auto corpus = testing::ExampleCorpus();
  struct Case {
    const char* sid;
    int pivot;
    SenseBags bags;
    std::string sense;
    int level;
  };
  std::vector<Case> cases{
      {"day-facility", 1, testing::WorkedBags(), "朝から夕方までの間", 7},
      {"footprint", 9, FootprintBags(), "業績", 6},
      {"rain", 7, RainBags(), "降る水", 1},
  };
  for (const Case& k : cases) {
    const ParsedSentence& s = testing::FindSentence(corpus, k.sid);
    Decision d = DisambiguateSequential(s, k.pivot, k.bags, h, lex);
    c.Expect(d.stage == Stage::kSequential && d.level == k.level && d.sense == k.sense,
             std::string(k.sid) + " -> " + d.StageName() + " " + d.sense);
    detail += (detail.empty() ? "" : "; ") + std::string(k.sid) + " " + d.StageName() +
              " " + d.sense;
  }
  // The level that decides holds the expected key.
  const ParsedSentence& s31 = testing::FindSentence(corpus, "day-facility");
  c.Expect(Words(ExtractAtLevel(s31, 1, 7)) == "[(夜,P7,1)]", "day-facility level 7 keys");
  const ParsedSentence& s32 = testing::FindSentence(corpus, "footprint");
  c.Expect(Words(ExtractAtLevel(s32, 9, 6)).find("(福祉,P6,1)") != std::string::npos,
           "footprint level 6 keys");
  const ParsedSentence& s34 = testing::FindSentence(corpus, "rain");
  c.Expect(Words(ExtractAtLevel(s34, 7, 1)) == "[(吸う,R2,2)]", "rain level 1 keys");
  // Without the schedule, rain goes to the other sense.
  Decision basic = Disambiguate(s34, 7, RainBags(), h, lex);
  c.Expect(basic.sense == "雨天", "rain basic strategy picks the weather sense");
}

// Breadth-first distances over the raw edge list.
std::vector<int> BfsOracle(const testing::RandomDag& dag, int from) {
  std::vector<std::vector<int>> adj(dag.n);
  for (auto [a, b] : dag.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> d(dag.n, -1);
  std::deque<int> q{from};
  d[from] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[u]) {
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
    }
  }
  return d;
}

void Crit4(Check& c, std::string& detail) {
  std::mt19937 rng(4);
  long pairs = 0, triples = 0;
  constexpr int kDags = 120;
  for (int trial = 0; trial < kDags; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 200)(rng);
    testing::RandomDag dag = testing::MakeRandomDag(rng, n);
    const ConceptHierarchy& h = dag.hierarchy;
    std::vector<std::vector<int>> oracle(n), got(n);
    for (int a = 0; a < n; ++a) {
      oracle[a] = BfsOracle(dag, a);
      int ia = h.IndexOf(testing::NodeName(a));
      std::vector<int> row = h.DistancesFrom(ia);
      got[a].resize(n);
      for (int b = 0; b < n; ++b) got[a][b] = row[h.IndexOf(testing::NodeName(b))];
      for (int b = 0; b < n; ++b) {
        c.Expect(got[a][b] == oracle[a][b], "dag " + std::to_string(trial) + " d(" +
                                                std::to_string(a) + "," +
                                                std::to_string(b) + ")");
        ++pairs;
      }
    }
    // Spot-check the string API too.
    for (int k = 0; k < 20; ++k) {
      int a = rng() % n, b = rng() % n;
      auto d = h.Distance(testing::NodeName(a), testing::NodeName(b));
      c.Expect(d && *d == oracle[a][b], "Distance() on dag " + std::to_string(trial));
    }
    for (int k = 0; k < 2000; ++k) {
      int a = rng() % n, b = rng() % n, x = rng() % n;
      c.Expect(got[a][a] == 0, "identity");
      c.Expect((got[a][b] == 0) == (a == b), "zero only on the diagonal");
      c.Expect(got[a][b] == got[b][a], "symmetry");
      c.Expect(got[a][b] <= got[a][x] + got[x][b], "triangle inequality");
      ++triples;
    }
  }
  detail = std::to_string(kDags) + " DAGs, " + std::to_string(pairs) + " pairs, " +
           std::to_string(triples) + " triples";
}

Decision Decide(const std::vector<ExtractedWord>& keys, const SenseBags& bags,
                const ConceptHierarchy& h, const Lexicon& lex) {
  auto scores = ScoreOverlap(keys, bags);
  Decision d = DecideByOverlap(scores);
  if (d.answered()) return d;
  auto tied = TopSenses(scores);
  if (tied.size() < 2) tied.clear();
  return DecideByThesaurus(keys, bags, h, lex, {}, tied);
}

void Crit5(Check& c, std::string& detail) {
  ConceptHierarchy h = testing::ToyHierarchy();
  Lexicon lex = testing::ToyLexicon(h);
  const std::vector<std::string> vocab{"昼間", "お昼", "昼食", "正午", "妻",   "お代わり",
                                       "食べる", "かき込む", "夜", "動かす", "p", "q"};
  std::mt19937 rng(5);
  constexpr int kFixtures = 1500;
  int answered = 0;
  for (int trial = 0; trial < kFixtures; ++trial) {
    SenseBags bags;
    int senses = 2 + rng() % 3;
    for (int s = 0; s < senses; ++s) {
      std::string name = "S" + std::to_string(s);
      CoocBag bag("t", name);
      int entries = 1 + rng() % 5;
      for (int e = 0; e < entries; ++e) {
        bag.Add(vocab[rng() % vocab.size()], static_cast<RuleTag>(rng() % 4), 1 + rng() % 9);
      }
      bags.emplace(name, bag);
    }
    std::vector<ExtractedWord> keys;
    int nkeys = rng() % 5;
    for (int k = 0; k < nkeys; ++k) {
      RuleTag r = static_cast<RuleTag>(rng() % 4);
      keys.push_back({vocab[rng() % vocab.size()], r, RuleWeight(r), k + 1});
    }
    auto base_scores = ScoreOverlap(keys, bags);
    Decision base = Decide(keys, bags, h, lex);
    answered += base.answered();
    for (int k : {2, 3, 7}) {
      SenseBags scaled;
      for (const auto& [name, bag] : bags) {
        CoocBag b(bag.target_lemma(), name);
        for (const auto& [key, count] : bag.counts()) b.Add(key.first, key.second, count * k);
        scaled.emplace(name, b);
      }
      auto scores = ScoreOverlap(keys, scaled);
      bool same = scores.size() == base_scores.size();
      for (std::size_t i = 0; same && i < scores.size(); ++i) {
        same = scores[i].sense == base_scores[i].sense && scores[i].score == base_scores[i].score;
      }
      c.Expect(same, "scores changed at k=" + std::to_string(k) + " trial " +
                         std::to_string(trial));
      Decision d = Decide(keys, scaled, h, lex);
      c.Expect(d.stage == base.stage && d.sense == base.sense && d.score == base.score,
               "decision changed at k=" + std::to_string(k) + " trial " + std::to_string(trial));
    }
  }
  detail = std::to_string(kFixtures) + " fixtures x k in {2,3,7}, " + std::to_string(answered) +
           " answered";
}

void Crit6(Check& c, std::string& detail) {
  struct Case {
    EvalRow row;
    bool thesaurus;
    std::string want;
  };
  std::vector<Case> cases{
      {{"TOTAL", -1, 775, 249, 179, 347}, false, "TOTAL\t-\t775\t249\t179\t347\t55.2\t58.2"},
      {{"足跡", 3, 35, 13, 15, 7}, false, "足跡\t3\t35\t13\t15\t7\t80.0\t46.4"},
      {{"隣", 2, 30, 14, 13, 3}, true, "隣\t2\t30\t14\t13\t3\t51.9"},
  };
  for (const Case& k : cases) {
    std::string got = k.thesaurus ? RenderThesaurusRow(k.row) : RenderRow(k.row);
    c.Expect(got == k.want, "rendered '" + got + "'");
  }
  detail = "55.2/58.2, 80.0/46.4, 51.9";
}

struct PipelineOutput {
  std::string bags, decisions, report;
  int build = -1, disambiguate = -1, evaluate = -1;
  std::string errors;
};

PipelineOutput RunPipeline(const testing::SyntheticData& data) {
  testing::TempDir dir;
  Config config;
  config.hierarchy_path = dir.Write("hierarchy.tsv", data.hierarchy);
  config.lexicon_path = dir.Write("lexicon.tsv", data.lexicon);
  config.corpus_path = dir.Write("corpus.conll", data.corpus);
  config.gold_path = dir.Write("gold.tsv", data.gold);
  config.bags_path = dir.Path("bags.tsv");
  config.decisions_path = dir.Path("decisions.tsv");
  config.report_path = dir.Path("report.tsv");
  config.targets = data.targets;
  config.staged = true;
  PipelineOutput out;
  std::ostringstream sink, err;
  out.build = CmdBuild(config, sink, err);
  out.disambiguate = CmdDisambiguate(config, sink, err);
  out.evaluate = CmdEvaluate(config, sink, err);
  out.bags = testing::ReadFile(config.bags_path);
  out.decisions = testing::ReadFile(config.decisions_path);
  out.report = testing::ReadFile(config.report_path);
  out.errors = err.str();
  return out;
}

constexpr unsigned kSyntheticSeed = 20260101;

void Crit7(Check& c, std::string& detail) {
  testing::SyntheticData data = testing::MakeSynthetic(kSyntheticSeed);
  c.Expect(data.concepts == 30, "hierarchy has " + std::to_string(data.concepts) + " concepts");
  c.Expect(data.sentences >= 200, "corpus has " + std::to_string(data.sentences) + " sentences");
  PipelineOutput out = RunPipeline(data);
  c.Expect(out.build == 0 && out.disambiguate == 0 && out.evaluate == 0,
           "exit codes " + std::to_string(out.build) + "/" + std::to_string(out.disambiguate) +
               "/" + std::to_string(out.evaluate) + " " + out.errors);
  // TOTAL row of the main report: lemma senses n correct wrong unanswered rate acc.
  std::istringstream in(out.report);
  std::string line;
  long long n = 0, correct = 0, wrong = 0;
  bool found = false;
  while (std::getline(in, line)) {
    if (line.rfind("TOTAL\t", 0) != 0) continue;
    std::istringstream f(line);
    std::string lemma, senses;
    long long unanswered;
    f >> lemma >> senses >> n >> correct >> wrong >> unanswered;
    found = true;
    break;
  }
  c.Expect(found, "report has a TOTAL row");
  c.Expect(n == data.gold_items, "evaluated " + std::to_string(n) + " items");
  long long answered = correct + wrong;
  c.Expect(n > 0 && 10 * answered >= 9 * n, "answer rate " + FormatPercent(answered, n));
  c.Expect(answered > 0 && 10 * correct >= 9 * answered,
           "accuracy " + FormatPercent(correct, answered));
  detail = std::to_string(data.sentences) + " sentences, " + std::to_string(data.concepts) +
           " concepts, " + std::to_string(n) + " items, answer rate " +
           FormatPercent(answered, n) + "%, accuracy " + FormatPercent(correct, answered) + "%";
}

void Crit8(Check& c, std::string& detail) {
  testing::SyntheticData a = testing::MakeSynthetic(kSyntheticSeed);
  testing::SyntheticData b = testing::MakeSynthetic(kSyntheticSeed);
  c.Expect(a.corpus == b.corpus && a.gold == b.gold && a.lexicon == b.lexicon,
           "generator output differs");
  PipelineOutput first = RunPipeline(a);
  PipelineOutput second = RunPipeline(b);
  c.Expect(!first.bags.empty() && first.bags == second.bags, "bags differ");
  c.Expect(!first.decisions.empty() && first.decisions == second.decisions,
           "decisions differ");
  c.Expect(!first.report.empty() && first.report == second.report, "reports differ");
  detail = std::to_string(first.bags.size() + first.decisions.size() + first.report.size()) +
           " bytes compared";
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 for none
  std::function<void(Check&, std::string&)> run;
};

}  // namespace
}  // namespace coocwsd

int main() {
  using namespace coocwsd;
  const std::vector<Criterion> criteria{
      {1, "worked overlap example", 1.0, Crit1},
      {2, "rule extraction golden sentences", 0, Crit2},
      {3, "priority schedule golden sentences", 0, Crit3},
      {4, "concept distance vs BFS oracle and metric laws", 30.0, Crit4},
      {5, "scale invariance of scores and decisions", 0, Crit5},
      {6, "report rows from raw counts", 0, Crit6},
      {7, "synthetic end-to-end benchmark", 10.0, Crit7},
      {8, "pipeline determinism", 0, Crit8},
  };
  int failed = 0;
  for (const Criterion& k : criteria) {
    Check check;
    std::string detail;
    auto start = Clock::now();
    try {
      k.run(check, detail);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (k.limit_seconds > 0) {
      check.Expect(seconds < k.limit_seconds, "took " + std::to_string(seconds) + " s");
    }
    std::printf("[%s] criterion %d: %s (%s; %.3f s)%s\n", check.ok() ? "PASS" : "FAIL", k.id,
                k.title, detail.c_str(), seconds, check.Summary().c_str());
    failed += !check.ok();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
