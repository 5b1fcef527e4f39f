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

#ifndef COOCWSD_TESTS_FIXTURES_H_
#define COOCWSD_TESTS_FIXTURES_H_

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "coocwsd/concept_net.h"
#include "coocwsd/cooc_builder.h"
#include "coocwsd/corpus.h"

namespace coocwsd::testing {

// Hand-parsed example sentences. Particles attach to the word they follow;
// day-facility marks the first clause's verb as coordinated with the second.
inline constexpr std::string_view kExampleCorpus =
    "# sid = lunch-canteen\n"  // 食堂でお昼を食べてから、授業に出ることにした
    "1\t食堂\t食堂\tN\t5\tdep\t-\n"
    "2\tで\tで\tP\t1\tdep\t-\n"
    "3\tお昼\tお昼\tN\t5\tdep\t-\n"
    "4\tを\tを\tP\t3\tdep\t-\n"
    "5\t食べ\t食べる\tV\t9\tdep\t-\n"
    "6\tてから\tてから\tP\t5\tdep\t-\n"
    "7\t授業\t授業\tN\t9\tdep\t-\n"
    "8\tに\tに\tP\t7\tdep\t-\n"
    "9\t出る\t出る\tV\t10\tdep\t-\n"
    "10\tこと\tこと\tN\t12\tdep\t-\n"
    "11\tに\tに\tP\t10\tdep\t-\n"
    "12\tした\tする\tV\t0\tdep\t-\n"
    "\n"
    "# sid = lunch-tasty\n"  // あの日食べたお昼は最高においしかった
    "1\tあの\tあの\tOTHER\t2\tdep\t-\n"
    "2\t日\t日\tN\t3\tdep\t-\n"
    "3\t食べ\t食べる\tV\t5\tdep\t-\n"
    "4\tた\tた\tAUX\t3\tdep\t-\n"
    "5\tお昼\tお昼\tN\t9\tdep\t-\n"
    "6\tは\tは\tP\t5\tdep\t-\n"
    "7\t最高\t最高\tN\t9\tdep\t-\n"
    "8\tに\tに\tP\t7\tdep\t-\n"
    "9\tおいしかった\tおいしい\tADJ\t0\tdep\t-\n"
    "\n"
    "# sid = lunch-after\n"  // 明日のお昼過ぎには電話します
    "1\t明日\t明日\tN\t4\tdep\t-\n"
    "2\tの\tの\tP\t1\tdep\t-\n"
    "3\tお昼\tお昼\tN\t4\tdep\tC1\n"
    "4\t過ぎ\t過ぎ\tN\t6\tdep\tC1\n"
    "5\tには\tには\tP\t4\tdep\t-\n"
    "6\t電話し\t電話する\tV\t0\tdep\t-\n"
    "7\tます\tます\tAUX\t6\tdep\t-\n"
    "\n"
    "# sid = day-night\n"  // 一部の生物は体内時計という手段で夜と昼に適応する
    "1\t一部\t一部\tN\t3\tdep\t-\n"
    "2\tの\tの\tP\t1\tdep\t-\n"
    "3\t生物\t生物\tN\t13\tdep\t-\n"
    "4\tは\tは\tP\t3\tdep\t-\n"
    "5\t体内時計\t体内時計\tN\t7\tdep\t-\n"
    "6\tという\tという\tP\t5\tdep\t-\n"
    "7\t手段\t手段\tN\t13\tdep\t-\n"
    "8\tで\tで\tP\t7\tdep\t-\n"
    "9\t夜\t夜\tN\t13\tdep\t-\n"
    "10\tと\tと\tP\t9\tdep\t-\n"
    "11\t昼\t昼\tN\t13\tdep\t-\n"
    "12\tに\tに\tP\t11\tdep\t-\n"
    "13\t適応する\t適応する\tV\t0\tdep\t-\n"
    "\n"
    "# sid = day-facility\n"  // 昼は施設で体を動かし、夜は自宅でぐっすり眠るようになった
    "1\t昼\t昼\tN\t7\tdep\t-\n"
    "2\tは\tは\tP\t1\tdep\t-\n"
    "3\t施設\t施設\tN\t7\tdep\t-\n"
    "4\tで\tで\tP\t3\tdep\t-\n"
    "5\t体\t体\tN\t7\tdep\t-\n"
    "6\tを\tを\tP\t5\tdep\t-\n"
    "7\t動かし\t動かす\tV\t14\tcoord\t-\n"
    "8\t、\t、\tOTHER\t7\tdep\t-\n"
    "9\t夜\t夜\tN\t14\tdep\t-\n"
    "10\tは\tは\tP\t9\tdep\t-\n"
    "11\t自宅\t自宅\tN\t14\tdep\t-\n"
    "12\tで\tで\tP\t11\tdep\t-\n"
    "13\tぐっすり\tぐっすり\tADV\t14\tdep\t-\n"
    "14\t眠る\t眠る\tV\t15\tdep\t-\n"
    "15\tようになった\tなる\tV\t0\tdep\t-\n"
    "\n"
    "# sid = footprint\n"  // 本田さんは老人福祉の世界に大きな足跡を残した
    "1\t本田さん\t本田さん\tN\t11\tdep\t-\n"
    "2\tは\tは\tP\t1\tdep\t-\n"
    "3\t老人\t老人\tN\t4\tdep\tC1\n"
    "4\t福祉\t福祉\tN\t6\tdep\tC1\n"
    "5\tの\tの\tP\t4\tdep\t-\n"
    "6\t世界\t世界\tN\t11\tdep\t-\n"
    "7\tに\tに\tP\t6\tdep\t-\n"
    "8\t大きな\t大きい\tADJ\t9\tdep\t-\n"
    "9\t足跡\t足跡\tN\t11\tdep\t-\n"
    "10\tを\tを\tP\t9\tdep\t-\n"
    "11\t残した\t残す\tV\t0\tdep\t-\n"
    "\n"
    "# sid = rain\n"  // 草木はかなり酸性度の高い雨を吸っている
    "1\t草木\t草木\tN\t9\tdep\t-\n"
    "2\tは\tは\tP\t1\tdep\t-\n"
    "3\tかなり\tかなり\tADV\t6\tdep\t-\n"
    "4\t酸性度\t酸性度\tN\t6\tdep\t-\n"
    "5\tの\tの\tP\t4\tdep\t-\n"
    "6\t高い\t高い\tADJ\t7\tdep\t-\n"
    "7\t雨\t雨\tN\t9\tdep\t-\n"
    "8\tを\tを\tP\t7\tdep\t-\n"
    "9\t吸っ\t吸う\tV\t0\tdep\t-\n"
    "10\tている\tている\tAUX\t9\tdep\t-\n";

inline std::vector<ParsedSentence> ExampleCorpus() {
  std::istringstream in{std::string(kExampleCorpus)};
  return LoadCorpus(in);
}

inline const ParsedSentence& FindSentence(const std::vector<ParsedSentence>& corpus,
                                          std::string_view id) {
  for (const ParsedSentence& s : corpus) {
    if (s.id() == id) return s;
  }
  throw std::out_of_range("no sentence " + std::string(id));
}

// ROOT > {TIME > {DAYPART, CLOCK}, FOOD > {MEAL, DISH > {GARNISH, REFILL}},
//         PERSON > {SPOUSE}, ACT > {EAT > {EAT_PLAIN, EAT_FAST}, MOVE}}
inline constexpr std::string_view kToyHierarchy =
    "# toy thesaurus\n"
    "ROOT\t-\ttop\n"
    "TIME\tROOT\ttime\n"
    "DAYPART\tTIME\tdaytime\n"
    "CLOCK\tTIME\tnoon\n"
    "FOOD\tROOT\tfood\n"
    "MEAL\tFOOD\tmeal\n"
    "DISH\tFOOD\tdish\n"
    "GARNISH\tDISH\tgarnish\n"
    "REFILL\tDISH\tsecond helping\n"
    "PERSON\tROOT\tperson\n"
    "SPOUSE\tPERSON\twife\n"
    "ACT\tROOT\taction\n"
    "EAT\tACT\teat\n"
    "EAT_PLAIN\tEAT\teat\n"
    "EAT_FAST\tEAT\tgobble\n"
    "MOVE\tACT\tmove\n";

inline constexpr std::string_view kToyLexicon =
    "昼\t昼\tN\tMEAL\n"
    "昼\t昼\tN\tDAYPART\n"
    "昼\t昼\tN\tCLOCK\n"
    "昼間\t昼間\tN\tDAYPART\n"
    "お昼\tお昼\tN\tMEAL\n"
    "昼食\t昼食\tN\tMEAL\n"
    "正午\t正午\tN\tCLOCK\n"
    "妻\t妻\tN\tSPOUSE\n"
    "妻\t妻\tN\tGARNISH\n"
    "お代わり\tお代わり\tN\tREFILL\n"
    "食べる\t食べる\tV\tEAT_PLAIN\n"
    "かき込む\tかき込む\tV\tEAT_FAST\n"
    "夜\t夜\tN\tTIME\n"
    "動かす\t動かす\tV\tMOVE\n";

inline ConceptHierarchy ToyHierarchy() {
  std::istringstream in{std::string(kToyHierarchy)};
  return ConceptHierarchy::Load(in);
}

inline Lexicon ToyLexicon(const ConceptHierarchy& h) {
  std::istringstream in{std::string(kToyLexicon)};
  return Lexicon::Load(in, h);
}

// The three 昼 bags from the worked overlap example, five words each.
inline SenseBags WorkedBags() {
  SenseBags bags;
  CoocBag noon("昼", "正午の時分");
  noon.Add("過ぎる", RuleTag::kR2, 2);
  noon.Add("手段", RuleTag::kR3, 1);
  noon.Add("決勝", RuleTag::kR3, 1);
  noon.Add("なる", RuleTag::kR3, 1);
  CoocBag lunch("昼", "昼の食事");
  lunch.Add("食べる", RuleTag::kR2, 2);
  lunch.Add("食堂", RuleTag::kR3, 1);
  lunch.Add("おいしい", RuleTag::kR3, 1);
  lunch.Add("最高", RuleTag::kR3, 1);
  CoocBag day("昼", "朝から夕方までの間");
  day.Add("夜", RuleTag::kR3, 2);
  day.Add("適応する", RuleTag::kR3, 1);
  day.Add("預かる", RuleTag::kR3, 1);
  day.Add("過ごす", RuleTag::kR3, 1);
  bags.emplace(noon.sense(), noon);
  bags.emplace(lunch.sense(), lunch);
  bags.emplace(day.sense(), day);
  return bags;
}

}  // namespace coocwsd::testing

#endif  // COOCWSD_TESTS_FIXTURES_H_
