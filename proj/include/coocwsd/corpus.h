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

#ifndef COOCWSD_CORPUS_H_
#define COOCWSD_CORPUS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "coocwsd/types.h"

namespace coocwsd {

enum class Relation { kDep, kCoord };

struct Token {
  int index = 0;  // 1-based
  std::string surface;
  std::string lemma;
  Pos pos = Pos::kOther;
  int head = 0;  // 0 = sentence root
  Relation rel = Relation::kDep;
  std::string group = "-";  // compound-noun label, "-" when ungrouped

  friend bool operator==(const Token&, const Token&) = default;
};

// A dependency-parsed sentence. Head links form a forest. A compound group
// is a contiguous run of tokens sharing one label; a token whose head link
// has rel=coord is a non-final conjunct pointing at its parallel
// counterpart.
class ParsedSentence {
 public:
  ParsedSentence() = default;
  // Throws FormatError when the tokens violate any sentence invariant.
  ParsedSentence(std::string id, std::vector<Token> tokens);

  const std::string& id() const { return id_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  int size() const { return static_cast<int>(tokens_.size()); }
  bool IsValidIndex(int index) const { return index >= 1 && index <= size(); }
  const Token& at(int index) const { return tokens_.at(index - 1); }

  // Indices sharing token i's compound group, ascending; [i] if ungrouped.
  std::vector<int> CompoundOf(int index) const;
  // Tokens whose head is `index`, ascending.
  std::vector<int> ChildrenOf(int index) const;

  friend bool operator==(const ParsedSentence&, const ParsedSentence&) = default;

 private:
  std::string id_;
  std::vector<Token> tokens_;
};

// Reads the `# sid = <id>` + token-line format. Errors name the sentence id
// and the line.
std::vector<ParsedSentence> LoadCorpus(std::istream& in);
void WriteCorpus(std::ostream& out, std::span<const ParsedSentence> corpus);

struct GoldAnnotation {
  std::string sentence_id;
  int token_index = 0;
  std::string target_lemma;
  std::vector<std::string> correct_senses;  // non-empty

  friend bool operator==(const GoldAnnotation&, const GoldAnnotation&) = default;
};

// `sentence_id <TAB> token_index <TAB> target_lemma <TAB> s1[,s2...]`.
std::vector<GoldAnnotation> LoadGold(std::istream& in);
void WriteGold(std::ostream& out, std::span<const GoldAnnotation> gold);

}  // namespace coocwsd

#endif  // COOCWSD_CORPUS_H_
