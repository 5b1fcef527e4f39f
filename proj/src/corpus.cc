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

#include "coocwsd/corpus.h"

#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <unordered_map>
#include <utility>

#include "tsv.h"

namespace coocwsd {
namespace {

using internal::IsBlank;
using internal::ParseInt;
using internal::ReadLine;
using internal::SplitTabs;

struct Violation {
  int position;  // 0-based token position
  std::string message;
};

std::optional<Violation> Validate(const std::vector<Token>& tokens) {
  const int n = static_cast<int>(tokens.size());
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    if (t.index != i + 1) {
      return Violation{i, "token index " + std::to_string(t.index) +
                              " out of sequence (expected " +
                              std::to_string(i + 1) + ")"};
    }
    if (t.lemma.empty()) return Violation{i, "empty lemma"};
    if (t.head < 0 || t.head > n) {
      return Violation{i, "head " + std::to_string(t.head) + " out of range"};
    }
    if (t.head == t.index) return Violation{i, "token is its own head"};
    if (t.rel == Relation::kCoord && t.head == 0) {
      return Violation{i, "coord link needs a counterpart head"};
    }
  }
  // Heads strictly inside 1..n: walk upward; more than n steps means a cycle.
  std::vector<char> state(n, 0);  // 0 unvisited, 1 on path, 2 reaches root
  for (int i = 0; i < n; ++i) {
    std::vector<int> path;
    int cur = i;
    while (cur >= 0 && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = tokens[cur].head - 1;
    }
    if (cur >= 0 && state[cur] == 1) {
      return Violation{cur, "cyclic head links"};
    }
    for (int p : path) state[p] = 2;
  }
  std::set<std::string> closed;
  for (int i = 0; i < n; ++i) {
    const std::string& g = tokens[i].group;
    if (g.empty()) return Violation{i, "empty group label (use '-')"};
    if (g == "-") continue;
    bool continues = i > 0 && tokens[i - 1].group == g;
    if (!continues && !closed.insert(g).second) {
      return Violation{i, "compound group '" + g + "' is not contiguous"};
    }
  }
  return std::nullopt;
}

}  // namespace

ParsedSentence::ParsedSentence(std::string id, std::vector<Token> tokens)
    : id_(std::move(id)), tokens_(std::move(tokens)) {
  if (auto v = Validate(tokens_)) {
    throw FormatError("sentence '" + id_ + "' token " +
                          std::to_string(v->position + 1) + ": " + v->message,
                      0);
  }
}

std::vector<int> ParsedSentence::CompoundOf(int index) const {
  const Token& t = at(index);
  if (t.group == "-") return {index};
  int lo = index;
  int hi = index;
  while (lo > 1 && at(lo - 1).group == t.group) --lo;
  while (hi < size() && at(hi + 1).group == t.group) ++hi;
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<int> ParsedSentence::ChildrenOf(int index) const {
  std::vector<int> out;
  for (const Token& t : tokens_) {
    if (t.head == index) out.push_back(t.index);
  }
  return out;
}

std::vector<ParsedSentence> LoadCorpus(std::istream& in) {
  std::vector<ParsedSentence> corpus;
  std::set<std::string> ids;
  std::optional<std::string> sid;
  int header_line = 0;
  std::vector<Token> tokens;
  std::vector<int> token_lines;

  auto flush = [&] {
    if (!sid) return;
    if (tokens.empty()) {
      throw FormatError("sentence '" + *sid + "' has no tokens", header_line);
    }
    if (auto v = Validate(tokens)) {
      throw FormatError("sentence '" + *sid + "': " + v->message,
                        token_lines[v->position]);
    }
    corpus.emplace_back(std::move(*sid), std::move(tokens));
    sid.reset();
    tokens.clear();
    token_lines.clear();
  };

  std::string line;
  int line_no = 0;
  static constexpr std::string_view kHeader = "# sid = ";
  while (ReadLine(in, line)) {
    ++line_no;
    if (IsBlank(line)) {
      flush();
      continue;
    }
    if (line.starts_with(kHeader)) {
      flush();
      std::string id = line.substr(kHeader.size());
      if (id.empty() || internal::HasSpace(id)) {
        throw FormatError("invalid sentence id '" + id + "'", line_no);
      }
      if (!ids.insert(id).second) {
        throw FormatError("duplicate sentence id '" + id + "'", line_no);
      }
      sid = std::move(id);
      header_line = line_no;
      continue;
    }
    if (line[0] == '#') continue;
    if (!sid) throw FormatError("token line before '# sid = ' header", line_no);

    auto f = SplitTabs(line);
    auto fail = [&](const std::string& msg) {
      throw FormatError("sentence '" + *sid + "': " + msg, line_no);
    };
    if (f.size() != 7) {
      fail("expected 7 tab-separated columns, got " + std::to_string(f.size()));
    }
    Token t;
    auto index = ParseInt<int>(f[0]);
    auto head = ParseInt<int>(f[4]);
    auto pos = ParsePos(f[3]);
    if (!index) fail("bad token index '" + std::string(f[0]) + "'");
    if (!head) fail("bad head '" + std::string(f[4]) + "'");
    if (!pos) fail("unknown part of speech '" + std::string(f[3]) + "'");
    t.index = *index;
    t.surface = f[1];
    t.lemma = f[2];
    t.pos = *pos;
    t.head = *head;
    if (f[5] == "dep") {
      t.rel = Relation::kDep;
    } else if (f[5] == "coord") {
      t.rel = Relation::kCoord;
    } else {
      fail("unknown relation '" + std::string(f[5]) + "'");
    }
    t.group = f[6];
    tokens.push_back(std::move(t));
    token_lines.push_back(line_no);
  }
  flush();
  return corpus;
}

void WriteCorpus(std::ostream& out, std::span<const ParsedSentence> corpus) {
  bool first = true;
  for (const ParsedSentence& s : corpus) {
    if (!first) out << '\n';
    first = false;
    out << "# sid = " << s.id() << '\n';
    for (const Token& t : s.tokens()) {
      out << t.index << '\t' << t.surface << '\t' << t.lemma << '\t'
          << PosName(t.pos) << '\t' << t.head << '\t'
          << (t.rel == Relation::kCoord ? "coord" : "dep") << '\t' << t.group
          << '\n';
    }
  }
}

std::vector<GoldAnnotation> LoadGold(std::istream& in) {
  std::vector<GoldAnnotation> gold;
  std::string line;
  int line_no = 0;
  while (ReadLine(in, line)) {
    ++line_no;
    if (IsBlank(line) || line[0] == '#') continue;
    auto f = SplitTabs(line);
    if (f.size() != 4) {
      throw FormatError("expected 4 tab-separated columns, got " +
                            std::to_string(f.size()),
                        line_no);
    }
    auto index = ParseInt<int>(f[1]);
    if (!index || *index < 1) {
      throw FormatError("bad token index '" + std::string(f[1]) + "'", line_no);
    }
    GoldAnnotation g{std::string(f[0]), *index, std::string(f[2]), {}};
    std::string_view senses = f[3];
    std::set<std::string> seen;
    while (!senses.empty()) {
      auto comma = senses.find(',');
      std::string_view s = senses.substr(0, comma);
      if (s.empty()) throw FormatError("empty sense in sense list", line_no);
      if (seen.emplace(s).second) g.correct_senses.emplace_back(s);
      if (comma == std::string_view::npos) break;
      senses.remove_prefix(comma + 1);
      if (senses.empty()) throw FormatError("trailing comma in sense list", line_no);
    }
    if (g.correct_senses.empty()) {
      throw FormatError("empty correct-sense set", line_no);
    }
    gold.push_back(std::move(g));
  }
  return gold;
}

void WriteGold(std::ostream& out, std::span<const GoldAnnotation> gold) {
  for (const GoldAnnotation& g : gold) {
    out << g.sentence_id << '\t' << g.token_index << '\t' << g.target_lemma
        << '\t';
    for (std::size_t i = 0; i < g.correct_senses.size(); ++i) {
      if (i) out << ',';
      out << g.correct_senses[i];
    }
    out << '\n';
  }
}

}  // namespace coocwsd
