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

#ifndef COOCWSD_COMMANDS_H_
#define COOCWSD_COMMANDS_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "coocwsd/cooc_builder.h"

namespace coocwsd {

enum class Strategy { kBasic, kSequential };

// Everything a subcommand needs. Paths left empty are treated as absent.
struct Config {
  std::string hierarchy_path;
  std::string lexicon_path;
  std::string corpus_path;
  std::string bags_path;
  std::string gold_path;
  std::string decisions_path;  // disambiguate output, evaluate input
  std::string report_path;     // evaluate output; stdout when empty
  std::string exclusions_path;
  std::vector<std::string> targets;

  int synonym_radius = kDefaultSynonymRadius;
  std::size_t synonym_cap = kDefaultSynonymCap;
  bool positional = false;
  Strategy strategy = Strategy::kBasic;
  bool weight_collection = true;
  bool weight_query = true;
  bool staged = false;
};

// Throws std::invalid_argument when radius < 0 or cap < 1.
void ValidateConfig(const Config& config);

// Each command returns the process exit code: data goes to `out` (or the
// configured file), diagnostics to `err`.

// Harvests synonyms for each --target, builds bags from the corpus and
// writes them to bags_path. Prints a per-sense summary.
int CmdBuild(const Config& config, std::ostream& out, std::ostream& err);
// Decides every gold item (or every corpus occurrence of the targets when
// no gold file is configured). Writes to decisions_path or `out`.
int CmdDisambiguate(const Config& config, std::ostream& out, std::ostream& err);
// Scores decisions against gold; appends the random baseline, the staged
// reports with --staged, and an exceptions section when items mismatch.
int CmdEvaluate(const Config& config, std::ostream& out, std::ostream& err);
// Prints `<distance> <TAB> <sense> <TAB> <sense>` or `unreachable`.
int CmdDistance(const Config& config, const std::string& lemma_a,
                const std::string& lemma_b, std::ostream& out,
                std::ostream& err);

}  // namespace coocwsd

#endif  // COOCWSD_COMMANDS_H_
