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

// Command-line front end.
//
// Sample usage:
//   coocwsd build --hierarchy h.tsv --lexicon lex.tsv --corpus corpus.txt \
//       --bags bags.tsv --target 昼
//   coocwsd disambiguate --config run.cfg --strategy sequential
//   coocwsd evaluate --config run.cfg --staged
//   coocwsd distance --config run.cfg 妻 お代わり

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "coocwsd/commands.h"

int main(int argc, char** argv) {
  coocwsd::Config config;
  CLI::App app{"Co-occurrence based word-sense disambiguation"};
  app.set_config("--config", "", "Flat key=value configuration file");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--hierarchy", config.hierarchy_path, "Concept hierarchy TSV");
  app.add_option("--lexicon", config.lexicon_path, "Lexicon TSV");
  app.add_option("--corpus", config.corpus_path, "Parsed corpus");
  app.add_option("--bags", config.bags_path, "Co-occurrence bags TSV");
  app.add_option("--gold", config.gold_path, "Gold annotations TSV");
  app.add_option("--decisions", config.decisions_path, "Decisions TSV");
  app.add_option("--report", config.report_path, "Evaluation report output");
  app.add_option("--exclusions", config.exclusions_path,
                 "Lemmas never used as synonyms, one per line");
  app.add_option("--target", config.targets, "Target lemma (repeatable)");
  app.add_option("--radius", config.synonym_radius, "Synonym radius")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cap", config.synonym_cap, "Synonyms kept per sense")
      ->check(CLI::PositiveNumber);
  app.add_flag("--positional", config.positional,
               "Compare only words from the same structural position");
  app.add_option("--strategy", config.strategy, "basic or sequential")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, coocwsd::Strategy>{
              {"basic", coocwsd::Strategy::kBasic},
              {"sequential", coocwsd::Strategy::kSequential}},
          CLI::ignore_case));
  bool no_collection_weight = false;
  bool no_query_weight = false;
  app.add_flag("--no-collection-weight", no_collection_weight,
               "Count R2/R4 bag entries once");
  app.add_flag("--no-query-weight", no_query_weight,
               "Give R2/R4 keys weight 1");
  app.add_flag("--staged", config.staged, "Add per-stage reports");

  auto* build = app.add_subcommand("build", "Build co-occurrence bags");
  auto* disambiguate = app.add_subcommand("disambiguate", "Decide senses");
  auto* evaluate = app.add_subcommand("evaluate", "Score decisions");
  auto* distance = app.add_subcommand("distance", "Thesaurus distance of two lemmas");
  std::string lemma_a;
  std::string lemma_b;
  distance->add_option("lemma_a", lemma_a)->required();
  distance->add_option("lemma_b", lemma_b)->required();

  CLI11_PARSE(app, argc, argv);
  config.weight_collection = !no_collection_weight;
  config.weight_query = !no_query_weight;

  if (build->parsed()) return coocwsd::CmdBuild(config, std::cout, std::cerr);
  if (disambiguate->parsed()) {
    return coocwsd::CmdDisambiguate(config, std::cout, std::cerr);
  }
  if (evaluate->parsed()) return coocwsd::CmdEvaluate(config, std::cout, std::cerr);
  if (distance->parsed()) {
    return coocwsd::CmdDistance(config, lemma_a, lemma_b, std::cout, std::cerr);
  }
  return 1;
}
