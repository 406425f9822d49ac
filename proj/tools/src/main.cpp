//
// Copyright 2026 The sarckit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sarckit/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sarcasm detection experiment pipeline"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
  bool quiet = false;
  app.add_option("--config", config_path, "experiment config JSON file");
  app.add_option("--seed", seed, "override the config seed");
  app.add_option("--output-dir", output_dir, "override the output directory");
  app.add_flag("--quiet", quiet, "suppress progress output");

  auto* prepare = app.add_subcommand("prepare", "load, preprocess and split a corpus");
  auto* augment = app.add_subcommand("augment", "build augmented datasets");
  auto* train_eval = app.add_subcommand("train-eval", "train a model and report metrics");
  auto* stats = app.add_subcommand("stats", "print dataset statistics");
  auto* reproduce = app.add_subcommand(
      "reproduce-tables", "rebuild the published dataset arithmetic at desk scale");
  for (auto* sub : {prepare, augment, train_eval, stats, reproduce})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  sarckit::CliOverrides ov{seed, output_dir, quiet};
  auto need_config = [&](const char* cmd) {
    if (config_path.empty()) {
      std::cerr << "error: --config is required for " << cmd << "\n";
      return false;
    }
    return true;
  };

  if (prepare->parsed()) {
    if (!need_config("prepare")) return sarckit::kExitConfig;
    return sarckit::run_prepare(config_path, ov, std::cout, std::cerr);
  }
  if (augment->parsed()) {
    if (!need_config("augment")) return sarckit::kExitConfig;
    return sarckit::run_augment(config_path, ov, std::cout, std::cerr);
  }
  if (train_eval->parsed()) {
    if (!need_config("train-eval")) return sarckit::kExitConfig;
    return sarckit::run_train_eval(config_path, ov, std::cout, std::cerr);
  }
  if (stats->parsed()) {
    if (!need_config("stats")) return sarckit::kExitConfig;
    return sarckit::run_stats(config_path, ov, std::cout, std::cerr);
  }
  if (reproduce->parsed())
    return sarckit::run_reproduce_tables(ov, std::cout, std::cerr);
  return sarckit::kExitConfig;
}
