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

#include "sarckit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "sarckit/corpus.hpp"
#include "sarckit/embed.hpp"
#include "sarckit/eval.hpp"
#include "sarckit/rng.hpp"
#include "sarckit/synth.hpp"

namespace sarckit {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

const char* tool_version() { return "0.1.0"; }

const char* to_string(Subtask s) {
  switch (s) {
    case Subtask::a_en: return "a_en";
    case Subtask::a_ar: return "a_ar";
    case Subtask::b_en: return "b_en";
    case Subtask::c_en: return "c_en";
    case Subtask::c_ar: return "c_ar";
  }
  return "a_en";
}

Subtask subtask_from_string(const std::string& s) {
  if (s == "a_en") return Subtask::a_en;
  if (s == "a_ar") return Subtask::a_ar;
  if (s == "b_en") return Subtask::b_en;
  if (s == "c_en") return Subtask::c_en;
  if (s == "c_ar") return Subtask::c_ar;
  throw ConfigError("unknown subtask '" + s + "'");
}

Language subtask_language(Subtask s) {
  return (s == Subtask::a_ar || s == Subtask::c_ar) ? Language::ar
                                                    : Language::en;
}

// ---------------------------------------------------------------------------
// Config

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  ExperimentConfig c;
  try {
    c.schema_version = j.value("schema_version", 1);
    if (c.schema_version != 1)
      throw ConfigError("config: unsupported schema_version " +
                        std::to_string(c.schema_version));
    if (j.contains("subtask"))
      c.subtask = subtask_from_string(j.at("subtask").get<std::string>());
    if (j.contains("data")) {
      const json& d = j.at("data");
      c.train_csv = d.value("train_csv", "");
      c.train_fraction = d.value("train_fraction", 0.6);
      c.train_file = d.value("train_file", "");
      c.val_file = d.value("val_file", "");
      c.test_file = d.value("test_file", "");
      if (d.contains("sarcastic_pools"))
        c.sarcastic_pools = d.at("sarcastic_pools").get<std::vector<std::string>>();
      c.ns_pool = d.value("ns_pool", "");
      c.embeddings = d.value("embeddings", "");
    }
    if (j.contains("preprocess_type"))
      c.preprocess_type =
          preprocess_type_from_string(j.at("preprocess_type").get<std::string>());
    if (j.contains("augment")) {
      const json& a = j.at("augment");
      c.augment_method = a.value("method", "schedule");
      c.increment = a.value("increment", 145);
      c.steps = a.value("steps", 10);
      c.copies_per_record = a.value("copies_per_record", 1);
      if (a.contains("target_total"))
        c.target_total = a.at("target_total").get<std::size_t>();
    }
    if (j.contains("model")) {
      const json& m = j.at("model");
      c.model.encoder_dim = m.value("encoder_dim", 32);
      c.model.max_len = m.value("max_len", 128);
      c.model.hierarchical = m.value("hierarchical", true);
      c.model.hier.hidden_size = m.value("hidden_size", 100);
      c.model.hier.use_attention = m.value("use_attention", true);
      c.model.hier.attention_size = m.value("attention_size", 64);
    }
    if (j.contains("train")) {
      const json& t = j.at("train");
      c.train.learning_rate = t.value("learning_rate", 0.05);
      c.train.epochs = t.value("epochs", 5);
      c.train.batch_size = t.value("batch_size", 32);
      c.train.momentum = t.value("momentum", 0.9);
      if (t.contains("loss"))
        c.train.loss = loss_kind_from_string(t.at("loss").get<std::string>());
    }
    if (j.contains("sweep")) {
      const json& s = j.at("sweep");
      c.has_sweep = true;
      std::string axis = s.value("axis", "learning_rate");
      if (axis == "learning_rate") c.sweep_axis = SweepAxis::learning_rate;
      else if (axis == "epochs") c.sweep_axis = SweepAxis::epochs;
      else if (axis == "hidden_size") c.sweep_axis = SweepAxis::hidden_size;
      else if (axis == "dataset") c.sweep_axis = SweepAxis::dataset;
      else if (axis == "preprocess_type") c.sweep_axis = SweepAxis::preprocess_type;
      else throw ConfigError("config: unknown sweep axis '" + axis + "'");
      c.sweep_values = s.at("values").get<std::vector<std::string>>();
    }
    c.seed = j.value("seed", std::uint64_t{42});
    c.output_dir = j.value("output_dir", "out");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  // The multilabel subtask pins head and loss.
  switch (c.subtask) {
    case Subtask::b_en:
      c.model.hier.head = HeadKind::multilabel_sigmoid;
      c.train.loss = LossKind::bce;
      break;
    case Subtask::c_en:
    case Subtask::c_ar:
      c.model.hier.head = HeadKind::pair_softmax;
      if (c.train.loss == LossKind::bce)
        throw ConfigError("config: bce loss is for subtask b only");
      break;
    default:
      c.model.hier.head = HeadKind::binary_softmax;
      if (c.train.loss == LossKind::bce)
        throw ConfigError("config: bce loss is for subtask b only");
      break;
  }
  c.model.seed = c.seed;
  c.train.seed = c.seed;
  c.train.preprocess_type = c.preprocess_type;
  return c;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

// ---------------------------------------------------------------------------
// Helpers

namespace {

void apply_overrides(ExperimentConfig& c, const CliOverrides& ov) {
  if (ov.seed) {
    c.seed = *ov.seed;
    c.model.seed = *ov.seed;
    c.train.seed = *ov.seed;
  }
  if (ov.output_dir) c.output_dir = *ov.output_dir;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << hash64(buf.str());
  return hex.str();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

struct ManifestBuilder {
  json j;
  ManifestBuilder(const std::string& command, const ExperimentConfig& c) {
    j["tool"] = "sarckit";
    j["version"] = tool_version();
    j["command"] = command;
    j["schema_version"] = c.schema_version;
    j["subtask"] = to_string(c.subtask);
    j["seed"] = c.seed;
    j["inputs"] = json::array();
    j["outputs"] = json::array();
  }
  void input(const std::string& path) {
    j["inputs"].push_back({{"path", path}, {"digest", file_digest(path)}});
  }
  void output(const std::string& path) { j["outputs"].push_back(path); }
  void write(const fs::path& dir) {
    write_text((dir / "manifest.json").string(), j.dump(2) + "\n");
  }
};

// Exit-code policy shared by all commands: config problems are 2, input
// problems 3, augmentation failures 4, training failures 5.
template <typename Fn>
int guarded(Fn&& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ScheduleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAugment;
  } catch (const BalanceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitAugment;
  } catch (const TrainingError& e) {
    err << "error: " << e.what() << "\n";
    return kExitTrain;
  } catch (const Error& e) {
    // ParseError, ValidationError, IngestionError: bad inputs.
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

void require_subtask_fields(const Dataset& ds, Subtask subtask) {
  for (const auto& r : ds.records) {
    bool sarcastic = r.sarcastic.value_or(false);
    if (subtask == Subtask::b_en && sarcastic && !r.labels)
      throw ValidationError("record " + r.id +
                            " lacks the label vector required by subtask b");
    if ((subtask == Subtask::c_en || subtask == Subtask::c_ar) && sarcastic &&
        !r.rephrase)
      throw ValidationError("record " + r.id +
                            " lacks the rephrase required by subtask c");
  }
}

Dataset preprocess_dataset(Dataset ds, PreprocessType t, Language lang,
                           const Lexicons& lex) {
  for (auto& r : ds.records) {
    r.text = apply_pipeline(r.text, t, lang, lex);
    if (r.rephrase) r.rephrase = apply_pipeline(*r.rephrase, t, lang, lex);
  }
  return ds;
}

std::string default_path(const std::string& configured,
                         const fs::path& output_dir, const char* name) {
  if (!configured.empty()) return configured;
  return (output_dir / name).string();
}

TaskData load_task_data(const std::string& path, Subtask subtask,
                        std::uint64_t seed) {
  Language lang = subtask_language(subtask);
  if (subtask == Subtask::c_en || subtask == Subtask::c_ar) {
    // Pair files are accepted directly; tweet files are converted by
    // swapping half the (text, rephrase) pairs.
    Dataset ds = load_jsonl(path, lang);
    Dataset sarcastic_only;
    sarcastic_only.name = ds.name;
    sarcastic_only.language = lang;
    for (auto& r : ds.records)
      if (r.sarcastic.value_or(false)) sarcastic_only.records.push_back(r);
    return pair_swap_half(sarcastic_only, seed);
  }
  return load_jsonl(path, lang);
}

}  // namespace

// ---------------------------------------------------------------------------
// prepare

int run_prepare(const std::string& config_path, const CliOverrides& ov,
                std::ostream& out, std::ostream& err) {
  return guarded(
      [&]() {
        ExperimentConfig cfg = ExperimentConfig::from_file(config_path);
        apply_overrides(cfg, ov);
        if (cfg.train_csv.empty())
          throw ConfigError("config: data.train_csv is required for prepare");

        Language lang = subtask_language(cfg.subtask);
        LoadResult loaded = load_csv(cfg.train_csv, lang);
        require_subtask_fields(loaded.dataset, cfg.subtask);

        Lexicons lex = Lexicons::load(Lexicons::default_data_dir());
        Dataset processed = preprocess_dataset(loaded.dataset,
                                               cfg.preprocess_type, lang, lex);

        SplitSpec split;
        split.train_fraction = cfg.train_fraction;
        split.seed = SplitRng(cfg.seed).fork("split").seed();
        auto [train, val] = split_train_val(processed, split);

        fs::create_directories(cfg.output_dir);
        fs::path dir(cfg.output_dir);
        save_jsonl(train, (dir / "train.jsonl").string());
        save_jsonl(val, (dir / "val.jsonl").string());
        StatsSummary stats = dataset_stats(processed);
        write_text((dir / "stats.json").string(), stats.to_json() + "\n");

        ManifestBuilder manifest("prepare", cfg);
        manifest.input(cfg.train_csv);
        manifest.output((dir / "train.jsonl").string());
        manifest.output((dir / "val.jsonl").string());
        manifest.output((dir / "stats.json").string());
        manifest.j["dropped_rows"] = loaded.dropped_rows;
        manifest.j["split"] = {{"train", train.size()}, {"val", val.size()}};
        manifest.write(dir);

        if (!ov.quiet)
          out << "prepared " << train.size() << " train / " << val.size()
              << " val records (" << loaded.dropped_rows << " dropped) in "
              << cfg.output_dir << "\n";
        return kExitOk;
      },
      err);
}

// ---------------------------------------------------------------------------
// augment

int run_augment(const std::string& config_path, const CliOverrides& ov,
                std::ostream& out, std::ostream& err) {
  return guarded(
      [&]() {
        ExperimentConfig cfg = ExperimentConfig::from_file(config_path);
        apply_overrides(cfg, ov);
        Language lang = subtask_language(cfg.subtask);
        fs::path dir(cfg.output_dir);
        fs::create_directories(dir);
        std::string train_path = default_path(cfg.train_file, dir, "train.jsonl");
        Dataset train = load_jsonl(train_path, lang);

        ManifestBuilder manifest("augment", cfg);
        manifest.input(train_path);
        manifest.j["method"] = cfg.augment_method;

        if (cfg.augment_method == "schedule") {
          if (cfg.ns_pool.empty())
            throw ConfigError("config: data.ns_pool is required for the schedule");
          BiasSchedule spec;
          spec.base_pool = train;
          for (const auto& p : cfg.sarcastic_pools) {
            manifest.input(p);
            spec.sarcastic_pools.push_back(load_jsonl(p, lang));
          }
          manifest.input(cfg.ns_pool);
          spec.ns_pool = load_jsonl(cfg.ns_pool, lang);
          spec.increment = cfg.increment;
          spec.steps = cfg.steps;
          spec.seed = SplitRng(cfg.seed).fork("schedule").seed();
          auto steps = build_bias_schedule(spec);
          for (const auto& step : steps) {
            std::string path = (dir / (step.name + ".jsonl")).string();
            save_jsonl(step, path);
            manifest.output(path);
            if (!ov.quiet) {
              std::size_t s = 0;
              for (const auto& r : step.records)
                if (r.sarcastic.value_or(false)) ++s;
              out << step.name << ": " << step.size() << " records, " << s
                  << " sarcastic (" << round1(100.0 * static_cast<double>(s) /
                                              static_cast<double>(step.size()))
                  << "%)\n";
            }
          }
        } else if (cfg.augment_method == "substitution") {
          if (cfg.embeddings.empty())
            throw ConfigError(
                "config: data.embeddings is required for substitution");
          manifest.input(cfg.embeddings);
          EmbeddingTable table = EmbeddingTable::load(cfg.embeddings);
          Lexicons lex = Lexicons::load(Lexicons::default_data_dir());
          SubstitutionOptions opts;
          opts.copies_per_record = cfg.copies_per_record;
          opts.target_total = cfg.target_total;
          opts.seed = SplitRng(cfg.seed).fork("substitution").seed();
          opts.also_rephrase =
              cfg.subtask == Subtask::c_en || cfg.subtask == Subtask::c_ar;
          opts.stopwords =
              lang == Language::en ? &lex.stopwords_en : &lex.stopwords_ar;
          SubstitutionResult res = embedding_substitute(train, table, opts);
          std::string path = (dir / "augmented.jsonl").string();
          save_jsonl(res.dataset, path);
          manifest.output(path);
          manifest.j["generated"] = res.generated;
          manifest.j["skipped"] = res.skipped;
          if (!ov.quiet)
            out << "substitution: " << res.dataset.size() << " records ("
                << res.generated << " generated, " << res.skipped
                << " sources skipped)\n";
        } else if (cfg.augment_method == "repetition") {
          RepetitionOptions opts;
          opts.key = cfg.subtask == Subtask::b_en ? BalanceKey::labels
                                                  : BalanceKey::sarcastic_class;
          opts.seed = SplitRng(cfg.seed).fork("repetition").seed();
          opts.target_total = cfg.target_total;
          Dataset balanced = balance_by_repetition(train, opts);
          std::string path = (dir / "balanced.jsonl").string();
          save_jsonl(balanced, path);
          manifest.output(path);
          if (!ov.quiet)
            out << "repetition: " << balanced.size() << " records\n";
        } else if (cfg.augment_method == "heuristic") {
          auto counts = label_counts(train);
          HeuristicTargets targets =
              heuristic_targets(counts, counts[kSarcasm]);
          Dataset balanced = balance_by_heuristic(
              train, targets, SplitRng(cfg.seed).fork("heuristic").seed());
          std::string path = (dir / "balanced.jsonl").string();
          save_jsonl(balanced, path);
          manifest.output(path);
          if (!ov.quiet)
            out << "heuristic: " << balanced.size() << " records\n";
        } else {
          throw ConfigError("config: unknown augment method '" +
                            cfg.augment_method + "'");
        }
        manifest.write(dir);
        return kExitOk;
      },
      err);
}

// ---------------------------------------------------------------------------
// train-eval

int run_train_eval(const std::string& config_path, const CliOverrides& ov,
                   std::ostream& out, std::ostream& err) {
  return guarded(
      [&]() {
        ExperimentConfig cfg = ExperimentConfig::from_file(config_path);
        apply_overrides(cfg, ov);
        fs::path dir(cfg.output_dir);
        fs::create_directories(dir);
        std::string train_path = default_path(cfg.train_file, dir, "train.jsonl");
        std::string val_path = default_path(cfg.val_file, dir, "val.jsonl");
        std::string test_path = cfg.test_file.empty() ? val_path : cfg.test_file;
        std::uint64_t pair_seed = SplitRng(cfg.seed).fork("pairs").seed();

        ManifestBuilder manifest("train-eval", cfg);
        manifest.input(train_path);
        manifest.input(val_path);
        if (!cfg.test_file.empty()) manifest.input(test_path);

        if (cfg.has_sweep) {
          SweepSpec spec;
          spec.axis = cfg.sweep_axis;
          spec.values = cfg.sweep_values;
          spec.base = cfg.train;
          spec.model = cfg.model;
          std::map<std::string, DataBundle> data;
          if (cfg.sweep_axis == SweepAxis::dataset) {
            TaskData val = load_task_data(val_path, cfg.subtask, pair_seed);
            TaskData test = load_task_data(test_path, cfg.subtask, pair_seed);
            for (const auto& value : cfg.sweep_values) {
              manifest.input(value);
              data.emplace(value, DataBundle{load_task_data(value, cfg.subtask,
                                                            pair_seed),
                                             val, test});
            }
          } else {
            data.emplace(
                "default",
                DataBundle{load_task_data(train_path, cfg.subtask, pair_seed),
                           load_task_data(val_path, cfg.subtask, pair_seed),
                           load_task_data(test_path, cfg.subtask, pair_seed)});
          }
          SweepResult result = sweep(spec, data);
          std::string csv_path = (dir / "sweep.csv").string();
          write_text(csv_path, result.to_csv());
          manifest.output(csv_path);
          manifest.write(dir);
          if (!ov.quiet) {
            out << result.to_csv();
            out << "best: " << to_string(result.axis) << "="
                << result.rows[result.best_index].value << "\n";
          }
          return kExitOk;
        }

        TaskData train = load_task_data(train_path, cfg.subtask, pair_seed);
        TaskData val = load_task_data(val_path, cfg.subtask, pair_seed);
        TaskData test = load_task_data(test_path, cfg.subtask, pair_seed);
        TrainResult tr = train_model(cfg.model, train, val, cfg.train);
        MetricsReport val_report = evaluate(tr.model, tr.vocab, val);
        MetricsReport test_report = evaluate(tr.model, tr.vocab, test);
        val_report.preprocess_type = to_string(cfg.preprocess_type);
        test_report.preprocess_type = to_string(cfg.preprocess_type);

        ReportTable table = build_report_table(
            {{"val", val_report}, {"test", test_report}},
            std::string("subtask ") + to_string(cfg.subtask));
        std::string report_txt = (dir / "report.txt").string();
        std::string report_csv = (dir / "report.csv").string();
        std::string ckpt = (dir / "checkpoint.json").string();
        write_text(report_txt, table.to_text());
        write_text(report_csv, table.to_csv());
        write_text(ckpt, tr.model.to_checkpoint_json() + "\n");
        manifest.output(report_txt);
        manifest.output(report_csv);
        manifest.output(ckpt);
        manifest.j["best_epoch"] = tr.best_epoch;
        manifest.j["best_val"] = tr.best_val;
        manifest.write(dir);
        if (!ov.quiet) out << table.to_text();
        return kExitOk;
      },
      err);
}

// ---------------------------------------------------------------------------
// stats

int run_stats(const std::string& config_path, const CliOverrides& ov,
              std::ostream& out, std::ostream& err) {
  return guarded(
      [&]() {
        ExperimentConfig cfg = ExperimentConfig::from_file(config_path);
        apply_overrides(cfg, ov);
        Language lang = subtask_language(cfg.subtask);
        Dataset ds;
        if (!cfg.train_csv.empty()) {
          ds = load_csv(cfg.train_csv, lang).dataset;
        } else {
          fs::path dir(cfg.output_dir);
          ds = load_jsonl(default_path(cfg.train_file, dir, "train.jsonl"),
                          lang);
        }
        StatsSummary stats = dataset_stats(ds);
        fs::create_directories(cfg.output_dir);
        write_text((fs::path(cfg.output_dir) / "stats.json").string(),
                   stats.to_json() + "\n");
        if (!ov.quiet) out << stats.to_json() << "\n";
        return kExitOk;
      },
      err);
}

// ---------------------------------------------------------------------------
// reproduce-tables

namespace {

void print_schedule_table(std::ostream& out, const std::vector<Dataset>& steps,
                          const char* title) {
  out << title << "\n";
  out << "step  total  sarcastic  S%\n";
  for (const auto& step : steps) {
    std::size_t s = 0;
    for (const auto& r : step.records)
      if (r.sarcastic.value_or(false)) ++s;
    out << std::left << std::setw(6) << step.name << std::setw(7)
        << step.size() << std::setw(11) << s
        << round1(100.0 * static_cast<double>(s) /
                  static_cast<double>(step.size()))
        << "\n";
  }
  out << "\n";
}

}  // namespace

int run_reproduce_tables(const CliOverrides& ov, std::ostream& out,
                         std::ostream& err) {
  return guarded(
      [&]() {
        std::uint64_t seed = ov.seed.value_or(42);
        std::ostringstream report;

        // English schedule: source corpus of 3468 tweets at 25% sarcastic,
        // split 60/40, plus external sarcastic pools of 477, 120 and 1911
        // tweets and a non-sarcastic increment pool.
        {
          Dataset source = make_pool(
              {"en-train", Language::en, 3468, 867, false, seed});
          SplitSpec split;
          split.seed = seed;
          auto [train, val] = split_train_val(source, split);
          (void)val;
          BiasSchedule spec;
          spec.base_pool = train;
          spec.sarcastic_pools = {
              make_pool({"en-ext-a", Language::en, 477, 477, false, seed + 1}),
              make_pool({"en-ext-b", Language::en, 120, 120, false, seed + 2}),
              make_pool({"en-ext-c", Language::en, 1911, 1911, false, seed + 3})};
          spec.ns_pool =
              make_pool({"en-ns", Language::en, 1400, 0, false, seed + 4});
          spec.increment = 145;
          spec.steps = 10;
          spec.seed = seed;
          print_schedule_table(report, build_bias_schedule(spec),
                               "English class-bias schedule");
        }

        // Arabic schedule: 3102 tweets at 24% sarcastic, external sarcastic
        // pools of 2171 and 821, increment 202.
        {
          Dataset source = make_pool(
              {"ar-train", Language::ar, 3102, 745, false, seed + 10});
          SplitSpec split;
          split.seed = seed + 10;
          auto [train, val] = split_train_val(source, split);
          (void)val;
          BiasSchedule spec;
          spec.base_pool = train;
          spec.sarcastic_pools = {
              make_pool({"ar-ext-a", Language::ar, 2171, 2171, false, seed + 11}),
              make_pool({"ar-ext-b", Language::ar, 821, 821, false, seed + 12})};
          spec.ns_pool =
              make_pool({"ar-ns", Language::ar, 1900, 0, false, seed + 13});
          spec.increment = 202;
          spec.steps = 10;
          spec.seed = seed + 10;
          print_schedule_table(report, build_bias_schedule(spec),
                               "Arabic class-bias schedule");
        }

        // Heuristic repetition targets on the extended multi-label corpus
        // shape (1203 records).
        {
          std::array<std::size_t, kNumLabels> counts = {672, 268, 77,
                                                        14,  66,  106};
          HeuristicTargets targets = heuristic_targets(counts, counts[0]);
          report << "Heuristic per-label repetition targets\n";
          report << "label                 count  target\n";
          for (int l = 0; l < kNumLabels; ++l)
            report << std::left << std::setw(22) << label_name(l)
                   << std::setw(7) << counts[static_cast<std::size_t>(l)]
                   << targets.targets[static_cast<std::size_t>(l)] << "\n";
          report << "\n";

          Dataset pool = make_labeled_pool("ext-nb", Language::en, counts,
                                           seed + 20);
          RepetitionOptions opts;
          opts.key = BalanceKey::labels;
          opts.seed = seed + 20;
          opts.target_total = 4336;
          Dataset balanced = balance_by_repetition(pool, opts);
          auto after = label_counts(balanced);
          report << "Uniform repetition balance to 4336 records\n";
          report << "label                 count  share%\n";
          for (int l = 0; l < kNumLabels; ++l)
            report << std::left << std::setw(22) << label_name(l)
                   << std::setw(7) << after[static_cast<std::size_t>(l)]
                   << round1(100.0 *
                             static_cast<double>(
                                 after[static_cast<std::size_t>(l)]) /
                             static_cast<double>(balanced.size()))
                   << "\n";
          report << "total " << balanced.size() << "\n";
        }

        std::string text = report.str();
        std::string out_dir = ov.output_dir.value_or("out");
        fs::create_directories(out_dir);
        write_text((fs::path(out_dir) / "tables.txt").string(), text);
        if (!ov.quiet) out << text;
        return kExitOk;
      },
      err);
}

}  // namespace sarckit
