// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The eczcs Authors
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

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eczcs/channel_sim.hpp"
#include "eczcs/construct.hpp"
#include "eczcs/correlation.hpp"
#include "eczcs/error.hpp"
#include "eczcs/gbf.hpp"
#include "eczcs/gsm_training.hpp"
#include "eczcs/io.hpp"
#include "eczcs/verify.hpp"
#include "json.hpp"
#include "manifest.hpp"

#ifndef ECZCS_DEFAULT_FIXTURES
#define ECZCS_DEFAULT_FIXTURES "fixtures"
#endif

namespace fs = std::filesystem;
using eczcs::cli::RunManifest;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct UsageError : eczcs::Error {
  using eczcs::Error::Error;
};

fs::path fixture_dir() {
  if (const char* env = std::getenv("ECZCS_FIXTURES"); env && *env) return env;
  return ECZCS_DEFAULT_FIXTURES;
}

// A path that exists wins; otherwise try the fixture directory, with and
// without a .txt suffix.
fs::path resolve_input(const std::string& arg) {
  if (fs::exists(arg)) return arg;
  const fs::path dir = fixture_dir();
  for (const fs::path& p : {dir / arg, dir / (arg + ".txt")}) {
    if (fs::exists(p)) return p;
  }
  throw eczcs::ParseError("no such file or fixture: " + arg);
}

eczcs::Family load_input(const std::string& arg, RunManifest& manifest) {
  const fs::path path = resolve_input(arg);
  const std::string text = eczcs::read_text_file(path);
  manifest.add_input(path, text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return eczcs::family_from_json(text);
  return eczcs::parse_family_text(text);
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw eczcs::Error("cannot write " + path.string());
  out << contents;
}

struct OutputOptions {
  std::string out;
  std::string manifest;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "write the result here instead of stdout");
  cmd->add_option("--manifest", o.manifest,
                  "run manifest path (default <out>.manifest.json when --out is set)");
}

void emit(const OutputOptions& o, const std::string& body, const RunManifest& manifest) {
  if (o.out.empty()) {
    std::cout << body;
  } else {
    write_file(o.out, body);
  }
  std::string mpath = o.manifest;
  if (mpath.empty() && !o.out.empty()) mpath = o.out + ".manifest.json";
  if (!mpath.empty()) write_file(mpath, manifest.to_json() + "\n");
}

std::string family_title(const eczcs::Family& f, std::size_t zone) {
  std::ostringstream t;
  if (eczcs::is_optimal(f, zone)) t << "optimal ";
  if (f.q() == 2) {
    t << "binary ";
  } else {
    t << f.q() << "-ary ";
  }
  t << '(' << f.set_count() << ',' << f.set_size() << ',' << f.length() << ',' << zone
    << ")-E-CZCS";
  return t.str();
}

std::vector<std::vector<int>> parse_paths(const std::string& text) {
  std::vector<std::vector<int>> paths;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '/', ';');
  std::stringstream parts(normalized);
  std::string part;
  while (std::getline(parts, part, ';')) {
    std::vector<int> path;
    std::stringstream items(part);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        path.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw UsageError("bad --pi entry '" + item + "'");
      }
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v[i]);
    s += (i ? "," : "") + std::string(buf);
  }
  return s;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  std::string seed;
  std::size_t zone = 0;
  bool force = false;
  std::string preset;
  std::string spec_file;
  std::string pi;
  int v = 1;
  int q = 2;
  std::vector<int> eta;
  std::string format = "json";
  OutputOptions out;
};

eczcs::Theorem3Spec gbf_spec(const ConstructArgs& a, RunManifest& manifest) {
  int sources = !a.preset.empty() + !a.spec_file.empty() + !a.pi.empty();
  if (sources != 1) throw UsageError("give exactly one of --preset, --spec, --pi");
  if (!a.preset.empty()) {
    manifest.parameters["preset"] = a.preset;
    return eczcs::theorem3_preset(a.preset);
  }
  if (!a.spec_file.empty()) {
    const fs::path path = resolve_input(a.spec_file);
    const std::string text = eczcs::read_text_file(path);
    manifest.add_input(path, text);
    return eczcs::theorem3_spec_from_json(text);
  }
  eczcs::Theorem3Spec spec;
  spec.partition.paths = parse_paths(a.pi);
  for (const auto& p : spec.partition.paths) spec.partition.m += static_cast<int>(p.size());
  spec.q = a.q;
  spec.v = a.v;
  spec.eta = a.eta;
  return spec;
}

int run_construct(const ConstructArgs& a) {
  RunManifest manifest;
  manifest.command = "construct " + a.kind;
  manifest.parameters["format"] = a.format;

  std::optional<eczcs::Family> family;
  std::size_t zone = 0;
  eczcs::Verdict verdict;
  std::string cls = "eczcs";

  if (a.kind == "theorem2") {
    if (a.seed.empty()) throw UsageError("--seed is required");
    manifest.parameters["seed"] = a.seed;
    manifest.parameters["force"] = a.force ? "true" : "false";
    eczcs::Family seed = [&] {
      for (const auto* e : eczcs::find_seeds()) {
        if (e->id == a.seed) return e->family;
      }
      return load_input(a.seed, manifest);
    }();
    std::size_t seed_zone = a.zone;
    if (seed_zone == 0) {
      for (const auto* e : eczcs::find_seeds()) {
        if (e->id == a.seed) seed_zone = e->zone;
      }
    }
    if (seed_zone == 0) throw UsageError("--Z is required for a seed file");
    manifest.parameters["Z"] = std::to_string(seed_zone);
    auto result = eczcs::theorem2_construct(seed, seed_zone, a.force);
    if (!result.seed_verdict.passed()) {
      std::cerr << "warning: seed fails its declared zone\n";
    }
    zone = result.zone;
    family = std::move(result.family);
    verdict = eczcs::check_eczcs(*family, zone);
  } else {
    const eczcs::Theorem3Spec spec = gbf_spec(a, manifest);
    manifest.parameters["spec"] = eczcs::theorem3_spec_to_json(spec);
    if (a.kind == "theorem3") {
      auto result = eczcs::theorem3_construct(spec);
      zone = result.zone;
      family = std::move(result.family);
      verdict = eczcs::check_eczcs(*family, zone);
    } else {
      family = eczcs::lemma2_ccc(spec.partition, spec.q, spec.eta);
      zone = family->length();
      cls = "ccc";
      verdict = eczcs::check_ccc(*family);
    }
  }

  std::string body;
  if (a.format == "text") {
    std::string title;
    if (cls == "ccc") {
      title = "(" + std::to_string(family->set_count()) + "," +
              std::to_string(family->length()) + ")-CCC";
    } else {
      title = family_title(*family, zone);
    }
    body = eczcs::format_family_text(*family, title);
  } else {
    json doc = {{"class", cls},
                {"zone", zone},
                {"family", json::parse(eczcs::family_to_json(*family))},
                {"verdict", json::parse(eczcs::verdict_to_json(verdict))},
                {"manifest", json::parse(manifest.to_json())}};
    if (cls == "eczcs") doc["optimal"] = eczcs::is_optimal(*family, zone);
    body = doc.dump(2) + "\n";
  }
  emit(a.out, body, manifest);
  if (!verdict.passed()) {
    std::cerr << "constructed family fails verification\n";
    return kExitFail;
  }
  return kExitPass;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string file;
  std::string cls = "eczcs";
  std::size_t zone = 0;
  bool measure = false;
  OutputOptions out;
};

int run_verify(const VerifyArgs& a) {
  RunManifest manifest;
  manifest.command = "verify";
  manifest.parameters["class"] = a.cls;
  manifest.parameters["Z"] = std::to_string(a.zone);
  const eczcs::Family f = load_input(a.file, manifest);

  const bool needs_zone = a.cls != "mocs" && a.cls != "ccc";
  if (needs_zone && a.zone == 0) throw UsageError("--Z is required for class " + a.cls);

  eczcs::Verdict verdict;
  if (a.cls == "eczcs") {
    verdict = eczcs::check_eczcs(f, a.zone);
  } else if (a.cls == "szccs") {
    verdict = eczcs::check_szccs(f, a.zone);
  } else if (a.cls == "zccs") {
    verdict = eczcs::check_zccs(f, a.zone);
  } else if (a.cls == "mocs") {
    verdict = eczcs::check_mocs(f);
  } else if (a.cls == "ccc") {
    verdict = eczcs::check_ccc(f);
  } else {
    verdict = eczcs::check_zcz_set(eczcs::flatten_to_zcz(f), a.zone);
  }

  json doc = json::parse(eczcs::verdict_to_json(verdict));
  doc["class"] = a.cls;
  doc["M"] = f.set_count();
  doc["N"] = f.set_size();
  doc["L"] = f.length();
  doc["q"] = f.q();
  if (needs_zone) doc["Z"] = a.zone;
  if (a.cls == "eczcs") {
    doc["bound"] = eczcs::eczcs_bound(f.set_count(), f.set_size(), f.length(), f.q());
    doc["optimal"] = verdict.passed() && eczcs::is_optimal(f, a.zone);
  }
  if (a.measure) {
    const auto w = eczcs::measure_zcz_width(f);
    doc["measured_zone"] = w ? json(*w) : json(nullptr);
  }
  emit(a.out, doc.dump(2) + "\n", manifest);
  return verdict.passed() ? kExitPass : kExitFail;
}

// ------------------------------------------------------------------ profile

struct ProfileArgs {
  std::string file;
  std::string kind = "set";
  std::vector<std::size_t> pair{0, 0};
  std::size_t member = 0;
  std::optional<int> from;
  std::optional<int> to;
  OutputOptions out;
};

int run_profile(const ProfileArgs& a) {
  RunManifest manifest;
  manifest.command = "profile";
  manifest.parameters["kind"] = a.kind;
  manifest.parameters["pair"] = std::to_string(a.pair[0]) + "," + std::to_string(a.pair[1]);
  manifest.parameters["member"] = std::to_string(a.member);
  const eczcs::Family f = load_input(a.file, manifest);
  if (a.pair.size() != 2) throw UsageError("--pair takes two set indices");
  for (std::size_t i : a.pair) {
    if (i >= f.set_count()) throw UsageError("set index out of range");
  }
  const auto& s0 = f[a.pair[0]];
  const auto& s1 = f[a.pair[1]];

  eczcs::CorrelationProfile p{};
  if (a.kind == "set" || a.kind == "cross") {
    p = eczcs::profile(a.kind == "set" ? eczcs::CorrelationKind::kSetSum
                                       : eczcs::CorrelationKind::kCrossChannel,
                       s0, s1);
  } else {
    if (a.member >= f.set_size()) throw UsageError("member index out of range");
    p = eczcs::profile(a.kind == "aperiodic" ? eczcs::CorrelationKind::kAperiodic
                                             : eczcs::CorrelationKind::kPeriodic,
                       s0[a.member], s1[a.member]);
  }
  if (a.from || a.to) {
    const int lo = a.from.value_or(p.first_shift);
    const int hi = a.to.value_or(p.last_shift());
    manifest.parameters["from"] = std::to_string(lo);
    manifest.parameters["to"] = std::to_string(hi);
    p = eczcs::restrict_profile(p, lo, hi);
  }
  emit(a.out, eczcs::profile_to_csv(p), manifest);
  return kExitPass;
}

// -------------------------------------------------------------------- train

struct TrainArgs {
  std::string file;
  int nt = 4;
  int na = 2;
  int lambda = 0;
  std::string format = "csv";
  std::string verdict_path;
  OutputOptions out;
};

int run_train(const TrainArgs& a) {
  RunManifest manifest;
  manifest.command = "train";
  manifest.parameters["Nt"] = std::to_string(a.nt);
  manifest.parameters["Na"] = std::to_string(a.na);
  manifest.parameters["lambda"] = std::to_string(a.lambda);
  manifest.parameters["format"] = a.format;
  const eczcs::Family f = load_input(a.file, manifest);
  const eczcs::GsmConfig cfg{a.nt, a.na, 2};
  const auto psi = eczcs::build_training_matrix(f, cfg, fs::path(a.file).stem().string());
  const auto verdict = eczcs::check_design_criterion(psi, a.lambda);

  const std::string body = a.format == "json" ? eczcs::training_matrix_to_json(psi) + "\n"
                                              : eczcs::training_matrix_to_csv(psi);
  emit(a.out, body, manifest);

  json doc = json::parse(eczcs::verdict_to_json(verdict));
  doc["lambda"] = a.lambda;
  doc["gram_scaled_identity"] = eczcs::gram_is_scaled_identity(psi, a.lambda);
  if (a.verdict_path.empty()) {
    std::cerr << doc.dump() << '\n';
  } else {
    write_file(a.verdict_path, doc.dump(2) + "\n");
  }
  return verdict.passed() ? kExitPass : kExitFail;
}

// ----------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string config;
  std::string family;
  std::string baseline;
  int nt = 4;
  int na = 2;
  std::vector<int> lambdas{9};
  std::vector<double> ebn0{16.0};
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool noiseless = false;
  OutputOptions out;
};

// Values from --config fill anything not given on the command line.
void apply_config(SimulateArgs& a, const CLI::App& cmd) {
  if (a.config.empty()) return;
  json doc;
  try {
    doc = json::parse(eczcs::read_text_file(resolve_input(a.config)));
  } catch (const json::exception& e) {
    throw eczcs::ParseError(std::string("bad config: ") + e.what());
  }
  auto given = [&](const char* flag) { return cmd.get_option(flag)->count() > 0; };
  try {
    if (doc.contains("family") && !given("--family")) a.family = doc["family"].get<std::string>();
    if (doc.contains("baseline") && !given("--baseline")) {
      a.baseline = doc["baseline"].get<std::string>();
    }
    if (doc.contains("Nt") && !given("--nt")) a.nt = doc["Nt"].get<int>();
    if (doc.contains("Na") && !given("--na")) a.na = doc["Na"].get<int>();
    if (doc.contains("lambda") && !given("--lambda")) {
      a.lambdas = doc["lambda"].get<std::vector<int>>();
    }
    if (doc.contains("ebn0") && !given("--ebn0")) a.ebn0 = doc["ebn0"].get<std::vector<double>>();
    if (doc.contains("trials") && !given("--trials")) a.trials = doc["trials"].get<std::size_t>();
    if (doc.contains("seed") && !given("--seed")) a.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("threads") && !given("--threads")) a.threads = doc["threads"].get<unsigned>();
    if (doc.contains("noiseless") && !given("--noiseless")) a.noiseless = doc["noiseless"].get<bool>();
  } catch (const json::exception& e) {
    throw eczcs::ParseError(std::string("bad config: ") + e.what());
  }
}

int run_simulate(SimulateArgs a, const CLI::App& cmd) {
  apply_config(a, cmd);
  RunManifest manifest;
  manifest.command = "simulate";
  manifest.seed = a.seed;
  if (!a.config.empty()) {
    const fs::path path = resolve_input(a.config);
    manifest.add_input(path, eczcs::read_text_file(path));
  }

  const eczcs::GsmConfig cfg{a.nt, a.na, 2};
  std::optional<eczcs::TrainingMatrix> psi;
  if (a.baseline.rfind("zccs:", 0) == 0) {
    const auto& entry = eczcs::seed_by_id(a.baseline.substr(5));
    psi = eczcs::baseline_zccs(entry.family, cfg, entry.id);
  } else {
    if (a.family.empty()) throw UsageError("--family is required");
    const eczcs::Family f = load_input(a.family, manifest);
    if (a.baseline.empty()) {
      psi = eczcs::build_training_matrix(f, cfg, fs::path(a.family).stem().string());
    } else if (a.baseline == "random") {
      psi = eczcs::baseline_random_binary(cfg, f.set_size(), f.length(),
                                          eczcs::trial_seed(a.seed, ~0ULL, 0));
    } else if (a.baseline == "zadoff-chu") {
      psi = eczcs::baseline_zadoff_chu(cfg, f.set_size(), f.length());
    } else {
      throw UsageError("unknown baseline '" + a.baseline + "'");
    }
  }

  eczcs::SimConfig sim;
  sim.ebn0_db = a.ebn0;
  sim.lambdas = a.lambdas;
  sim.trials = a.trials;
  sim.master_seed = a.seed;
  sim.noiseless = a.noiseless;
  sim.threads = a.threads;

  manifest.parameters["family"] = a.family;
  manifest.parameters["baseline"] = a.baseline;
  manifest.parameters["Nt"] = std::to_string(a.nt);
  manifest.parameters["Na"] = std::to_string(a.na);
  manifest.parameters["lambda"] = join(a.lambdas);
  manifest.parameters["ebn0"] = join(a.ebn0);
  manifest.parameters["trials"] = std::to_string(a.trials);
  manifest.parameters["noiseless"] = a.noiseless ? "true" : "false";
  manifest.parameters["matrix"] = psi->source_id();

  const auto report = eczcs::monte_carlo_mse(*psi, sim);
  emit(a.out, eczcs::mse_report_to_csv(report), manifest);
  bool failed = false;
  for (const auto& p : report.points) {
    if (p.failed) {
      std::cerr << "lambda=" << p.lambda << ": " << p.message << '\n';
      failed = true;
    }
  }
  return failed ? kExitFail : kExitPass;
}

// -------------------------------------------------------------------- seeds

int run_seeds(const std::string& filter, bool show) {
  if (show) {
    const auto& e = eczcs::seed_by_id(filter);
    std::string cls(eczcs::seed_class_name(e.declared));
    for (char& c : cls) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    const auto& f = e.family;
    std::ostringstream title;
    title << (f.q() == 2 ? "binary " : std::to_string(f.q()) + "-ary ") << '(' << f.set_count()
          << ',' << f.set_size() << ',' << f.length() << ',' << e.zone << ")-" << cls;
    std::cout << eczcs::format_family_text(f, title.str());
    return kExitPass;
  }
  for (const auto* e : eczcs::find_seeds(filter)) {
    std::cout << e->id << '\t' << eczcs::seed_class_name(e->declared) << "\t("
              << e->family.set_count() << ',' << e->family.set_size() << ','
              << e->family.length() << ',' << e->zone << ")\t" << e->note << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and simulate cross Z-complementary sequence sets"};
  app.set_version_flag("--version", ECZCS_VERSION_STRING);
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "build a family");
  construct->require_subcommand(1);
  auto add_construct = [&](const char* name, const char* help) {
    auto* c = construct->add_subcommand(name, help);
    c->add_option("--format", construct_args.format)
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    add_output_options(c, construct_args.out);
    c->callback([&construct_args, name] { construct_args.kind = name; });
    return c;
  };
  auto* t2 = add_construct("theorem2", "interleave a ZCCS or MOCS seed");
  t2->add_option("--seed", construct_args.seed, "catalog id, fixture name or file")->required();
  t2->add_option("--Z", construct_args.zone, "seed zone (defaults to the catalog value)");
  t2->add_flag("--force", construct_args.force, "construct even if the seed fails its checks");
  for (const char* name : {"theorem3", "lemma2"}) {
    auto* c = add_construct(name, name == std::string("theorem3")
                                      ? "generalized Boolean function family"
                                      : "complete complementary code");
    c->add_option("--preset", construct_args.preset)
        ->check(CLI::IsMember(eczcs::theorem3_preset_names()));
    c->add_option("--spec", construct_args.spec_file, "JSON {m,q,k,v,U,pi,eta}");
    c->add_option("--pi", construct_args.pi, "paths, e.g. \"4,1,2;5,3\" or 4,1,2/5,3");
    c->add_option("--v", construct_args.v)->capture_default_str();
    c->add_option("--q", construct_args.q)->capture_default_str();
    c->add_option("--eta", construct_args.eta)->delimiter(',');
  }

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a family against a class");
  verify->add_option("file", verify_args.file)->required();
  verify->add_option("--class", verify_args.cls)
      ->check(CLI::IsMember({"eczcs", "szccs", "zccs", "mocs", "ccc", "zcz"}))
      ->capture_default_str();
  verify->add_option("--Z", verify_args.zone, "zone width");
  verify->add_flag("--measure", verify_args.measure, "also report the widest passing zone");
  add_output_options(verify, verify_args.out);

  ProfileArgs profile_args;
  int from = 0;
  int to = 0;
  auto* prof = app.add_subcommand("profile", "print a correlation profile as CSV");
  prof->add_option("file", profile_args.file)->required();
  prof->add_option("--kind", profile_args.kind)
      ->check(CLI::IsMember({"set", "cross", "aperiodic", "periodic"}))
      ->capture_default_str();
  prof->add_option("--pair", profile_args.pair, "set indices a,b")->delimiter(',')->expected(2);
  prof->add_option("--member", profile_args.member, "member index for sequence kinds");
  auto* from_opt = prof->add_option("--from", from);
  auto* to_opt = prof->add_option("--to", to);
  add_output_options(prof, profile_args.out);

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "build a GSM training matrix");
  train->add_option("file", train_args.file)->required();
  train->add_option("--nt", train_args.nt)->capture_default_str();
  train->add_option("--na", train_args.na)->capture_default_str();
  train->add_option("--lambda", train_args.lambda)->required();
  train->add_option("--format", train_args.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  train->add_option("--verdict", train_args.verdict_path, "verdict JSON path (default stderr)");
  add_output_options(train, train_args.out);

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo LS channel estimation MSE");
  simulate->add_option("--config", sim_args.config, "JSON with any of the flags below");
  simulate->add_option("--family", sim_args.family);
  simulate->add_option("--baseline", sim_args.baseline, "random, zadoff-chu or zccs:<seed id>");
  simulate->add_option("--nt", sim_args.nt);
  simulate->add_option("--na", sim_args.na);
  simulate->add_option("--lambda", sim_args.lambdas)->delimiter(',');
  simulate->add_option("--ebn0", sim_args.ebn0)->delimiter(',');
  simulate->add_option("--trials", sim_args.trials);
  simulate->add_option("--seed", sim_args.seed, "master seed");
  simulate->add_option("--threads", sim_args.threads);
  simulate->add_flag("--noiseless", sim_args.noiseless);
  add_output_options(simulate, sim_args.out);

  std::string seed_filter;
  auto* seeds = app.add_subcommand("seeds", "list the seed catalog");
  bool seed_show = false;
  seeds->add_option("filter", seed_filter, "substring of the id, or the exact id with --show");
  seeds->add_flag("--show", seed_show, "print the family text of one entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (construct->parsed()) return run_construct(construct_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (prof->parsed()) {
      if (from_opt->count()) profile_args.from = from;
      if (to_opt->count()) profile_args.to = to;
      return run_profile(profile_args);
    }
    if (train->parsed()) return run_train(train_args);
    if (simulate->parsed()) return run_simulate(sim_args, *simulate);
    if (seeds->parsed()) return run_seeds(seed_filter, seed_show);
  } catch (const eczcs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
