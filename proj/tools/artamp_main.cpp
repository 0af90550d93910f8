// Copyright 2026  The artamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// artamp: command-line front end for the artifact amplification pipeline.
//
// Exit status: 0 on success, 1 on failure (including partial failure of a
// batch), 2 on invalid arguments or configuration.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artamp/artamp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int status;
};

int ExitCodeFor(int status) {
  switch (status) {
    case ARTAMP_OK:
      return kExitOk;
    case ARTAMP_E_INVALID_ARGUMENT:
    case ARTAMP_E_CONFIG:
    case ARTAMP_E_UNKNOWN_KEY:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

void Check(int status) {
  if (status == ARTAMP_OK) return;
  std::cerr << "artamp: " << artamp_status_name(status) << ": "
            << artamp_last_error() << "\n";
  throw CliError{status};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using WaveformPtr =
    std::unique_ptr<artamp_waveform,
                    Deleter<artamp_waveform, artamp_waveform_free>>;
using ConfigPtr =
    std::unique_ptr<artamp_config, Deleter<artamp_config, artamp_config_free>>;
using ManifestPtr =
    std::unique_ptr<artamp_manifest,
                    Deleter<artamp_manifest, artamp_manifest_free>>;
using ModelPtr =
    std::unique_ptr<artamp_model, Deleter<artamp_model, artamp_model_free>>;

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { artamp_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

WaveformPtr ReadWav(const std::string& path) {
  artamp_waveform* w = nullptr;
  Check(artamp_wav_read(path.c_str(), &w));
  return WaveformPtr(w);
}

artamp_encoding ParseEncoding(const std::string& name) {
  if (name == "pcm16") return ARTAMP_PCM16;
  if (name == "float32") return ARTAMP_FLOAT32;
  std::cerr << "artamp: unknown encoding '" << name << "'\n";
  throw CliError{ARTAMP_E_INVALID_ARGUMENT};
}

void WriteWav(const artamp_waveform* w, const std::string& path,
              const std::string& encoding) {
  Check(artamp_wav_write(w, path.c_str(), ParseEncoding(encoding)));
}

void WriteText(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "artamp: cannot write " << path << "\n";
    throw CliError{ARTAMP_E_UNWRITABLE_PATH};
  }
}

struct ManifestArgs {
  std::string path;
  std::string format = "simple_tsv";
  std::string audio_root;

  void Add(CLI::App* app, const std::string& flag, const std::string& what) {
    app->add_option(flag, path, what)->required();
    app->add_option("--format", format,
                    "simple_tsv or asvspoof_protocol")
        ->capture_default_str();
    app->add_option("--audio-root", audio_root,
                    "audio directory for protocol manifests");
  }
};

ManifestPtr LoadManifest(const std::string& path, const ManifestArgs& args) {
  artamp_manifest* m = nullptr;
  Check(artamp_manifest_load(
      path.c_str(), args.format.c_str(),
      args.audio_root.empty() ? nullptr : args.audio_root.c_str(), &m));
  return ManifestPtr(m);
}

struct ConfigArgs {
  std::string path;
  std::vector<std::string> overrides;
  int parallelism = 0;

  void Add(CLI::App* app) {
    app->add_option("--config", path, "pipeline config file");
    app->add_option("--set", overrides, "override a config key (key=value)");
    app->add_option("-j,--parallelism", parallelism, "worker threads")
        ->check(CLI::PositiveNumber);
  }
};

ConfigPtr LoadConfig(const ConfigArgs& args) {
  artamp_config* c = nullptr;
  if (args.path.empty())
    Check(artamp_config_create(&c));
  else
    Check(artamp_config_load(args.path.c_str(), &c));
  ConfigPtr config(c);
  for (const auto& kv : args.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "artamp: --set expects key=value, got '" << kv << "'\n";
      throw CliError{ARTAMP_E_CONFIG};
    }
    Check(artamp_config_set(config.get(), kv.substr(0, eq).c_str(),
                            kv.substr(eq + 1).c_str()));
  }
  if (args.parallelism > 0)
    Check(artamp_config_set(config.get(), "parallelism",
                            std::to_string(args.parallelism).c_str()));
  Check(artamp_config_validate(config.get()));
  return config;
}

void SetupGenNoise(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("gen-noise", "Generate coloured noise");
  auto color = std::make_shared<std::string>("white");
  auto seconds = std::make_shared<double>(4.0);
  auto rate = std::make_shared<int>(16000);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto encoding = std::make_shared<std::string>("float32");
  auto out = std::make_shared<std::string>();
  app->add_option("--color", *color, "white, pink or violet")
      ->capture_default_str();
  app->add_option("--seconds", *seconds, "duration")->capture_default_str();
  app->add_option("--rate", *rate, "sample rate")->capture_default_str();
  app->add_option("--seed", *seed, "random seed")->capture_default_str();
  app->add_option("--encoding", *encoding, "pcm16 or float32")
      ->capture_default_str();
  app->add_option("-o,--output", *out, "output WAV")->required();
  app->callback([=] {
    *run = [=] {
      if (!(*seconds > 0) || *rate <= 0) {
        std::cerr << "artamp: --seconds and --rate must be positive\n";
        return kExitUsage;
      }
      const auto length = static_cast<size_t>(*seconds * *rate + 0.5);
      artamp_waveform* w = nullptr;
      Check(artamp_noise_generate(color->c_str(), length, *rate, *seed, &w));
      WaveformPtr noise(w);
      WriteWav(noise.get(), *out, *encoding);
      return kExitOk;
    };
  });
}

void SetupMix(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("mix", "Add noise to speech at a target SNR");
  auto clean = std::make_shared<std::string>();
  auto noise = std::make_shared<std::string>();
  auto color = std::make_shared<std::string>();
  auto seed = std::make_shared<std::uint64_t>(0);
  auto snr = std::make_shared<double>(0.0);
  auto encoding = std::make_shared<std::string>("float32");
  auto out = std::make_shared<std::string>();
  app->add_option("-i,--input", *clean, "clean speech WAV")->required();
  auto* noise_opt = app->add_option("--noise", *noise, "noise WAV");
  app->add_option("--color", *color, "generate noise of this colour instead")
      ->excludes(noise_opt);
  app->add_option("--seed", *seed, "seed for generated noise");
  app->add_option("--snr-db", *snr, "target SNR")->capture_default_str();
  app->add_option("--encoding", *encoding, "pcm16 or float32")
      ->capture_default_str();
  app->add_option("-o,--output", *out, "output WAV")->required();
  app->callback([=] {
    *run = [=] {
      auto x = ReadWav(*clean);
      WaveformPtr n;
      if (!noise->empty()) {
        n = ReadWav(*noise);
      } else {
        artamp_waveform* w = nullptr;
        Check(artamp_noise_generate(color->empty() ? "white" : color->c_str(),
                                    artamp_waveform_length(x.get()),
                                    artamp_waveform_sample_rate(x.get()),
                                    *seed, &w));
        n.reset(w);
      }
      artamp_waveform* y = nullptr;
      Check(artamp_add_noise(x.get(), n.get(), *snr, &y));
      WaveformPtr mixed(y);
      WriteWav(mixed.get(), *out, *encoding);
      return kExitOk;
    };
  });
}

void SetupExtract(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand(
      "extract", "Extract the residual of a signal against its enhanced version");
  auto input = std::make_shared<std::string>();
  auto enhanced = std::make_shared<std::string>();
  auto mode = std::make_shared<std::string>("projection");
  auto out = std::make_shared<std::string>();
  app->add_option("-i,--input", *input, "raw WAV")->required();
  app->add_option("--enhanced", *enhanced, "enhanced WAV")->required();
  app->add_option("--mode", *mode, "projection or naive")
      ->capture_default_str();
  app->add_option("-o,--output", *out, "residual WAV (float32)")->required();
  app->callback([=] {
    *run = [=] {
      auto x = ReadWav(*input);
      auto x_hat = ReadWav(*enhanced);
      artamp_waveform* r = nullptr;
      double weight = 0.0;
      Check(artamp_extract_residual(x.get(), x_hat.get(), mode->c_str(), &r,
                                    &weight));
      WaveformPtr residual(r);
      WriteWav(residual.get(), *out, "float32");
      std::cout << "projection_weight " << weight << "\n";
      return kExitOk;
    };
  });
}

void SetupAmplify(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("amplify", "Add a scaled residual back");
  auto input = std::make_shared<std::string>();
  auto residual = std::make_shared<std::string>();
  auto alpha = std::make_shared<double>(1.4);
  auto encoding = std::make_shared<std::string>("float32");
  auto out = std::make_shared<std::string>();
  app->add_option("-i,--input", *input, "raw WAV")->required();
  app->add_option("--residual", *residual, "residual WAV")->required();
  app->add_option("--alpha", *alpha, "amplification factor")
      ->capture_default_str();
  app->add_option("--encoding", *encoding, "pcm16 or float32")
      ->capture_default_str();
  app->add_option("-o,--output", *out, "output WAV")->required();
  app->callback([=] {
    *run = [=] {
      auto x = ReadWav(*input);
      auto r = ReadWav(*residual);
      artamp_waveform* y = nullptr;
      Check(artamp_amplify(x.get(), r.get(), *alpha, &y));
      WaveformPtr amplified(y);
      WriteWav(amplified.get(), *out, *encoding);
      return kExitOk;
    };
  });
}

void SetupProcess(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("process", "Run the pipeline over a manifest");
  auto config = std::make_shared<ConfigArgs>();
  auto manifest = std::make_shared<ManifestArgs>();
  auto out_dir = std::make_shared<std::string>();
  config->Add(app);
  manifest->Add(app, "--manifest", "input manifest");
  app->add_option("-o,--out-dir", *out_dir, "output directory")->required();
  app->callback([=] {
    *run = [=] {
      auto cfg = LoadConfig(*config);
      auto m = LoadManifest(manifest->path, *manifest);
      if (artamp_manifest_size(m.get()) == 0)
        std::cerr << "artamp: warning: manifest " << manifest->path
                  << " is empty\n";
      size_t processed = 0, failed = 0;
      Check(artamp_run_pipeline(cfg.get(), m.get(), out_dir->c_str(),
                                &processed, &failed));
      std::cerr << "processed " << processed << ", failed " << failed << "\n";
      return failed ? kExitFailure : kExitOk;
    };
  });
}

void SetupFit(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("fit", "Train the detector on a manifest");
  auto manifest = std::make_shared<ManifestArgs>();
  auto model = std::make_shared<std::string>();
  auto parallelism = std::make_shared<int>(1);
  manifest->Add(app, "--manifest", "training manifest");
  app->add_option("-m,--model", *model, "output model file")->required();
  app->add_option("-j,--parallelism", *parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  app->callback([=] {
    *run = [=] {
      auto m = LoadManifest(manifest->path, *manifest);
      artamp_model* p = nullptr;
      Check(artamp_model_fit(m.get(), static_cast<size_t>(*parallelism), &p));
      ModelPtr fitted(p);
      Check(artamp_model_save(fitted.get(), model->c_str()));
      return kExitOk;
    };
  });
}

void SetupScore(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("score", "Score a manifest with a model");
  auto manifest = std::make_shared<ManifestArgs>();
  auto model = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  auto parallelism = std::make_shared<int>(1);
  manifest->Add(app, "--manifest", "manifest to score");
  app->add_option("-m,--model", *model, "model file")->required();
  app->add_option("-o,--output", *out, "score file")->required();
  app->add_option("-j,--parallelism", *parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  app->callback([=] {
    *run = [=] {
      artamp_model* p = nullptr;
      Check(artamp_model_load(model->c_str(), &p));
      ModelPtr loaded(p);
      auto m = LoadManifest(manifest->path, *manifest);
      if (artamp_manifest_size(m.get()) == 0)
        std::cerr << "artamp: warning: manifest " << manifest->path
                  << " is empty\n";
      Check(artamp_model_score(loaded.get(), m.get(),
                               static_cast<size_t>(*parallelism),
                               out->c_str()));
      return kExitOk;
    };
  });
}

void SetupSweep(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand(
      "sweep", "Evaluate the detector over values of one config axis");
  auto config = std::make_shared<ConfigArgs>();
  auto train = std::make_shared<ManifestArgs>();
  auto eval = std::make_shared<std::string>();
  auto axis = std::make_shared<std::string>();
  auto values = std::make_shared<std::vector<std::string>>();
  auto tdcf = std::make_shared<std::string>(ARTAMP_DEFAULT_TDCF);
  auto out = std::make_shared<std::string>("-");
  config->Add(app);
  train->Add(app, "--train", "training manifest");
  app->add_option("--eval", *eval, "evaluation manifest")->required();
  app->add_option("--axis", *axis,
                  "alpha, snr_db, noise_color, extraction_mode or "
                  "skip_noise_addition")
      ->required();
  app->add_option("--values", *values, "axis values")
      ->required()
      ->delimiter(',')
      ->allow_extra_args();
  app->add_option("--tdcf", *tdcf, "t-DCF parameter file")
      ->capture_default_str();
  app->add_option("-o,--output", *out, "CSV output ('-' for stdout)");
  app->callback([=] {
    *run = [=] {
      auto cfg = LoadConfig(*config);
      auto tr = LoadManifest(train->path, *train);
      auto ev = LoadManifest(*eval, *train);
      std::vector<const char*> v;
      for (const auto& s : *values) v.push_back(s.c_str());
      OwnedString csv;
      size_t failed = 0;
      Check(artamp_sweep(cfg.get(), tr.get(), ev.get(), axis->c_str(),
                         v.data(), v.size(), tdcf->c_str(), &csv.s, &failed));
      WriteText(csv.str(), *out);
      if (failed) std::cerr << "artamp: " << failed << " sweep cell(s) failed\n";
      return failed ? kExitFailure : kExitOk;
    };
  });
}

void SetupSynth(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("synth", "Write a synthetic labelled corpus");
  auto spec = std::make_shared<artamp_synth_spec>();
  artamp_synth_spec_default(spec.get());
  auto kind = std::make_shared<std::string>(spec->artifact_kind);
  auto prefix = std::make_shared<std::string>(spec->id_prefix);
  auto out_dir = std::make_shared<std::string>();
  app->add_option("-o,--out-dir", *out_dir, "output directory")->required();
  app->add_option("--n-bonafide", spec->n_bonafide)->capture_default_str();
  app->add_option("--n-spoof", spec->n_spoof)->capture_default_str();
  app->add_option("--duration", spec->duration_s, "seconds per item")
      ->capture_default_str();
  app->add_option("--rate", spec->sample_rate)->capture_default_str();
  app->add_option("--artifact", *kind,
                  "comb_filter, quantization or band_notch")
      ->capture_default_str();
  app->add_option("--strength", spec->artifact_strength)->capture_default_str();
  app->add_option("--seed", spec->seed)->capture_default_str();
  app->add_option("--comb-delay", spec->comb_delay, "samples")
      ->capture_default_str();
  app->add_option("--prefix", *prefix, "utterance id prefix")
      ->capture_default_str();
  app->callback([=] {
    *run = [=] {
      spec->artifact_kind = kind->c_str();
      spec->id_prefix = prefix->c_str();
      size_t n = 0;
      Check(artamp_synth_corpus(spec.get(), out_dir->c_str(), &n));
      std::cerr << "wrote " << n << " items to " << *out_dir << "\n";
      return kExitOk;
    };
  });
}

void SetupReport(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("report", "EER and min t-DCF of score files");
  auto scores = std::make_shared<std::vector<std::string>>();
  auto manifest = std::make_shared<ManifestArgs>();
  auto tdcf = std::make_shared<std::string>(ARTAMP_DEFAULT_TDCF);
  auto csv = std::make_shared<bool>(false);
  auto by_attack = std::make_shared<bool>(false);
  auto force = std::make_shared<bool>(false);
  auto flip = std::make_shared<bool>(false);
  auto out = std::make_shared<std::string>("-");
  app->add_option("scores", *scores, "score files")->required();
  app->add_option("--manifest", manifest->path,
                  "take labels from this manifest");
  app->add_option("--format", manifest->format,
                  "simple_tsv or asvspoof_protocol")
      ->capture_default_str();
  app->add_option("--audio-root", manifest->audio_root);
  app->add_option("--tdcf", *tdcf, "t-DCF parameter file")
      ->capture_default_str();
  app->add_flag("--csv", *csv, "emit scope,metric,value CSV");
  app->add_flag("--by-attack", *by_attack, "add per-attack EER rows");
  app->add_flag("--force", *force, "merge runs with differing config hashes");
  app->add_flag("--flip-polarity", *flip,
                "negate scores (higher means spoof)");
  app->add_option("-o,--output", *out, "output file ('-' for stdout)");
  app->callback([=] {
    *run = [=] {
      ManifestPtr m;
      if (!manifest->path.empty()) m = LoadManifest(manifest->path, *manifest);
      std::vector<const char*> paths;
      for (const auto& s : *scores) paths.push_back(s.c_str());
      int flags = 0;
      if (*csv) flags |= ARTAMP_REPORT_CSV;
      if (*by_attack) flags |= ARTAMP_REPORT_BY_ATTACK;
      if (*force) flags |= ARTAMP_REPORT_FORCE;
      if (*flip) flags |= ARTAMP_REPORT_FLIP_POLARITY;
      OwnedString text;
      size_t extra = 0;
      Check(artamp_report(paths.data(), paths.size(), m.get(), tdcf->c_str(),
                          flags, &text.s, &extra));
      if (extra)
        std::cerr << "ignored " << extra
                  << " scored id(s) not in the manifest\n";
      WriteText(text.str(), *out);
      return kExitOk;
    };
  });
}

void SetupWada(CLI::App& root, std::function<int()>* run) {
  auto* app = root.add_subcommand("wada-snr", "Blind SNR estimate of a WAV");
  auto input = std::make_shared<std::string>();
  app->add_option("input", *input, "WAV file")->required();
  app->callback([=] {
    *run = [=] {
      auto x = ReadWav(*input);
      double snr = 0.0;
      Check(artamp_wada_snr(x.get(), &snr));
      std::cout << snr << "\n";
      return kExitOk;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"artamp: artifact amplification for spoofing countermeasures"};
  app.require_subcommand(1);
  std::function<int()> run;
  SetupGenNoise(app, &run);
  SetupMix(app, &run);
  SetupExtract(app, &run);
  SetupAmplify(app, &run);
  SetupProcess(app, &run);
  SetupFit(app, &run);
  SetupScore(app, &run);
  SetupSweep(app, &run);
  SetupSynth(app, &run);
  SetupReport(app, &run);
  SetupWada(app, &run);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return run ? run() : kExitUsage;
  } catch (const CliError& e) {
    return ExitCodeFor(e.status);
  }
}
