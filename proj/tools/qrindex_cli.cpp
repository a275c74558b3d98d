// Copyright 2026 The qrindex Authors. All Rights Reserved.
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


// qrindex: command-line front end over the C API.
//
// Exit codes: 0 success, 1 selftest found violations, 2 usage error,
// 3 domain error, 4 invalid factorization.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrindex/qrindex.h"

namespace {

using nlohmann::json;

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitValidation = 4;

struct CliFailure {
  int exit_code;
};

int ExitCodeFor(qri_status status) {
  switch (status) {
    case QRI_ERR_SYNTAX:
    case QRI_ERR_COMPOSITE_CLAIMED_PRIME:
    case QRI_ERR_REPEATED_PRIME:
    case QRI_ERR_PRODUCT_TOO_SMALL:
    case QRI_ERR_ZERO_EXPONENT:
      return kExitValidation;
    case QRI_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

void Check(qri_status status) {
  if (status == QRI_OK) return;
  std::cerr << "error: " << qri_status_name(status) << ": " << qri_last_error()
            << "\n";
  throw CliFailure{ExitCodeFor(status)};
}

struct StringDeleter {
  void operator()(char* s) const { qri_string_free(s); }
};

std::string Take(char* s) {
  std::unique_ptr<char, StringDeleter> owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

struct ModulusDeleter {
  void operator()(qri_modulus* m) const { qri_modulus_free(m); }
};
using Modulus = std::unique_ptr<qri_modulus, ModulusDeleter>;

struct SourceDeleter {
  void operator()(qri_bit_source* s) const { qri_bit_source_free(s); }
};
using Source = std::unique_ptr<qri_bit_source, SourceDeleter>;

Modulus ParseModulus(const std::string& text) {
  qri_modulus* m = nullptr;
  Check(qri_modulus_parse(text.c_str(), &m));
  return Modulus(m);
}

std::string ModulusText(const qri_modulus* m) {
  char* out = nullptr;
  Check(qri_modulus_text(m, &out));
  return Take(out);
}

std::string ModulusN(const qri_modulus* m) {
  char* out = nullptr;
  Check(qri_modulus_n(m, &out));
  return Take(out);
}

std::string FormatDouble(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

const char* MethodName(qri_method method) {
  return method == QRI_METHOD_INDEX ? "index" : "classical";
}

json ReportJson(const qri_sample_report& r) {
  return {{"method", MethodName(r.method)},
          {"samples", r.samples},
          {"total_bits", r.total_bits},
          {"total_attempts", r.total_attempts},
          {"total_candidates", r.total_candidates},
          {"mean_bits_per_sample", r.mean_bits_per_sample},
          {"mean_attempts_per_sample", r.mean_attempts_per_sample},
          {"mean_candidates_per_sample", r.mean_candidates_per_sample},
          {"theoretical_floor", r.theoretical_floor}};
}

std::string ReportLine(const qri_sample_report& r) {
  std::ostringstream out;
  out << MethodName(r.method) << " samples=" << r.samples
      << " floor=" << FormatDouble(r.theoretical_floor)
      << " mean_bits=" << FormatDouble(r.mean_bits_per_sample)
      << " mean_attempts=" << FormatDouble(r.mean_attempts_per_sample)
      << " mean_candidates=" << FormatDouble(r.mean_candidates_per_sample)
      << " total_bits=" << r.total_bits;
  return out.str();
}

// Decimal numerals only; the library does all arithmetic.
const CLI::Validator kDecimal(
    [](std::string& s) -> std::string {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        return "expected a decimal numeral, got '" + s + "'";
      }
      return {};
    },
    "DECIMAL");

struct Options {
  bool json = false;
  std::string modulus;
  std::string index;
  std::string residue;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::string method = "index";
  std::uint64_t max_n = 3000;
};

void Emit(const Options& opt, const json& record, const std::string& human) {
  if (opt.json) {
    std::cout << record.dump() << "\n";
  } else {
    std::cout << human << "\n";
  }
}

int RunDecode(const Options& opt) {
  const Modulus m = ParseModulus(opt.modulus);
  char* out = nullptr;
  Check(qri_decode(m.get(), opt.index.c_str(), &out));
  const std::string residue = Take(out);
  Emit(opt,
       {{"command", "decode"},
        {"modulus", ModulusText(m.get())},
        {"n", ModulusN(m.get())},
        {"index", opt.index},
        {"residue", residue}},
       residue);
  return 0;
}

int RunEncode(const Options& opt) {
  const Modulus m = ParseModulus(opt.modulus);
  char* out = nullptr;
  Check(qri_encode(m.get(), opt.residue.c_str(), &out));
  const std::string index = Take(out);
  Emit(opt,
       {{"command", "encode"},
        {"modulus", ModulusText(m.get())},
        {"n", ModulusN(m.get())},
        {"residue", opt.residue},
        {"index", index}},
       index);
  return 0;
}

int RunSize(const Options& opt) {
  const Modulus m = ParseModulus(opt.modulus);
  char* out = nullptr;
  Check(qri_index_space_size(m.get(), &out));
  const std::string size = Take(out);
  Emit(opt,
       {{"command", "size"},
        {"modulus", ModulusText(m.get())},
        {"n", ModulusN(m.get())},
        {"size", size}},
       size);
  return 0;
}

int RunSample(const Options& opt) {
  const Modulus m = ParseModulus(opt.modulus);
  const qri_method method =
      opt.method == "index" ? QRI_METHOD_INDEX : QRI_METHOD_CLASSICAL;
  qri_bit_source* raw = nullptr;
  Check(opt.seeded ? qri_bit_source_new_seeded(opt.seed, &raw)
                   : qri_bit_source_new_os(&raw));
  const Source src(raw);

  std::vector<std::string> residues;
  qri_ledger total{0, 0, 0};
  for (std::uint64_t i = 0; i < opt.count; ++i) {
    char* out = nullptr;
    qri_ledger ledger{};
    Check(qri_sample(m.get(), src.get(), method, &out, &ledger));
    residues.push_back(Take(out));
    total.bits_consumed += ledger.bits_consumed;
    total.attempts += ledger.attempts;
    total.candidates += ledger.candidates;
  }

  json record = {{"command", "sample"},
                 {"modulus", ModulusText(m.get())},
                 {"n", ModulusN(m.get())},
                 {"method", MethodName(method)},
                 {"count", opt.count},
                 {"residues", residues},
                 {"bits_consumed", total.bits_consumed},
                 {"attempts", total.attempts},
                 {"candidates", total.candidates}};
  if (opt.seeded) record["seed"] = opt.seed;

  std::ostringstream human;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    human << (i == 0 ? "" : " ") << residues[i];
  }
  human << "\nledger method=" << MethodName(method)
        << " bits=" << total.bits_consumed << " attempts=" << total.attempts
        << " candidates=" << total.candidates;
  Emit(opt, record, human.str());
  return 0;
}

int RunSelftest(const Options& opt) {
  qri_selftest_summary summary{};
  char* detail = nullptr;
  Check(qri_selftest(opt.max_n, &summary, &detail));
  const std::string first = Take(detail);
  const bool ok = summary.failures == 0;
  std::ostringstream human;
  if (ok) {
    human << "all N passed (" << summary.moduli_checked << " moduli, "
          << summary.indices_checked << " indices)";
  } else {
    human << "FAILED: " << summary.failures << " of " << summary.moduli_checked
          << " moduli; first " << first;
  }
  Emit(opt,
       {{"command", "selftest"},
        {"max_n", opt.max_n},
        {"passed", ok},
        {"moduli_checked", summary.moduli_checked},
        {"indices_checked", summary.indices_checked},
        {"failures", summary.failures},
        {"first_violation", first}},
       human.str());
  return ok ? 0 : kExitViolations;
}

int RunBench(const Options& opt) {
  const Modulus m = ParseModulus(opt.modulus);
  qri_sample_report by_index{}, classical{};
  Check(qri_compare_bit_budgets(m.get(), opt.count, opt.seed, &by_index,
                                &classical));
  Emit(opt,
       {{"command", "bench"},
        {"modulus", ModulusText(m.get())},
        {"n", ModulusN(m.get())},
        {"seed", opt.seed},
        {"reports", {ReportJson(by_index), ReportJson(classical)}}},
       ReportLine(by_index) + "\n" + ReportLine(classical));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index, decode and sample quadratic residues modulo a factored N"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Emit one JSON object per record");

  auto add_modulus = [&opt](CLI::App* cmd) {
    cmd->add_option("--modulus", opt.modulus,
                    "Factorization of N, e.g. \"2^4 * 3 * 5\"")
        ->required();
  };

  CLI::App* decode = app.add_subcommand("decode", "Residue at a 1-based index");
  add_modulus(decode);
  decode->add_option("--index", opt.index, "Index in [1, I_N]")
      ->required()
      ->check(kDecimal);

  CLI::App* encode = app.add_subcommand("encode", "Index of a residue");
  add_modulus(encode);
  encode->add_option("--residue", opt.residue, "Quadratic residue in [1, N)")
      ->required()
      ->check(kDecimal);

  CLI::App* size = app.add_subcommand("size", "Number of residues I_N");
  add_modulus(size);

  CLI::App* sample = app.add_subcommand("sample", "Draw uniform residues");
  add_modulus(sample);
  sample->add_option("--count", opt.count, "Number of samples")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", opt.seed,
                     "64-bit seed; without it the OS entropy source is used");
  sample->add_option("--method", opt.method, "index or classical")
      ->check(CLI::IsMember({"index", "classical"}));

  CLI::App* selftest =
      app.add_subcommand("selftest", "Brute-force certification for N <= max");
  selftest->add_option("--max-n", opt.max_n, "Largest modulus to certify")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000}));

  CLI::App* bench =
      app.add_subcommand("bench", "Random-bit budget: index vs classical");
  add_modulus(bench);
  bench->add_option("--count", opt.count, "Samples per method")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", opt.seed, "64-bit seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  opt.seeded = sample->count("--seed") > 0;

  try {
    if (*decode) return RunDecode(opt);
    if (*encode) return RunEncode(opt);
    if (*size) return RunSize(opt);
    if (*sample) return RunSample(opt);
    if (*selftest) return RunSelftest(opt);
    if (*bench) return RunBench(opt);
  } catch (const CliFailure& failure) {
    return failure.exit_code;
  }
  return kExitUsage;
}
