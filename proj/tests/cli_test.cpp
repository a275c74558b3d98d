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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli_runner.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using qri::testing::RunCli;

const std::string kCli = QRINDEX_CLI_PATH;

TEST_CASE("encode and size print bare values") {
  auto r = RunCli(kCli, {"encode", "--modulus", "3^2", "--residue", "7"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2\n");
  r = RunCli(kCli, {"size", "--modulus", "3*5*7*11*13"});
  CHECK(r.out == "180\n");
}

TEST_CASE("--json emits one object per record") {
  auto r = RunCli(kCli, {"--json", "decode", "--modulus", "2^4 * 3", "--index", "2"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "{\"command\":\"decode\",\"index\":\"2\",\"modulus\":\"2^4 * 3\","
        "\"n\":\"48\",\"residue\":\"25\"}\n");

  r = RunCli(kCli, {"encode", "--json", "--modulus", "3*5", "--residue", "4"});
  CHECK(json::parse(r.out).at("index") == "2");

  r = RunCli(kCli, {"--json", "selftest", "--max-n", "50"});
  const json j = json::parse(r.out);
  CHECK(j.at("passed") == true);
  CHECK(j.at("moduli_checked") == 49);
}

TEST_CASE("sample is reproducible with a seed") {
  const std::vector<std::string> args = {"--json", "sample", "--modulus", "3*5*7",
                                         "--count", "20", "--seed", "9"};
  const auto a = RunCli(kCli, args);
  const auto b = RunCli(kCli, args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j.at("residues").size() == 20);
  CHECK(j.at("method") == "index");
  for (const auto& z : j.at("residues")) {
    const std::string s = z.get<std::string>();
    CHECK((s == "1" || s == "4" || s == "16" || s == "46" || s == "64" ||
           s == "79"));
  }

  const auto c = RunCli(kCli, {"sample", "--modulus", "3*5", "--count", "3",
                               "--seed", "1", "--method", "classical"});
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("ledger method=classical") != std::string::npos);

  const auto os = RunCli(kCli, {"sample", "--modulus", "2^3"});
  CHECK(os.out == "1\nledger method=index bits=0 attempts=0 candidates=0\n");
}

TEST_CASE("exit codes follow the error taxonomy") {
  auto r = RunCli(kCli, {"decode", "--modulus", "4*3", "--index", "1"});
  CHECK(r.exit_code == 4);
  CHECK(r.err.rfind("error: composite-claimed-prime:", 0) == 0);
  r = RunCli(kCli, {"size", "--modulus", "3*3"});
  CHECK(r.exit_code == 4);
  r = RunCli(kCli, {"size", "--modulus", "three"});
  CHECK(r.exit_code == 4);
  CHECK(r.err.rfind("error: syntax:", 0) == 0);

  r = RunCli(kCli, {"encode", "--modulus", "3*5", "--residue", "2"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.rfind("error: not-a-residue:", 0) == 0);
  r = RunCli(kCli, {"encode", "--modulus", "3*5", "--residue", "6"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.rfind("error: not-coprime:", 0) == 0);

  CHECK(RunCli(kCli, {}).exit_code == 2);
  CHECK(RunCli(kCli, {"decode", "--modulus", "3*5"}).exit_code == 2);
  CHECK(RunCli(kCli, {"decode", "--modulus", "3*5", "--index", "0x1"}).exit_code == 2);
  CHECK(RunCli(kCli, {"bench", "--modulus", "3*5"}).exit_code == 2);
  CHECK(RunCli(kCli, {"sample", "--modulus", "3*5", "--method", "other"}).exit_code == 2);
  CHECK(RunCli(kCli, {"--help"}).exit_code == 0);
}

}  // namespace
