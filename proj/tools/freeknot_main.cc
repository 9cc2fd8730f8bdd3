// Copyright 2026 The freeknot Authors
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

// freeknot: free numerical semigroups and their families of iterated torus
// knots.
//
//   freeknot analyze 10 15 18 [--json]
//   freeknot invariants 20 28 145 --arrangement=20,145,28 [--json] [--dot=FILE]
//   freeknot group 10 15 18 --arrangement=18,15,10 [--format=text|json] [--check]
//   freeknot catalog --max-gen=60 --max-count=3 [--out=FILE] [--jobs=N]
//
// Exit codes: 0 success, 1 internal defect, 2 usage, 3 domain (not free).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "freeknot/catalog.h"
#include "freeknot/error.h"
#include "freeknot/knot_family.h"
#include "freeknot/report.h"

namespace {

using freeknot::ErrorCode;
using freeknot::Int;

constexpr int kExitDefect = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFree:
    case ErrorCode::kEmptyFamily:
      return kExitDomain;
    case ErrorCode::kEmptyInput:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kGcdNotOne:
    case ErrorCode::kNotPermutation:
    case ErrorCode::kTooManyGenerators:
    case ErrorCode::kOverflow:
    case ErrorCode::kParse:
      return kExitUsage;
    default:
      return kExitDefect;
  }
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) freeknot::Fail(ErrorCode::kInvalidArgument, "cannot write " + path);
}

// Writes via a sibling temporary so a failed run leaves no partial file.
void WriteAtomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".partial";
  try {
    WriteFile(tmp, contents);
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free numerical semigroups and their families of iterated torus knots"};
  app.require_subcommand(1);

  std::vector<Int> generators;
  std::vector<Int> order;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "Normalize, classify the knot family, report invariants");
  analyze->add_option("generators", generators, "Semigroup generators")->required();
  analyze->add_flag("--json", json, "Emit the JSON envelope");

  std::string dot_path;
  auto* invariants = app.add_subcommand("invariants", "Invariant panel for one arrangement");
  invariants->add_option("generators", generators, "Semigroup generators")->required();
  invariants->add_option("--arrangement", order, "Ordering, comma separated")->delimiter(',');
  invariants->add_flag("--json", json, "Emit the JSON envelope");
  invariants->add_option("--dot", dot_path, "Write the splice diagram as DOT to this file");

  std::string format = "text";
  bool check = false;
  auto* group = app.add_subcommand("group", "Knot-group presentation and toric binomials");
  group->add_option("generators", generators, "Semigroup generators")->required();
  group->add_option("--arrangement", order, "Ordering, comma separated")->delimiter(',');
  group->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  group->add_flag("--check", check, "Verify the abelianization");

  freeknot::CatalogBounds bounds;
  bounds.jobs = 0;
  std::string out_path;
  auto* catalog = app.add_subcommand("catalog", "CSV catalog of free semigroups within bounds");
  catalog->add_option("--max-gen", bounds.max_generator, "Largest generator value")->required();
  catalog->add_option("--max-count", bounds.max_count, "Largest generator count (<= 5)")->required();
  catalog->add_option("--out", out_path, "Output CSV path (stdout when omitted)");
  catalog->add_option("--jobs", bounds.jobs, "Worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto fmt = json ? freeknot::OutputFormat::kJson : freeknot::OutputFormat::kText;
  try {
    if (*analyze) {
      std::cout << freeknot::RenderAnalyze(generators, fmt);
    } else if (*invariants) {
      std::cout << freeknot::RenderInvariants(generators, order, fmt);
      if (!dot_path.empty()) {
        const auto s = freeknot::MakeSemigroup(generators);
        const auto a = freeknot::ResolveArrangement(s, order);
        WriteFile(dot_path, freeknot::SpliceDiagramDot(freeknot::CablingSequenceOf(a)));
      }
    } else if (*group) {
      const auto pf = format == "json" ? freeknot::PresentationFormat::kJson
                                       : freeknot::PresentationFormat::kText;
      std::cout << freeknot::RenderGroup(generators, order, pf, check);
    } else if (*catalog) {
      const std::string csv = freeknot::CatalogCsv(freeknot::BuildCatalog(bounds));
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        WriteAtomically(out_path, csv);
      }
    }
  } catch (const freeknot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDefect;
  }
  return 0;
}
