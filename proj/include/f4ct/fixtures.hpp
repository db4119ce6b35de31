// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_FIXTURES_HPP
#define F4CT_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "f4ct/constant_term.hpp"
#include "f4ct/zeta.hpp"

namespace f4ct {

// One reference table, loaded from a JSON data file. Rows marked disputed
// are diffed and reported but do not fail verification.
struct JacquetFixtureRow {
  Weight exp;
  int mult = 0;
  bool disputed = false;
  std::string note;
};

struct JacquetFixture {
  std::string id;
  int parabolic = 0;
  Rat z0;
  std::vector<JacquetFixtureRow> rows;
};

struct ImagesFixtureRow {
  std::vector<int> word;  // 1-based letters, possibly unreduced
  int dim = 0;
  Weight exp;
  bool disputed = false;
  std::string note;
};

struct ImagesFixture {
  std::string id;
  int parabolic = 0;
  Rat z0;
  std::vector<ImagesFixtureRow> rows;
};

struct GlobalFixtureMember {
  std::vector<int> word;
  std::vector<AffineForm> factor_num, factor_den;
};

struct GlobalFixtureClass {
  Weight exp;
  int order = 0;
  std::string label;
  std::vector<GlobalFixtureMember> members;
  bool disputed = false;
  std::string note;
};

struct GlobalFixture {
  std::string id;
  int parabolic = 0;
  Rat z0;
  std::vector<GlobalFixtureClass> classes;
};

JacquetFixture load_jacquet_fixture(const std::string& path);
ImagesFixture load_images_fixture(const std::string& path);
GlobalFixture load_global_fixture(const std::string& path);

struct DiffResult {
  bool ok = true;
  std::vector<std::string> lines;  // unified-diff style mismatch report

  void mismatch(const std::string& line) {
    ok = false;
    lines.push_back(line);
  }
};

DiffResult diff_jacquet(const WeylGroup& w, const JacquetFixture& fix);
DiffResult diff_images(const ConstantTermAnalysis& an, const ImagesFixture& fix);
DiffResult diff_global(const ConstantTermAnalysis& an, const GlobalFixture& fix);

// default fixture directory: F4CT_FIXTURES env var, else compiled-in source path
std::string default_fixture_dir();

}  // namespace f4ct

#endif  // F4CT_FIXTURES_HPP
