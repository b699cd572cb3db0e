// Copyright 2026 The seclogit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECLOGIT_DATA_HPP
#define SECLOGIT_DATA_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "seclogit/prng.hpp"
#include "seclogit/ring.hpp"

namespace seclogit {

// Design matrix (column 0 is the intercept of ones), binary response, and
// any categorical columns that still await expansion.
struct Dataset {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  std::vector<std::string> column_names;

  struct RawColumn {
    std::string name;
    std::vector<std::string> values;
  };
  std::vector<RawColumn> categoricals;

  size_t n() const { return static_cast<size_t>(X.rows()); }
  size_t d() const { return static_cast<size_t>(X.cols()); }
};

struct CsvSchema {
  std::string target;
  std::vector<std::string> categoricals;  // all other columns are numeric
};

// Parses a CSV with a header row. Missing cells and non-binary targets are
// rejected with row/column diagnostics. The intercept column is prepended.
Dataset load_csv(const std::string& path, const CsvSchema& schema);

// Expands each named categorical column into M-1 indicators, dropping the
// lexicographically first level as the reference.
Dataset expand_categoricals(Dataset ds, const std::vector<std::string>& columns);

// Replaces a numeric age column by four indicators for the bins
// [0,20), [20,40), [40,60), [60,inf). Negative values are rejected.
Dataset bin_ages(Dataset ds, const std::string& column);

// The (X_j, y_j) pair held by one party. Across parties these sum to the
// combined dataset, which is all any protocol consumes.
struct PartyInput {
  int party_id = 0;
  Eigen::MatrixXd X_j;
  Eigen::VectorXd y_j;
};

enum class PartitionScheme { kHorizontal, kVertical, kAdditiveRandom };

const char* scheme_name(PartitionScheme s);
PartitionScheme scheme_from_name(const std::string& name);

// Splits a dataset into per-party inputs summing exactly to (X, y):
//   horizontal       disjoint row blocks, zeros elsewhere
//   vertical         disjoint column blocks (intercept to party 0, y to
//                    party 0), zeros elsewhere; requires d >= P
//   additive_random  every entry split into P random summands, drawn on a
//                    fixed-point lattice so the split is exact
std::vector<PartyInput> partition(const Dataset& ds, PartitionScheme scheme, int parties,
                                  Prng& rng);

struct Manifest {
  PartitionScheme scheme = PartitionScheme::kHorizontal;
  int parties = 0;
  uint64_t seed = 0;
  int modulus_bits = 64;
  int frac_bits = 24;
  size_t rows = 0;
  size_t cols = 0;
  std::vector<std::string> columns;
};

// Writes party_<j>.csv per party plus manifest.txt into `dir`.
void write_party_files(const std::string& dir, const std::vector<PartyInput>& parties,
                       const Manifest& manifest);

struct PartyFiles {
  std::vector<PartyInput> parties;
  Manifest manifest;
};

PartyFiles read_party_files(const std::string& dir);

}  // namespace seclogit

#endif  // SECLOGIT_DATA_HPP
