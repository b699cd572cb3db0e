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

#include "seclogit/data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "seclogit/errors.hpp"

namespace seclogit {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& cell, size_t row, const std::string& col) {
  const std::string t = trim(cell);
  if (t.empty()) {
    throw ValidationError("missing value at row " + std::to_string(row) + ", column " + col);
  }
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ValidationError("unparseable number '" + t + "' at row " + std::to_string(row) +
                          ", column " + col);
  }
  if (pos != t.size() || !std::isfinite(v)) {
    throw ValidationError("unparseable number '" + t + "' at row " + std::to_string(row) +
                          ", column " + col);
  }
  return v;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Dataset load_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty file " + path);
  const std::vector<std::string> header = split_line(line);

  std::map<std::string, size_t> col_index;
  for (size_t i = 0; i < header.size(); ++i) col_index[trim(header[i])] = i;

  if (col_index.find(schema.target) == col_index.end()) {
    throw ValidationError("target column '" + schema.target + "' not found");
  }
  const std::set<std::string> cat_names(schema.categoricals.begin(), schema.categoricals.end());
  for (const auto& c : cat_names) {
    if (col_index.find(c) == col_index.end()) {
      throw ValidationError("categorical column '" + c + "' not found");
    }
  }

  std::vector<std::string> numeric_names;
  for (const auto& h : header) {
    const std::string name = trim(h);
    if (name == schema.target || cat_names.count(name)) continue;
    numeric_names.push_back(name);
  }

  std::vector<std::vector<double>> numeric_rows;
  std::vector<double> targets;
  std::map<std::string, std::vector<std::string>> cat_values;
  for (const auto& c : cat_names) cat_values[c] = {};

  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size()) {
      throw ValidationError("row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                            " cells, expected " + std::to_string(header.size()));
    }
    std::vector<double> nums;
    nums.reserve(numeric_names.size());
    for (const auto& name : numeric_names) {
      nums.push_back(parse_number(cells[col_index[name]], row, name));
    }
    numeric_rows.push_back(std::move(nums));
    const double t = parse_number(cells[col_index[schema.target]], row, schema.target);
    if (t != 0.0 && t != 1.0) {
      throw ValidationError("non-binary target value '" + format_double(t) + "' at row " +
                            std::to_string(row));
    }
    targets.push_back(t);
    for (const auto& c : cat_names) {
      const std::string v = trim(cells[col_index[c]]);
      if (v.empty()) {
        throw ValidationError("missing value at row " + std::to_string(row) + ", column " + c);
      }
      cat_values[c].push_back(v);
    }
  }

  const size_t n = numeric_rows.size();
  Dataset ds;
  ds.X.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(numeric_names.size() + 1));
  ds.y.resize(static_cast<Eigen::Index>(n));
  ds.column_names.push_back("intercept");
  for (const auto& name : numeric_names) ds.column_names.push_back(name);
  for (size_t i = 0; i < n; ++i) {
    ds.X(static_cast<Eigen::Index>(i), 0) = 1.0;
    for (size_t c = 0; c < numeric_names.size(); ++c) {
      ds.X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c + 1)) = numeric_rows[i][c];
    }
    ds.y[static_cast<Eigen::Index>(i)] = targets[i];
  }
  for (const auto& c : schema.categoricals) {
    ds.categoricals.push_back(Dataset::RawColumn{c, std::move(cat_values[c])});
  }
  return ds;
}

Dataset expand_categoricals(Dataset ds, const std::vector<std::string>& columns) {
  for (const auto& name : columns) {
    auto it = std::find_if(ds.categoricals.begin(), ds.categoricals.end(),
                           [&](const Dataset::RawColumn& c) { return c.name == name; });
    if (it == ds.categoricals.end()) {
      throw ValidationError("no categorical column named '" + name + "'");
    }
    std::set<std::string> level_set(it->values.begin(), it->values.end());
    if (level_set.size() < 2) {
      throw ValidationError("categorical column '" + name + "' has a single level");
    }
    // Lexicographic level order; the first level is the reference.
    std::vector<std::string> levels(level_set.begin(), level_set.end());
    const size_t extra = levels.size() - 1;

    Eigen::MatrixXd x(ds.X.rows(), ds.X.cols() + static_cast<Eigen::Index>(extra));
    x.leftCols(ds.X.cols()) = ds.X;
    x.rightCols(static_cast<Eigen::Index>(extra)).setZero();
    for (size_t i = 0; i < it->values.size(); ++i) {
      const auto pos = std::find(levels.begin(), levels.end(), it->values[i]) - levels.begin();
      if (pos > 0) {
        x(static_cast<Eigen::Index>(i), ds.X.cols() + static_cast<Eigen::Index>(pos - 1)) = 1.0;
      }
    }
    ds.X = std::move(x);
    for (size_t l = 1; l < levels.size(); ++l) ds.column_names.push_back(name + "=" + levels[l]);
    ds.categoricals.erase(it);
  }
  return ds;
}

Dataset bin_ages(Dataset ds, const std::string& column) {
  const auto it = std::find(ds.column_names.begin(), ds.column_names.end(), column);
  if (it == ds.column_names.end()) {
    throw ValidationError("no numeric column named '" + column + "'");
  }
  const auto col = static_cast<Eigen::Index>(it - ds.column_names.begin());

  const Eigen::Index n = ds.X.rows();
  Eigen::MatrixXd bins(n, 4);
  bins.setZero();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double age = ds.X(i, col);
    if (age < 0) {
      throw ValidationError("negative age " + format_double(age) + " at row " +
                            std::to_string(i + 2));
    }
    const int b = age < 20 ? 0 : age < 40 ? 1 : age < 60 ? 2 : 3;
    bins(i, b) = 1.0;
  }

  Eigen::MatrixXd x(n, ds.X.cols() - 1 + 4);
  Eigen::Index out = 0;
  std::vector<std::string> names;
  for (Eigen::Index c = 0; c < ds.X.cols(); ++c) {
    if (c == col) continue;
    x.col(out++) = ds.X.col(c);
    names.push_back(ds.column_names[static_cast<size_t>(c)]);
  }
  static const char* kBinNames[4] = {"[0,20)", "[20,40)", "[40,60)", "[60,inf)"};
  for (int b = 0; b < 4; ++b) {
    x.col(out++) = bins.col(b);
    names.push_back(column + kBinNames[b]);
  }
  ds.X = std::move(x);
  ds.column_names = std::move(names);
  return ds;
}

const char* scheme_name(PartitionScheme s) {
  switch (s) {
    case PartitionScheme::kHorizontal:
      return "horizontal";
    case PartitionScheme::kVertical:
      return "vertical";
    case PartitionScheme::kAdditiveRandom:
      return "additive_random";
  }
  return "?";
}

PartitionScheme scheme_from_name(const std::string& name) {
  if (name == "horizontal") return PartitionScheme::kHorizontal;
  if (name == "vertical") return PartitionScheme::kVertical;
  if (name == "additive_random") return PartitionScheme::kAdditiveRandom;
  throw ValidationError("unknown partition scheme '" + name + "'");
}

std::vector<PartyInput> partition(const Dataset& ds, PartitionScheme scheme, int parties,
                                  Prng& rng) {
  if (parties < 2) throw ValidationError("partition requires at least two parties");
  const auto n = ds.X.rows();
  const auto d = ds.X.cols();

  std::vector<PartyInput> out(static_cast<size_t>(parties));
  for (int j = 0; j < parties; ++j) {
    out[static_cast<size_t>(j)].party_id = j;
    out[static_cast<size_t>(j)].X_j = Eigen::MatrixXd::Zero(n, d);
    out[static_cast<size_t>(j)].y_j = Eigen::VectorXd::Zero(n);
  }

  switch (scheme) {
    case PartitionScheme::kHorizontal: {
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto j = static_cast<size_t>(i * parties / n);
        out[j].X_j.row(i) = ds.X.row(i);
        out[j].y_j[i] = ds.y[i];
      }
      break;
    }
    case PartitionScheme::kVertical: {
      if (d < parties) throw ValidationError("vertical partition needs d >= parties");
      for (Eigen::Index c = 0; c < d; ++c) {
        const auto j = static_cast<size_t>(c * parties / d);
        out[j].X_j.col(c) = ds.X.col(c);
      }
      out[0].y_j = ds.y;
      break;
    }
    case PartitionScheme::kAdditiveRandom: {
      // Summands live on the 2^-24 lattice within +-2^20 so every piece and
      // every remainder is exact in a double, making reconstruction exact.
      const double lattice = std::ldexp(1.0, -24);
      auto draw = [&]() {
        const auto raw = static_cast<int64_t>(rng.next_u64() >> 19) - (int64_t{1} << 44);
        return static_cast<double>(raw) * lattice;  // uniform in [-2^20, 2^20)
      };
      auto split_into = [&](double value, Eigen::Index i, Eigen::Index c, bool is_y) {
        double rest = value;
        for (int j = 0; j + 1 < parties; ++j) {
          const double piece = draw();
          rest -= piece;
          if (is_y) {
            out[static_cast<size_t>(j)].y_j[i] = piece;
          } else {
            out[static_cast<size_t>(j)].X_j(i, c) = piece;
          }
        }
        if (is_y) {
          out[static_cast<size_t>(parties - 1)].y_j[i] = rest;
        } else {
          out[static_cast<size_t>(parties - 1)].X_j(i, c) = rest;
        }
      };
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index c = 0; c < d; ++c) split_into(ds.X(i, c), i, c, false);
        split_into(ds.y[i], i, 0, true);
      }
      break;
    }
  }
  return out;
}

void write_party_files(const std::string& dir, const std::vector<PartyInput>& parties,
                       const Manifest& manifest) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  {
    std::ofstream m(fs::path(dir) / "manifest.txt");
    m << "scheme = " << scheme_name(manifest.scheme) << "\n";
    m << "parties = " << manifest.parties << "\n";
    m << "seed = " << manifest.seed << "\n";
    m << "modulus_bits = " << manifest.modulus_bits << "\n";
    m << "frac_bits = " << manifest.frac_bits << "\n";
    m << "rows = " << manifest.rows << "\n";
    m << "cols = " << manifest.cols << "\n";
    m << "columns = ";
    for (size_t i = 0; i < manifest.columns.size(); ++i) {
      if (i) m << ",";
      m << manifest.columns[i];
    }
    m << "\n";
  }

  for (const auto& p : parties) {
    std::ofstream f(fs::path(dir) / ("party_" + std::to_string(p.party_id) + ".csv"));
    for (size_t i = 0; i < manifest.columns.size(); ++i) {
      if (i) f << ",";
      f << manifest.columns[i];
    }
    f << ",y\n";
    for (Eigen::Index i = 0; i < p.X_j.rows(); ++i) {
      for (Eigen::Index c = 0; c < p.X_j.cols(); ++c) {
        if (c) f << ",";
        f << format_double(p.X_j(i, c));
      }
      f << "," << format_double(p.y_j[i]) << "\n";
    }
  }
}

PartyFiles read_party_files(const std::string& dir) {
  namespace fs = std::filesystem;
  std::ifstream m(fs::path(dir) / "manifest.txt");
  if (!m) throw ValidationError("cannot open manifest in " + dir);

  Manifest manifest;
  std::string line;
  while (std::getline(m, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "scheme") manifest.scheme = scheme_from_name(value);
    else if (key == "parties") manifest.parties = std::stoi(value);
    else if (key == "seed") manifest.seed = std::stoull(value);
    else if (key == "modulus_bits") manifest.modulus_bits = std::stoi(value);
    else if (key == "frac_bits") manifest.frac_bits = std::stoi(value);
    else if (key == "rows") manifest.rows = std::stoul(value);
    else if (key == "cols") manifest.cols = std::stoul(value);
    else if (key == "columns") {
      manifest.columns.clear();
      std::stringstream ss(value);
      std::string c;
      while (std::getline(ss, c, ',')) manifest.columns.push_back(trim(c));
    }
  }
  if (manifest.parties < 2) throw ValidationError("manifest: bad party count");
  if (manifest.columns.size() != manifest.cols) {
    throw ValidationError("manifest: column list does not match cols");
  }

  PartyFiles out;
  out.manifest = manifest;
  for (int j = 0; j < manifest.parties; ++j) {
    const auto path = fs::path(dir) / ("party_" + std::to_string(j) + ".csv");
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open " + path.string());
    std::string header;
    std::getline(f, header);
    PartyInput p;
    p.party_id = j;
    p.X_j.resize(static_cast<Eigen::Index>(manifest.rows), static_cast<Eigen::Index>(manifest.cols));
    p.y_j.resize(static_cast<Eigen::Index>(manifest.rows));
    size_t row = 0;
    while (std::getline(f, line)) {
      if (trim(line).empty()) continue;
      if (row >= manifest.rows) throw ValidationError(path.string() + ": more rows than manifest");
      const auto cells = split_line(line);
      if (cells.size() != manifest.cols + 1) {
        throw ValidationError(path.string() + ": row " + std::to_string(row + 2) +
                              " has wrong cell count");
      }
      for (size_t c = 0; c < manifest.cols; ++c) {
        p.X_j(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) =
            parse_number(cells[c], row + 2, manifest.columns[c]);
      }
      p.y_j[static_cast<Eigen::Index>(row)] = parse_number(cells[manifest.cols], row + 2, "y");
      ++row;
    }
    if (row != manifest.rows) throw ValidationError(path.string() + ": fewer rows than manifest");
    out.parties.push_back(std::move(p));
  }
  return out;
}

}  // namespace seclogit
