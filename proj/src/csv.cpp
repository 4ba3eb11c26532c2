#include "mida/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mida {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> tokens;
  if (line.find(',') != std::string::npos) {
    std::string token;
    std::stringstream ss(line);
    while (std::getline(ss, token, ',')) {
      // trim surrounding whitespace
      const auto b = token.find_first_not_of(" \t\r");
      const auto e = token.find_last_not_of(" \t\r");
      tokens.push_back(b == std::string::npos ? "" : token.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') tokens.push_back("");
  } else {
    std::stringstream ss(line);
    std::string token;
    while (ss >> token) tokens.push_back(token);
  }
  return tokens;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

bool parse_int(const std::string& s, long& out) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

} // namespace

Dataset load_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);

  std::string line;
  size_t line_no = 0;
  std::vector<std::string> header;
  if (schema.has_header) {
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
    ++line_no;
    header = split_line(line);
  }

  std::vector<std::vector<double>> rows;
  std::vector<std::string> label_tokens;
  size_t width = 0;
  long label_index_resolved = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto tokens = split_line(line);
    if (width == 0) {
      width = tokens.size();
      long idx;
      if (parse_int(schema.label_column, idx)) {
        if (idx < 0) idx += static_cast<long>(width);
      } else {
        const auto it = std::find(header.begin(), header.end(), schema.label_column);
        if (it == header.end())
          throw std::runtime_error("label column '" + schema.label_column +
                                   "' not found in header of " + path);
        idx = it - header.begin();
      }
      if (idx < 0 || idx >= static_cast<long>(width))
        throw std::runtime_error("label column index out of range in " + path);
      label_index_resolved = idx;
    }
    if (tokens.size() != width)
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": ragged row (expected " + std::to_string(width) +
                               " fields, got " + std::to_string(tokens.size()) + ")");
    std::vector<double> row;
    row.reserve(width - 1);
    for (size_t j = 0; j < width; ++j) {
      if (static_cast<long>(j) == label_index_resolved) {
        label_tokens.push_back(tokens[j]);
        continue;
      }
      double v;
      if (!parse_double(tokens[j], v))
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": non-numeric feature cell '" + tokens[j] + "'");
      if (!std::isfinite(v))
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": non-finite feature value");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty file: " + path);

  // Dense label codes, sorted numerically when every token is numeric,
  // lexicographically otherwise; the mapping is recorded in label_names.
  std::vector<std::string> unique_tokens = label_tokens;
  std::sort(unique_tokens.begin(), unique_tokens.end());
  unique_tokens.erase(std::unique(unique_tokens.begin(), unique_tokens.end()),
                      unique_tokens.end());
  const bool numeric = std::all_of(unique_tokens.begin(), unique_tokens.end(),
                                   [](const std::string& s) {
                                     double v;
                                     return parse_double(s, v);
                                   });
  if (numeric)
    std::sort(unique_tokens.begin(), unique_tokens.end(),
              [](const std::string& a, const std::string& b) {
                double va, vb;
                parse_double(a, va);
                parse_double(b, vb);
                return va < vb;
              });
  std::map<std::string, int> code;
  for (size_t i = 0; i < unique_tokens.size(); ++i)
    code[unique_tokens[i]] = static_cast<int>(i);

  Dataset dataset;
  dataset.name = path;
  dataset.label_names = unique_tokens;
  dataset.features.resize(static_cast<Eigen::Index>(rows.size()),
                          static_cast<Eigen::Index>(width - 1));
  dataset.labels.resize(static_cast<Eigen::Index>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < width - 1; ++j)
      dataset.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
    dataset.labels[static_cast<Eigen::Index>(i)] = code[label_tokens[i]];
  }
  if (!header.empty()) {
    for (size_t j = 0; j < width; ++j)
      if (static_cast<long>(j) != label_index_resolved)
        dataset.feature_names.push_back(header[j]);
  }
  return dataset;
}

const std::vector<RegistryEntry>& dataset_registry() {
  static const std::vector<RegistryEntry> registry = {
      {"letter", 16, 26, 20000},          {"libras", 90, 15, 360},
      {"wall-following", 24, 4, 5456},    {"madelon", 500, 2, 2600},
      {"hill-valley-noise", 100, 2, 1212}, {"hill-valley-clean", 100, 2, 1212},
  };
  return registry;
}

std::vector<std::string> registry_check(const Dataset& dataset) {
  std::vector<std::string> warnings;
  const auto& registry = dataset_registry();
  const auto it = std::find_if(registry.begin(), registry.end(),
                               [&](const RegistryEntry& e) {
                                 return e.name == dataset.name;
                               });
  if (it == registry.end()) {
    if (dataset.name != "custom")
      warnings.push_back("dataset '" + dataset.name + "' not in registry");
    return warnings;
  }
  const auto mismatch = [&](const std::string& what, long expected, long found) {
    if (expected != found)
      warnings.push_back(dataset.name + ": expected " + std::to_string(expected) +
                         " " + what + ", found " + std::to_string(found));
  };
  mismatch("features", it->features, dataset.feature_count());
  mismatch("classes", it->classes, dataset.class_count());
  mismatch("samples", it->samples, dataset.sample_count());
  return warnings;
}

void write_csv(const Dataset& dataset, const std::string& path) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  for (Eigen::Index i = 0; i < dataset.sample_count(); ++i) {
    for (Eigen::Index j = 0; j < dataset.feature_count(); ++j)
      std::fprintf(out, "%.17g,", dataset.features(i, j));
    const int c = dataset.labels[i];
    if (c >= 0 && static_cast<size_t>(c) < dataset.label_names.size())
      std::fprintf(out, "%s\n", dataset.label_names[static_cast<size_t>(c)].c_str());
    else
      std::fprintf(out, "%d\n", c);
  }
  std::fclose(out);
}

} // namespace mida
