#pragma once

#include "mida/types.hpp"

#include <string>
#include <vector>

namespace mida {

/// How to read a delimited text file: which column carries the label
/// (name when a header is present, otherwise an index; -1 means the last
/// column) and whether the first line is a header.
struct CsvSchema {
  std::string label_column = "-1";
  bool has_header = false;
};

/// Parses comma- or whitespace-delimited text into a Dataset. Labels are
/// mapped to dense 0..C-1 (mapping recorded in label_names, sorted order).
/// Ragged or unparseable rows are reported with their line number.
Dataset load_csv(const std::string& path, const CsvSchema& schema);

/// Expected shape of a known benchmark dataset.
struct RegistryEntry {
  std::string name;
  int features = 0;
  int classes = 0;
  int samples = 0;
};

const std::vector<RegistryEntry>& dataset_registry();

/// Compares (N, C, M) against the registry entry matching dataset.name.
/// Returns warnings; never fails and never alters the dataset.
std::vector<std::string> registry_check(const Dataset& dataset);

/// Writes features + labels back out as CSV with 17 significant digits.
void write_csv(const Dataset& dataset, const std::string& path);

} // namespace mida
