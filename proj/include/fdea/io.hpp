#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fdea/dataset.hpp"

namespace fdea {

enum class DataFormat { fuzzy_csv, fuzzy_json, raw_observations_csv };

/// Loads and validates a dataset.
///
/// fuzzy-csv: header `id,label` then `in:<name>:L,in:<name>:M,in:<name>:U`
/// per input and `out:<name>:L/M/U` per output; one row per DMU.
///
/// fuzzy-json: {"input_names": [...], "output_names": [...],
///              "dmus": [{"id", "label", "inputs": [[lo,mid,hi],...],
///                        "outputs": [[lo,mid,hi],...]}]}
///
/// raw-observations-csv: header `id,label,period` then one plain column per
/// variable, named `in:<name>` or `out:<name>`; repeated rows per DMU id are
/// fuzzified per column as (min, mean, max).
///
/// Schema problems throw std::invalid_argument with row/column diagnostics.
DMUDataset load_dataset(const std::string& path, DataFormat format);

/// Picks the format from the file: .json => fuzzy-json; .csv with a
/// `period` header column => raw observations, otherwise fuzzy-csv.
DMUDataset load_dataset_auto(const std::string& path);

/// Lossless writers (numbers round-trip exactly through the loaders).
void save_fuzzy_csv(const DMUDataset& data, std::ostream& out);
void save_fuzzy_json(const DMUDataset& data, std::ostream& out);

/// Ranks file: header `id,rank`, one row per DMU. Used for external
/// ranking comparisons.
std::vector<std::pair<std::string, double>> load_ranks_csv(const std::string& path);

/// Shortest decimal form of x that parses back to exactly x.
std::string format_double(double x);

}  // namespace fdea
