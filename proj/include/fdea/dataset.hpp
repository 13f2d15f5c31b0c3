#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fdea/tfn.hpp"

namespace fdea {

/// One decision-making unit: m fuzzy inputs, s fuzzy outputs.
struct DMURecord {
    std::string id;
    std::string label;
    std::vector<TFN> inputs;
    std::vector<TFN> outputs;
};

/// A homogeneous collection of DMUs sharing input/output dimensions.
struct DMUDataset {
    std::vector<DMURecord> dmus;
    std::vector<std::string> input_names;
    std::vector<std::string> output_names;

    std::size_t size() const { return dmus.size(); }
    std::size_t num_inputs() const { return input_names.size(); }
    std::size_t num_outputs() const { return output_names.size(); }

    /// Index of the DMU with the given id; throws std::invalid_argument if absent.
    std::size_t index_of(const std::string& id) const;

    /// True when every TFN in the dataset is degenerate.
    bool is_crisp() const;

    /// Enforces: at least one DMU, m >= 1, s >= 1, consistent dimensions,
    /// unique ids, and strictly positive TFNs everywhere (the ratio models
    /// require positive data). Throws std::invalid_argument naming the
    /// offending DMU and column.
    void validate() const;
};

}  // namespace fdea
