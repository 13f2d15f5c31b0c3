#include "fdea/dataset.hpp"

#include <stdexcept>
#include <unordered_set>

namespace fdea {

std::size_t DMUDataset::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < dmus.size(); ++i)
        if (dmus[i].id == id) return i;
    throw std::invalid_argument("unknown DMU id: " + id);
}

bool DMUDataset::is_crisp() const {
    for (const auto& d : dmus) {
        for (const auto& t : d.inputs)
            if (!t.is_crisp()) return false;
        for (const auto& t : d.outputs)
            if (!t.is_crisp()) return false;
    }
    return true;
}

void DMUDataset::validate() const {
    if (dmus.empty()) throw std::invalid_argument("dataset has no DMUs");
    if (input_names.empty()) throw std::invalid_argument("dataset has no input columns");
    if (output_names.empty()) throw std::invalid_argument("dataset has no output columns");

    std::unordered_set<std::string> seen;
    for (const auto& d : dmus) {
        if (d.id.empty()) throw std::invalid_argument("DMU with empty id");
        if (!seen.insert(d.id).second)
            throw std::invalid_argument("duplicate DMU id: " + d.id);
        if (d.inputs.size() != input_names.size())
            throw std::invalid_argument("DMU " + d.id + ": expected " +
                                        std::to_string(input_names.size()) +
                                        " inputs, got " + std::to_string(d.inputs.size()));
        if (d.outputs.size() != output_names.size())
            throw std::invalid_argument("DMU " + d.id + ": expected " +
                                        std::to_string(output_names.size()) +
                                        " outputs, got " + std::to_string(d.outputs.size()));
        for (std::size_t i = 0; i < d.inputs.size(); ++i)
            if (!d.inputs[i].is_positive())
                throw std::invalid_argument("DMU " + d.id + ", input '" + input_names[i] +
                                            "': values must be strictly positive");
        for (std::size_t r = 0; r < d.outputs.size(); ++r)
            if (!d.outputs[r].is_positive())
                throw std::invalid_argument("DMU " + d.id + ", output '" + output_names[r] +
                                            "': values must be strictly positive");
    }
}

}  // namespace fdea
