#include "fdea/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fdea {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file: " + path);
    return in;
}

// Minimal RFC-style CSV: quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted) fail("line " + std::to_string(lineno) + ": unterminated quote");
    fields.push_back(cur);
    return fields;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> read_csv_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
    }
    return lines;
}

double parse_number(const std::string& text, std::size_t lineno, const std::string& column) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE)
        fail("line " + std::to_string(lineno) + ", column '" + column +
             "': not a number: '" + text + "'");
    return v;
}

TFN make_tfn(double lo, double mid, double hi, std::size_t lineno, const std::string& column) {
    try {
        return TFN(lo, mid, hi);
    } catch (const std::invalid_argument& e) {
        fail("line " + std::to_string(lineno) + ", column '" + column + "': " + e.what());
    }
}

struct TripleColumn {
    bool is_input = false;
    std::string name;
    std::size_t col_l = 0, col_m = 0, col_u = 0;
};

DMUDataset load_fuzzy_csv(std::istream& in) {
    const auto lines = read_csv_lines(in);
    if (lines.empty()) fail("empty fuzzy-csv file");
    const auto header = split_csv_line(lines[0], 1);
    if (header.size() < 2 || header[0] != "id" || header[1] != "label")
        fail("fuzzy-csv header must start with 'id,label'");

    // Collect in:<name>:L/M/U triples in order of first appearance.
    std::vector<TripleColumn> triples;
    auto find_triple = [&](bool is_input, const std::string& name) -> TripleColumn* {
        for (auto& t : triples)
            if (t.is_input == is_input && t.name == name) return &t;
        return nullptr;
    };
    for (std::size_t c = 2; c < header.size(); ++c) {
        const std::string& h = header[c];
        const auto p1 = h.find(':');
        const auto p2 = h.rfind(':');
        if (p1 == std::string::npos || p2 == p1)
            fail("column " + std::to_string(c + 1) + " ('" + h +
                 "'): expected in:<name>:L|M|U or out:<name>:L|M|U");
        const std::string kind = h.substr(0, p1);
        const std::string name = h.substr(p1 + 1, p2 - p1 - 1);
        const std::string bound = h.substr(p2 + 1);
        if ((kind != "in" && kind != "out") || name.empty() ||
            (bound != "L" && bound != "M" && bound != "U"))
            fail("column " + std::to_string(c + 1) + " ('" + h +
                 "'): expected in:<name>:L|M|U or out:<name>:L|M|U");
        const bool is_input = kind == "in";
        TripleColumn* t = find_triple(is_input, name);
        if (!t) {
            triples.push_back(TripleColumn{is_input, name, header.size(), header.size(),
                                           header.size()});
            t = &triples.back();
        }
        auto& slot = bound == "L" ? t->col_l : bound == "M" ? t->col_m : t->col_u;
        if (slot != header.size())
            fail("column '" + h + "' appears more than once");
        slot = c;
    }
    if (triples.empty()) fail("fuzzy-csv has no data columns");
    DMUDataset ds;
    for (const auto& t : triples) {
        if (t.col_l == header.size() || t.col_m == header.size() || t.col_u == header.size())
            fail(std::string(t.is_input ? "input" : "output") + " '" + t.name +
                 "' is missing one of its L/M/U columns");
        (t.is_input ? ds.input_names : ds.output_names).push_back(t.name);
    }

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto fields = split_csv_line(lines[li], li + 1);
        if (fields.size() != header.size())
            fail("line " + std::to_string(li + 1) + ": expected " +
                 std::to_string(header.size()) + " fields, got " +
                 std::to_string(fields.size()));
        DMURecord rec;
        rec.id = fields[0];
        rec.label = fields[1];
        for (const auto& t : triples) {
            const std::string colname = std::string(t.is_input ? "in:" : "out:") + t.name;
            const double lo = parse_number(fields[t.col_l], li + 1, colname + ":L");
            const double mid = parse_number(fields[t.col_m], li + 1, colname + ":M");
            const double hi = parse_number(fields[t.col_u], li + 1, colname + ":U");
            (t.is_input ? rec.inputs : rec.outputs)
                .push_back(make_tfn(lo, mid, hi, li + 1, colname));
        }
        ds.dmus.push_back(std::move(rec));
    }
    try {
        ds.validate();
    } catch (const std::invalid_argument& e) {
        fail(std::string("fuzzy-csv: ") + e.what());
    }
    return ds;
}

DMUDataset load_fuzzy_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(std::string("fuzzy-json parse error: ") + e.what());
    }
    DMUDataset ds;
    try {
        ds.input_names = j.at("input_names").get<std::vector<std::string>>();
        ds.output_names = j.at("output_names").get<std::vector<std::string>>();
        for (const auto& dj : j.at("dmus")) {
            DMURecord rec;
            rec.id = dj.at("id").get<std::string>();
            rec.label = dj.value("label", std::string());
            auto read_triples = [&](const json& arr, std::vector<TFN>& dst,
                                    const std::vector<std::string>& names, const char* kind) {
                std::size_t i = 0;
                for (const auto& cell : arr) {
                    if (!cell.is_array() || cell.size() != 3)
                        fail("DMU " + rec.id + ": each " + std::string(kind) +
                             " must be a [lo, mid, hi] triple");
                    const std::string colname =
                        i < names.size() ? names[i] : std::to_string(i + 1);
                    try {
                        dst.emplace_back(cell[0].get<double>(), cell[1].get<double>(),
                                         cell[2].get<double>());
                    } catch (const std::invalid_argument& e) {
                        fail("DMU " + rec.id + ", " + kind + " '" + colname + "': " + e.what());
                    }
                    ++i;
                }
            };
            read_triples(dj.at("inputs"), rec.inputs, ds.input_names, "input");
            read_triples(dj.at("outputs"), rec.outputs, ds.output_names, "output");
            ds.dmus.push_back(std::move(rec));
        }
    } catch (const json::exception& e) {
        fail(std::string("fuzzy-json schema error: ") + e.what());
    }
    try {
        ds.validate();
    } catch (const std::invalid_argument& e) {
        fail(std::string("fuzzy-json: ") + e.what());
    }
    return ds;
}

DMUDataset load_raw_csv(std::istream& in) {
    const auto lines = read_csv_lines(in);
    if (lines.empty()) fail("empty raw-observations file");
    const auto header = split_csv_line(lines[0], 1);
    if (header.size() < 4 || header[0] != "id" || header[1] != "label" || header[2] != "period")
        fail("raw-observations header must start with 'id,label,period'");

    struct VarColumn {
        bool is_input = false;
        std::string name;
        std::size_t col = 0;
    };
    std::vector<VarColumn> vars;
    for (std::size_t c = 3; c < header.size(); ++c) {
        const std::string& h = header[c];
        const auto p = h.find(':');
        if (p == std::string::npos)
            fail("column " + std::to_string(c + 1) + " ('" + h +
                 "'): expected in:<name> or out:<name>");
        const std::string kind = h.substr(0, p);
        const std::string name = h.substr(p + 1);
        if ((kind != "in" && kind != "out") || name.empty())
            fail("column " + std::to_string(c + 1) + " ('" + h +
                 "'): expected in:<name> or out:<name>");
        vars.push_back(VarColumn{kind == "in", name, c});
    }
    if (vars.empty()) fail("raw-observations file has no variable columns");

    // Group sample values per DMU id, keeping first-appearance order.
    std::vector<std::string> id_order;
    std::map<std::string, std::string> labels;
    std::map<std::string, std::vector<std::vector<double>>> samples;  // id -> var -> values
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto fields = split_csv_line(lines[li], li + 1);
        if (fields.size() != header.size())
            fail("line " + std::to_string(li + 1) + ": expected " +
                 std::to_string(header.size()) + " fields, got " +
                 std::to_string(fields.size()));
        const std::string& id = fields[0];
        if (id.empty()) fail("line " + std::to_string(li + 1) + ": empty id");
        if (!samples.count(id)) {
            id_order.push_back(id);
            labels[id] = fields[1];
            samples[id].assign(vars.size(), {});
        }
        for (std::size_t vi = 0; vi < vars.size(); ++vi)
            samples[id][vi].push_back(
                parse_number(fields[vars[vi].col], li + 1, header[vars[vi].col]));
    }
    if (id_order.empty()) fail("raw-observations file has no data rows");

    DMUDataset ds;
    for (const auto& v : vars)
        (v.is_input ? ds.input_names : ds.output_names).push_back(v.name);
    for (const auto& id : id_order) {
        DMURecord rec;
        rec.id = id;
        rec.label = labels[id];
        for (std::size_t vi = 0; vi < vars.size(); ++vi) {
            TFN t = from_observations(samples[id][vi]);
            (vars[vi].is_input ? rec.inputs : rec.outputs).push_back(t);
        }
        ds.dmus.push_back(std::move(rec));
    }
    try {
        ds.validate();
    } catch (const std::invalid_argument& e) {
        fail(std::string("raw-observations: ") + e.what());
    }
    return ds;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

DMUDataset load_dataset(const std::string& path, DataFormat format) {
    auto in = open_or_fail(path);
    switch (format) {
        case DataFormat::fuzzy_csv: return load_fuzzy_csv(in);
        case DataFormat::fuzzy_json: return load_fuzzy_json(in);
        case DataFormat::raw_observations_csv: return load_raw_csv(in);
    }
    fail("unknown data format");
}

DMUDataset load_dataset_auto(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return load_dataset(path, DataFormat::fuzzy_json);
    auto in = open_or_fail(path);
    std::string first_line;
    std::getline(in, first_line);
    const auto header = split_csv_line(first_line, 1);
    const bool raw = std::find(header.begin(), header.end(), "period") != header.end();
    in.clear();
    in.seekg(0);
    return raw ? load_raw_csv(in) : load_fuzzy_csv(in);
}

void save_fuzzy_csv(const DMUDataset& data, std::ostream& out) {
    out << "id,label";
    for (const auto& n : data.input_names)
        out << ",in:" << n << ":L,in:" << n << ":M,in:" << n << ":U";
    for (const auto& n : data.output_names)
        out << ",out:" << n << ":L,out:" << n << ":M,out:" << n << ":U";
    out << "\n";
    for (const auto& d : data.dmus) {
        out << csv_escape(d.id) << ',' << csv_escape(d.label);
        for (const auto& t : d.inputs)
            out << ',' << format_double(t.lo) << ',' << format_double(t.mid) << ','
                << format_double(t.hi);
        for (const auto& t : d.outputs)
            out << ',' << format_double(t.lo) << ',' << format_double(t.mid) << ','
                << format_double(t.hi);
        out << "\n";
    }
}

void save_fuzzy_json(const DMUDataset& data, std::ostream& out) {
    json j;
    j["input_names"] = data.input_names;
    j["output_names"] = data.output_names;
    j["dmus"] = json::array();
    for (const auto& d : data.dmus) {
        json dj;
        dj["id"] = d.id;
        dj["label"] = d.label;
        dj["inputs"] = json::array();
        for (const auto& t : d.inputs) dj["inputs"].push_back({t.lo, t.mid, t.hi});
        dj["outputs"] = json::array();
        for (const auto& t : d.outputs) dj["outputs"].push_back({t.lo, t.mid, t.hi});
        j["dmus"].push_back(std::move(dj));
    }
    out << j.dump(2) << "\n";
}

std::vector<std::pair<std::string, double>> load_ranks_csv(const std::string& path) {
    auto in = open_or_fail(path);
    const auto lines = read_csv_lines(in);
    if (lines.empty()) fail("empty ranks file: " + path);
    const auto header = split_csv_line(lines[0], 1);
    if (header.size() < 2 || header[0] != "id" || header[1] != "rank")
        fail("ranks file header must be 'id,rank'");
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto fields = split_csv_line(lines[li], li + 1);
        if (fields.size() < 2)
            fail("line " + std::to_string(li + 1) + ": expected 'id,rank'");
        out.emplace_back(fields[0], parse_number(fields[1], li + 1, "rank"));
    }
    if (out.empty()) fail("ranks file has no rows: " + path);
    return out;
}

}  // namespace fdea
