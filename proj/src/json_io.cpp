#include "presmon/json_io.hpp"

#include "presmon/error.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

namespace presmon {

namespace {

std::int64_t get_int(const nlohmann::json& j, const std::string& what) {
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw Error(what + " is too large");
    }
    if (!j.is_number_integer()) {
        throw Error(what + " must be an integer");
    }
    return j.get<std::int64_t>();
}

const nlohmann::json& get_field(const nlohmann::json& j, const char* key,
                                const std::string& what) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(what + " object needs a '" + key + "' field");
    }
    return j.at(key);
}

// Alphabet plus the pre-canonicalization values, for mapping entry values
// written in the document's own scale onto indices.
struct LoadedAlphabet {
    DistanceAlphabet alphabet;
    std::int64_t raw_scale = 1;
    std::vector<std::int64_t> raw_values;
};

LoadedAlphabet load_alphabet(const nlohmann::json& j) {
    std::int64_t scale = get_int(get_field(j, "scale", "alphabet"), "alphabet scale");
    const nlohmann::json& values = get_field(j, "values", "alphabet");
    if (!values.is_array()) {
        throw Error("alphabet values must be an array");
    }
    std::vector<std::int64_t> raw;
    raw.reserve(values.size());
    for (const auto& v : values) {
        raw.push_back(get_int(v, "alphabet value"));
    }
    LoadedAlphabet out{alphabet_from_scaled(scale, raw), scale, std::move(raw)};
    return out;
}

int index_of_raw(const LoadedAlphabet& la, std::int64_t raw, const std::string& what) {
    auto it = std::lower_bound(la.raw_values.begin(), la.raw_values.end(), raw);
    if (it == la.raw_values.end() || *it != raw) {
        throw Error(what + " value " + format_scaled(raw, la.raw_scale) +
                    " is not in the alphabet");
    }
    return static_cast<int>(it - la.raw_values.begin());
}

std::vector<int> load_matrix_entries(const LoadedAlphabet& la, const nlohmann::json& matrix,
                                     int& points_out) {
    if (!matrix.is_array() || matrix.empty()) {
        throw Error("matrix must be a nonempty array of rows");
    }
    int n = static_cast<int>(matrix.size());
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : matrix) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw Error("matrix must be square with one row per point");
        }
        for (const auto& cell : row) {
            entries.push_back(index_of_raw(la, get_int(cell, "matrix entry"), "matrix"));
        }
    }
    points_out = n;
    return entries;
}

DistanceMatrix load_space(const LoadedAlphabet& la, const nlohmann::json& j) {
    const nlohmann::json& matrix = get_field(j, "matrix", "space");
    int points = 0;
    std::vector<int> entries = load_matrix_entries(la, matrix, points);
    if (j.contains("points")) {
        const nlohmann::json& labels = j.at("points");
        if (!labels.is_array() || static_cast<int>(labels.size()) != points) {
            throw Error("points list must match the matrix size");
        }
        for (const auto& label : labels) {
            if (!label.is_string()) {
                throw Error("point labels must be strings");
            }
        }
    }
    return DistanceMatrix(la.alphabet, points, std::move(entries));
}

} // namespace

nlohmann::json to_json(const DistanceAlphabet& a) {
    nlohmann::json values = nlohmann::json::array();
    for (std::int64_t v : a.values()) {
        values.push_back(v);
    }
    return nlohmann::json{{"scale", a.scale()}, {"values", std::move(values)}};
}

DistanceAlphabet alphabet_from_json(const nlohmann::json& j) {
    return load_alphabet(j).alphabet;
}

nlohmann::json to_json(const GridFunction& f) {
    nlohmann::json table = nlohmann::json::array();
    for (int i = 0; i < f.alphabet().size(); ++i) {
        table.push_back(f.image_value(i));
    }
    return nlohmann::json{{"alphabet", to_json(f.alphabet())}, {"table", std::move(table)}};
}

GridFunction function_from_json(const nlohmann::json& j) {
    LoadedAlphabet la = load_alphabet(get_field(j, "alphabet", "function"));
    const nlohmann::json& table = get_field(j, "table", "function");
    if (!table.is_array()) {
        throw Error("function table must be an array");
    }
    if (static_cast<int>(table.size()) != la.alphabet.size()) {
        throw Error("function table has " + std::to_string(table.size()) +
                    " entries for an alphabet of size " +
                    std::to_string(la.alphabet.size()));
    }
    std::vector<int> indices;
    indices.reserve(table.size());
    for (const auto& cell : table) {
        indices.push_back(index_of_raw(la, get_int(cell, "table entry"), "table"));
    }
    return GridFunction(la.alphabet, std::move(indices));
}

nlohmann::json to_json(const DistanceMatrix& m) {
    nlohmann::json points = nlohmann::json::array();
    nlohmann::json matrix = nlohmann::json::array();
    for (int i = 0; i < m.points(); ++i) {
        points.push_back("p" + std::to_string(i));
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.points(); ++j) {
            row.push_back(m.distance(i, j));
        }
        matrix.push_back(std::move(row));
    }
    return nlohmann::json{{"alphabet", to_json(m.alphabet())},
                          {"points", std::move(points)},
                          {"matrix", std::move(matrix)}};
}

DistanceMatrix space_from_json(const nlohmann::json& j) {
    LoadedAlphabet la = load_alphabet(get_field(j, "alphabet", "space"));
    return load_space(la, j);
}

nlohmann::json to_json(const SpaceFamily& x) {
    nlohmann::json spaces = nlohmann::json::array();
    for (const DistanceMatrix& m : x.spaces()) {
        nlohmann::json matrix = nlohmann::json::array();
        for (int i = 0; i < m.points(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < m.points(); ++j) {
                row.push_back(m.distance(i, j));
            }
            matrix.push_back(std::move(row));
        }
        spaces.push_back(std::move(matrix));
    }
    return nlohmann::json{{"alphabet", to_json(x.alphabet())}, {"spaces", std::move(spaces)}};
}

SpaceFamily family_from_json(const nlohmann::json& j) {
    LoadedAlphabet la = load_alphabet(get_field(j, "alphabet", "family"));
    const nlohmann::json& spaces = get_field(j, "spaces", "family");
    if (!spaces.is_array()) {
        throw Error("family spaces must be an array");
    }
    std::vector<DistanceMatrix> members;
    members.reserve(spaces.size());
    for (const auto& entry : spaces) {
        if (entry.is_array()) {
            int points = 0;
            std::vector<int> entries = load_matrix_entries(la, entry, points);
            members.emplace_back(la.alphabet, points, std::move(entries));
        } else if (entry.is_object()) {
            DistanceMatrix m = entry.contains("alphabet") ? space_from_json(entry)
                                                          : load_space(la, entry);
            if (m.alphabet() != la.alphabet) {
                throw Error("family members must share the family alphabet");
            }
            members.push_back(std::move(m));
        } else {
            throw Error("family spaces must hold matrices or space objects");
        }
    }
    return SpaceFamily(la.alphabet, std::move(members));
}

nlohmann::json to_json(const FunctionSet& s) {
    nlohmann::json functions = nlohmann::json::array();
    for (const GridFunction& f : s.members()) {
        nlohmann::json table = nlohmann::json::array();
        for (int i = 0; i < s.alphabet().size(); ++i) {
            table.push_back(f.image_value(i));
        }
        functions.push_back(std::move(table));
    }
    return nlohmann::json{{"alphabet", to_json(s.alphabet())},
                          {"functions", std::move(functions)}};
}

FunctionSet function_set_from_json(const nlohmann::json& j) {
    LoadedAlphabet la = load_alphabet(get_field(j, "alphabet", "function set"));
    const nlohmann::json& functions = get_field(j, "functions", "function set");
    if (!functions.is_array()) {
        throw Error("function set functions must be an array");
    }
    std::vector<GridFunction> members;
    members.reserve(functions.size());
    for (const auto& table : functions) {
        if (!table.is_array()) {
            throw Error("function tables must be arrays");
        }
        if (static_cast<int>(table.size()) != la.alphabet.size()) {
            throw Error("function table has " + std::to_string(table.size()) +
                        " entries for an alphabet of size " +
                        std::to_string(la.alphabet.size()));
        }
        std::vector<int> indices;
        indices.reserve(table.size());
        for (const auto& cell : table) {
            indices.push_back(index_of_raw(la, get_int(cell, "table entry"), "table"));
        }
        members.emplace_back(la.alphabet, std::move(indices));
    }
    return FunctionSet(la.alphabet, std::move(members));
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json counterexamples = nlohmann::json::array();
    for (const nlohmann::json& c : r.counterexamples) {
        counterexamples.push_back(c);
    }
    return nlohmann::json{
        {"check", r.check_id},
        {"status", std::string(status_name(r.status))},
        {"parameters", r.parameters.is_null() ? nlohmann::json::object() : r.parameters},
        {"instances", r.instances_checked},
        {"counterexamples", std::move(counterexamples)}};
}

nlohmann::json parse_json_text(std::string_view text, std::string_view origin) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("invalid JSON from " + std::string(origin) + ": " + e.what());
    }
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path);
}

} // namespace presmon
