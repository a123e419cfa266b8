#pragma once

// File formats for the CLI: matrix files, ideal files (direct generators or
// minors of a referenced matrix), and identification-sequence files.  Loading
// is field-agnostic; instantiation into a concrete coefficient field happens
// separately so one loaded description serves both GF(p) and rational runs.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "detideal/groebner.hpp"
#include "detideal/poly_io.hpp"
#include "detideal/polymatrix.hpp"
#include "detideal/specialize.hpp"

namespace detideal {

inline nlohmann::json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open", 0);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what(), e.byte);
    }
}

// Identifiers in first-occurrence order, for matrix files that do not name
// their ring explicitly.
inline void collect_identifiers(const std::string& text, std::vector<std::string>& out) {
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_')) {
                ++j;
            }
            std::string name = text.substr(i, j - i);
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
            i = j;
        } else {
            ++i;
        }
    }
}

struct MatrixInput {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::string>> entries;
    std::vector<std::string> vars;
    FieldConfig field = FieldConfig::prime(32003);
};

inline MatrixInput load_matrix_file(const std::filesystem::path& path,
                                    std::optional<FieldConfig> field_override = std::nullopt) {
    nlohmann::json j = load_json_file(path);
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(path.string() + ": " + msg, 0);
    };
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw fail("matrix file needs rows, cols and entries");
    }
    MatrixInput m;
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
        throw fail("rows and cols must be positive integers");
    }
    m.rows = j["rows"].get<std::size_t>();
    m.cols = j["cols"].get<std::size_t>();
    if (!j["entries"].is_array() || j["entries"].size() != m.rows) {
        throw fail("entries must be an array of " + std::to_string(m.rows) + " rows");
    }
    for (const auto& row : j["entries"]) {
        if (!row.is_array() || row.size() != m.cols) {
            throw fail("every entry row must have " + std::to_string(m.cols) + " strings");
        }
        std::vector<std::string> r;
        for (const auto& e : row) {
            if (!e.is_string()) throw fail("matrix entries must be strings");
            r.push_back(e.get<std::string>());
        }
        m.entries.push_back(std::move(r));
    }
    if (j.contains("ring")) {
        const auto& ring = j["ring"];
        if (!ring.is_object() || !ring.contains("vars") || !ring["vars"].is_array()) {
            throw fail("ring needs a vars array");
        }
        for (const auto& v : ring["vars"]) {
            if (!v.is_string()) throw fail("ring vars must be strings");
            m.vars.push_back(v.get<std::string>());
        }
        if (ring.contains("field")) {
            if (!ring["field"].is_string()) throw fail("ring field must be a string");
            m.field = FieldConfig::parse(ring["field"].get<std::string>());
        }
    } else {
        for (const auto& row : m.entries) {
            for (const auto& e : row) collect_identifiers(e, m.vars);
        }
        if (m.vars.empty()) throw fail("no variables found in matrix entries");
    }
    if (field_override) m.field = *field_override;
    return m;
}

template <typename F>
PolyMatrix<F> instantiate_matrix(const MatrixInput& m) {
    RingPtr R = make_ring(m.vars, m.field);
    PolyMatrix<F> out(R, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            out.set(i, j, parse_poly<F>(R, m.entries[i][j]));
        }
    }
    return out;
}

// A matrix file whose entries are bare symbols doubles as a labeled matrix
// (repeated names mark identified entries).
inline LabeledMatrix labeled_from_matrix(const MatrixInput& m) {
    return LabeledMatrix(m.entries);
}

struct IdealInput {
    std::vector<std::string> vars;
    FieldConfig field = FieldConfig::prime(32003);
    std::vector<std::string> generators;
    std::optional<MatrixInput> matrix;   // minor-generated alternative
    std::size_t minors_t = 0;
};

inline IdealInput load_ideal_file(const std::filesystem::path& path,
                                  std::optional<FieldConfig> field_override = std::nullopt) {
    nlohmann::json j = load_json_file(path);
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(path.string() + ": " + msg, 0);
    };
    if (!j.is_object()) throw fail("ideal file must be an object");
    IdealInput out;
    if (j.contains("matrix")) {
        if (!j["matrix"].is_string() || !j.contains("minors") ||
            !j["minors"].is_number_unsigned()) {
            throw fail("minor-generated ideal needs matrix (path) and minors (size)");
        }
        std::filesystem::path ref = j["matrix"].get<std::string>();
        if (ref.is_relative()) ref = path.parent_path() / ref;
        out.matrix = load_matrix_file(ref, field_override);
        out.minors_t = j["minors"].get<std::size_t>();
        out.vars = out.matrix->vars;
        out.field = out.matrix->field;
        return out;
    }
    if (!j.contains("ring") || !j["ring"].is_object() || !j["ring"].contains("vars") ||
        !j["ring"]["vars"].is_array() || !j.contains("generators") ||
        !j["generators"].is_array()) {
        throw fail("ideal file needs ring.vars and generators");
    }
    for (const auto& v : j["ring"]["vars"]) {
        if (!v.is_string()) throw fail("ring vars must be strings");
        out.vars.push_back(v.get<std::string>());
    }
    if (j["ring"].contains("field")) {
        if (!j["ring"]["field"].is_string()) throw fail("ring field must be a string");
        out.field = FieldConfig::parse(j["ring"]["field"].get<std::string>());
    }
    if (field_override) out.field = *field_override;
    for (const auto& g : j["generators"]) {
        if (!g.is_string()) throw fail("generators must be strings");
        out.generators.push_back(g.get<std::string>());
    }
    return out;
}

template <typename F>
Ideal<F> instantiate_ideal(const IdealInput& in) {
    if (in.matrix) {
        auto M = instantiate_matrix<F>(*in.matrix);
        return Ideal<F>(M.ring(), M.minors(in.minors_t));
    }
    RingPtr R = make_ring(in.vars, in.field);
    std::vector<Polynomial<F>> gens;
    for (const auto& g : in.generators) gens.push_back(parse_poly<F>(R, g));
    return Ideal<F>(R, std::move(gens));
}

// Sequence file: {m, n, t, pairs: [[[ar,ac],[br,bc]], ...]} with 1-based
// positions.
inline IdentificationSequence load_sequence_file(const std::filesystem::path& path) {
    nlohmann::json j = load_json_file(path);
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(path.string() + ": " + msg, 0);
    };
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("t") ||
        !j.contains("pairs") || !j["pairs"].is_array()) {
        throw fail("sequence file needs m, n, t and pairs");
    }
    if (!j["m"].is_number_unsigned() || !j["n"].is_number_unsigned() ||
        !j["t"].is_number_unsigned()) {
        throw fail("m, n, t must be positive integers");
    }
    auto position = [&](const nlohmann::json& p) -> Position {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer()) {
            throw fail("positions must be [row, col] integer pairs");
        }
        return {p[0].get<int>(), p[1].get<int>()};
    };
    std::vector<std::pair<Position, Position>> pairs;
    for (const auto& pr : j["pairs"]) {
        if (!pr.is_array() || pr.size() != 2) throw fail("pairs must be [[ar,ac],[br,bc]]");
        pairs.push_back({position(pr[0]), position(pr[1])});
    }
    return IdentificationSequence(j["m"].get<std::size_t>(), j["n"].get<std::size_t>(),
                                  j["t"].get<std::size_t>(), std::move(pairs));
}

}  // namespace detideal
