// Copyright 2026 The pteq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON matrix files:
//
//   {
//     "dim": 4,
//     "dims": [2, 2],
//     "entries": [
//       [[re, im], [re, im], ...],
//       ...
//     ]
//   }
//
// "dims" is optional. Numbers are written in shortest round-trip form, so
// parse -> serialize is a fixed point after the first pass.

#ifndef PTEQ_MATRIX_IO_HPP
#define PTEQ_MATRIX_IO_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pteq/bipartite.hpp"
#include "pteq/linalg.hpp"

namespace pteq {

/// Malformed JSON or a document that does not follow the matrix schema.
/// `byte()` is the 1-based offset reported by the JSON parser, or 0 for
/// schema errors.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &what, std::size_t byte) : std::runtime_error(what), byte_(byte) {}
    std::size_t byte() const noexcept { return byte_; }

   private:
    std::size_t byte_;
};

struct MatrixFile {
    CMatrix matrix;
    std::optional<BipartiteDims> dims;
};

namespace detail {

inline double read_number(const nlohmann::json &j, const std::string &where) {
    if (!j.is_number()) {
        throw ParseError(where + " must be a number", 0);
    }
    const double x = j.get<double>();
    if (!std::isfinite(x)) {
        throw ParseError(where + " is not finite", 0);
    }
    return x;
}

inline std::string json_number(double x) { return nlohmann::json(x).dump(); }

}  // namespace detail

inline MatrixFile parse_matrix_file(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(), e.byte);
    }
    if (!doc.is_object()) {
        throw ParseError("matrix file must be a JSON object", 0);
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
        throw ParseError("\"dim\" must be a positive integer", 0);
    }
    const auto dim = doc["dim"].get<std::size_t>();

    std::optional<BipartiteDims> dims;
    if (doc.contains("dims") && !doc["dims"].is_null()) {
        const auto &jd = doc["dims"];
        if (!jd.is_array() || jd.size() != 2 || !jd[0].is_number_unsigned() || !jd[1].is_number_unsigned()) {
            throw ParseError("\"dims\" must be a pair of positive integers [m, n]", 0);
        }
        dims.emplace(jd[0].get<std::size_t>(), jd[1].get<std::size_t>());
    }

    if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].size() != dim) {
        throw ParseError("\"entries\" must be an array of " + std::to_string(dim) + " rows", 0);
    }
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto &row = doc["entries"][i];
        if (!row.is_array() || row.size() != dim) {
            throw ParseError("row " + std::to_string(i) + " must hold " + std::to_string(dim) + " entries", 0);
        }
        for (std::size_t j = 0; j < dim; ++j) {
            const auto &z = row[j];
            const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (!z.is_array() || z.size() != 2) {
                throw ParseError(where + " must be an [re, im] pair", 0);
            }
            entries.emplace_back(detail::read_number(z[0], where + " real part"),
                                 detail::read_number(z[1], where + " imaginary part"));
        }
    }
    return {CMatrix(dim, std::move(entries)), dims};
}

inline std::string serialize_matrix_file(const MatrixFile &file) {
    const CMatrix &a = file.matrix;
    std::ostringstream out;
    out << "{\n  \"dim\": " << a.dim() << ",\n";
    if (file.dims) {
        out << "  \"dims\": [" << file.dims->m() << ", " << file.dims->n() << "],\n";
    }
    out << "  \"entries\": [\n";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out << "    [";
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Complex z = a(i, j);
            out << (j == 0 ? "" : ", ") << '[' << detail::json_number(z.real()) << ", "
                << detail::json_number(z.imag()) << ']';
        }
        out << ']' << (i + 1 == a.dim() ? "\n" : ",\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

}  // namespace pteq

#endif  // PTEQ_MATRIX_IO_HPP
