#pragma once

#include "algch/charclasses.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace algch::io {

using json = nlohmann::json;

/// Graded bundle, connections on it and an optional metric, for the `cs` command.
struct RepresentationDoc {
    GradedBundle bundle;
    std::vector<Connection> connections;
    std::optional<HermitianMetric> metric;
};

/// An input file: an algebroid plus optional TM-connection, Ad(A) metric, representation.
/// The algebroid is not validated here; callers decide whether to report or reject.
struct Document {
    ConstantAlgebroid algebroid;
    std::optional<TangentConnection> tm;
    std::optional<HermitianMetric> metric;
    std::optional<RepresentationDoc> representation;
};

/// Throws Error with "<source>:<line>:<col>" for syntax errors and a field path
/// (e.g. brackets[1].coeffs[2]) for schema errors.
Document parse_document(const std::string& text, const std::string& source = "<input>");
Document load_document(const std::string& path);

Scalar scalar_from_json(const json& j, const std::string& path);
json scalar_to_json(const Scalar& s);
json matrix_to_json(const Matrix& m);

/// Canonical form: rank, base_dim, row-major anchor strings, brackets for i < j with a nonzero row.
json algebroid_to_json(const ConstantAlgebroid& a);
json document_to_json(const Document& d);

/// {"degree": k, "terms": [{"indices": [1-based...], "value": ...}]} listing nonzero entries.
json form_to_json(const ScalarForm& f);
std::string form_to_string(const ScalarForm& f);

} // namespace algch::io
