#pragma once
//
// JSON matrix documents and report serialization shared by the CLI and the
// test suites.  Integers travel as decimal strings; polynomials as
// ascending coefficient arrays.
//
#include "adq/mat2.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace adq::io {

using Json = nlohmann::ordered_json;

/// Malformed input document; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxPolyDegree = 12;

Mat2 parse_matrix_document(const Json& doc);
Mat2 parse_matrix_file(const std::string& path);

Json element_json(const RingElement& e);
Json matrix_json(const Mat2& m);
Json ring_json(const Domain& d);
Json matrix_document(const Mat2& m);  // full document with ring header
Json snf_json(const SmithDecomposition& d);

}  // namespace adq::io
