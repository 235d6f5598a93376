#include "adq/io.hpp"

#include <cctype>
#include <fstream>

namespace adq::io {
namespace {

bool small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int parse_decimal(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bare sign is not an integer literal");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("invalid integer literal: " + s);
  return Int(s);
}

RingElement parse_entry(const Json& j, const Domain& d) {
  if (d.kind == DomainKind::Integers) {
    if (j.is_string()) return RingElement::integer(parse_decimal(j.get<std::string>()));
    if (j.is_number_integer()) return RingElement::integer(Int(j.get<long long>()));
    throw ParseError("integer entries must be decimal strings");
  }
  if (!j.is_array()) throw ParseError("polynomial entries must be coefficient arrays");
  std::vector<std::uint64_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw ParseError("polynomial coefficients must be nonnegative integers");
    c.push_back(x.get<std::uint64_t>());
  }
  if (static_cast<int>(c.size()) - 1 > kMaxPolyDegree)
    throw ParseError("polynomial degree exceeds the limit of 12");
  return RingElement::poly(d.p, std::move(c));
}

}  // namespace

Mat2 parse_matrix_document(const Json& doc) {
  if (!doc.is_object() || !doc.contains("ring") || !doc.contains("matrix"))
    throw ParseError("document must carry 'ring' and 'matrix' fields");
  const Json& ring = doc["ring"];
  if (!ring.is_object() || !ring.contains("kind"))
    throw ParseError("ring descriptor must carry a 'kind'");
  Domain d;
  std::string kind = ring["kind"].get<std::string>();
  if (kind == "int") {
    d = Domain{DomainKind::Integers, 0};
  } else if (kind == "polyfp") {
    if (!ring.contains("p") || !ring["p"].is_number_integer() || ring["p"].get<long long>() < 2)
      throw ParseError("polyfp ring requires an integer modulus 'p' >= 2");
    std::uint64_t p = ring["p"].get<std::uint64_t>();
    if (p >= (1ull << 31)) throw ParseError("modulus too large");
    if (!small_prime(p)) throw ParseError("modulus not prime");
    d = Domain{DomainKind::PolyFp, p};
  } else {
    throw ParseError("unknown ring kind: " + kind);
  }
  const Json& m = doc["matrix"];
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
      m[0].size() != 2 || m[1].size() != 2)
    throw ParseError("matrix must be a 2x2 entry array");
  return {parse_entry(m[0][0], d), parse_entry(m[0][1], d), parse_entry(m[1][0], d),
          parse_entry(m[1][1], d)};
}

Mat2 parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_matrix_document(doc);
}

Json element_json(const RingElement& e) {
  if (e.domain().kind == DomainKind::Integers) return e.int_value().str();
  return Json(e.coeffs());
}

Json matrix_json(const Mat2& m) {
  return Json::array({Json::array({element_json(m.at(0, 0)), element_json(m.at(0, 1))}),
                      Json::array({element_json(m.at(1, 0)), element_json(m.at(1, 1))})});
}

Json ring_json(const Domain& d) {
  if (d.kind == DomainKind::Integers) return Json{{"kind", "int"}};
  return Json{{"kind", "polyfp"}, {"p", d.p}};
}

Json matrix_document(const Mat2& m) {
  return Json{{"ring", ring_json(m.domain())}, {"matrix", matrix_json(m)}};
}

Json snf_json(const SmithDecomposition& d) {
  return Json{{"P", matrix_json(d.P)},
              {"diag", Json::array({element_json(d.alpha1), element_json(d.alpha2)})},
              {"Q", matrix_json(d.Q)}};
}

}  // namespace adq::io
