#include "hmorita/io.hpp"

#include "hmorita/errors.hpp"

#include <limits>
#include <sstream>

namespace hmorita::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t read_count(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

ExactRational decode_rational(const json& j) {
  if (j.is_string()) return ExactRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return ExactRational(j.get<std::int64_t>());
  throw ParseError("rational must be a string like \"-3/7\", got " + j.dump());
}

Side decode_side(const json& j) {
  if (!j.is_string()) throw ParseError("field 'side' must be a string");
  const auto s = j.get<std::string>();
  if (s == "D") return Side::OverD;
  if (s == "MnD_bar_t") return Side::OverMnD_BarT;
  if (s == "MnD_star") return Side::OverMnD_Star;
  throw ParseError("unknown side '" + s + "'");
}

Epsilon decode_epsilon(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v == 1) return Sign::Plus;
    if (v == -1) return Sign::Minus;
  }
  throw ParseError("field 'epsilon' must be 1, -1 or null");
}

}  // namespace

ordered_json encode_algebra(const AlgebraDescriptor& algebra) {
  ordered_json j;
  switch (algebra.kind()) {
    case AlgebraKind::RationalField:
      j["kind"] = "rational";
      break;
    case AlgebraKind::QuadraticExtension:
      j["kind"] = "quadratic";
      j["d"] = algebra.d();
      break;
    case AlgebraKind::Quaternion:
      j["kind"] = "quaternion";
      j["a"] = algebra.a().to_string();
      j["b"] = algebra.b().to_string();
      break;
  }
  return j;
}

AlgebraHandle decode_algebra(const json& j) {
  const json& kind = member(j, "kind");
  if (!kind.is_string()) throw ParseError("algebra 'kind' must be a string");
  const auto name = kind.get<std::string>();
  try {
    if (name == "rational") return AlgebraDescriptor::rational();
    if (name == "quadratic") {
      const json& d = member(j, "d");
      if (!d.is_number_integer() || (d.is_number_unsigned() && d.get<std::uint64_t>() >
                                                                   static_cast<std::uint64_t>(
                                                                       std::numeric_limits<std::int64_t>::max()))) {
        throw ParseError("quadratic 'd' must be an integer below 2^63");
      }
      return AlgebraDescriptor::quadratic(d.get<std::int64_t>());
    }
    if (name == "quaternion") {
      return AlgebraDescriptor::quaternion(decode_rational(member(j, "a")), decode_rational(member(j, "b")));
    }
  } catch (const InvalidDescriptor& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown algebra kind '" + name + "'");
}

ordered_json encode_element(const Element& x) {
  ordered_json j = ordered_json::array();
  for (const auto& c : x.coords()) j.push_back(c.to_string());
  return j;
}

Element decode_element(const json& j, const AlgebraHandle& algebra) {
  if (!j.is_array() || j.size() != algebra->dimension()) {
    throw ParseError("element of " + algebra->name() + " must be an array of " +
                     std::to_string(algebra->dimension()) + " rationals, got " + j.dump());
  }
  std::vector<ExactRational> coords;
  for (const auto& c : j) coords.push_back(decode_rational(c));
  return Element(algebra, std::move(coords));
}

ordered_json encode_matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(encode_element(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix decode_matrix(const json& j, const AlgebraHandle& algebra) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : (j.front().is_array() ? j.front().size() : 0);
  std::vector<Element> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("matrix rows must be arrays of equal length");
    for (const auto& e : row) entries.push_back(decode_element(e, algebra));
  }
  return Matrix(algebra, rows, cols, std::move(entries));
}

FormDocument parse_form_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("form document must be a JSON object");

  AlgebraHandle algebra = decode_algebra(member(j, "algebra"));
  const Side side = decode_side(member(j, "side"));
  const std::size_t n = j.contains("n") ? read_count(j, "n") : 1;
  const std::size_t k = read_count(j, "k");
  const Epsilon eps = decode_epsilon(member(j, "epsilon"));
  Matrix gram = decode_matrix(member(j, "gram"), algebra);
  std::optional<Matrix> s;
  if (j.contains("S") && !j.at("S").is_null()) s = decode_matrix(j.at("S"), algebra);

  if (n == 0) throw ParseError("'n' must be positive");
  if (gram.rows() != k || gram.cols() != k) {
    throw ParseError("'gram' must be " + std::to_string(k) + "x" + std::to_string(k));
  }
  if (side == Side::OverMnD_Star && !s) throw ParseError("side MnD_star requires 'S'");
  if (side == Side::OverMnD_BarT && s) throw ParseError("'S' is not allowed for side MnD_bar_t");
  if (s && (s->rows() != n || s->cols() != n)) {
    throw ParseError("'S' must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  return FormDocument{std::move(algebra), side, n, k, eps, std::move(s), std::move(gram)};
}

InvolutionHandle document_involution(const FormDocument& doc) {
  if (!doc.s) return nullptr;
  return make_involution(*doc.s);
}

FormRecord to_form(const FormDocument& doc) {
  switch (doc.side) {
    case Side::OverD: return FormRecord::over_d(doc.gram, doc.epsilon);
    case Side::OverMnD_BarT: return FormRecord::over_bar_t(doc.gram, doc.n, doc.epsilon);
    case Side::OverMnD_Star: return FormRecord::over_star(doc.gram, document_involution(doc), doc.epsilon);
  }
  throw ParseError("unknown side");
}

FormRecord read_form(std::string_view text) { return to_form(parse_form_document(text)); }

std::string write_form(const FormRecord& form) {
  std::ostringstream os;
  os << "{\n"
     << "  \"algebra\": " << encode_algebra(*form.algebra()).dump() << ",\n"
     << "  \"side\": \"" << to_string(form.side()) << "\",\n"
     << "  \"n\": " << form.n() << ",\n"
     << "  \"k\": " << form.k() << ",\n"
     << "  \"epsilon\": " << (form.epsilon() ? std::to_string(to_int(*form.epsilon())) : "null") << ",\n";
  if (form.side() == Side::OverMnD_Star) os << "  \"S\": " << encode_matrix(form.involution()->S()).dump() << ",\n";
  os << "  \"gram\": " << encode_matrix(form.gram()).dump() << "\n"
     << "}\n";
  return os.str();
}

}  // namespace hmorita::io
