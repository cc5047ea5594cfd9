#pragma once

#include "hmorita/forms.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hmorita::io {

/// A form file as read from disk, before any mathematical validation.
///
///   {"algebra": <descriptor>, "side": "D"|"MnD_bar_t"|"MnD_star", "n": int,
///    "k": int, "epsilon": 1|-1|null, "S": <matrix>, "gram": <matrix>}
///
/// "S" is required for MnD_star. A "D" file may also carry "S" (or just "n"),
/// naming the target of a lift.
struct FormDocument {
  AlgebraHandle algebra;
  Side side = Side::OverD;
  std::size_t n = 1;
  std::size_t k = 0;
  Epsilon epsilon;
  std::optional<Matrix> s;
  Matrix gram;
};

nlohmann::ordered_json encode_algebra(const AlgebraDescriptor& algebra);
AlgebraHandle decode_algebra(const nlohmann::json& j);
nlohmann::ordered_json encode_element(const Element& x);
Element decode_element(const nlohmann::json& j, const AlgebraHandle& algebra);
nlohmann::ordered_json encode_matrix(const Matrix& m);
/// Throws ParseError on ragged rows or bad entries.
Matrix decode_matrix(const nlohmann::json& j, const AlgebraHandle& algebra);

/// Structural parse only. Throws ParseError.
FormDocument parse_form_document(std::string_view text);

/// Builds the FormRecord, validating epsilon and S (math errors propagate).
FormRecord to_form(const FormDocument& doc);

/// The involution named by the document's S, if any.
InvolutionHandle document_involution(const FormDocument& doc);

FormRecord read_form(std::string_view text);

/// One top-level key per line, values compact. S is written for MnD_star forms.
std::string write_form(const FormRecord& form);

}  // namespace hmorita::io
