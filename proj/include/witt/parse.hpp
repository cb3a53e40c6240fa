#pragma once

#include <string>
#include <variant>

#include "witt/cohomology.hpp"
#include "witt/tensor.hpp"

namespace witt {

/// One grammar for every command. Whitespace may separate tokens anywhere;
/// rational literals allow none inside. Errors carry 1-based line/column.
///
///   element  :=  '0' | ['-'|'+'] term (('+'|'-') term)*
///   term     :=  [rational '*'] factor
///   factor   :=  ['t' tuple] 'd' tuple
///   tuple    :=  '[' rational (',' rational)* ']'
///   tensor   :=  '0' | ['-'|'+'] tterm (('+'|'-') tterm)*
///   tterm    :=  [rational '*'] factor '(*)' factor ['(*)' factor]
///   rational :=  ['-'|'+'] digits ['/' digits]
Scalar parse_scalar(const std::string& text);
LatticePoint parse_point(const std::string& text, int rank);
WittElement parse_element(const std::string& text, int rank);
Tensor2 parse_tensor2(const std::string& text, int rank);
Tensor3 parse_tensor3(const std::string& text, int rank);

/// Detects the arity from the text. A bare `0` is ambiguous and parses as
/// the zero twofold tensor.
std::variant<Tensor2, Tensor3> parse_tensor_any(const std::string& text,
                                                int rank);

/// Inverse of the table rendering: one `monomial : tensor` pair per line;
/// the window takes the line order.
DerivationTable parse_derivation_table(const std::string& text, int rank);

}  // namespace witt
