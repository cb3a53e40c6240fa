#pragma once

#include <string>

#include "witt/cohomology.hpp"
#include "witt/tensor.hpp"

namespace witt {

/// Canonical text forms. Printing then parsing is the identity, and parsing
/// then printing lands on these forms byte-exactly.
std::string render(const Scalar& c);
std::string render(const LatticePoint& x);
std::string render(const TorusVector& d);
std::string render(const Monomial& m, int rank);
std::string render(const WittElement& u);
std::string render(const Tensor2& t);
std::string render(const Tensor3& t);

/// One `monomial : tensor` pair per line, in window order.
std::string render(const DerivationTable& table);

}  // namespace witt
