#pragma once

#include <iosfwd>
#include <string>

#include "assocforge/equations.hpp"
#include "assocforge/grt.hpp"

namespace assocforge {

/// Exact byte format shared by associator and GRT element files:
///
///   assoc v1            (or "grt v1")
///   strands 3
///   max_degree <M>
///   parity <even|none>
///   term <deg> <num>/<den> <monomial>
///
/// Terms sorted by degree then lexicographically by monomial text, in
/// lowest terms with positive denominator; the empty monomial prints "-".
std::string format_associator(const AssociatorCandidate& phi);
std::string format_grt_element(const GrtElement& g);

/// Parses either format; the header decides which. Parsing validates the
/// shape only (normal-form monomials, degrees within bound); it does not
/// re-verify the defining equations.
struct ParsedElement {
  enum class Kind { associator, grt };
  Kind kind;
  ChordSeries series;
  bool even = false;
};

ParsedElement parse_element(const std::string& text);
ParsedElement read_element_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace assocforge
