#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "gpd/degroupoidify.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/linalg.hpp"
#include "gpd/span.hpp"

namespace gpd::jsonio {

// Input that is not a well-formed document of the expected shape: parse
// failures, missing or extra structure, ids that are not dense from zero,
// references out of range. Distinct from StructuralError, which flags data
// of the right shape whose content breaks the algebraic laws.
class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All emitters produce deterministic text: object keys sorted, no
// whitespace dependence on input order, rationals as "p/q" strings.
//
// Groupoid documents list every morphism and carry the full composition
// table, one row per composable pair; serialization refuses groupoids whose
// table would exceed the row cap rather than truncating it.
std::string groupoid_json(const FiniteGroupoid& g, std::uint64_t max_compose_rows = 250'000);

// Span documents embed the apex and both targets; the legs' source field
// holds the literal reference "apex".
std::string span_json(const Span& s, std::uint64_t max_compose_rows = 250'000);

// State documents embed total and base; the projection's source and target
// fields hold the references "total" and "base".
std::string over_json(const GroupoidOver& v, std::uint64_t max_compose_rows = 250'000);

// {"classes": [...], "entries": [...]} with one class label (representative
// object id) and one "p/q" string per row of the table.
std::string vector_json(const ClassTable& table, const RationalVector& v);

// Row and column class labels plus a row-major nested entry array.
std::string matrix_json(const ClassTable& codomain, const ClassTable& domain,
                        const RationalMatrix& m);

// Plain CSV: header row of column class labels, one row per codomain class,
// leading column the row class label.
std::string matrix_csv(const ClassTable& codomain, const ClassTable& domain,
                       const RationalMatrix& m);

// Wraps a payload emitted by one of the functions above in the result
// envelope used by the command-line tool.
std::string envelope(const std::string& status, const std::string& payload_json);

GroupoidPtr parse_groupoid(const std::string& text);
Span parse_span(const std::string& text);
GroupoidOver parse_over(const std::string& text);

}  // namespace gpd::jsonio
