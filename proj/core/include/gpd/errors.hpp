#pragma once

#include <stdexcept>
#include <string>

namespace gpd {

// Malformed input data: dangling ids, non-dense numbering, bad JSON shape.
// Distinct from an axiom violation (a well-formed table that fails a law).
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard tripped (candidate-triple caps, table materialization caps).
// Never silently truncate; always refuse loudly.
struct BoundError : std::runtime_error {
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition failure on otherwise well-formed data (n > truncation bound,
// mismatched groupoids in a composite, q out of supported range).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gpd
