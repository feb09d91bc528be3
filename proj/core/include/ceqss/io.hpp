#pragma once

#include <map>
#include <optional>
#include <string>

#include "ceqss/scheme.hpp"

namespace ceqss {

/// Parsed scheme descriptor.  "grs" takes optional evaluation points
/// (default 1..n); "explicit" takes the six named generator matrices.
/// n may be omitted: it is t+z for grs and the matrix width otherwise.
struct SchemeDescriptor {
  uint32_t q = 0;
  size_t n = 0, t = 0, d = 0, z = 0;
  std::string construction;  // "grs" | "explicit"
  std::optional<std::vector<uint32_t>> points;
  std::optional<std::map<std::string, FqMatrix>> matrices;
};

/// Throws DomainError("descriptor") on malformed JSON content.
SchemeDescriptor parse_descriptor(const std::string& json_text);
std::string emit_descriptor(const SchemeDescriptor& desc);

Scheme scheme_from_descriptor(const SchemeDescriptor& desc,
                              const BuildOptions& opts = {});

/// Deterministic bytes: keys sorted, two-space indent, trailing newline.
std::string emit_scheme(const Scheme& s);
Scheme parse_scheme(const std::string& json_text);
bool scheme_equal(const Scheme& a, const Scheme& b);

/// FNV-1a 64 of the descriptor bytes, hex encoded; reports echo it.
std::string descriptor_hash(const std::string& bytes);

}  // namespace ceqss
