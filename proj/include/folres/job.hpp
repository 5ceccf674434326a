#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "folres/foliation.hpp"
#include "folres/indices.hpp"
#include "folres/projective.hpp"

namespace folres {

struct ProjectiveSettings {
  /// Name of the coordinate set to 1.
  std::string chart;
};

/// A parsed job document. Components are automatic when `components` is empty.
struct JobFile {
  std::vector<std::string> variables;
  Presentation presentation;
  std::optional<std::vector<DeclaredComponent>> components;
  std::optional<ProjectiveSettings> projective;
  IndexOptions options;
  std::optional<FaultInjection> fault;
};

/// Parses a JSON job. Errors: SyntaxError (JSON errors carry line and column, expression
/// errors name the offending field), UnknownVariable, InvalidInput.
JobFile parse_job(std::string_view json_text);

/// Reads and parses a job file; InvalidInput if it cannot be read.
JobFile load_job(const std::string& path);

/// Normalized JSON: fixed key order, polynomials re-rendered, rationals as "p/q" strings.
std::string serialize_job(const JobFile& job);

/// Homogeneous presentation of a projective job; InvalidInput unless it is logarithmic.
LogarithmicPresentation homogeneous_presentation(const JobFile& job);

}  // namespace folres
