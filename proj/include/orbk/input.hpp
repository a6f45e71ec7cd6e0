#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orbk/matrix.hpp"
#include "orbk/sectors.hpp"

namespace orbk {

struct MatrixGroupInput {
  std::size_t dimension = 1;
  unsigned conductor = 1;
  Geometry geometry = Geometry::linear;
  std::vector<Matrix> generators;

  friend bool operator==(const MatrixGroupInput&, const MatrixGroupInput&) = default;
};

struct WeightedProjectiveInput {
  std::vector<unsigned> weights;

  friend bool operator==(const WeightedProjectiveInput&, const WeightedProjectiveInput&) = default;
};

/// A parsed input file:
///   {"kind": "matrix_group", "dimension": n, "conductor": N,
///    "geometry": "point" | "linear", "generators": [[["expr", ...], ...], ...]}
///   {"kind": "weighted_projective", "weights": [w0, ..., wn]}
/// with an optional "name" string.
struct InputSpec {
  std::optional<std::string> name;
  std::variant<MatrixGroupInput, WeightedProjectiveInput> body;

  bool is_matrix_group() const noexcept { return std::holds_alternative<MatrixGroupInput>(body); }
  const MatrixGroupInput& matrix_group() const { return std::get<MatrixGroupInput>(body); }
  const WeightedProjectiveInput& weighted_projective() const { return std::get<WeightedProjectiveInput>(body); }

  friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

/// Throws Error(SyntaxError | SemanticError) whose message starts with
/// "line L, column C: ".
InputSpec parse_input(std::string_view text);

/// Canonical JSON text (sorted keys, canonical expressions) that parses back
/// to an equal InputSpec.
std::string serialize_input(const InputSpec& spec);

}  // namespace orbk
