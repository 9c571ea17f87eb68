#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "driftkl/permutation.hpp"

namespace driftkl {

enum class OutputFormat { Json, Csv, Latex };

/// Throws Error{ParseError}.
OutputFormat parse_format(const std::string& name);

struct ComputeRequest {
  Permutation v;
  Permutation w;
  /// Subset of P, Q, H, Horacle, Htilde, mult, complex, tree, in output order.
  std::vector<std::string> quantities{"P"};
};

/// Splits and validates a comma-separated quantity list. Throws
/// Error{ParseError}.
std::vector<std::string> parse_quantities(const std::string& list);

/// Polynomials become coefficient arrays from q^0. Throws
/// Error{NotComparable}, and Error{NotCovexillary} when anything besides P
/// is requested for a w containing 3412.
nlohmann::ordered_json cmd_compute(const ComputeRequest& request);

std::string render(const nlohmann::ordered_json& result, OutputFormat format);

struct ExampleCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// Recomputes the worked examples and compares against the stored values.
std::vector<ExampleCheck> reproduce_examples();

}  // namespace driftkl
