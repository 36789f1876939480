#pragma once

#include <string>

#include "ptl/document.hpp"
#include "ptl/linfty.hpp"
#include "ptl/zoo.hpp"

namespace ptl {

struct CommandOptions {
  std::string doc_path;
  std::string map_name;
  std::string candidate_name;
  std::string on = "total";  // check-leibniz: total | g | h
  int max_degree = 2;
  long budget = 1000000;
  std::string subalgebra = "full";  // full | b-prime | b-double-prime | m
  std::string kind;                 // zoo commands
  std::string field_spec = "rational";
  std::string out_path;  // twist / zoo-build: write the produced document here
};

struct CommandResult {
  int exit_code = 0;  // 0 verdict true, 1 verdict false (2 = error, set by callers)
  nlohmann::json report;
};

/// Dispatches one engine operation. Throws ptl::Error for usage and engine
/// failures; the CLI maps those to exit code 2. Structured reports carry no
/// timing, so identical inputs produce byte-identical output.
CommandResult run_command(const std::string& command, const CommandOptions& opts);

std::string render_text(const nlohmann::json& report);

PairSubalgebra parse_subalgebra(const std::string& name);

/// Built-in example documents ("presets") for zoo-build; deterministic given
/// (kind, field).
AlgebraDocument zoo_preset_document(ExampleKind kind, const Field& f);

/// Reconstructs the builder inputs of `kind` from a document, validating that
/// the document's structure maps have exactly the kind's shape.
ExampleInputs extract_example_inputs(ExampleKind kind, const AlgebraDocument& doc);

}  // namespace ptl
