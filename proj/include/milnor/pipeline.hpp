#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/adapted_fan.hpp"
#include "milnor/graph_pipeline.hpp"
#include "milnor/newton.hpp"
#include "milnor/plumbing_calculus.hpp"
#include "milnor/semigroup.hpp"

namespace milnor {

// Process exit codes; each failure class has its own.
enum class ErrorCode {
  Ok = 0,
  Usage = 1,
  Malformed = 2,
  NotStronglyConvex = 3,
  SupportOutsideDual = 4,
  Unsuitable = 5,
  SmoothingViolated = 6,
  ZeroInSupport = 7,
  Degenerate = 8,
  InternalInvariant = 10,
  BudgetExhausted = 11,
  OracleMismatch = 12,
};

class PipelineError : public std::runtime_error {
 public:
  PipelineError(ErrorCode code, std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), code_(code), stage_(std::move(stage)) {}
  ErrorCode code() const { return code_; }
  const std::string& stage() const { return stage_; }

 private:
  ErrorCode code_;
  std::string stage_;
};

enum class Stage { Fan, Gcdt, Gmult, Gplomb, Reduced };
enum class Emit { Json, Dot };

std::string to_string(Stage s);
std::optional<Stage> parse_stage(const std::string& s);

struct RunOptions {
  Stage stage = Stage::Reduced;
  Emit emit = Emit::Json;
  bool check_nnd = false;
  bool oracle = false;
  std::size_t subdivision_budget = AdaptedFanOptions{}.subdivision_budget;
};

struct ProblemInput {
  SupportedFunction f;
  RunOptions options;
};

struct Artifacts {
  HilbertBasis hilbert;
  std::optional<NewtonPolyhedron> pf;  // Newton polyhedron of f
  std::optional<NewtonPolyhedron> pg;  // companion polyhedron
  NndReport nnd;
  AdaptedFanResult fans;
  CurveConfigGraph gcdt;
  MultResult gmult;
  PlumbGraph gplomb;
  PlumbGraph reduced;
  ReductionTrace trace;
  GraphInvariants invariants;
  PlanarityVerdict planarity;
};

// Maps hypothesis violations to the error code of the first one; Ok when the report is clean.
ErrorCode error_code_of(const HypothesisReport& r);

// Runs every stage; failures are thrown as PipelineError tagged with the stage name. Structural
// invariant checks run on every call and raise InternalInvariant.
Artifacts run(const ProblemInput& pi);

}  // namespace milnor
