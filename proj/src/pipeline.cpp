#include "milnor/pipeline.hpp"

#include <exception>
#include <sstream>

namespace milnor {

std::string to_string(Stage s) {
  switch (s) {
    case Stage::Fan: return "fan";
    case Stage::Gcdt: return "gcdt";
    case Stage::Gmult: return "gmult";
    case Stage::Gplomb: return "gplomb";
    case Stage::Reduced: return "reduced";
  }
  return "?";
}

std::optional<Stage> parse_stage(const std::string& s) {
  for (Stage x : {Stage::Fan, Stage::Gcdt, Stage::Gmult, Stage::Gplomb, Stage::Reduced})
    if (to_string(x) == s) return x;
  return std::nullopt;
}

ErrorCode error_code_of(const HypothesisReport& r) {
  if (r.ok()) return ErrorCode::Ok;
  switch (r.violations.front().kind) {
    case HypothesisKind::SupportOutsideDual: return ErrorCode::SupportOutsideDual;
    case HypothesisKind::ZeroInSupport: return ErrorCode::ZeroInSupport;
    case HypothesisKind::Unsuitable: return ErrorCode::Unsuitable;
    case HypothesisKind::SmoothingViolated: return ErrorCode::SmoothingViolated;
  }
  return ErrorCode::Malformed;
}

namespace {

// Runs one stage, re-throwing failures with the stage name attached.
template <class F>
auto staged(const std::string& stage, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const PipelineError&) {
    throw;
  } catch (const milnor::BudgetExhausted& e) {
    throw PipelineError(ErrorCode::BudgetExhausted, stage, e.what());
  } catch (const std::logic_error& e) {
    throw PipelineError(ErrorCode::InternalInvariant, stage, e.what());
  } catch (const std::exception& e) {
    throw PipelineError(ErrorCode::InternalInvariant, stage, e.what());
  }
}

void require_empty(const std::string& stage, const std::vector<std::string>& problems) {
  if (problems.empty()) return;
  std::ostringstream os;
  for (std::size_t i = 0; i < problems.size(); ++i) os << (i ? "; " : "") << problems[i];
  throw PipelineError(ErrorCode::InternalInvariant, stage, os.str());
}

}  // namespace

Artifacts run(const ProblemInput& pi) {
  const auto& f = pi.f;
  auto hyp = check_hypotheses(f);
  if (!hyp.ok()) throw PipelineError(error_code_of(hyp), "hypotheses", hyp.violations.front().detail);

  Artifacts a;
  a.nnd = staged("nnd", [&] { return check_nnd(f); });
  if (pi.options.check_nnd && !a.nnd.nondegenerate())
    throw PipelineError(ErrorCode::Degenerate, "nnd", "a compact face truncation is singular on the torus");

  a.hilbert = staged("hilbert_basis", [&] { return hilbert_basis(dual_cone(f.sigma)); });
  a.pg = staged("companion_polyhedron", [&] { return companion_polyhedron(a.hilbert, f.sigma); });
  a.pf = staged("newton", [&] { return NewtonPolyhedron(f.sigma, f.support); });

  AdaptedFanOptions fo;
  fo.subdivision_budget = pi.options.subdivision_budget;
  fo.audit_each_subdivision = pi.options.oracle;
  a.fans = staged("adapted_fan", [&] { return build_adapted_fan(f, *a.pf, *a.pg, fo); });
  require_empty("adapted_fan", a.fans.audit);

  a.gcdt = staged("gcdt", [&] { return build_gcdt(a.fans.adapted, *a.pf, *a.pg); });
  require_empty("gcdt", gcdt_violations(a.gcdt));

  a.gmult = staged("gmult", [&] { return build_gmult(a.gcdt); });
  std::vector<std::string> open;
  for (const auto& s : a.gmult.strings)
    if (!closure_holds(s)) open.push_back("string " + s.a.get_str() + ";" + s.b.get_str() + "," + s.c.get_str() + " does not close");
  require_empty("gmult", open);

  a.gplomb = staged("gplomb", [&] { return build_gplomb(a.gmult.graph); });
  require_empty("gplomb", balance_violations(a.gmult.graph, a.gplomb));

  std::tie(a.reduced, a.trace) = staged("reduced", [&] { return reduce(a.gplomb); });
  staged("reduced", [&] {
    if (!(replay(a.gplomb, a.trace) == a.reduced)) throw std::logic_error("trace replay differs from the reduced graph");
    if (!(reduce(a.reduced).first == a.reduced)) throw std::logic_error("reduction is not idempotent");
    return 0;
  });
  a.invariants = invariants(a.reduced);
  a.planarity = is_planar(a.reduced);
  return a;
}

}  // namespace milnor
