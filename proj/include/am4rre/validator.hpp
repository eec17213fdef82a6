#pragma once

#include "am4rre/metamodel.hpp"

#include <vector>

namespace am4rre {

struct ApplicabilityResult;

// Well-formedness rules over a resolved model. Violations are returned, never
// thrown; output is canonicalized by (code, span).
//
//   E-VAL-001  layer conformance (defensive; cannot fire for models built
//              through the parser)
//   E-VAL-002  delegation triad: delegators need delegates_to -> delegatee and
//              owes_duty_to -> obligee links; endpoint roles must match
//   E-VAL-003  maps_to person-type conformance
//   E-VAL-004  ensures_consistent_application_of must point from the act of
//              lower force to the act of higher force
//   E-VAL-005  sign-off role not entitled to accept that milestone (warning)
//   E-VAL-006  jurisdiction/field referenced by an act has empty criteria
//   E-VAL-007  demand source_act must name a regulatory act (error); warning
//              when the act is known to be inapplicable
//   E-VAL-008  missing required property
//
// The applicability result, when already available, enables the E-VAL-007
// inapplicable-source warning; pass nullptr otherwise.
std::vector<Diagnostic> check(const ArtifactModel& model,
                              const ApplicabilityResult* applicability = nullptr);

} // namespace am4rre
