#pragma once

#include <json.hpp>

#include "bistokes/assembly.hpp"
#include "bistokes/noslip.hpp"
#include "bistokes/validation.hpp"

namespace bistokes {

/// Coefficient-set document: case, K, N, arrays, tail_bound.
nlohmann::json coefficients_json(const NoSlipSolution& sol);

/// Constants document: the boundary integrals, rigid constants and the
/// closed-form constants of the solution family.
nlohmann::json constants_json(const Geometry& g);

nlohmann::json check_json(const CheckResult& c);
nlohmann::json rate_fit_json(const RateFit& fit);

}  // namespace bistokes
