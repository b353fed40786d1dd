#include "bistokes/serialize.hpp"

namespace bistokes {

using nlohmann::json;

json coefficients_json(const NoSlipSolution& sol) {
  json j;
  j["case"] = flow_case_name(sol.flow_case);
  j["R"] = sol.g.R;
  j["delta"] = sol.g.delta;
  j["mu"] = sol.g.mu;
  j["K"] = sol.K;
  j["N"] = sol.N;
  j["tail_bound"] = sol.tail_bound;
  j["truncation_capped"] = sol.truncation_capped;
  switch (sol.flow_case) {
    case FlowCase::Extensional:
      j["a1"] = sol.low1;
      j["b1"] = sol.low2;
      j["an"] = sol.cn;
      j["bn"] = sol.dn;
      break;
    case FlowCase::Shear:
      j["c0"] = sol.low1;
      j["d0"] = sol.low2;
      j["cn"] = sol.cn;
      j["dn"] = sol.dn;
      break;
    case FlowCase::Rotation:
      j["a0p"] = sol.low1;
      j["d0p"] = sol.low2;
      j["anp"] = sol.cn;
      j["bnp"] = sol.dn;
      break;
  }
  return j;
}

json constants_json(const Geometry& g) {
  const IntegralSet is = rigid_constants(g);
  const SingularConstants sc = singular_constants(g);
  const auto [F0, G0] = F0_G0();
  json j;
  j["R"] = g.R;
  j["delta"] = g.delta;
  j["mu"] = g.mu;
  j["a"] = g.a;
  j["s"] = g.s;
  j["A1"] = sc.A1;
  j["B1"] = sc.B1;
  j["A2"] = sc.A2;
  j["C2"] = sc.C2;
  j["K_v"] = K_v_constant(g);
  j["K_rot"] = K_rot_constant(g);
  j["F0"] = F0;
  j["G0"] = G0;
  j["I1"] = is.I1;
  j["I22"] = is.I22;
  j["I23"] = is.I23;
  j["Irot"] = is.Irot;
  j["J1"] = is.J1;
  j["J2"] = is.J2;
  j["Jrot"] = is.Jrot;
  j["c21"] = is.c21;
  j["c22"] = is.c22;
  j["c23"] = is.c23;
  j["system_det"] = is.system_det;
  return j;
}

json check_json(const CheckResult& c) {
  return json{{"check_id", c.id},
              {"target", c.target},
              {"computed", c.computed},
              {"tolerance", c.tolerance},
              {"pass", c.pass}};
}

json rate_fit_json(const RateFit& fit) {
  return json{{"deltas", fit.deltas},
              {"values", fit.values},
              {"slope", fit.slope},
              {"r_squared", fit.r_squared},
              {"excluded_largest", fit.excluded_largest}};
}

}  // namespace bistokes
