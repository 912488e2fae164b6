#include "dwell/model.hpp"

namespace dwell {

void ModelParams::validate() const {
  auto fail = [](const std::string& msg) { throw Error("params-invalid", msg); };
  if (!(lambda_bar > 0.0)) fail("lambda_bar must be > 0");
  if (!(eta_bar > 0.0)) fail("eta_bar must be > 0");
  if (!(omega_rho_ratio >= 1.0)) fail("omega_rho_ratio must be >= 1");
  if (!(r0 > 0.0)) fail("r0 must be > 0");
  if (n_particles < 1) fail("n_particles must be >= 1");
  if (species == Species::fermion && n_particles != 2 && n_particles != 3)
    fail("fermion n_particles must be 2 or 3");
  if (!unitarity() && a_s > 0.0 && 2.0 * r0 / a_s >= 1.0)
    fail("2*r0/a_s must be < 1 for positive a_s (alpha real)");
}

double dw_potential(double z_bar, const ModelParams& params) {
  const double d = z_bar * z_bar - params.eta_bar * params.eta_bar;
  return 0.5 * params.lambda_bar * params.lambda_bar * d * d;
}

double barrier_height(const ModelParams& params) {
  const double e2 = params.eta_bar * params.eta_bar;
  return 0.5 * params.lambda_bar * params.lambda_bar * e2 * e2;
}

}  // namespace dwell
