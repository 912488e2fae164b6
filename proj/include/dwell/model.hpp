#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dwell {

// Error with a stable machine-readable code alongside the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

enum class Species { boson, fermion };

// a_s sentinel for the unitarity regime |a_s| -> infinity (alpha = 1 exactly).
inline constexpr double kUnitarity = std::numeric_limits<double>::infinity();

// Dimensionless trap and interaction parameters. Units: hbar = m = omega_z = 1,
// lengths in a_l = sqrt(hbar/(m omega_z)), energies in hbar*omega_z.
struct ModelParams {
  double lambda_bar = 0.5;       // quartic strength
  double eta_bar = 2.0;          // well minimum position (+/- eta)
  double omega_rho_ratio = 10.0; // omega_rho / omega_z, radial confinement
  double r0 = 0.1;               // interaction range
  double a_s = kUnitarity;       // s-wave scattering length, +/-inf = unitarity
  int n_particles = 2;
  Species species = Species::boson;

  double a_rho() const { return 1.0 / omega_rho_ratio; }
  bool unitarity() const { return std::isinf(a_s); }

  // Throws Error("params-invalid") on violation of any invariant.
  void validate() const;
};

// Quartic double well V(z) = 0.5*lambda^2*(z^2 - eta^2)^2, zero at z = +/- eta.
double dw_potential(double z_bar, const ModelParams& params);

// Barrier height V(0) = 0.5*lambda^2*eta^4.
double barrier_height(const ModelParams& params);

}  // namespace dwell
