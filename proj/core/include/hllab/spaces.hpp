#pragma once

#include <optional>
#include <string>

#include "hllab/radial.hpp"
#include "hllab/seq.hpp"

namespace hllab {

/// Numeric resolution controls shared by all circle/radial computations.
/// M = 0 means "choose from the degree" (auto_samples).
struct Resolution {
  std::size_t M = 0;
  std::size_t K = 512;
  double grade = 3.0;

  std::size_t samples_for(std::size_t degree) const;
};

enum class SpaceFamily {
  hardy_lorentz,    // H^{p,q}
  bergman_sobolev,  // H(p,q,alpha,beta)
  blocked,          // l(p,q,alpha)
  lp_seq,           // l^s with power weight
  ces,              // ces(s)
  bloch,            // H(inf,inf,1,1)
  little_bloch_metric,
  bmoa,
  lipschitz,        // sup_t omega_s(f)(t)/t^alpha
  zygmund,          // sup_t Omega_s(f)(t)/t
  hardy_sobolev,    // f^{[beta]} in H^s
};

struct SpaceSpec {
  SpaceFamily family = SpaceFamily::hardy_lorentz;
  double p = 2.0;
  double q = 2.0;
  double alpha = 1.0;
  double beta = 0.0;
  double s = 2.0;
  Resolution res;

  static SpaceSpec hardy_lorentz_space(double p, double q);
  static SpaceSpec bergman(double p, double q, double alpha, double beta = 0.0);
  static SpaceSpec blocked_space(double p, double q, double alpha);
  static SpaceSpec lp_space(double s, double alpha = 0.0);
  static SpaceSpec ces_space(double s);
  static SpaceSpec bloch_space();
  static SpaceSpec bmoa_space();
  static SpaceSpec lipschitz_space(double alpha, double s);
  static SpaceSpec zygmund_space(double s);
  static SpaceSpec hardy_sobolev_space(double s, double beta);

  /// Stable display form, e.g. "hl:0.5:1" or "sob:2:2:1:0.5".
  std::string describe() const;
};

/// Validates the family's parameter domain; throws invalid_argument.
void validate(const SpaceSpec& spec);

/// Quasinorm of f in the described space. Dispatches to the boundary,
/// radial, and sequence layers.
double space_norm(const CoefficientSeries& f, const SpaceSpec& spec);

/// Parse "hl:0.5:inf", "berg:2:2:1", "lp:2", "ces:2", "bloch", ... as used
/// by the CLI. Returns nullopt on malformed text.
std::optional<SpaceSpec> parse_space_spec(const std::string& text);

}  // namespace hllab
