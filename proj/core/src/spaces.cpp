#include "hllab/spaces.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hllab {

std::size_t Resolution::samples_for(std::size_t degree) const {
  if (M != 0) {
    if (M < degree + 1)
      throw resolution_error("resolution: M < deg f + 1");
    return M;
  }
  return auto_samples(degree);
}

SpaceSpec SpaceSpec::hardy_lorentz_space(double p, double q) {
  SpaceSpec s;
  s.family = SpaceFamily::hardy_lorentz;
  s.p = p;
  s.q = q;
  return s;
}
SpaceSpec SpaceSpec::bergman(double p, double q, double alpha, double beta) {
  SpaceSpec s;
  s.family = SpaceFamily::bergman_sobolev;
  s.p = p;
  s.q = q;
  s.alpha = alpha;
  s.beta = beta;
  return s;
}
SpaceSpec SpaceSpec::blocked_space(double p, double q, double alpha) {
  SpaceSpec s;
  s.family = SpaceFamily::blocked;
  s.p = p;
  s.q = q;
  s.alpha = alpha;
  return s;
}
SpaceSpec SpaceSpec::lp_space(double s_, double alpha) {
  SpaceSpec s;
  s.family = SpaceFamily::lp_seq;
  s.s = s_;
  s.alpha = alpha;
  return s;
}
SpaceSpec SpaceSpec::ces_space(double s_) {
  SpaceSpec s;
  s.family = SpaceFamily::ces;
  s.s = s_;
  return s;
}
SpaceSpec SpaceSpec::bloch_space() {
  SpaceSpec s;
  s.family = SpaceFamily::bloch;
  return s;
}
SpaceSpec SpaceSpec::bmoa_space() {
  SpaceSpec s;
  s.family = SpaceFamily::bmoa;
  return s;
}
SpaceSpec SpaceSpec::lipschitz_space(double alpha, double s_) {
  SpaceSpec s;
  s.family = SpaceFamily::lipschitz;
  s.alpha = alpha;
  s.s = s_;
  return s;
}
SpaceSpec SpaceSpec::zygmund_space(double s_) {
  SpaceSpec s;
  s.family = SpaceFamily::zygmund;
  s.s = s_;
  return s;
}
SpaceSpec SpaceSpec::hardy_sobolev_space(double s_, double beta) {
  SpaceSpec s;
  s.family = SpaceFamily::hardy_sobolev;
  s.s = s_;
  s.beta = beta;
  return s;
}

namespace {

std::string num(double x) {
  if (is_inf(x)) return "inf";
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::string SpaceSpec::describe() const {
  switch (family) {
    case SpaceFamily::hardy_lorentz:
      return "hl:" + num(p) + ":" + num(q);
    case SpaceFamily::bergman_sobolev:
      return beta == 0.0 ? "berg:" + num(p) + ":" + num(q) + ":" + num(alpha)
                         : "sob:" + num(p) + ":" + num(q) + ":" + num(alpha) + ":" + num(beta);
    case SpaceFamily::blocked:
      return "blocked:" + num(p) + ":" + num(q) + ":" + num(alpha);
    case SpaceFamily::lp_seq:
      return alpha == 0.0 ? "lp:" + num(s) : "lp:" + num(s) + ":" + num(alpha);
    case SpaceFamily::ces:
      return "ces:" + num(s);
    case SpaceFamily::bloch:
      return "bloch";
    case SpaceFamily::little_bloch_metric:
      return "littlebloch";
    case SpaceFamily::bmoa:
      return "bmoa";
    case SpaceFamily::lipschitz:
      return "lip:" + num(alpha) + ":" + num(s);
    case SpaceFamily::zygmund:
      return "zyg:" + num(s);
    case SpaceFamily::hardy_sobolev:
      return "hsob:" + num(s) + ":" + num(beta);
  }
  return "?";
}

void validate(const SpaceSpec& spec) {
  auto positive = [](double x, const char* name) {
    if (!(x > 0.0)) throw std::invalid_argument(std::string("space: ") + name + " must be positive");
  };
  switch (spec.family) {
    case SpaceFamily::hardy_lorentz:
      positive(spec.p, "p");
      positive(spec.q, "q");
      if (is_inf(spec.p) && !is_inf(spec.q))
        throw std::invalid_argument("space: H^{inf,q} with q != inf is trivial; rejected");
      break;
    case SpaceFamily::bergman_sobolev:
      positive(spec.p, "p");
      positive(spec.q, "q");
      positive(spec.alpha, "alpha");
      break;
    case SpaceFamily::blocked:
      positive(spec.p, "p");
      positive(spec.q, "q");
      break;
    case SpaceFamily::lp_seq:
      positive(spec.s, "s");
      break;
    case SpaceFamily::ces:
      if (!(spec.s > 1.0) || is_inf(spec.s))
        throw std::invalid_argument("space: ces(s) needs s in (1, inf)");
      break;
    case SpaceFamily::lipschitz:
      if (!(spec.alpha > 0.0 && spec.alpha < 1.0))
        throw std::invalid_argument("space: Lipschitz order must lie in (0,1)");
      if (!(spec.s >= 1.0)) throw std::invalid_argument("space: Lipschitz mean exponent needs s >= 1");
      break;
    case SpaceFamily::zygmund:
      if (!(spec.s >= 1.0)) throw std::invalid_argument("space: Zygmund mean exponent needs s >= 1");
      break;
    case SpaceFamily::hardy_sobolev:
      positive(spec.s, "s");
      break;
    case SpaceFamily::bloch:
    case SpaceFamily::little_bloch_metric:
    case SpaceFamily::bmoa:
      break;
  }
}

namespace {

double sup_over_dyadic_scales(const CircleSamples& samples, int order, double p,
                              double alpha_exponent) {
  // sup over t = 2 pi 2^i / M of omega(t) / t^alpha, omega = running max of
  // the shift-difference table.
  const std::size_t M = samples.count();
  const std::vector<double> table = shift_difference_table(samples, order, p);
  double best = 0.0;
  double running = 0.0;
  std::size_t covered = 0;
  for (std::size_t i = 1; i <= M / 2; i *= 2) {
    while (covered < i) {
      running = std::max(running, table[covered]);
      ++covered;
    }
    const double t = 2.0 * std::numbers::pi * double(i) / double(M);
    best = std::max(best, running / std::pow(t, alpha_exponent));
  }
  return best;
}

}  // namespace

double space_norm(const CoefficientSeries& f, const SpaceSpec& spec) {
  validate(spec);
  const Resolution& res = spec.res;
  switch (spec.family) {
    case SpaceFamily::hardy_lorentz:
      return hardy_lorentz_norm(f, spec.p, spec.q, res.samples_for(f.degree()));
    case SpaceFamily::bergman_sobolev: {
      const RadialGrid grid = graded_radial_grid(res.K, res.grade);
      return sobolev_quasinorm(f, MixedNormSpec{spec.p, spec.q, spec.alpha, spec.beta}, grid,
                               res.samples_for(f.degree()));
    }
    case SpaceFamily::blocked:
      return blocked_norm(BlockedSeq{f.coeffs()}, spec.p, spec.q, PowerWeight{spec.alpha});
    case SpaceFamily::lp_seq:
      return lp_seq_norm(BlockedSeq{f.coeffs()}, spec.s, PowerWeight{spec.alpha});
    case SpaceFamily::ces:
      return ces_norm(BlockedSeq{f.coeffs()}, spec.s, 2 * f.size());
    case SpaceFamily::bloch: {
      const RadialGrid grid = graded_radial_grid(res.K, res.grade);
      return sobolev_quasinorm(f, MixedNormSpec{kInf, kInf, 1.0, 1.0}, grid,
                               res.samples_for(f.degree()));
    }
    case SpaceFamily::little_bloch_metric: {
      const RadialGrid grid = graded_radial_grid(res.K, res.grade);
      return h0_decay_metric(f, MixedNormSpec{kInf, kInf, 1.0, 1.0, true}, grid,
                             res.samples_for(f.degree()));
    }
    case SpaceFamily::bmoa:
      return bmoa_seminorm(evaluate_circle(f, 1.0, res.samples_for(f.degree())));
    case SpaceFamily::lipschitz:
      return sup_over_dyadic_scales(evaluate_circle(f, 1.0, res.samples_for(f.degree())), 1,
                                    spec.s, spec.alpha);
    case SpaceFamily::zygmund:
      return sup_over_dyadic_scales(evaluate_circle(f, 1.0, res.samples_for(f.degree())), 2,
                                    spec.s, 1.0);
    case SpaceFamily::hardy_sobolev: {
      const CoefficientSeries g =
          frac_apply(f, FracOrder{spec.beta, FracFlavor::gamma}, FracDirection::derivative);
      return lp_mean(evaluate_circle(g, 1.0, res.samples_for(g.degree())), spec.s);
    }
  }
  throw std::logic_error("space_norm: unknown family");
}

std::optional<SpaceSpec> parse_space_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  auto value = [](const std::string& tok, double& out) {
    if (tok == "inf") {
      out = kInf;
      return true;
    }
    try {
      std::size_t pos = 0;
      out = std::stod(tok, &pos);
      return pos == tok.size();
    } catch (...) {
      return false;
    }
  };
  const std::string& head = parts[0];
  const std::size_t n = parts.size() - 1;
  double a = 0, b = 0, c = 0, d = 0;
  auto get = [&](std::size_t k, double& out) { return k <= n && value(parts[k], out); };
  try {
    if (head == "hl" && n == 2 && get(1, a) && get(2, b)) {
      SpaceSpec s = SpaceSpec::hardy_lorentz_space(a, b);
      validate(s);
      return s;
    }
    if (head == "berg" && n == 3 && get(1, a) && get(2, b) && get(3, c)) {
      SpaceSpec s = SpaceSpec::bergman(a, b, c);
      validate(s);
      return s;
    }
    if (head == "sob" && n == 4 && get(1, a) && get(2, b) && get(3, c) && get(4, d)) {
      SpaceSpec s = SpaceSpec::bergman(a, b, c, d);
      validate(s);
      return s;
    }
    if (head == "dir" && n == 1 && get(1, a)) {
      SpaceSpec s = SpaceSpec::bergman(a, a, 1.0, 1.0);
      validate(s);
      return s;
    }
    if (head == "blocked" && n == 3 && get(1, a) && get(2, b) && get(3, c)) {
      SpaceSpec s = SpaceSpec::blocked_space(a, b, c);
      validate(s);
      return s;
    }
    if (head == "lp" && (n == 1 || n == 2) && get(1, a)) {
      double alpha = 0.0;
      if (n == 2 && !get(2, alpha)) return std::nullopt;
      SpaceSpec s = SpaceSpec::lp_space(a, alpha);
      validate(s);
      return s;
    }
    if (head == "ces" && n == 1 && get(1, a)) {
      SpaceSpec s = SpaceSpec::ces_space(a);
      validate(s);
      return s;
    }
    if (head == "bloch" && n == 0) return SpaceSpec::bloch_space();
    if (head == "littlebloch" && n == 0) {
      SpaceSpec s;
      s.family = SpaceFamily::little_bloch_metric;
      return s;
    }
    if (head == "bmoa" && n == 0) return SpaceSpec::bmoa_space();
    if (head == "lip" && n == 2 && get(1, a) && get(2, b)) {
      SpaceSpec s = SpaceSpec::lipschitz_space(a, b);
      validate(s);
      return s;
    }
    if (head == "zyg" && n == 1 && get(1, a)) {
      SpaceSpec s = SpaceSpec::zygmund_space(a);
      validate(s);
      return s;
    }
    if (head == "hsob" && n == 2 && get(1, a) && get(2, b)) {
      SpaceSpec s = SpaceSpec::hardy_sobolev_space(a, b);
      validate(s);
      return s;
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace hllab
