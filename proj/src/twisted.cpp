#include "lal/twisted.hpp"

#include <functional>
#include <stdexcept>

namespace lal {

Rat grading_shift(const TwistParams& p) {
  if (p.n < 1) throw std::domain_error("twist order must be positive");
  return -Rat(p.m) * (Rat(p.s) - Rat(p.m) * p.k) / Rat(p.n);
}

Rat zero_mode_shift(const TwistParams& p) {
  if (p.n < 1) throw std::domain_error("twist order must be positive");
  return Rat(-2 * p.m) * p.k / Rat(p.n);
}

namespace {

Rat component_weight(const TwistedComponent& comp) {
  const RootSystem& rs = root_system(comp.type);
  const AlgebraInfo info = algebra_info(comp.type);
  if (comp.level < 1) throw std::domain_error("level must be positive");
  for (long l : comp.labels)
    if (l < 0) throw std::domain_error("weight labels must be non-negative");
  Vec lambda = rs.weight_from_labels(comp.labels);
  if (rs.theta_level(lambda) > comp.level)
    throw std::domain_error("weight is not integrable at this level");

  const Vec& rho = rs.weyl_vector;
  Rat hv = info.dual_coxeter;
  Rat k = comp.level;
  Rat rho2 = rs.ip(rho, rho);

  // minimum of (−ρ|μ) over the weights of V(λ); must equal −(ρ|λ)
  Rat min_term = -max_rho_pairing(comp.type, comp.labels);
  if (min_term != -rs.ip(rho, lambda))
    throw std::logic_error("weight-system minimum differs from -(rho|lambda)");

  Rat direct = rs.ip(lambda, lambda) / (2 * (k + hv)) +
               rs.ip(lambda, rho) / (k + hv) + min_term / hv +
               k * rho2 / (2 * hv * hv);

  Vec diff(lambda.size());
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = hv * lambda[i] - k * rho[i];
  Rat closed =
      (rs.ip(diff, diff) + k * hv * rho2) / (2 * hv * hv * (k + hv));
  if (direct != closed)
    throw std::logic_error("twisted weight: direct and closed forms disagree");
  return direct;
}

}  // namespace

Rat twisted_conformal_weight(const TwistedWeightInput& in) {
  Rat w = 0;
  for (const auto& comp : in.components) w += component_weight(comp);
  return w;
}

TwistedMinimum minimize_twisted_weight(
    const std::vector<LevelledAlgebra>& comps) {
  if (comps.empty()) throw std::domain_error("no components");
  for (const auto& c : comps)
    if (c.type.rank > 8 || c.level > 4)
      throw std::domain_error("enumeration capped at rank 8 and level 4");

  std::vector<std::vector<std::vector<long>>> grids;
  for (const auto& c : comps) grids.push_back(integrable_weights(c));

  TwistedMinimum out;
  bool first = true;
  std::vector<std::vector<long>> cur(comps.size());
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == comps.size()) {
      TwistedWeightInput in;
      for (std::size_t i = 0; i < comps.size(); ++i)
        in.components.push_back({comps[i].type, comps[i].level, cur[i]});
      Rat w = twisted_conformal_weight(in);
      if (first || w < out.min) {
        out.min = w;
        out.argmin.clear();
        first = false;
      }
      if (w == out.min) out.argmin.push_back(cur);
      return;
    }
    for (const auto& labels : grids[idx]) {
      cur[idx] = labels;
      rec(idx + 1);
    }
  };
  rec(0);
  return out;
}

Rat twisted_weight_lower_bound(const Candidate& c) {
  WReport r = w_report(c);
  if (!r.admissible)
    throw std::domain_error("candidate is not admissible: " + c.str());
  Rat sum = 0;
  for (const auto& comp : c.components) {
    Rat hv = algebra_info(comp.type).dual_coxeter;
    Rat k = comp.level;
    sum += k * weyl_vector_norm(comp.type) / (2 * hv * (k + hv));
  }
  return sum;
}

Rat twist_norm_gap(long k, const Rat& kk, const Rat& n) {
  Rat a = -n + Rat(k) * kk;
  Rat b = n + Rat(k - 2) * kk;
  return a * a - b * b;
}

}  // namespace lal
