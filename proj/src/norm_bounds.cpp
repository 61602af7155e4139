#include "quivoa/norm_bounds.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "quivoa/error.hpp"
#include "quivoa/mispace.hpp"
#include "quivoa/parallel.hpp"
#include "quivoa/reps.hpp"

namespace quivoa {

namespace {

constexpr double kImprove = 1e-15;

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = seed ^ (a * 0x9E3779B97F4A7C15ull) ^ (b * 0xC2B2AE3D27D4EB4Full);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct Candidate {
  double value = -1.0;
  std::string witness;

  void offer(double v, const std::string& w) {
    if (v > value + kImprove) {
      value = v;
      witness = w;
    }
  }
  void offer(const Candidate& o) { offer(o.value, o.witness); }
};

std::string subset_str(const DirectedMultigraph& q, std::uint32_t subset) {
  std::string s = "{";
  bool first = true;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (!((subset >> v) & 1u)) continue;
    if (!first) s += ",";
    s += q.vertex_id(v);
    first = false;
  }
  return s + "}";
}

double eval_angles(const DirectedMultigraph& base, const AlgebraElement& x,
                   std::uint32_t subset, const std::vector<int>& internal,
                   const std::vector<double>& angles) {
  std::map<int, std::complex<double>> lambda;
  for (size_t i = 0; i < internal.size(); ++i)
    lambda[internal[i]] = std::polar(1.0, angles[i]);
  const Character c = Character::make(base, subset, std::move(lambda));
  return std::abs(char_eval(c, x));
}

// Best character value over one component: torus grid (full enumeration when
// small, seeded starts otherwise) followed by improvement-only coordinate
// ascent and local window refinement. The maximum of |char_eval| over the
// polydisc is attained on the torus since the value is a polynomial in lambda.
Candidate sweep_component(const DirectedMultigraph& base, const AlgebraElement& x,
                          std::uint32_t subset, const BoundConfig& cfg) {
  const std::vector<int> internal = internal_edges(base, subset);
  const size_t m = internal.size();
  const std::string witness = "character S=" + subset_str(base, subset);

  Candidate best;
  if (m == 0) {
    best.offer(eval_angles(base, x, subset, internal, {}), witness);
    return best;
  }

  std::vector<double> best_angles(m, 0.0);
  best.offer(eval_angles(base, x, subset, internal, best_angles), witness);

  const int g = cfg.character_grid;
  double grid_cells = 1.0;
  for (size_t i = 0; i < m; ++i) grid_cells *= g;

  if (grid_cells <= 4096.0) {
    std::vector<int> idx(m, 0);
    std::vector<double> angles(m, 0.0);
    while (true) {
      for (size_t i = 0; i < m; ++i) angles[i] = 2.0 * M_PI * idx[i] / g;
      const double v = eval_angles(base, x, subset, internal, angles);
      if (v > best.value + kImprove) {
        best.offer(v, witness);
        best_angles = angles;
      }
      size_t carry = 0;
      while (carry < m && ++idx[carry] == g) idx[carry++] = 0;
      if (carry == m) break;
    }
  } else {
    std::mt19937_64 rng(mix(cfg.seed, 0x43484152ull, subset));
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<double> angles(m);
      for (size_t i = 0; i < m; ++i)
        angles[i] = 2.0 * M_PI * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
      const double v = eval_angles(base, x, subset, internal, angles);
      if (v > best.value + kImprove) {
        best.offer(v, witness);
        best_angles = angles;
      }
    }
  }

  // Coordinate ascent on the grid angles, then shrinking-window refinement.
  std::vector<double> angles = best_angles;
  for (int pass = 0; pass < cfg.refinement_steps; ++pass) {
    bool improved = false;
    for (size_t c = 0; c < m; ++c) {
      for (int k = 0; k < g; ++k) {
        const double saved = angles[c];
        angles[c] = 2.0 * M_PI * k / g;
        const double v = eval_angles(base, x, subset, internal, angles);
        if (v > best.value + kImprove) {
          best.offer(v, witness);
          improved = true;
        } else {
          angles[c] = saved;
        }
      }
    }
    if (!improved) break;
  }
  double window = 2.0 * M_PI / g;
  for (int pass = 0; pass < cfg.refinement_steps; ++pass) {
    bool improved = false;
    for (size_t c = 0; c < m; ++c) {
      for (const double delta : {window, -window, window / 2, -window / 2}) {
        const double saved = angles[c];
        angles[c] = saved + delta;
        const double v = eval_angles(base, x, subset, internal, angles);
        if (v > best.value + kImprove) {
          best.offer(v, witness);
          improved = true;
        } else {
          angles[c] = saved;
        }
      }
    }
    if (!improved) window /= 2;
  }
  return best;
}

Candidate sweep_characters(const DirectedMultigraph& base, const AlgebraElement& x,
                           const BoundConfig& cfg) {
  const int n = base.vertex_count();
  if (n > kMaxSubsetVertices)
    throw CapacityError("norm bounds: vertex count exceeds subset capacity");
  const std::uint32_t count = (1u << n) - 1;
  std::vector<Candidate> results(count);
  parallel_for(count, [&](std::size_t i) {
    results[i] = sweep_component(base, x, static_cast<std::uint32_t>(i + 1), cfg);
  });
  Candidate best;
  for (const auto& r : results) best.offer(r);
  return best;
}

Candidate sweep_nest_families(const DirectedMultigraph& q, const AlgebraElement& x,
                              const BoundConfig& cfg) {
  Candidate best;
  for (int v = 0; v < q.vertex_count(); ++v) {
    for (int w = 0; w < q.vertex_count(); ++w) {
      if (v == w) continue;
      std::vector<int> relevant;
      for (int e = 0; e < q.edge_count(); ++e) {
        const auto& edge = q.edge(e);
        const bool hits = (edge.rng == v && edge.src == w) ||
                          (edge.rng == v && edge.src == v) ||
                          (edge.rng == w && edge.src == w);
        if (hits) relevant.push_back(e);
      }
      const std::string where =
          "nest family (" + q.vertex_id(v) + "," + q.vertex_id(w) + ")";
      std::mt19937_64 rng(mix(cfg.seed, 0x4E455354ull, (std::uint64_t(v) << 32) | w));
      const int trials = relevant.empty() ? 1 : cfg.rep_trials + 1;
      for (int trial = 0; trial < trials; ++trial) {
        NestFamilyParams params;
        for (const int e : relevant) {
          const double angle =
              trial == 0 ? 0.0
                         : 2.0 * M_PI * (static_cast<double>(rng() >> 11) /
                                         9007199254740992.0);
          params.edge_params[e] = std::polar(1.0, angle);
        }
        const GraphRep rep = nest_family(q, v, w, params);
        rep.validate();
        best.offer(operator_norm(rep_eval(rep, x)), where);
      }
    }
  }
  return best;
}

}  // namespace

void BoundConfig::validate() const {
  if (character_grid < 1 || refinement_steps < 1 || rep_trials < 1 || rep_dims.empty())
    throw DomainError("bound config: all counts must be >= 1");
  for (const int d : rep_dims)
    if (d < 1 || d > kMaxRepDim)
      throw DomainError("bound config: representation dimension outside [1, 32]");
}

NormBounds oa_norm_bounds(const DirectedMultigraph& q, const AlgebraElement& x,
                          const BoundConfig& cfg) {
  cfg.validate();
  if (x.doubled() || x.graph() != q)
    throw DomainError("oa_norm_bounds: element must be over the given plain graph");
  if (x.is_zero()) return NormBounds{0.0, 0.0, "zero element", "l1"};

  Candidate best = sweep_characters(q, x, cfg);
  best.offer(sweep_nest_families(q, x, cfg));
  for (const int dim : cfg.rep_dims) {
    for (int trial = 0; trial < cfg.rep_trials; ++trial) {
      const GraphRep rep = random_graph_rep(q, dim, mix(cfg.seed, dim, trial));
      rep.validate();
      best.offer(operator_norm(rep_eval(rep, x)),
                 "random rep dim=" + std::to_string(dim) + " trial=" + std::to_string(trial));
    }
  }
  return NormBounds{best.value, ell1(x), best.witness, "l1"};
}

NormBounds gcm_norm_bounds(const DoubledGraph& d, const AlgebraElement& x,
                           const BoundConfig& cfg) {
  cfg.validate();
  if (!x.doubled() || x.doubled()->graph != d.graph)
    throw DomainError("gcm_norm_bounds: element must be over the given doubled graph");
  if (x.is_zero()) return NormBounds{0.0, 0.0, "zero element", "l1"};

  Candidate best = sweep_characters(d.base, x, cfg);
  bool self_adjoint = false;
  {
    const AlgebraElement diff = adjoint(x) - x;
    self_adjoint = diff.is_zero();
  }
  for (const int dim : cfg.rep_dims) {
    for (int trial = 0; trial < cfg.rep_trials; ++trial) {
      const GraphRep rep = random_star_rep(d, dim, mix(cfg.seed, dim, trial));
      rep.validate();
      std::string witness =
          "star rep dim=" + std::to_string(dim) + " trial=" + std::to_string(trial);
      if (self_adjoint) witness += " (self-adjoint: norm = spectral radius)";
      best.offer(operator_norm(rep_eval(rep, x)), witness);
    }
  }
  return NormBounds{best.value, ell1(x), best.witness, "l1"};
}

}  // namespace quivoa
