#include "quivoa/reps.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "quivoa/error.hpp"
#include "quivoa/parallel.hpp"

namespace quivoa {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step over seed ^ salt
  std::uint64_t z = (seed ^ (salt * 0x9E3779B97F4A7C15ull)) + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic standard normal (Box-Muller over the raw generator), so the
// sampled representations do not depend on the standard library's
// distribution implementation.
class Gaussian {
public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double real() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> cplx() { return {real(), real()}; }

  double uniform01() {
    // in (0, 1]
    return (static_cast<double>(rng_() >> 11) + 1.0) / 9007199254740993.0;
  }

  std::uint64_t raw() { return rng_(); }

private:
  std::mt19937_64 rng_;
};

Matrix random_gaussian(Gaussian& g, int rows, int cols) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = g.cplx();
  return m;
}

// Random orthogonal projection of random rank in [0, dim].
Matrix random_projection(Gaussian& g, int dim) {
  const int k = static_cast<int>(g.raw() % static_cast<std::uint64_t>(dim + 1));
  if (k == 0) return Matrix::Zero(dim, dim);
  const Matrix a = random_gaussian(g, dim, k);
  Eigen::HouseholderQR<Matrix> qr(a);
  const Matrix q = Matrix(qr.householderQ()).leftCols(k);
  return q * q.adjoint();
}

Matrix clamp_contraction(const Matrix& t) {
  const double nrm = operator_norm(t);
  if (nrm <= 1.0) return t;
  return t / nrm;
}

}  // namespace

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

bool psd_check(const Matrix& h, double tol) {
  if (h.rows() != h.cols()) throw DomainError("psd_check: matrix not square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw DomainError("psd_check: matrix not hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

void GraphRep::validate(double tol) const {
  const DirectedMultigraph& q = *graph;
  if (static_cast<int>(vertex_images.size()) != q.vertex_count() ||
      static_cast<int>(edge_images.size()) != q.edge_count())
    throw DomainError("rep: image count mismatch");
  for (int v = 0; v < q.vertex_count(); ++v) {
    const Matrix& p = vertex_images[v];
    if (p.rows() != dim || p.cols() != dim) throw DomainError("rep: dimension mismatch");
    if ((p * p - p).cwiseAbs().maxCoeff() > tol)
      throw DomainError("rep: vertex image not idempotent: " + q.vertex_id(v));
    if ((p - p.adjoint()).cwiseAbs().maxCoeff() > tol)
      throw DomainError("rep: vertex image not self-adjoint: " + q.vertex_id(v));
  }
  for (int e = 0; e < q.edge_count(); ++e) {
    const Matrix& t = edge_images[e];
    if (t.rows() != dim || t.cols() != dim) throw DomainError("rep: dimension mismatch");
    if (operator_norm(t) > 1.0 + tol)
      throw DomainError("rep: edge image not contractive: " + q.edge(e).id);
    const Matrix compressed =
        vertex_images[q.edge(e).rng] * t * vertex_images[q.edge(e).src];
    if ((compressed - t).cwiseAbs().maxCoeff() > tol)
      throw DomainError("rep: edge image violates r(e) e s(e) = e: " + q.edge(e).id);
  }
  if (doubled) {
    for (int e = 0; e < q.edge_count(); ++e) {
      const int p = doubled->partner[e];
      if ((edge_images[p] - edge_images[e].adjoint()).cwiseAbs().maxCoeff() > tol)
        throw DomainError("rep: involution not implemented by adjoint: " + q.edge(e).id);
    }
  }
}

Matrix rep_eval(const GraphRep& rep, const AlgebraElement& x) {
  const DirectedMultigraph* xg = x.doubled() ? &x.doubled()->graph : &x.graph();
  if (*xg != *rep.graph) throw DomainError("rep_eval: element over a different graph");

  const int nv = rep.graph->vertex_count();
  Matrix total = Matrix::Zero(rep.dim, rep.dim);
  for (const auto& [w, coeff] : x.terms()) {
    Matrix prod = Matrix::Identity(rep.dim, rep.dim);
    for (const std::int32_t code : w)
      prod = prod * (code < nv ? rep.vertex_images[code] : rep.edge_images[code - nv]);
    total += coeff.to_complex() * prod;
  }
  return total;
}

namespace {

Matrix unit2(int i, int j) {
  Matrix m = Matrix::Zero(2, 2);
  m(i, j) = 1.0;
  return m;
}

}  // namespace

GraphRep nest_rep(const DirectedMultigraph& q, int e) {
  if (e < 0 || e >= q.edge_count()) throw DomainError("nest_rep: bad edge index");
  if (q.edge(e).src == q.edge(e).rng)
    throw DomainError("nest_rep: loop edges have no projection-property nest rep");
  NestFamilyParams params;
  params.edge_params[e] = 1.0;
  return nest_family(q, q.edge(e).rng, q.edge(e).src, params);
}

GraphRep nest_family(const DirectedMultigraph& q, int v, int w,
                     const NestFamilyParams& params) {
  if (v == w) throw DomainError("nest_family: vertices must be distinct");
  if (v < 0 || v >= q.vertex_count() || w < 0 || w >= q.vertex_count())
    throw DomainError("nest_family: vertex index out of range");
  for (const auto& [e, a] : params.edge_params)
    if (std::abs(a) > 1.0 + kRepTol)
      throw DomainError("nest_family: parameter modulus exceeds 1");

  auto param = [&](int e) -> std::complex<double> {
    auto it = params.edge_params.find(e);
    return it == params.edge_params.end() ? 0.0 : it->second;
  };

  GraphRep rep;
  rep.graph = &q;
  rep.dim = 2;
  rep.vertex_images.assign(q.vertex_count(), Matrix::Zero(2, 2));
  rep.vertex_images[v] = unit2(0, 0);
  rep.vertex_images[w] = unit2(1, 1);
  rep.edge_images.assign(q.edge_count(), Matrix::Zero(2, 2));
  for (int e = 0; e < q.edge_count(); ++e) {
    const auto& edge = q.edge(e);
    if (edge.rng == v && edge.src == w) {
      rep.edge_images[e] = param(e) * unit2(0, 1);
    } else if (edge.rng == v && edge.src == v) {
      rep.edge_images[e] = param(e) * unit2(0, 0);
    } else if (edge.rng == w && edge.src == w) {
      rep.edge_images[e] = param(e) * unit2(1, 1);
    }
    // r(e) != v or s(e) != w otherwise: image stays 0.
  }
  return rep;
}

int nest_multiplicity_rank(const DirectedMultigraph& q, int v, int w) {
  std::vector<int> targets;  // N = {e : r(e) = v, s(e) = w}
  for (int e = 0; e < q.edge_count(); ++e)
    if (q.edge(e).rng == v && q.edge(e).src == w) targets.push_back(e);
  const int n = static_cast<int>(targets.size());
  if (n == 0) return 0;

  Matrix eval(n, n);
  for (int i = 0; i < n; ++i) {
    NestFamilyParams params;
    params.edge_params[targets[i]] = 1.0;
    const GraphRep rep = nest_family(q, v, w, params);
    for (int j = 0; j < n; ++j) {
      const Word word{q.vertex_count() + targets[j]};
      eval(i, j) = rep_eval(rep, AlgebraElement::word(q, word))(0, 1);
    }
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(eval);
  qr.setThreshold(1e-8);
  return static_cast<int>(qr.rank());
}

GraphRep random_star_rep(const DoubledGraph& d, int dim, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxRepDim)
    throw CapacityError("random_star_rep: dimension outside [1, 32]");
  Gaussian g(mix_seed(seed, 0x5747415221ull));
  const DirectedMultigraph& q = d.graph;
  const int ne_base = d.base.edge_count();

  GraphRep rep;
  rep.graph = &q;
  rep.doubled = &d;
  rep.dim = dim;
  rep.vertex_images.reserve(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v)
    rep.vertex_images.push_back(random_projection(g, dim));
  rep.edge_images.assign(q.edge_count(), Matrix::Zero(dim, dim));
  for (int e = 0; e < ne_base; ++e) {
    const auto& edge = q.edge(e);
    const Matrix t = clamp_contraction(rep.vertex_images[edge.rng] *
                                       random_gaussian(g, dim, dim) *
                                       rep.vertex_images[edge.src]);
    rep.edge_images[e] = t;
    rep.edge_images[d.partner[e]] = t.adjoint();
  }
  return rep;
}

GraphRep random_graph_rep(const DirectedMultigraph& q, int dim, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxRepDim)
    throw CapacityError("random_graph_rep: dimension outside [1, 32]");
  Gaussian g(mix_seed(seed, 0x504c41494eull));
  GraphRep rep;
  rep.graph = &q;
  rep.dim = dim;
  rep.vertex_images.reserve(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v)
    rep.vertex_images.push_back(random_projection(g, dim));
  rep.edge_images.reserve(q.edge_count());
  for (int e = 0; e < q.edge_count(); ++e) {
    const auto& edge = q.edge(e);
    rep.edge_images.push_back(clamp_contraction(rep.vertex_images[edge.rng] *
                                                random_gaussian(g, dim, dim) *
                                                rep.vertex_images[edge.src]));
  }
  return rep;
}

bool LemmaReport::all_passed() const {
  for (const auto& e : entries)
    if (e.failures > 0) return false;
  return true;
}

namespace {

constexpr double kLemmaTol = 1e-8;

Matrix block2(double t, const Matrix& x) {
  const int n = static_cast<int>(x.rows());
  Matrix b = Matrix::Zero(2 * n, 2 * n);
  b.topLeftCorner(n, n) = t * Matrix::Identity(n, n);
  b.bottomRightCorner(n, n) = t * Matrix::Identity(n, n);
  b.topRightCorner(n, n) = x;
  b.bottomLeftCorner(n, n) = x.adjoint();
  return b;
}

Matrix block_pair(double diag, const Matrix& off) {
  return block2(diag, off);
}

struct TrialOutcome {
  bool ok[7];
};

// One seeded trial instantiating every lemma on concrete matrices. The
// scalar t is kept away from the ||x|| boundary so the two sides of each
// biconditional cannot straddle the tolerance.
TrialOutcome run_trial(std::uint64_t seed) {
  Gaussian g(seed);
  const int n = 1 + static_cast<int>(g.raw() % 6);

  const Matrix x = random_gaussian(g, n, n);
  const Matrix y = random_gaussian(g, n, n);
  const double nx = operator_norm(x);
  const double ny = operator_norm(y);

  // t either clearly above or clearly below ||x|| (margin >= 5%).
  const bool above = (g.raw() & 1) != 0;
  const double u = 0.05 + 0.9 * g.uniform01();
  const double t = above ? nx * (1.0 + u) + 1e-6 : std::max(nx * (1.0 - u) - 1e-6, 0.0);

  const int dim = n;
  const Matrix id = Matrix::Identity(dim, dim);

  TrialOutcome out{};

  // order: [[t,x],[x#,t]] >= 0  iff  t^2 - x#x >= 0
  {
    const bool lhs = psd_check(block2(t, x), kLemmaTol);
    const bool rhs = psd_check(t * t * id - x.adjoint() * x, kLemmaTol);
    out.ok[0] = (lhs == rhs);
  }
  // square: [[t,x],[x#,t]] >= 0  iff  [[t^2, x#x],[x#x, t^2]] >= 0
  {
    const bool lhs = psd_check(block2(t, x), kLemmaTol);
    Matrix b = Matrix::Zero(2 * dim, 2 * dim);
    b.topLeftCorner(dim, dim) = t * t * id;
    b.bottomRightCorner(dim, dim) = t * t * id;
    b.topRightCorner(dim, dim) = x.adjoint() * x;
    b.bottomLeftCorner(dim, dim) = x.adjoint() * x;
    out.ok[1] = (lhs == psd_check(b, kLemmaTol));
  }
  // product: premises at s >= ||x||, t >= ||y|| give [[st, xy],...] >= 0
  {
    const double s2 = nx * (1.0 + 0.05 + g.uniform01()) + 1e-6;
    const double t2 = ny * (1.0 + 0.05 + g.uniform01()) + 1e-6;
    const bool prem = psd_check(block2(s2, x), kLemmaTol) &&
                      psd_check(block2(t2, y), kLemmaTol);
    out.ok[2] = prem && psd_check(block_pair(s2 * t2, x * y), kLemmaTol);
  }
  // sum: same premises give [[s+t, x+y],...] >= 0
  {
    const double s2 = nx * (1.0 + 0.05 + g.uniform01()) + 1e-6;
    const double t2 = ny * (1.0 + 0.05 + g.uniform01()) + 1e-6;
    const bool prem = psd_check(block2(s2, x), kLemmaTol) &&
                      psd_check(block2(t2, y), kLemmaTol);
    out.ok[3] = prem && psd_check(block_pair(s2 + t2, x + y), kLemmaTol);
  }
  // swap: [[s,x],[x#,s]] >= 0  iff  [[s,x#],[x,s]] >= 0
  {
    const bool lhs = psd_check(block2(t, x), kLemmaTol);
    const bool rhs = psd_check(block2(t, Matrix(x.adjoint())), kLemmaTol);
    out.ok[4] = (lhs == rhs);
  }
  // scalar: [[|l|s, lx],[conj(l)x#, |l|s]] >= 0  iff  [[s,x],[x#,s]] >= 0
  {
    const double mod = 0.1 + 1.9 * g.uniform01();
    const double arg = 2.0 * M_PI * g.uniform01();
    const std::complex<double> lambda = std::polar(mod, arg);
    Matrix b = Matrix::Zero(2 * dim, 2 * dim);
    b.topLeftCorner(dim, dim) = std::abs(lambda) * t * id;
    b.bottomRightCorner(dim, dim) = std::abs(lambda) * t * id;
    b.topRightCorner(dim, dim) = lambda * x;
    b.bottomLeftCorner(dim, dim) = std::conj(lambda) * x.adjoint();
    out.ok[5] = (psd_check(b, kLemmaTol) == psd_check(block2(t, x), kLemmaTol));
  }
  // factorization: ||x||^2 - x#x >= 0
  out.ok[6] = psd_check(nx * nx * id - x.adjoint() * x, kLemmaTol);

  return out;
}

}  // namespace

LemmaReport lemma_suite(std::uint64_t seed, int trials) {
  if (trials < 1) throw DomainError("lemma_suite: trials must be >= 1");
  static const char* kNames[7] = {"order",  "square", "product",      "sum",
                                  "swap",   "scalar", "factorization"};

  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
    outcomes[i] = run_trial(mix_seed(seed, 0x4C454D4D41ull + i));
  });

  LemmaReport report;
  for (int k = 0; k < 7; ++k) {
    int failures = 0;
    for (const auto& o : outcomes)
      if (!o.ok[k]) ++failures;
    report.entries.push_back({kNames[k], trials, failures});
  }
  return report;
}

}  // namespace quivoa
