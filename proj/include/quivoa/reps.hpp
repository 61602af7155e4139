#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quivoa/algebra.hpp"
#include "quivoa/graph.hpp"

namespace quivoa {

using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxRepDim = 32;
inline constexpr double kRepTol = 1e-9;

// Largest singular value.
double operator_norm(const Matrix& m);

// Minimum eigenvalue >= -tol. Throws if H is not hermitian within tol.
bool psd_check(const Matrix& h, double tol);

// Matrix assignments to generators: orthogonal projections for vertices,
// contractions T with P_{r(e)} T P_{s(e)} = T for edges. Over a doubled
// graph the involution must be implemented by the matrix adjoint.
struct GraphRep {
  const DirectedMultigraph* graph;
  const DoubledGraph* doubled = nullptr;  // set when over a doubled graph
  int dim;
  std::vector<Matrix> vertex_images;  // by vertex index
  std::vector<Matrix> edge_images;    // by edge index

  // Throws DomainError naming the first violated invariant.
  void validate(double tol = kRepTol) const;
};

// Letterwise images multiplied along each word, summed with coefficients.
Matrix rep_eval(const GraphRep& rep, const AlgebraElement& x);

// The 2x2 nest representation isolating a non-loop edge e: s(e) -> E22,
// r(e) -> E11, e -> E12, everything else -> 0.
GraphRep nest_rep(const DirectedMultigraph& q, int e);

// Parameters for a general nest representation with the projection property
// for {v} and {w}: a_e for edges v<-w, lambda for loops at v or w.
// Unlisted edges get 0; moduli must not exceed 1.
struct NestFamilyParams {
  std::map<int, std::complex<double>> edge_params;  // edge index -> value
};

GraphRep nest_family(const DirectedMultigraph& q, int v, int w,
                     const NestFamilyParams& params);

// Rank of the matrix [(pi_e(T_f))_{12}] over N x N where
// N = {e : r(e)=v, s(e)=w}; equals |N| when multiplicity recovery works.
int nest_multiplicity_rank(const DirectedMultigraph& q, int v, int w);

// Seed-deterministic random *-representation of a doubled graph: random
// orthogonal projections, edges compressed and rescaled into contractions,
// partners sent to adjoints.
GraphRep random_star_rep(const DoubledGraph& d, int dim, std::uint64_t seed);

// Same sampling for a plain graph (no adjoint constraint).
GraphRep random_graph_rep(const DirectedMultigraph& q, int dim, std::uint64_t seed);

// Concrete-matrix verification of the free-product positivity lemmas.
struct LemmaReport {
  struct Entry {
    std::string name;
    int trials;
    int failures;
  };
  std::vector<Entry> entries;
  bool all_passed() const;
};

LemmaReport lemma_suite(std::uint64_t seed, int trials);

}  // namespace quivoa
