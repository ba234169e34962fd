// Ordered products, barycentric subdivision, and the simplicial
// approximations to the identity that build the projection composites.
#pragma once

#include <stdexcept>
#include <utility>

#include "sc/maps.hpp"

namespace sc {

/// Which vertex of its parent simplex each barycenter is sent to by an
/// approximation to the identity. Any fixed choice works; the certificate
/// transport operation moves results between the two.
enum class ApproxPolicy { kMinVertex, kMaxVertex };

std::string policy_name(ApproxPolicy policy);
ApproxPolicy policy_from_name(const std::string& name);

/// Ordered product K x L: vertices are all pairs (u,v) in lexicographic
/// order; simplices are chains in the componentwise partial order whose
/// coordinate projections are simplices of the factors.
struct ProductComplex {
  std::shared_ptr<const Complex> complex;
  std::shared_ptr<const Complex> factor1;
  std::shared_ptr<const Complex> factor2;
  std::vector<std::pair<int, int>> vertex_decode;  // product vertex -> (u, v)
};

ProductComplex ordered_product(std::shared_ptr<const Complex> k,
                               std::shared_ptr<const Complex> l);

/// One barycentric subdivision: vertices are the simplices of the parent
/// (ordered by dimension, ties lexicographic), simplices are chains under
/// strict face inclusion.
struct SubdivisionLevel {
  std::shared_ptr<const Complex> complex;
  std::shared_ptr<const Complex> parent;
  std::vector<Simplex> vertex_decode;  // barycenter vertex -> parent simplex
};

SubdivisionLevel barycentric_subdivision(std::shared_ptr<const Complex> k);

/// Number of maximal simplices Sd(K) would have: sum of (dim+1)! over the
/// maximal simplices of K.
long long projected_subdivision_size(const Complex& k);

/// Raised when a construction would exceed the configured size budget; the
/// projected top-simplex count is reported so callers can decide what to do.
struct SizeBudgetError : std::runtime_error {
  long long projected;
  SizeBudgetError(long long projected_size, long long budget)
      : std::runtime_error("construction aborted: projected top-simplex count " +
                           std::to_string(projected_size) + " exceeds size budget " +
                           std::to_string(budget)),
        projected(projected_size) {}
};

inline constexpr long long kDefaultSizeBudget = 10'000'000;

/// Tower of b successive subdivisions over a base complex; level(0) is the
/// base, level(j) = Sd^j(base).
struct SubdivisionTower {
  std::shared_ptr<const Complex> base;
  std::vector<SubdivisionLevel> levels;

  int b() const { return static_cast<int>(levels.size()); }
  const std::shared_ptr<const Complex>& level(int j) const {
    if (j < 0 || j > b()) throw std::invalid_argument("tower level out of range");
    return j == 0 ? base : levels[static_cast<size_t>(j) - 1].complex;
  }
};

SubdivisionTower iterated_subdivision(std::shared_ptr<const Complex> k, int b,
                                      long long size_budget = kDefaultSizeBudget);

/// Simplicial approximation to the identity Sd(parent) -> parent: each
/// barycenter maps to the policy-selected vertex of its parent simplex.
SimplicialMap approx_identity(const SubdivisionLevel& level, ApproxPolicy policy);

/// Projection composite Sd^b(K x L) -> factor_i: the approximations to the
/// identity composed down the tower, followed by the coordinate projection.
/// The tower must have been built over the product complex.
SimplicialMap projection_composite(const ProductComplex& product, const SubdivisionTower& tower,
                                   int factor_index, ApproxPolicy policy);

}  // namespace sc
