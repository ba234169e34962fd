// Piecewise-linear motion planning from a verified cover certificate:
// point location in a piece and evaluation of the chain as a PL path.
#pragma once

#include "sc/cover.hpp"

namespace sc {

/// Coordinates for every vertex of a complex. Affine independence is only
/// assumed per simplex, and only for the built-in example embeddings.
struct Embedding {
  int dim = 0;
  std::vector<std::vector<double>> coords;  // coords[v], each of size dim
};

Embedding make_embedding(const Complex& k, int dim, std::vector<std::vector<double>> coords);

/// Product vertices concatenate the factor coordinates.
Embedding product_embedding(const ProductComplex& product, const Embedding& e1,
                            const Embedding& e2);

/// Barycenters sit at the arithmetic mean of their parent simplex.
Embedding subdivision_embedding(const SubdivisionLevel& level, const Embedding& parent);

/// Embedding of the tower's top level induced from a base embedding of K.
Embedding tower_embedding(const ProductTower& t, const Embedding& base);

/// The circle example: triangle inscribed in the unit circle.
Embedding circle_embedding();

/// Location of a configuration pair inside the certificate's cover: the
/// lowest-index piece whose realization contains (x,y), the minimal carrier
/// simplex (ambient tower ids), and its barycentric coordinates.
struct Carrier {
  int piece_index = -1;
  Simplex carrier;
  std::vector<double> weights;
};

inline constexpr double kBarycentricTol = 1e-9;

Carrier locate_carrier(const CoverCertificate& cert, const ProductTower& t,
                       const Embedding& base, const std::vector<double>& x,
                       const std::vector<double>& y, double tol = kBarycentricTol);

/// Piecewise-linear path: breakpoints with non-decreasing times in [0,1].
struct PLPath {
  std::vector<std::vector<double>> breakpoints;
  std::vector<double> times;
};

/// The local rule: connects x to y through the chain images of the carrier,
/// one uniform time segment per hop. Every segment stays inside a single
/// simplex of K (the contiguity simplices for middle segments, the
/// approximation property for the end segments).
PLPath make_path(const CoverCertificate& cert, const ProductTower& t, const Embedding& base,
                 const std::vector<double>& x, const std::vector<double>& y,
                 double tol = kBarycentricTol);

std::vector<double> evaluate_path(const PLPath& path, double t);

}  // namespace sc
