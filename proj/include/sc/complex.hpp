// Finite ordered abstract simplicial complexes, stored by maximal simplices.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sc {

/// A simplex is a strictly increasing list of vertex ids. Vertex ids are
/// positions in the owning complex's ordered label table; the id order is
/// the total vertex order used for products.
using Simplex = std::vector<int>;

bool is_strictly_increasing(const Simplex& s);

/// Subset test for two sorted id lists.
bool is_subset(const Simplex& a, const Simplex& b);

/// Finite ordered abstract simplicial complex. Only maximal simplices are
/// stored (an antichain, in lexicographic order); every face query is a
/// subset test against them. Immutable after construction.
class Complex {
 public:
  /// Validates and normalizes: generators are sorted, deduplicated and
  /// reduced to the maximal antichain. Throws std::invalid_argument on
  /// duplicate labels, out-of-range indices, empty generators, or a vertex
  /// that no generator covers.
  Complex(std::vector<std::string> labels, const std::vector<Simplex>& generators);

  int n_vertices() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(static_cast<size_t>(v)); }
  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
  int dim() const;

  /// True iff s is a subset of some maximal simplex. Throws on invalid ids
  /// or a non-strictly-increasing list.
  bool has_simplex(const Simplex& s) const;

  /// Count of d-simplices for d = 0..dim().
  std::vector<long long> f_vector() const;

  /// Every simplex exactly once, in lexicographic order.
  std::vector<Simplex> all_simplices() const;

  long long euler_characteristic() const;

  /// "{l1,...,lk}" with labels in id order; used for diagnostics and for
  /// canonical barycenter names.
  std::string render_simplex(const Simplex& s) const;

  bool operator==(const Complex& other) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Simplex> maximal_;  // canonical: lexicographically sorted antichain
};

/// Convenience constructor matching the library's build entry point.
Complex build_complex(std::vector<std::string> labels, const std::vector<Simplex>& generators);

std::shared_ptr<const Complex> share(Complex k);

/// d-skeleton: maximal simplices of dimension > d are replaced by their
/// d-faces; lower-dimensional maximal simplices are kept. d >= dim(K)
/// returns K unchanged.
Complex skeleton(const Complex& k, int d);

/// Subcomplex of an ambient complex, stored as an antichain of ambient
/// simplices. Closed under faces by construction. The maximal list may be
/// empty (an empty subcomplex).
struct Subcomplex {
  std::shared_ptr<const Complex> ambient;
  std::vector<Simplex> maximal;
};

/// Validates (each simplex belongs to the ambient complex) and normalizes
/// to a sorted antichain.
Subcomplex make_subcomplex(std::shared_ptr<const Complex> ambient, std::vector<Simplex> simplices);

bool subcomplex_has(const Subcomplex& j, const Simplex& s);

/// True iff every maximal simplex of k is a simplex of at least one piece.
/// Throws if a piece's ambient complex is not k.
bool is_cover(const Complex& k, const std::vector<Subcomplex>& pieces);

/// Renames vertices by a bijection on the existing label set. The label
/// table keeps its positions, so a vertex formerly labelled l moves to the
/// position of perm(l); maximal simplices are re-indexed accordingly.
Complex relabel(const Complex& k, const std::map<std::string, std::string>& perm);

}  // namespace sc
