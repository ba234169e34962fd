// Cover search over Sd^b(K x K) with c-contiguous projection restrictions:
// certificates, the certificate verifier, and the upper-bound search loop.
#pragma once

#include "sc/constructions.hpp"

namespace sc {

/// The product K x K together with its subdivision tower and, per level,
/// the product simplex supporting each vertex (used by seeding predicates
/// and by the planner).
struct ProductTower {
  std::shared_ptr<const Complex> base_k;
  ProductComplex product;
  SubdivisionTower tower;  // over product.complex
  std::vector<std::vector<Simplex>> supports;  // supports[j][v], j = 0..b

  int b() const { return tower.b(); }
  const std::shared_ptr<const Complex>& level(int j) const { return tower.level(j); }
};

ProductTower build_product_tower(std::shared_ptr<const Complex> k, int b,
                                 long long size_budget = kDefaultSizeBudget);

/// Vertices of K spanned by the supporting product simplex of a tower
/// vertex: all first and second coordinates, sorted and deduplicated.
Simplex base_span(const ProductTower& t, int level, int vertex);

enum class SeedStyle { kDiagonal, kAntidiagonal, kGreedyGrowth };

/// Seed subcomplexes of the tower's top level. Diagonal: every simplex all
/// of whose vertices have a base span that is a simplex of K (so the two
/// projections stay close). Antidiagonal: the closure of the complement.
/// Greedy-growth: one singleton seed per maximal simplex not covered by the
/// existing pieces. Diagonal/antidiagonal return at most one subcomplex.
std::vector<Subcomplex> seed_pieces(const ProductTower& t, SeedStyle style,
                                    const std::vector<Subcomplex>& existing = {});

/// One cover piece together with its verified contiguity chain between the
/// restricted projection composites.
struct PieceCertificate {
  Subcomplex piece;
  ContiguityChain chain;
};

/// Machine-checkable witness for SC^b_c(K) <= pieces - 1: the pieces cover
/// Sd^b(K x K) and each chain connects the restrictions of the two
/// projection composites in at most c contiguity steps.
struct CoverCertificate {
  std::shared_ptr<const Complex> base;
  int b = 0;
  int c = 0;
  ApproxPolicy policy = ApproxPolicy::kMaxVertex;
  std::vector<PieceCertificate> pieces;

  int bound() const { return static_cast<int>(pieces.size()) - 1; }
};

/// Rebuilds the tower and both projection composites deterministically from
/// (base, b, policy) and re-checks the cover, the chain endpoints and every
/// chain step. Never throws on bad certificates; the diagnostic names the
/// failing piece/simplex/step.
CheckResult verify_certificate(const CoverCertificate& cert,
                               long long size_budget = kDefaultSizeBudget);

struct SearchStats {
  long long chain_searches = 0;
  long long restarts = 0;
  long long rebalances = 0;
  std::vector<int> chain_lengths;
  std::vector<size_t> piece_sizes;
};

struct BoundOptions {
  int b = 0;
  int c_max = 0;
  int max_pieces = 1;
  std::uint64_t seed = 0;
  int restart_budget = 48;  // chain-search restarts per piece
  long long size_budget = kDefaultSizeBudget;
  ApproxPolicy policy = ApproxPolicy::kMaxVertex;
};

/// Result of an upper-bound search. A bound is reported only with a
/// verifying certificate attached; absence of a bound means the search
/// budget was exhausted and carries no mathematical claim.
struct BoundReport {
  std::optional<int> bound;
  int b = 0;
  int c_used = 0;
  SearchStats stats;
  std::optional<CoverCertificate> certificate;
  std::string failure_reason;

  std::string summary() const;
};

/// Searches for a cover of Sd^b(K x K) with at most max_pieces pieces whose
/// projection restrictions admit chains of length <= c_max: first the whole
/// complex as a single piece, then the diagonal/antidiagonal split with
/// frontier rebalancing, then greedily grown pieces. Deterministic for
/// fixed inputs. Throws SizeBudgetError if the tower would be too large.
BoundReport sc_upper_bound(std::shared_ptr<const Complex> k, const BoundOptions& options);

/// Monotonicity witness in c: pads every chain to c_target.
CoverCertificate pad_certificate(const CoverCertificate& cert, int c_target);

/// Policy-independence witness: rebuilds the projections under new_policy
/// and re-ends every chain, growing c by 2.
CoverCertificate transport_certificate(const CoverCertificate& cert, ApproxPolicy new_policy,
                                       long long size_budget = kDefaultSizeBudget);

/// Subdivision witness: replaces every piece by its barycentric subdivision
/// inside Sd^{b+1}(K x K) and pulls the chains back along an approximation
/// to the identity, growing c by 2.
CoverCertificate refine_certificate(const CoverCertificate& cert,
                                    long long size_budget = kDefaultSizeBudget);

}  // namespace sc
