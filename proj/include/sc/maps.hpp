// Simplicial maps, the contiguity predicate, and contiguity-chain search.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sc/complex.hpp"

namespace sc {

/// Vertex map between two complexes. Totality on domain vertices is an
/// invariant; simpliciality is a checkable predicate, not an invariant.
struct SimplicialMap {
  std::shared_ptr<const Complex> domain;
  std::shared_ptr<const Complex> codomain;
  std::vector<int> images;  // images[v] = image vertex id in codomain

  bool operator==(const SimplicialMap& other) const;
};

SimplicialMap make_map(std::shared_ptr<const Complex> domain,
                       std::shared_ptr<const Complex> codomain, std::vector<int> images);
SimplicialMap identity_map(std::shared_ptr<const Complex> k);
SimplicialMap constant_map(std::shared_ptr<const Complex> domain,
                           std::shared_ptr<const Complex> codomain, int target_vertex);

/// Image of a simplex: sorted, deduplicated vertex set.
Simplex map_simplex(const SimplicialMap& f, const Simplex& s);

/// True iff the image of every maximal simplex of the domain is a simplex
/// of the codomain (faces follow).
bool is_simplicial(const SimplicialMap& f);

/// outer ∘ inner. Throws if inner's codomain differs from outer's domain.
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);

/// Subcomplex of an ambient complex materialized as a standalone complex
/// with inherited vertex order and original labels. to_ambient maps local
/// vertex ids back to ambient ids.
struct MaterializedPiece {
  std::shared_ptr<const Complex> complex;
  std::vector<int> to_ambient;
};

MaterializedPiece materialize(const Subcomplex& j);

/// Restriction of f to a materialized subcomplex of its domain.
SimplicialMap restrict_map(const SimplicialMap& f, const MaterializedPiece& piece);

/// Contiguity (both maps simplicial, shared domain and codomain): for every
/// maximal simplex s, f(s) ∪ g(s) is a simplex of the codomain.
bool contiguous_pair(const SimplicialMap& f, const SimplicialMap& g);

/// Sequence h_0,...,h_c of simplicial maps with consecutive pairs
/// contiguous; length() is c.
struct ContiguityChain {
  std::vector<SimplicialMap> maps;
  int length() const { return static_cast<int>(maps.size()) - 1; }
};

/// Validates the chain invariants; throws std::invalid_argument if violated.
ContiguityChain make_chain(std::vector<SimplicialMap> maps);

struct CheckResult {
  bool ok = false;
  std::string diagnostic;  // names the first failing map/simplex/pair
};

/// Full re-check of a chain against expected endpoint maps (exact vertex
/// tables). Never throws; failures are reported in the diagnostic.
CheckResult verify_chain(const ContiguityChain& chain, const SimplicialMap& expected_start,
                        const SimplicialMap& expected_end);

enum class ChainStrategy {
  kAuto,        // exact BFS when feasible, otherwise greedy + restarts
  kExactBfs,    // complete within c_max; throws if the map space is too big
  kGreedy,      // deterministic greedy sweep toward the target
  kRandomized,  // greedy restarts with permuted vertex acceptance orders
};

struct ChainSearchOptions {
  int c_max = 0;
  ChainStrategy strategy = ChainStrategy::kAuto;
  std::uint64_t seed = 0;
  int restarts = 48;  // search budget for the randomized strategy
};

struct ChainSearchResult {
  /// Empty means the search budget was exhausted; it is NOT a proof that no
  /// chain exists (except for the exact BFS strategy, which is complete
  /// within c_max).
  std::optional<ContiguityChain> chain;
  long long states_explored = 0;
  int restarts_run = 0;
  std::string note;
};

/// Searches for a chain with h_0 = f and h_c = g, c <= c_max. Returned
/// chains are canonical: the minimum under (length, lexicographic image
/// tables) among all successes found within the budget, so results are
/// deterministic for a fixed seed and budget.
ChainSearchResult find_chain(const SimplicialMap& f, const SimplicialMap& g,
                             const ChainSearchOptions& options);

/// Extends a chain to length c_target by repeating the final map.
ContiguityChain pad_chain(const ContiguityChain& chain, int c_target);

/// Re-ends a chain between new endpoint maps that must be 1-contiguous with
/// the old ones (length grows by 2). Used to transport certificates between
/// approximation policies. Throws std::logic_error if the contiguity
/// assertion fails, which would indicate an implementation bug.
ContiguityChain transport_chain(const ContiguityChain& chain, const SimplicialMap& new_start,
                                const SimplicialMap& new_end);

/// Pulls a chain back along lambda (an approximation to the identity of the
/// subdivided domain) and re-ends it between the subdivided-level endpoint
/// maps; length grows by 2. Same contiguity assertions as transport_chain.
ContiguityChain refine_chain(const ContiguityChain& chain, const SimplicialMap& lambda,
                             const SimplicialMap& new_start, const SimplicialMap& new_end);

}  // namespace sc
