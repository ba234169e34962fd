#include "sc/maps.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sc {

bool SimplicialMap::operator==(const SimplicialMap& other) const {
  return images == other.images && *domain == *other.domain && *codomain == *other.codomain;
}

SimplicialMap make_map(std::shared_ptr<const Complex> domain,
                       std::shared_ptr<const Complex> codomain, std::vector<int> images) {
  if (!domain || !codomain) throw std::invalid_argument("map needs domain and codomain");
  if (static_cast<int>(images.size()) != domain->n_vertices())
    throw std::invalid_argument("image table must be total on domain vertices");
  for (int v : images)
    if (v < 0 || v >= codomain->n_vertices())
      throw std::invalid_argument("image vertex id out of range");
  return SimplicialMap{std::move(domain), std::move(codomain), std::move(images)};
}

SimplicialMap identity_map(std::shared_ptr<const Complex> k) {
  std::vector<int> images(static_cast<size_t>(k->n_vertices()));
  for (size_t v = 0; v < images.size(); ++v) images[v] = static_cast<int>(v);
  auto cod = k;
  return SimplicialMap{std::move(k), std::move(cod), std::move(images)};
}

SimplicialMap constant_map(std::shared_ptr<const Complex> domain,
                           std::shared_ptr<const Complex> codomain, int target_vertex) {
  if (target_vertex < 0 || target_vertex >= codomain->n_vertices())
    throw std::invalid_argument("constant map target out of range");
  std::vector<int> images(static_cast<size_t>(domain->n_vertices()), target_vertex);
  return SimplicialMap{std::move(domain), std::move(codomain), std::move(images)};
}

Simplex map_simplex(const SimplicialMap& f, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(f.images[static_cast<size_t>(v)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simplicial(const SimplicialMap& f) {
  for (const auto& m : f.domain->maximal_simplices())
    if (!f.codomain->has_simplex(map_simplex(f, m))) return false;
  return true;
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  if (!(*inner.codomain == *outer.domain))
    throw std::invalid_argument("compose: incompatible complexes");
  std::vector<int> images;
  images.reserve(inner.images.size());
  for (int v : inner.images) images.push_back(outer.images[static_cast<size_t>(v)]);
  return SimplicialMap{inner.domain, outer.codomain, std::move(images)};
}

MaterializedPiece materialize(const Subcomplex& j) {
  if (j.maximal.empty()) throw std::invalid_argument("cannot materialize an empty subcomplex");
  std::vector<int> verts;
  for (const auto& m : j.maximal) verts.insert(verts.end(), m.begin(), m.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> local(static_cast<size_t>(j.ambient->n_vertices()), -1);
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    local[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    labels.push_back(j.ambient->label(verts[i]));
  }
  std::vector<Simplex> gens;
  gens.reserve(j.maximal.size());
  for (const auto& m : j.maximal) {
    Simplex g;
    g.reserve(m.size());
    for (int v : m) g.push_back(local[static_cast<size_t>(v)]);
    gens.push_back(std::move(g));
  }
  MaterializedPiece piece;
  piece.complex = share(Complex(std::move(labels), gens));
  piece.to_ambient = std::move(verts);
  return piece;
}

SimplicialMap restrict_map(const SimplicialMap& f, const MaterializedPiece& piece) {
  std::vector<int> images;
  images.reserve(piece.to_ambient.size());
  for (int v : piece.to_ambient) {
    if (v < 0 || v >= f.domain->n_vertices())
      throw std::invalid_argument("restriction piece is not inside the map domain");
    images.push_back(f.images[static_cast<size_t>(v)]);
  }
  return SimplicialMap{piece.complex, f.codomain, std::move(images)};
}

namespace {

// Contiguity over raw image tables; all preconditions already checked.
bool tables_contiguous(const Complex& dom, const Complex& cod, const std::vector<int>& a,
                       const std::vector<int>& b) {
  Simplex u;
  for (const auto& m : dom.maximal_simplices()) {
    u.clear();
    for (int v : m) {
      u.push_back(a[static_cast<size_t>(v)]);
      u.push_back(b[static_cast<size_t>(v)]);
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (!cod.has_simplex(u)) return false;
  }
  return true;
}

void require_parallel(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(*f.domain == *g.domain) || !(*f.codomain == *g.codomain))
    throw std::invalid_argument("maps must share domain and codomain");
}

}  // namespace

bool contiguous_pair(const SimplicialMap& f, const SimplicialMap& g) {
  require_parallel(f, g);
  if (!is_simplicial(f) || !is_simplicial(g))
    throw std::invalid_argument("contiguous_pair requires simplicial maps");
  return tables_contiguous(*f.domain, *f.codomain, f.images, g.images);
}

namespace {

std::string chain_problem(const ContiguityChain& chain) {
  if (chain.maps.empty()) return "chain has no maps";
  const auto& dom = *chain.maps.front().domain;
  const auto& cod = *chain.maps.front().codomain;
  for (size_t i = 0; i < chain.maps.size(); ++i) {
    const auto& h = chain.maps[i];
    if (!(*h.domain == dom) || !(*h.codomain == cod))
      return "map " + std::to_string(i) + " does not share the chain's domain/codomain";
    for (const auto& m : dom.maximal_simplices()) {
      if (!cod.has_simplex(map_simplex(h, m)))
        return "map " + std::to_string(i) + " is not simplicial: image of " +
               dom.render_simplex(m) + " is " + cod.render_simplex(map_simplex(h, m));
    }
  }
  for (size_t i = 1; i < chain.maps.size(); ++i) {
    const auto& a = chain.maps[i - 1];
    const auto& b = chain.maps[i];
    for (const auto& m : dom.maximal_simplices()) {
      Simplex u = map_simplex(a, m);
      Simplex v = map_simplex(b, m);
      u.insert(u.end(), v.begin(), v.end());
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      if (!cod.has_simplex(u))
        return "maps " + std::to_string(i - 1) + "," + std::to_string(i) +
               " are not contiguous on " + dom.render_simplex(m) + ": union image " +
               cod.render_simplex(u) + " is not a simplex";
    }
  }
  return {};
}

}  // namespace

ContiguityChain make_chain(std::vector<SimplicialMap> maps) {
  ContiguityChain chain{std::move(maps)};
  auto problem = chain_problem(chain);
  if (!problem.empty()) throw std::invalid_argument("invalid contiguity chain: " + problem);
  return chain;
}

CheckResult verify_chain(const ContiguityChain& chain, const SimplicialMap& expected_start,
                        const SimplicialMap& expected_end) {
  auto problem = chain_problem(chain);
  if (!problem.empty()) return {false, problem};
  if (!(chain.maps.front() == expected_start))
    return {false, "chain start does not match the expected vertex table"};
  if (!(chain.maps.back() == expected_end))
    return {false, "chain end does not match the expected vertex table"};
  return {true, {}};
}

// ---------------------------------------------------------------------------
// chain search

namespace {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(next()) *
                             static_cast<unsigned __int128>(n)) >>
                            64);
  }
};

// Canonical order: shorter chains first, then lexicographic over the
// concatenated image tables. Certificates are required to be deterministic,
// so every strategy reports its successes through this comparison.
bool chain_less(const ContiguityChain& a, const ContiguityChain& b) {
  if (a.maps.size() != b.maps.size()) return a.maps.size() < b.maps.size();
  for (size_t i = 0; i < a.maps.size(); ++i) {
    if (a.maps[i].images != b.maps[i].images) return a.maps[i].images < b.maps[i].images;
  }
  return false;
}

constexpr long long kBfsSpaceLimit = 1'000'000;
constexpr long long kBfsWorkLimit = 400'000'000;

bool bfs_feasible(const Complex& dom, const Complex& cod, long long max_count) {
  long long count = 1;
  for (int v = 0; v < dom.n_vertices(); ++v) {
    count *= cod.n_vertices();
    if (count > max_count) return false;
  }
  return true;
}

std::optional<ContiguityChain> exact_bfs(const SimplicialMap& f, const SimplicialMap& g,
                                         int c_max, long long& states_explored) {
  const Complex& dom = *f.domain;
  const Complex& cod = *f.codomain;
  const int nd = dom.n_vertices();
  const int nc = cod.n_vertices();

  // Enumerate all simplicial vertex maps in lexicographic table order.
  std::vector<std::vector<int>> states;
  std::vector<int> table(static_cast<size_t>(nd), 0);
  while (true) {
    bool ok = true;
    for (const auto& m : dom.maximal_simplices()) {
      Simplex img;
      for (int v : m) img.push_back(table[static_cast<size_t>(v)]);
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!cod.has_simplex(img)) {
        ok = false;
        break;
      }
    }
    if (ok) states.push_back(table);
    int i = nd - 1;
    while (i >= 0 && table[static_cast<size_t>(i)] == nc - 1) {
      table[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++table[static_cast<size_t>(i)];
  }
  states_explored = static_cast<long long>(states.size());

  const long long m_count = static_cast<long long>(dom.maximal_simplices().size());
  if (static_cast<long long>(states.size()) * static_cast<long long>(states.size()) * m_count >
      kBfsWorkLimit)
    throw std::invalid_argument("exact BFS infeasible: adjacency work exceeds the limit");

  auto index_of = [&](const std::vector<int>& t) -> int {
    auto it = std::lower_bound(states.begin(), states.end(), t);
    if (it == states.end() || *it != t) return -1;
    return static_cast<int>(it - states.begin());
  };
  const int start = index_of(f.images);
  const int goal = index_of(g.images);
  if (start < 0 || goal < 0) return std::nullopt;  // non-simplicial endpoints are rejected earlier

  // Distances measured from the target so the reconstruction below can walk
  // forward from f picking the lexicographically smallest next table.
  std::vector<int> dist(states.size(), -1);
  std::queue<int> queue;
  dist[static_cast<size_t>(goal)] = 0;
  queue.push(goal);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (size_t w = 0; w < states.size(); ++w) {
      if (dist[w] != -1 || static_cast<int>(w) == u) continue;
      if (tables_contiguous(dom, cod, states[static_cast<size_t>(u)], states[w])) {
        dist[w] = dist[static_cast<size_t>(u)] + 1;
        queue.push(static_cast<int>(w));
      }
    }
  }
  if (dist[static_cast<size_t>(start)] == -1 || dist[static_cast<size_t>(start)] > c_max)
    return std::nullopt;

  ContiguityChain chain;
  chain.maps.push_back(f);
  int cur = start;
  while (cur != goal) {
    for (size_t w = 0; w < states.size(); ++w) {
      if (dist[w] != dist[static_cast<size_t>(cur)] - 1) continue;
      if (!tables_contiguous(dom, cod, states[static_cast<size_t>(cur)], states[w])) continue;
      cur = static_cast<int>(w);
      chain.maps.push_back(SimplicialMap{f.domain, f.codomain, states[w]});
      break;
    }
  }
  return chain;
}

struct GreedyContext {
  const Complex& dom;
  const Complex& cod;
  std::vector<std::vector<int>> incident;  // vertex -> indices into dom.maximal_simplices()

  GreedyContext(const Complex& d, const Complex& c) : dom(d), cod(c) {
    incident.resize(static_cast<size_t>(d.n_vertices()));
    const auto& maximal = d.maximal_simplices();
    for (size_t i = 0; i < maximal.size(); ++i)
      for (int v : maximal[i]) incident[static_cast<size_t>(v)].push_back(static_cast<int>(i));
  }

  // Candidate already has the move applied at vertex v; previous is the last
  // accepted chain map. Only simplices incident to v can be affected.
  bool move_ok(const std::vector<int>& candidate, const std::vector<int>& previous, int v) const {
    const auto& maximal = dom.maximal_simplices();
    Simplex img, uni;
    for (int mi : incident[static_cast<size_t>(v)]) {
      const auto& m = maximal[static_cast<size_t>(mi)];
      img.clear();
      uni.clear();
      for (int w : m) {
        img.push_back(candidate[static_cast<size_t>(w)]);
        uni.push_back(candidate[static_cast<size_t>(w)]);
        uni.push_back(previous[static_cast<size_t>(w)]);
      }
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!cod.has_simplex(img)) return false;
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      if (!cod.has_simplex(uni)) return false;
    }
    return true;
  }
};

// When the codomain's 1-skeleton is a single cycle, images of simplicial
// maps move around it and chains can be scheduled along per-vertex
// trajectories. pos[] gives the cyclic position of each codomain vertex.
struct CodomainCycle {
  bool ok = false;
  int length = 0;
  std::vector<int> pos;
};

CodomainCycle codomain_cycle(const Complex& cod) {
  CodomainCycle out;
  const int n = cod.n_vertices();
  if (n < 3) return out;
  std::vector<std::vector<int>> nbr(static_cast<size_t>(n));
  for (const auto& m : cod.maximal_simplices()) {
    if (m.size() > 2) return out;  // higher simplices: unions are laxer, cycle scheduling unneeded
    if (m.size() == 2) {
      nbr[static_cast<size_t>(m[0])].push_back(m[1]);
      nbr[static_cast<size_t>(m[1])].push_back(m[0]);
    }
  }
  for (const auto& ns : nbr)
    if (ns.size() != 2) return out;
  out.pos.assign(static_cast<size_t>(n), -1);
  int prev = -1, cur = 0;
  for (int i = 0; i < n; ++i) {
    out.pos[static_cast<size_t>(cur)] = i;
    const auto& ns = nbr[static_cast<size_t>(cur)];
    int next = (ns[0] == prev) ? ns[1] : ns[0];
    prev = cur;
    cur = next;
  }
  if (cur != 0) return out;  // not a single cycle
  for (int p : out.pos)
    if (p < 0) return out;
  out.ok = true;
  out.length = n;
  return out;
}

// Signed hop from a to b around the cycle; a and b must be equal or
// adjacent (guaranteed for images of simplicial maps into a cycle).
int cycle_delta(const CodomainCycle& cyc, int a, int b) {
  if (a == b) return 0;
  const int step = ((cyc.pos[static_cast<size_t>(b)] - cyc.pos[static_cast<size_t>(a)]) %
                        cyc.length +
                    cyc.length) %
                   cyc.length;
  return step == 1 ? 1 : -1;
}

// Integer lift of the displacement g - f over the domain: d(v) must satisfy
// d(w) - d(v) = delta_g(v,w) - delta_f(v,w) across every edge (a telescoping
// identity that any contiguity chain obeys). If the lift is inconsistent
// around some loop, no chain between f and g exists at this subdivision.
struct DisplacementLift {
  bool applicable = false;
  bool exact = false;
  std::vector<int> hops;
};

DisplacementLift displacement_lift(const Complex& dom, const CodomainCycle& cyc,
                                   const std::vector<int>& f, const std::vector<int>& g) {
  DisplacementLift out;
  if (!cyc.ok) return out;
  out.applicable = true;
  const int n = dom.n_vertices();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& m : dom.maximal_simplices())
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = i + 1; j < m.size(); ++j) {
        adj[static_cast<size_t>(m[i])].push_back(m[j]);
        adj[static_cast<size_t>(m[j])].push_back(m[i]);
      }
  out.hops.assign(static_cast<size_t>(n), INT32_MIN);
  std::queue<int> queue;
  for (int root = 0; root < n; ++root) {
    if (out.hops[static_cast<size_t>(root)] != INT32_MIN) continue;
    int disp = (cyc.pos[static_cast<size_t>(g[static_cast<size_t>(root)])] -
                cyc.pos[static_cast<size_t>(f[static_cast<size_t>(root)])] + cyc.length) %
               cyc.length;
    out.hops[static_cast<size_t>(root)] = disp > cyc.length / 2 ? disp - cyc.length : disp;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : adj[static_cast<size_t>(v)]) {
        int need = out.hops[static_cast<size_t>(v)] +
                   cycle_delta(cyc, g[static_cast<size_t>(v)], g[static_cast<size_t>(w)]) -
                   cycle_delta(cyc, f[static_cast<size_t>(v)], f[static_cast<size_t>(w)]);
        if (out.hops[static_cast<size_t>(w)] == INT32_MIN) {
          out.hops[static_cast<size_t>(w)] = need;
          queue.push(w);
        }
      }
    }
  }
  out.exact = true;
  for (int v = 0; v < n && out.exact; ++v)
    for (int w : adj[static_cast<size_t>(v)]) {
      int need = out.hops[static_cast<size_t>(v)] +
                 cycle_delta(cyc, g[static_cast<size_t>(v)], g[static_cast<size_t>(w)]) -
                 cycle_delta(cyc, f[static_cast<size_t>(v)], f[static_cast<size_t>(w)]);
      if (out.hops[static_cast<size_t>(w)] != need) {
        out.exact = false;
        break;
      }
    }
  return out;
}

// Trajectory sweep: each vertex walks its lifted hop count around the
// codomain cycle, one hop at a time, advancing whenever the move keeps the
// map simplicial and the step contiguous.
std::optional<ContiguityChain> lifted_attempt(const GreedyContext& ctx, const SimplicialMap& f,
                                              const SimplicialMap& g, int c_max,
                                              const std::vector<int>& order,
                                              const CodomainCycle& cyc,
                                              const std::vector<int>& hops,
                                              long long& states_explored) {
  // cycle order by position, for +-1 stepping
  std::vector<int> by_pos(static_cast<size_t>(cyc.length));
  for (int v = 0; v < cyc.length; ++v) by_pos[static_cast<size_t>(cyc.pos[static_cast<size_t>(v)])] = v;
  auto stepped = [&](int value, int dir) {
    int p = (cyc.pos[static_cast<size_t>(value)] + dir + cyc.length) % cyc.length;
    return by_pos[static_cast<size_t>(p)];
  };
  ContiguityChain chain;
  chain.maps.push_back(f);
  std::vector<int> h = f.images;
  std::vector<int> remaining = hops;
  for (int step = 0; step < c_max; ++step) {
    if (h == g.images) return chain;
    if (tables_contiguous(ctx.dom, ctx.cod, h, g.images)) {
      chain.maps.push_back(g);
      return chain;
    }
    std::vector<int> cand = h;
    std::vector<int> rem = remaining;
    bool changed = true;
    bool any = false;
    while (changed) {
      changed = false;
      for (int v : order) {
        if (rem[static_cast<size_t>(v)] == 0) continue;
        const int dir = rem[static_cast<size_t>(v)] > 0 ? 1 : -1;
        const int old = cand[static_cast<size_t>(v)];
        cand[static_cast<size_t>(v)] = stepped(old, dir);
        ++states_explored;
        if (ctx.move_ok(cand, h, v)) {
          rem[static_cast<size_t>(v)] -= dir;
          changed = true;
          any = true;
        } else {
          cand[static_cast<size_t>(v)] = old;
        }
      }
    }
    if (!any) return std::nullopt;
    chain.maps.push_back(SimplicialMap{f.domain, f.codomain, cand});
    h = std::move(cand);
    remaining = std::move(rem);
  }
  return h == g.images ? std::optional<ContiguityChain>(chain) : std::nullopt;
}

// One greedy attempt: walk toward g, accepting g's image vertex-by-vertex in
// the given order whenever the move keeps the new map simplicial and the
// step contiguous; sweeps repeat until a fixpoint before each step commits.
std::optional<ContiguityChain> greedy_attempt(const GreedyContext& ctx, const SimplicialMap& f,
                                              const SimplicialMap& g, int c_max,
                                              const std::vector<int>& order,
                                              long long& states_explored) {
  ContiguityChain chain;
  chain.maps.push_back(f);
  std::vector<int> h = f.images;
  for (int step = 0; step < c_max; ++step) {
    if (tables_contiguous(ctx.dom, ctx.cod, h, g.images)) {
      chain.maps.push_back(g);
      return chain;
    }
    std::vector<int> cand = h;
    bool changed = true;
    bool any = false;
    while (changed) {
      changed = false;
      for (int v : order) {
        if (cand[static_cast<size_t>(v)] == g.images[static_cast<size_t>(v)]) continue;
        const int old = cand[static_cast<size_t>(v)];
        cand[static_cast<size_t>(v)] = g.images[static_cast<size_t>(v)];
        ++states_explored;
        if (ctx.move_ok(cand, h, v)) {
          changed = true;
          any = true;
        } else {
          cand[static_cast<size_t>(v)] = old;
        }
      }
    }
    if (!any) return std::nullopt;  // stuck
    chain.maps.push_back(SimplicialMap{f.domain, f.codomain, cand});
    h = std::move(cand);
    if (h == g.images) return chain;
  }
  return std::nullopt;
}

}  // namespace

ChainSearchResult find_chain(const SimplicialMap& f, const SimplicialMap& g,
                             const ChainSearchOptions& options) {
  require_parallel(f, g);
  if (options.c_max < 0) throw std::invalid_argument("c_max must be non-negative");
  if (!is_simplicial(f) || !is_simplicial(g))
    throw std::invalid_argument("find_chain requires simplicial endpoints");

  ChainSearchResult result;
  if (f.images == g.images) {
    result.chain = ContiguityChain{{f}};
    result.note = "endpoints equal";
    return result;
  }
  if (options.c_max >= 1 && tables_contiguous(*f.domain, *f.codomain, f.images, g.images)) {
    result.chain = ContiguityChain{{f, g}};
    result.note = "single contiguous step";
    return result;
  }
  if (options.c_max <= 1) {
    result.note = "no chain within c_max";
    return result;
  }

  const bool bfs_ok = bfs_feasible(*f.domain, *f.codomain, kBfsSpaceLimit);
  if (options.strategy == ChainStrategy::kExactBfs ||
      (options.strategy == ChainStrategy::kAuto && bfs_ok)) {
    if (!bfs_ok) throw std::invalid_argument("exact BFS infeasible: map space exceeds the limit");
    try {
      result.chain = exact_bfs(f, g, options.c_max, result.states_explored);
      result.note = result.chain ? "exact BFS" : "exact BFS: no chain within c_max";
      return result;
    } catch (const std::invalid_argument&) {
      if (options.strategy == ChainStrategy::kExactBfs) throw;
      // Auto mode: the simplicial state space turned out too big for exact
      // adjacency; fall through to the greedy strategies.
    }
  }

  GreedyContext ctx(*f.domain, *f.codomain);
  std::vector<int> order(static_cast<size_t>(f.domain->n_vertices()));
  for (size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);

  const auto cycle = codomain_cycle(*f.codomain);
  const auto lift = displacement_lift(*f.domain, cycle, f.images, g.images);

  std::optional<ContiguityChain> best;
  auto offer = [&](std::optional<ContiguityChain> found) {
    if (!found) return;
    if (!best || chain_less(*found, *best)) best = std::move(found);
  };
  auto attempt_all = [&](const std::vector<int>& vertex_order) {
    offer(greedy_attempt(ctx, f, g, options.c_max, vertex_order, result.states_explored));
    if (lift.exact)
      offer(lifted_attempt(ctx, f, g, options.c_max, vertex_order, cycle, lift.hops,
                           result.states_explored));
  };

  attempt_all(order);
  result.restarts_run = 1;
  if (options.strategy != ChainStrategy::kGreedy) {
    for (int r = 1; r < options.restarts; ++r) {
      SplitMix64 rng(options.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(r));
      std::vector<int> shuffled = order;
      for (int i = static_cast<int>(shuffled.size()) - 1; i > 0; --i)
        std::swap(shuffled[static_cast<size_t>(i)], shuffled[static_cast<size_t>(rng.below(i + 1))]);
      attempt_all(shuffled);
      ++result.restarts_run;
    }
  }
  result.chain = std::move(best);
  if (result.chain) {
    result.note = "greedy search";
  } else if (lift.applicable && !lift.exact) {
    // The displacement of g relative to f winds inconsistently around some
    // loop of the domain, which no chain can realize at this subdivision.
    result.note = "no chain exists: displacement winding obstruction";
  } else {
    result.note = "search budget exhausted (not a non-existence proof)";
  }
  return result;
}

ContiguityChain pad_chain(const ContiguityChain& chain, int c_target) {
  if (chain.maps.empty()) throw std::invalid_argument("cannot pad an empty chain");
  if (c_target < chain.length())
    throw std::invalid_argument("pad target is shorter than the chain");
  ContiguityChain out = chain;
  while (out.length() < c_target) out.maps.push_back(out.maps.back());
  return out;
}

namespace {

void assert_contiguous_extension(const SimplicialMap& fresh, const SimplicialMap& old,
                                 const char* where) {
  if (!(*fresh.domain == *old.domain) || !(*fresh.codomain == *old.codomain))
    throw std::logic_error(std::string("chain extension domain mismatch at ") + where);
  if (!is_simplicial(fresh))
    throw std::logic_error(std::string("chain extension map not simplicial at ") + where);
  if (!tables_contiguous(*fresh.domain, *fresh.codomain, fresh.images, old.images))
    throw std::logic_error(std::string("contiguity assertion failed at ") + where);
}

}  // namespace

ContiguityChain transport_chain(const ContiguityChain& chain, const SimplicialMap& new_start,
                                const SimplicialMap& new_end) {
  if (chain.maps.empty()) throw std::invalid_argument("cannot transport an empty chain");
  assert_contiguous_extension(new_start, chain.maps.front(), "transport start");
  assert_contiguous_extension(new_end, chain.maps.back(), "transport end");
  ContiguityChain out;
  out.maps.reserve(chain.maps.size() + 2);
  out.maps.push_back(new_start);
  out.maps.insert(out.maps.end(), chain.maps.begin(), chain.maps.end());
  out.maps.push_back(new_end);
  return out;
}

ContiguityChain refine_chain(const ContiguityChain& chain, const SimplicialMap& lambda,
                             const SimplicialMap& new_start, const SimplicialMap& new_end) {
  if (chain.maps.empty()) throw std::invalid_argument("cannot refine an empty chain");
  ContiguityChain pulled;
  pulled.maps.reserve(chain.maps.size());
  for (const auto& h : chain.maps) pulled.maps.push_back(compose(h, lambda));
  assert_contiguous_extension(new_start, pulled.maps.front(), "refine start");
  assert_contiguous_extension(new_end, pulled.maps.back(), "refine end");
  ContiguityChain out;
  out.maps.reserve(pulled.maps.size() + 2);
  out.maps.push_back(new_start);
  out.maps.insert(out.maps.end(), pulled.maps.begin(), pulled.maps.end());
  out.maps.push_back(new_end);
  return out;
}

}  // namespace sc
