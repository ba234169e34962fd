#include "sc/cover.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sc {

ProductTower build_product_tower(std::shared_ptr<const Complex> k, int b,
                                 long long size_budget) {
  ProductTower t;
  t.base_k = k;
  t.product = ordered_product(k, k);
  t.tower = iterated_subdivision(t.product.complex, b, size_budget);
  t.supports.resize(static_cast<size_t>(b) + 1);
  auto& level0 = t.supports[0];
  level0.resize(static_cast<size_t>(t.product.complex->n_vertices()));
  for (size_t v = 0; v < level0.size(); ++v) level0[v] = Simplex{static_cast<int>(v)};
  for (int j = 1; j <= b; ++j) {
    const auto& decode = t.tower.levels[static_cast<size_t>(j) - 1].vertex_decode;
    auto& cur = t.supports[static_cast<size_t>(j)];
    cur.resize(decode.size());
    for (size_t v = 0; v < decode.size(); ++v) {
      Simplex acc;
      for (int parent_vertex : decode[v]) {
        const auto& s = t.supports[static_cast<size_t>(j) - 1][static_cast<size_t>(parent_vertex)];
        acc.insert(acc.end(), s.begin(), s.end());
      }
      std::sort(acc.begin(), acc.end());
      acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
      cur[v] = std::move(acc);
    }
  }
  return t;
}

Simplex base_span(const ProductTower& t, int level, int vertex) {
  const auto& supp = t.supports.at(static_cast<size_t>(level)).at(static_cast<size_t>(vertex));
  Simplex span;
  span.reserve(supp.size() * 2);
  for (int pv : supp) {
    const auto& [u, v] = t.product.vertex_decode[static_cast<size_t>(pv)];
    span.push_back(u);
    span.push_back(v);
  }
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  return span;
}

namespace {

bool diagonal_vertex(const ProductTower& t, int vertex) {
  return t.base_k->has_simplex(base_span(t, t.b(), vertex));
}

}  // namespace

std::vector<Subcomplex> seed_pieces(const ProductTower& t, SeedStyle style,
                                    const std::vector<Subcomplex>& existing) {
  const auto& top = t.level(t.b());
  std::vector<char> diag(static_cast<size_t>(top->n_vertices()), 0);
  if (style != SeedStyle::kGreedyGrowth)
    for (int v = 0; v < top->n_vertices(); ++v)
      diag[static_cast<size_t>(v)] = diagonal_vertex(t, v) ? 1 : 0;

  std::vector<Subcomplex> out;
  switch (style) {
    case SeedStyle::kDiagonal: {
      // Largest all-diagonal face of each maximal simplex; reduction to an
      // antichain happens inside make_subcomplex.
      std::vector<Simplex> gens;
      for (const auto& m : top->maximal_simplices()) {
        Simplex face;
        for (int v : m)
          if (diag[static_cast<size_t>(v)]) face.push_back(v);
        if (!face.empty()) gens.push_back(std::move(face));
      }
      if (!gens.empty()) out.push_back(make_subcomplex(top, std::move(gens)));
      break;
    }
    case SeedStyle::kAntidiagonal: {
      // Closure of the complement: maximal simplices with at least one
      // vertex off the diagonal seed.
      std::vector<Simplex> gens;
      for (const auto& m : top->maximal_simplices()) {
        bool all_diag = true;
        for (int v : m)
          if (!diag[static_cast<size_t>(v)]) {
            all_diag = false;
            break;
          }
        if (!all_diag) gens.push_back(m);
      }
      if (!gens.empty()) out.push_back(make_subcomplex(top, std::move(gens)));
      break;
    }
    case SeedStyle::kGreedyGrowth: {
      for (const auto& m : top->maximal_simplices()) {
        bool covered = false;
        for (const auto& p : existing)
          if (subcomplex_has(p, m)) {
            covered = true;
            break;
          }
        if (!covered) out.push_back(make_subcomplex(top, {m}));
      }
      break;
    }
  }
  return out;
}

namespace {

std::string piece_prefix(size_t index) { return "piece " + std::to_string(index) + ": "; }

}  // namespace

CheckResult verify_certificate(const CoverCertificate& cert, long long size_budget) {
  if (!cert.base) return {false, "certificate has no base complex"};
  if (cert.b < 0 || cert.c < 0) return {false, "negative b or c"};
  if (cert.pieces.empty()) return {false, "certificate has no pieces"};

  ProductTower t;
  try {
    t = build_product_tower(cert.base, cert.b, size_budget);
  } catch (const SizeBudgetError& e) {
    return {false, std::string("tower rebuild aborted: ") + e.what()};
  }
  const auto& top = t.level(t.b());

  std::vector<Subcomplex> pieces;
  for (size_t i = 0; i < cert.pieces.size(); ++i) {
    const auto& piece = cert.pieces[i].piece;
    if (!piece.ambient || !(*piece.ambient == *top))
      return {false, piece_prefix(i) + "ambient complex does not match the rebuilt tower"};
    Subcomplex canonical;
    try {
      canonical = make_subcomplex(top, piece.maximal);
    } catch (const std::invalid_argument& e) {
      return {false, piece_prefix(i) + e.what()};
    }
    if (canonical.maximal != piece.maximal)
      return {false, piece_prefix(i) + "simplices are not a canonical antichain"};
    pieces.push_back(std::move(canonical));
  }

  for (const auto& m : top->maximal_simplices()) {
    bool covered = false;
    for (const auto& p : pieces)
      if (subcomplex_has(p, m)) {
        covered = true;
        break;
      }
    if (!covered)
      return {false, "cover check failed: simplex " + top->render_simplex(m) +
                         " is in no piece"};
  }

  const auto pi1 = projection_composite(t.product, t.tower, 1, cert.policy);
  const auto pi2 = projection_composite(t.product, t.tower, 2, cert.policy);
  for (size_t i = 0; i < cert.pieces.size(); ++i) {
    const auto& chain = cert.pieces[i].chain;
    if (chain.length() > cert.c)
      return {false, piece_prefix(i) + "chain length " + std::to_string(chain.length()) +
                         " exceeds certificate c = " + std::to_string(cert.c)};
    auto mat = materialize(pieces[i]);
    auto check = verify_chain(chain, restrict_map(pi1, mat), restrict_map(pi2, mat));
    if (!check.ok) return {false, piece_prefix(i) + check.diagnostic};
  }
  return {true, {}};
}

namespace {

struct PieceAttempt {
  bool ok = false;
  std::vector<PieceCertificate> certs;
  size_t failing_piece = 0;
};

PieceAttempt try_pieces(const std::vector<Subcomplex>& pieces, const SimplicialMap& pi1,
                        const SimplicialMap& pi2, const BoundOptions& options,
                        SearchStats& stats) {
  PieceAttempt attempt;
  for (size_t i = 0; i < pieces.size(); ++i) {
    auto mat = materialize(pieces[i]);
    ChainSearchOptions search;
    search.c_max = options.c_max;
    search.seed = options.seed;
    search.restarts = options.restart_budget;
    auto result = find_chain(restrict_map(pi1, mat), restrict_map(pi2, mat), search);
    ++stats.chain_searches;
    stats.restarts += result.restarts_run;
    if (!result.chain) {
      attempt.failing_piece = i;
      return attempt;
    }
    attempt.certs.push_back(PieceCertificate{pieces[i], std::move(*result.chain)});
  }
  attempt.ok = true;
  return attempt;
}

// Lexicographically smallest maximal simplex of `from` sharing a vertex with
// `to`; falls back to the smallest simplex when the pieces are disjoint.
size_t frontier_index(const Subcomplex& from, const Subcomplex& to) {
  std::vector<char> in_to(static_cast<size_t>(from.ambient->n_vertices()), 0);
  for (const auto& m : to.maximal)
    for (int v : m) in_to[static_cast<size_t>(v)] = 1;
  for (size_t i = 0; i < from.maximal.size(); ++i)
    for (int v : from.maximal[i])
      if (in_to[static_cast<size_t>(v)]) return i;
  return 0;
}

// Two-piece split at the flag level for b >= 1: the first piece takes the
// simplices that hug the diagonal (every element below the top has a base
// span that is a simplex of K, or the bottom element is a diagonal product
// vertex), the second takes the rest. Splitting inside the subdivided
// blocks this way keeps the winding of the two projections consistent on
// each piece, where the coarse diagonal/antidiagonal seeds may not.
std::vector<Subcomplex> fan_split(const ProductTower& t) {
  if (t.b() < 1) return {};
  const auto& top = t.level(t.b());
  std::vector<Simplex> near, far;
  for (const auto& flag : top->maximal_simplices()) {
    bool hug = true;
    for (size_t i = 0; i + 1 < flag.size(); ++i)
      if (!diagonal_vertex(t, flag[i])) {
        hug = false;
        break;
      }
    if (!hug) {
      const auto& bottom = t.supports[static_cast<size_t>(t.b())][static_cast<size_t>(flag.front())];
      if (bottom.size() == 1) {
        const auto& [u, v] = t.product.vertex_decode[static_cast<size_t>(bottom.front())];
        hug = (u == v);
      }
    }
    (hug ? near : far).push_back(flag);
  }
  if (near.empty() || far.empty()) return {};
  return {make_subcomplex(top, std::move(near)), make_subcomplex(top, std::move(far))};
}

CoverCertificate assemble(std::shared_ptr<const Complex> base, const BoundOptions& options,
                          std::vector<PieceCertificate> certs) {
  CoverCertificate cert;
  cert.base = std::move(base);
  cert.b = options.b;
  cert.policy = options.policy;
  cert.c = 0;
  for (const auto& pc : certs) cert.c = std::max(cert.c, pc.chain.length());
  cert.pieces = std::move(certs);
  return cert;
}

}  // namespace

std::string BoundReport::summary() const {
  std::ostringstream os;
  if (bound) {
    os << "bound = " << *bound << " (SC^" << b << "_" << c_used << " <= " << *bound << ")";
  } else {
    os << "no bound found: " << failure_reason;
  }
  os << "\n  chain searches: " << stats.chain_searches << ", restarts: " << stats.restarts
     << ", rebalances: " << stats.rebalances;
  if (bound) {
    os << "\n  pieces (maximal simplices): ";
    for (size_t i = 0; i < stats.piece_sizes.size(); ++i)
      os << (i ? ", " : "") << stats.piece_sizes[i];
    os << "\n  chain lengths: ";
    for (size_t i = 0; i < stats.chain_lengths.size(); ++i)
      os << (i ? ", " : "") << stats.chain_lengths[i];
  }
  return os.str();
}

BoundReport sc_upper_bound(std::shared_ptr<const Complex> k, const BoundOptions& options) {
  if (options.b < 0) throw std::invalid_argument("b must be non-negative");
  if (options.c_max < 0) throw std::invalid_argument("c_max must be non-negative");
  if (options.max_pieces < 1) throw std::invalid_argument("max_pieces must be at least 1");

  BoundReport report;
  report.b = options.b;
  auto t = build_product_tower(k, options.b, options.size_budget);
  const auto& top = t.level(t.b());
  const auto pi1 = projection_composite(t.product, t.tower, 1, options.policy);
  const auto pi2 = projection_composite(t.product, t.tower, 2, options.policy);

  auto finish = [&](std::vector<PieceCertificate> certs) {
    auto cert = assemble(k, options, std::move(certs));
    auto check = verify_certificate(cert, options.size_budget);
    if (!check.ok)
      throw std::logic_error("internal error: produced certificate failed verification: " +
                             check.diagnostic);
    report.bound = cert.bound();
    report.c_used = cert.c;
    for (const auto& pc : cert.pieces) {
      report.stats.chain_lengths.push_back(pc.chain.length());
      report.stats.piece_sizes.push_back(pc.piece.maximal.size());
    }
    report.certificate = std::move(cert);
    return report;
  };

  // Single piece: the whole complex.
  {
    auto whole = make_subcomplex(top, top->maximal_simplices());
    auto attempt = try_pieces({whole}, pi1, pi2, options, report.stats);
    if (attempt.ok) return finish(std::move(attempt.certs));
  }

  // Two pieces: diagonal/antidiagonal seeding, then the flag-level fan
  // split, then frontier rebalancing.
  if (options.max_pieces >= 2) {
    auto diag = seed_pieces(t, SeedStyle::kDiagonal);
    auto anti = seed_pieces(t, SeedStyle::kAntidiagonal);
    if (!diag.empty() && !anti.empty()) {
      auto attempt = try_pieces({diag[0], anti[0]}, pi1, pi2, options, report.stats);
      if (attempt.ok) return finish(std::move(attempt.certs));
    }
    auto fan = fan_split(t);
    if (!fan.empty()) {
      auto attempt = try_pieces(fan, pi1, pi2, options, report.stats);
      if (attempt.ok) return finish(std::move(attempt.certs));
    }
    std::vector<Subcomplex> pieces;
    if (!fan.empty()) {
      pieces = fan;
    } else if (!diag.empty() && !anti.empty()) {
      pieces = {diag[0], anti[0]};
    } else {
      // Degenerate seeding (one side empty): fall back to a deterministic
      // one-simplex / rest split so rebalancing has two pieces to work with.
      const auto& maximal = top->maximal_simplices();
      if (maximal.size() >= 2) {
        std::vector<Simplex> rest(maximal.begin() + 1, maximal.end());
        pieces = {make_subcomplex(top, {maximal.front()}), make_subcomplex(top, std::move(rest))};
      }
    }
    const int rebalance_cap = 64;
    for (int iter = 0; !pieces.empty() && iter <= rebalance_cap; ++iter) {
      auto attempt = try_pieces(pieces, pi1, pi2, options, report.stats);
      if (attempt.ok) return finish(std::move(attempt.certs));
      const size_t f = attempt.failing_piece;
      const size_t o = 1 - f;
      if (pieces[f].maximal.size() <= 1) break;  // nothing left to move
      size_t idx = frontier_index(pieces[f], pieces[o]);
      Simplex moved = pieces[f].maximal[idx];
      std::vector<Simplex> keep = pieces[f].maximal;
      keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(idx));
      std::vector<Simplex> grown = pieces[o].maximal;
      grown.push_back(std::move(moved));
      pieces[f] = make_subcomplex(top, std::move(keep));
      pieces[o] = make_subcomplex(top, std::move(grown));
      ++report.stats.rebalances;
    }
  }

  // More pieces: grow each from a singleton seed while chains keep existing.
  if (options.max_pieces >= 2) {
    std::vector<Subcomplex> fixed;
    std::vector<PieceCertificate> certs;
    bool failed = false;
    while (true) {
      auto seeds = seed_pieces(t, SeedStyle::kGreedyGrowth, fixed);
      if (seeds.empty()) break;  // covered
      if (static_cast<int>(fixed.size()) >= options.max_pieces) {
        failed = true;
        break;
      }
      Subcomplex current = seeds.front();
      std::optional<PieceCertificate> current_cert;
      {
        auto attempt = try_pieces({current}, pi1, pi2, options, report.stats);
        if (!attempt.ok) {
          failed = true;
          break;
        }
        current_cert = std::move(attempt.certs.front());
      }
      // Absorb later seeds one at a time while a chain still exists.
      bool grew = true;
      while (grew) {
        grew = false;
        auto remaining = seed_pieces(t, SeedStyle::kGreedyGrowth, fixed);
        for (const auto& cand : remaining) {
          if (subcomplex_has(current, cand.maximal.front())) continue;
          std::vector<Simplex> grown = current.maximal;
          grown.push_back(cand.maximal.front());
          auto tentative = make_subcomplex(top, std::move(grown));
          auto attempt = try_pieces({tentative}, pi1, pi2, options, report.stats);
          if (attempt.ok) {
            current = std::move(tentative);
            current_cert = std::move(attempt.certs.front());
            grew = true;
          }
        }
        // The grown piece shadows seeds it now covers; recompute next round.
        std::vector<Subcomplex> probe = fixed;
        probe.push_back(current);
        if (seed_pieces(t, SeedStyle::kGreedyGrowth, probe).empty()) break;
      }
      fixed.push_back(current);
      certs.push_back(std::move(*current_cert));
    }
    if (!failed && !certs.empty() && is_cover(*top, fixed)) return finish(std::move(certs));
  }

  report.failure_reason = "search budget exhausted (no cover with chains of length <= " +
                          std::to_string(options.c_max) + " using <= " +
                          std::to_string(options.max_pieces) + " pieces found)";
  return report;
}

CoverCertificate pad_certificate(const CoverCertificate& cert, int c_target) {
  if (c_target < cert.c) throw std::invalid_argument("pad target is smaller than certificate c");
  CoverCertificate out = cert;
  out.c = c_target;
  for (auto& pc : out.pieces) pc.chain = pad_chain(pc.chain, c_target);
  return out;
}

CoverCertificate transport_certificate(const CoverCertificate& cert, ApproxPolicy new_policy,
                                       long long size_budget) {
  auto t = build_product_tower(cert.base, cert.b, size_budget);
  const auto pi1 = projection_composite(t.product, t.tower, 1, new_policy);
  const auto pi2 = projection_composite(t.product, t.tower, 2, new_policy);
  CoverCertificate out;
  out.base = cert.base;
  out.b = cert.b;
  out.c = cert.c + 2;
  out.policy = new_policy;
  for (const auto& pc : cert.pieces) {
    auto piece = make_subcomplex(t.level(t.b()), pc.piece.maximal);
    auto mat = materialize(piece);
    auto chain = transport_chain(pc.chain, restrict_map(pi1, mat), restrict_map(pi2, mat));
    out.pieces.push_back(PieceCertificate{std::move(piece), std::move(chain)});
  }
  return out;
}

CoverCertificate refine_certificate(const CoverCertificate& cert, long long size_budget) {
  auto t = build_product_tower(cert.base, cert.b + 1, size_budget);
  const auto& fine = t.level(t.b());
  const auto pi1 = projection_composite(t.product, t.tower, 1, cert.policy);
  const auto pi2 = projection_composite(t.product, t.tower, 2, cert.policy);

  // Vertices of the finer level are the simplices of the coarser one.
  const auto& decode = t.tower.levels[static_cast<size_t>(cert.b)].vertex_decode;
  std::map<Simplex, int> fine_vertex;
  for (size_t v = 0; v < decode.size(); ++v) fine_vertex[decode[v]] = static_cast<int>(v);

  CoverCertificate out;
  out.base = cert.base;
  out.b = cert.b + 1;
  out.c = cert.c + 2;
  out.policy = cert.policy;
  for (const auto& pc : cert.pieces) {
    auto coarse_piece = make_subcomplex(t.level(cert.b), pc.piece.maximal);
    auto mat = materialize(coarse_piece);
    auto sd = barycentric_subdivision(mat.complex);
    auto lambda = approx_identity(sd, cert.policy);

    // Flags of the piece, translated into fine-level vertex ids.
    std::vector<Simplex> gens;
    gens.reserve(sd.complex->maximal_simplices().size());
    for (const auto& flag : sd.complex->maximal_simplices()) {
      Simplex g;
      g.reserve(flag.size());
      for (int w : flag) {
        Simplex ambient_simplex;
        for (int v : sd.vertex_decode[static_cast<size_t>(w)])
          ambient_simplex.push_back(mat.to_ambient[static_cast<size_t>(v)]);
        std::sort(ambient_simplex.begin(), ambient_simplex.end());
        g.push_back(fine_vertex.at(ambient_simplex));
      }
      std::sort(g.begin(), g.end());
      gens.push_back(std::move(g));
    }
    auto fine_piece = make_subcomplex(fine, std::move(gens));
    auto fine_mat = materialize(fine_piece);
    if (!(*fine_mat.complex == *sd.complex))
      throw std::logic_error("internal error: subdivided piece does not match the fine tower");
    auto chain = refine_chain(pc.chain, lambda, restrict_map(pi1, fine_mat),
                              restrict_map(pi2, fine_mat));
    out.pieces.push_back(PieceCertificate{std::move(fine_piece), std::move(chain)});
  }
  return out;
}

}  // namespace sc
