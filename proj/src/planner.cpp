#include "sc/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sc {

Embedding make_embedding(const Complex& k, int dim, std::vector<std::vector<double>> coords) {
  if (dim <= 0) throw std::invalid_argument("embedding dimension must be positive");
  if (static_cast<int>(coords.size()) != k.n_vertices())
    throw std::invalid_argument("embedding must cover every vertex");
  for (const auto& p : coords)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("embedding point with wrong dimension");
  return Embedding{dim, std::move(coords)};
}

Embedding product_embedding(const ProductComplex& product, const Embedding& e1,
                            const Embedding& e2) {
  Embedding out;
  out.dim = e1.dim + e2.dim;
  out.coords.reserve(product.vertex_decode.size());
  for (const auto& [u, v] : product.vertex_decode) {
    std::vector<double> p = e1.coords.at(static_cast<size_t>(u));
    const auto& q = e2.coords.at(static_cast<size_t>(v));
    p.insert(p.end(), q.begin(), q.end());
    out.coords.push_back(std::move(p));
  }
  return out;
}

Embedding subdivision_embedding(const SubdivisionLevel& level, const Embedding& parent) {
  Embedding out;
  out.dim = parent.dim;
  out.coords.reserve(level.vertex_decode.size());
  for (const auto& s : level.vertex_decode) {
    std::vector<double> p(static_cast<size_t>(parent.dim), 0.0);
    for (int v : s)
      for (int d = 0; d < parent.dim; ++d)
        p[static_cast<size_t>(d)] += parent.coords[static_cast<size_t>(v)][static_cast<size_t>(d)];
    for (auto& c : p) c /= static_cast<double>(s.size());
    out.coords.push_back(std::move(p));
  }
  return out;
}

Embedding tower_embedding(const ProductTower& t, const Embedding& base) {
  if (static_cast<int>(base.coords.size()) != t.base_k->n_vertices())
    throw std::invalid_argument("base embedding does not match the base complex");
  Embedding cur = product_embedding(t.product, base, base);
  for (const auto& level : t.tower.levels) cur = subdivision_embedding(level, cur);
  return cur;
}

Embedding circle_embedding() {
  const double s = std::sqrt(3.0) / 2.0;
  return Embedding{2, {{1.0, 0.0}, {-0.5, s}, {-0.5, -s}}};
}

namespace {

// Least-squares barycentric coordinates of p with respect to the embedded
// vertices of a simplex: solve the affine system (coordinates plus the
// weights-sum-to-one row) via normal equations. Returns false if the system
// is numerically singular or the residual exceeds tol.
bool barycentric(const std::vector<const std::vector<double>*>& verts,
                 const std::vector<double>& p, double tol, std::vector<double>& weights) {
  const size_t k = verts.size();
  const size_t d = p.size();
  // rows of A: d coordinate rows + 1 row of ones; b: p and 1
  auto a = [&](size_t row, size_t col) -> double {
    return row < d ? (*verts[col])[row] : 1.0;
  };
  auto bval = [&](size_t row) -> double { return row < d ? p[row] : 1.0; };

  std::vector<std::vector<double>> n(k, std::vector<double>(k + 1, 0.0));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j)
      for (size_t r = 0; r <= d; ++r) n[i][j] += a(r, i) * a(r, j);
    for (size_t r = 0; r <= d; ++r) n[i][k] += a(r, i) * bval(r);
  }
  // Gaussian elimination with partial pivoting.
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    for (size_t row = col + 1; row < k; ++row)
      if (std::abs(n[row][col]) > std::abs(n[piv][col])) piv = row;
    if (std::abs(n[piv][col]) < 1e-14) return false;
    std::swap(n[col], n[piv]);
    for (size_t row = 0; row < k; ++row) {
      if (row == col) continue;
      const double f = n[row][col] / n[col][col];
      for (size_t j = col; j <= k; ++j) n[row][j] -= f * n[col][j];
    }
  }
  weights.assign(k, 0.0);
  for (size_t i = 0; i < k; ++i) weights[i] = n[i][k] / n[i][i];

  for (double w : weights)
    if (w < -tol) return false;
  double residual = 0.0;
  for (size_t r = 0; r <= d; ++r) {
    double acc = -bval(r);
    for (size_t i = 0; i < k; ++i) acc += a(r, i) * weights[i];
    residual = std::max(residual, std::abs(acc));
  }
  return residual <= tol * 10.0 + 1e-12;
}

std::vector<double> paired_point(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> p = x;
  p.insert(p.end(), y.begin(), y.end());
  return p;
}

}  // namespace

Carrier locate_carrier(const CoverCertificate& cert, const ProductTower& t,
                       const Embedding& base, const std::vector<double>& x,
                       const std::vector<double>& y, double tol) {
  if (static_cast<int>(x.size()) != base.dim || static_cast<int>(y.size()) != base.dim)
    throw std::invalid_argument("configuration points must match the embedding dimension");
  const auto embedded = tower_embedding(t, base);
  const auto p = paired_point(x, y);

  auto try_simplices = [&](const std::vector<Simplex>& simplices, Carrier& out) -> bool {
    std::vector<const std::vector<double>*> verts;
    std::vector<double> weights;
    for (const auto& s : simplices) {
      verts.clear();
      for (int v : s) verts.push_back(&embedded.coords[static_cast<size_t>(v)]);
      if (!barycentric(verts, p, tol, weights)) continue;
      // Minimal carrier: drop vertices with (numerically) zero weight.
      out.carrier.clear();
      out.weights.clear();
      for (size_t i = 0; i < s.size(); ++i) {
        if (weights[i] > tol) {
          out.carrier.push_back(s[i]);
          out.weights.push_back(weights[i]);
        }
      }
      if (out.carrier.empty()) continue;
      return true;
    }
    return false;
  };

  Carrier out;
  for (size_t i = 0; i < cert.pieces.size(); ++i) {
    if (try_simplices(cert.pieces[i].piece.maximal, out)) {
      out.piece_index = static_cast<int>(i);
      return out;
    }
  }
  // Verified certificates cover the tower, so a point inside the realization
  // must land in some piece; distinguish the two failure modes.
  Carrier probe;
  if (try_simplices(t.level(t.b())->maximal_simplices(), probe))
    throw std::logic_error("internal error: point lies in the complex but in no piece");
  throw std::invalid_argument("configuration pair lies outside the realization");
}

PLPath make_path(const CoverCertificate& cert, const ProductTower& t, const Embedding& base,
                 const std::vector<double>& x, const std::vector<double>& y, double tol) {
  Carrier at = locate_carrier(cert, t, base, x, y, tol);
  const auto& chain = cert.pieces[static_cast<size_t>(at.piece_index)].chain;
  const auto& piece = cert.pieces[static_cast<size_t>(at.piece_index)].piece;
  auto mat = materialize(piece);
  std::vector<int> local(static_cast<size_t>(piece.ambient->n_vertices()), -1);
  for (size_t i = 0; i < mat.to_ambient.size(); ++i)
    local[static_cast<size_t>(mat.to_ambient[i])] = static_cast<int>(i);

  auto realize = [&](const SimplicialMap& h) {
    std::vector<double> point(static_cast<size_t>(base.dim), 0.0);
    for (size_t i = 0; i < at.carrier.size(); ++i) {
      const int lv = local[static_cast<size_t>(at.carrier[i])];
      if (lv < 0) throw std::logic_error("internal error: carrier vertex outside its piece");
      const auto& q = base.coords[static_cast<size_t>(h.images[static_cast<size_t>(lv)])];
      for (int d = 0; d < base.dim; ++d)
        point[static_cast<size_t>(d)] += at.weights[i] * q[static_cast<size_t>(d)];
    }
    return point;
  };

  PLPath path;
  path.breakpoints.push_back(x);
  for (const auto& h : chain.maps) path.breakpoints.push_back(realize(h));
  path.breakpoints.push_back(y);
  const size_t segments = path.breakpoints.size() - 1;
  path.times.reserve(path.breakpoints.size());
  for (size_t i = 0; i <= segments; ++i)
    path.times.push_back(static_cast<double>(i) / static_cast<double>(segments));
  return path;
}

std::vector<double> evaluate_path(const PLPath& path, double t) {
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("path parameter must be in [0,1]");
  if (path.breakpoints.size() < 2 || path.breakpoints.size() != path.times.size())
    throw std::invalid_argument("malformed path");
  if (t <= path.times.front()) return path.breakpoints.front();
  if (t >= path.times.back()) return path.breakpoints.back();
  size_t hi = 1;
  while (path.times[hi] < t) ++hi;
  const double t0 = path.times[hi - 1];
  const double t1 = path.times[hi];
  if (t1 <= t0) return path.breakpoints[hi];
  const double w = (t - t0) / (t1 - t0);
  std::vector<double> out(path.breakpoints[hi].size(), 0.0);
  for (size_t d = 0; d < out.size(); ++d)
    out[d] = (1.0 - w) * path.breakpoints[hi - 1][d] + w * path.breakpoints[hi][d];
  return out;
}

}  // namespace sc
