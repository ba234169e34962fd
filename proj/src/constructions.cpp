#include "sc/constructions.hpp"

#include <algorithm>
#include <map>

namespace sc {

std::string policy_name(ApproxPolicy policy) {
  return policy == ApproxPolicy::kMinVertex ? "min" : "max";
}

ApproxPolicy policy_from_name(const std::string& name) {
  if (name == "min") return ApproxPolicy::kMinVertex;
  if (name == "max") return ApproxPolicy::kMaxVertex;
  throw std::invalid_argument("unknown approximation policy: " + name);
}

namespace {

// Maximal chains of the grid s x t under the componentwise order: staircase
// walks advancing one factor index per step. Emits index pairs into `out`.
void staircases(const Simplex& s, const Simplex& t, size_t i, size_t j,
                std::vector<std::pair<int, int>>& path,
                std::vector<std::vector<std::pair<int, int>>>& out) {
  path.emplace_back(s[i], t[j]);
  if (i + 1 == s.size() && j + 1 == t.size()) {
    out.push_back(path);
  } else {
    if (i + 1 < s.size()) staircases(s, t, i + 1, j, path, out);
    if (j + 1 < t.size()) staircases(s, t, i, j + 1, path, out);
  }
  path.pop_back();
}

}  // namespace

ProductComplex ordered_product(std::shared_ptr<const Complex> k,
                               std::shared_ptr<const Complex> l) {
  const int nk = k->n_vertices();
  const int nl = l->n_vertices();
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> decode;
  labels.reserve(static_cast<size_t>(nk) * static_cast<size_t>(nl));
  decode.reserve(labels.capacity());
  for (int u = 0; u < nk; ++u) {
    for (int v = 0; v < nl; ++v) {
      labels.push_back("(" + k->label(u) + "," + l->label(v) + ")");
      decode.emplace_back(u, v);
    }
  }
  auto pid = [nl](int u, int v) { return u * nl + v; };

  std::vector<Simplex> gens;
  std::vector<std::pair<int, int>> path;
  std::vector<std::vector<std::pair<int, int>>> chains;
  for (const auto& s : k->maximal_simplices()) {
    for (const auto& t : l->maximal_simplices()) {
      chains.clear();
      staircases(s, t, 0, 0, path, chains);
      for (const auto& chain : chains) {
        Simplex g;
        g.reserve(chain.size());
        for (const auto& [u, v] : chain) g.push_back(pid(u, v));
        gens.push_back(std::move(g));
      }
    }
  }
  ProductComplex product;
  product.complex = share(Complex(std::move(labels), gens));
  product.factor1 = std::move(k);
  product.factor2 = std::move(l);
  product.vertex_decode = std::move(decode);
  return product;
}

long long projected_subdivision_size(const Complex& k) {
  long long total = 0;
  for (const auto& m : k.maximal_simplices()) {
    long long flags = 1;
    for (size_t i = 2; i <= m.size(); ++i) {
      flags *= static_cast<long long>(i);
      if (flags > kDefaultSizeBudget * 100) return flags;  // saturate, caller compares to budget
    }
    total += flags;
  }
  return total;
}

SubdivisionLevel barycentric_subdivision(std::shared_ptr<const Complex> k) {
  auto faces = k->all_simplices();
  std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::map<Simplex, int> id_of;
  std::vector<std::string> labels;
  labels.reserve(faces.size());
  for (size_t i = 0; i < faces.size(); ++i) {
    id_of[faces[i]] = static_cast<int>(i);
    labels.push_back(k->render_simplex(faces[i]));
  }

  // Maximal simplices of Sd(K) are the full flags of the maximal simplices
  // of K: one per permutation of the vertex set, via its sorted prefixes.
  std::vector<Simplex> gens;
  for (const auto& m : k->maximal_simplices()) {
    Simplex perm = m;
    do {
      Simplex flag;
      flag.reserve(perm.size());
      Simplex prefix;
      for (int v : perm) {
        prefix.push_back(v);
        std::sort(prefix.begin(), prefix.end());
        flag.push_back(id_of.at(prefix));
      }
      std::sort(flag.begin(), flag.end());
      gens.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  SubdivisionLevel level;
  level.complex = share(Complex(std::move(labels), gens));
  level.parent = std::move(k);
  level.vertex_decode = std::move(faces);
  return level;
}

SubdivisionTower iterated_subdivision(std::shared_ptr<const Complex> k, int b,
                                      long long size_budget) {
  if (b < 0) throw std::invalid_argument("subdivision count must be non-negative");
  SubdivisionTower tower;
  tower.base = std::move(k);
  auto current = tower.base;
  for (int j = 0; j < b; ++j) {
    long long projected = projected_subdivision_size(*current);
    if (projected > size_budget) throw SizeBudgetError(projected, size_budget);
    tower.levels.push_back(barycentric_subdivision(current));
    current = tower.levels.back().complex;
  }
  return tower;
}

SimplicialMap approx_identity(const SubdivisionLevel& level, ApproxPolicy policy) {
  std::vector<int> images;
  images.reserve(level.vertex_decode.size());
  for (const auto& parent_simplex : level.vertex_decode)
    images.push_back(policy == ApproxPolicy::kMinVertex ? parent_simplex.front()
                                                        : parent_simplex.back());
  return SimplicialMap{level.complex, level.parent, std::move(images)};
}

SimplicialMap projection_composite(const ProductComplex& product, const SubdivisionTower& tower,
                                   int factor_index, ApproxPolicy policy) {
  if (factor_index != 1 && factor_index != 2)
    throw std::invalid_argument("factor index must be 1 or 2");
  if (!(*tower.base == *product.complex))
    throw std::invalid_argument("mismatched tower: not built over the product complex");

  const auto& top = tower.level(tower.b());
  std::vector<int> down(static_cast<size_t>(top->n_vertices()));
  for (size_t v = 0; v < down.size(); ++v) down[v] = static_cast<int>(v);
  for (int j = tower.b(); j >= 1; --j) {
    const auto iota = approx_identity(tower.levels[static_cast<size_t>(j) - 1], policy);
    for (auto& v : down) v = iota.images[static_cast<size_t>(v)];
  }
  std::vector<int> images;
  images.reserve(down.size());
  for (int v : down) {
    const auto& [u, w] = product.vertex_decode[static_cast<size_t>(v)];
    images.push_back(factor_index == 1 ? u : w);
  }
  auto codomain = factor_index == 1 ? product.factor1 : product.factor2;
  return SimplicialMap{top, codomain, std::move(images)};
}

}  // namespace sc
