#include "sc/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sc {

bool is_strictly_increasing(const Simplex& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

bool is_subset(const Simplex& a, const Simplex& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      return false;
    }
  }
  return i == a.size();
}

namespace {

// Sort, dedupe and absorb non-maximal generators.
std::vector<Simplex> reduce_to_antichain(std::vector<Simplex> gens) {
  for (auto& g : gens) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  std::sort(gens.begin(), gens.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Simplex> kept;
  for (const auto& g : gens) {
    bool absorbed = false;
    for (const auto& k : kept) {
      if (is_subset(g, k)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Complex::Complex(std::vector<std::string> labels, const std::vector<Simplex>& generators)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("complex needs at least one vertex");
  {
    std::set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate vertex label: " + l);
  }
  if (generators.empty()) throw std::invalid_argument("empty complex rejected: no generators");
  const int n = n_vertices();
  for (const auto& g : generators) {
    if (g.empty()) throw std::invalid_argument("empty generator simplex");
    for (int v : g)
      if (v < 0 || v >= n)
        throw std::invalid_argument("generator vertex index out of range: " + std::to_string(v));
  }
  maximal_ = reduce_to_antichain(generators);
  std::vector<char> covered(static_cast<size_t>(n), 0);
  for (const auto& m : maximal_)
    for (int v : m) covered[static_cast<size_t>(v)] = 1;
  for (int v = 0; v < n; ++v)
    if (!covered[static_cast<size_t>(v)])
      throw std::invalid_argument("vertex not covered by any generator: " + labels_[static_cast<size_t>(v)]);
}

int Complex::dim() const {
  size_t d = 0;
  for (const auto& m : maximal_) d = std::max(d, m.size());
  return static_cast<int>(d) - 1;
}

bool Complex::has_simplex(const Simplex& s) const {
  if (s.empty()) throw std::invalid_argument("empty simplex");
  if (!is_strictly_increasing(s)) throw std::invalid_argument("simplex not strictly increasing");
  if (s.front() < 0 || s.back() >= n_vertices())
    throw std::invalid_argument("simplex vertex id out of range");
  for (const auto& m : maximal_)
    if (is_subset(s, m)) return true;
  return false;
}

namespace {

constexpr long long kEnumerationGuard = 20'000'000;

std::set<Simplex> enumerate_faces(const std::vector<Simplex>& maximal) {
  long long work = 0;
  for (const auto& m : maximal) {
    if (m.size() > 24) throw std::invalid_argument("complex too large to enumerate faces");
    work += (1LL << m.size());
    if (work > kEnumerationGuard)
      throw std::invalid_argument("face enumeration exceeds guard size");
  }
  std::set<Simplex> faces;
  for (const auto& m : maximal) {
    const unsigned k = static_cast<unsigned>(m.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Simplex f;
      for (unsigned i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(m[i]);
      faces.insert(std::move(f));
    }
  }
  return faces;
}

}  // namespace

std::vector<long long> Complex::f_vector() const {
  std::vector<long long> counts(static_cast<size_t>(dim()) + 1, 0);
  for (const auto& f : enumerate_faces(maximal_)) counts[f.size() - 1] += 1;
  return counts;
}

std::vector<Simplex> Complex::all_simplices() const {
  auto faces = enumerate_faces(maximal_);
  return {faces.begin(), faces.end()};
}

long long Complex::euler_characteristic() const {
  long long chi = 0;
  int sign = 1;
  for (long long c : f_vector()) {
    chi += sign * c;
    sign = -sign;
  }
  return chi;
}

std::string Complex::render_simplex(const Simplex& s) const {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += label(s[i]);
  }
  out += "}";
  return out;
}

Complex build_complex(std::vector<std::string> labels, const std::vector<Simplex>& generators) {
  return Complex(std::move(labels), generators);
}

std::shared_ptr<const Complex> share(Complex k) {
  return std::make_shared<const Complex>(std::move(k));
}

Complex skeleton(const Complex& k, int d) {
  if (d < 0) throw std::invalid_argument("skeleton dimension must be non-negative");
  std::vector<Simplex> gens;
  for (const auto& m : k.maximal_simplices()) {
    const int md = static_cast<int>(m.size()) - 1;
    if (md <= d) {
      gens.push_back(m);
      continue;
    }
    // all (d+1)-subsets of m
    std::vector<int> idx(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      Simplex f;
      for (int i : idx) f.push_back(m[static_cast<size_t>(i)]);
      gens.push_back(std::move(f));
      int i = d;
      while (i >= 0 && idx[static_cast<size_t>(i)] == md - (d - i)) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j <= d; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return Complex(k.labels(), gens);
}

Subcomplex make_subcomplex(std::shared_ptr<const Complex> ambient, std::vector<Simplex> simplices) {
  if (!ambient) throw std::invalid_argument("subcomplex needs an ambient complex");
  for (const auto& s : simplices)
    if (!ambient->has_simplex(s))
      throw std::invalid_argument("not a simplex of the ambient complex: " + ambient->render_simplex(s));
  Subcomplex j;
  j.ambient = std::move(ambient);
  j.maximal = reduce_to_antichain(std::move(simplices));
  return j;
}

bool subcomplex_has(const Subcomplex& j, const Simplex& s) {
  for (const auto& m : j.maximal)
    if (is_subset(s, m)) return true;
  return false;
}

bool is_cover(const Complex& k, const std::vector<Subcomplex>& pieces) {
  for (const auto& p : pieces) {
    if (!p.ambient || !(*p.ambient == k))
      throw std::invalid_argument("cover piece ambient complex mismatch");
  }
  for (const auto& m : k.maximal_simplices()) {
    bool found = false;
    for (const auto& p : pieces) {
      if (subcomplex_has(p, m)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Complex relabel(const Complex& k, const std::map<std::string, std::string>& perm) {
  const int n = k.n_vertices();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel permutation must cover every label exactly once");
  std::map<std::string, int> pos;
  for (int v = 0; v < n; ++v) pos[k.label(v)] = v;
  std::vector<int> to_new(static_cast<size_t>(n), -1);
  for (const auto& [from, to] : perm) {
    auto f = pos.find(from);
    auto t = pos.find(to);
    if (f == pos.end() || t == pos.end())
      throw std::invalid_argument("relabel permutation is not a bijection on the label set");
    if (to_new[static_cast<size_t>(f->second)] != -1)
      throw std::invalid_argument("relabel permutation maps a label twice");
    to_new[static_cast<size_t>(f->second)] = t->second;
  }
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (int v : to_new) {
    if (v < 0 || hit[static_cast<size_t>(v)])
      throw std::invalid_argument("relabel permutation is not a bijection on the label set");
    hit[static_cast<size_t>(v)] = 1;
  }
  std::vector<Simplex> gens;
  gens.reserve(k.maximal_simplices().size());
  for (const auto& m : k.maximal_simplices()) {
    Simplex g;
    g.reserve(m.size());
    for (int v : m) g.push_back(to_new[static_cast<size_t>(v)]);
    std::sort(g.begin(), g.end());
    gens.push_back(std::move(g));
  }
  return Complex(k.labels(), gens);
}

}  // namespace sc
