#include "doctest.h"

#include "oracles.hpp"
#include "sc/constructions.hpp"

using namespace sc;

namespace {

std::shared_ptr<const Complex> circle() {
  return share(build_complex({"0", "1", "2"}, {{0, 1}, {0, 2}, {1, 2}}));
}

}  // namespace

TEST_CASE("ordered product: unit factor") {
  auto pt = share(build_complex({"p"}, {{0}}));
  auto s1 = circle();
  auto prod = ordered_product(pt, s1);
  CHECK(prod.complex->maximal_simplices() == s1->maximal_simplices());
  CHECK(prod.complex->label(0) == "(p,0)");
  CHECK(prod.complex->f_vector() == s1->f_vector());
}

TEST_CASE("ordered product: square and torus f-vectors") {
  auto edge = share(build_complex({"0", "1"}, {{0, 1}}));
  auto square = ordered_product(edge, edge);
  const std::vector<long long> square_f{4, 5, 2};
  CHECK(square.complex->f_vector() == square_f);
  CHECK(oracle::product_f_vector_bruteforce(*edge, *edge) == square_f);

  auto s1 = circle();
  auto torus = ordered_product(s1, s1);
  const std::vector<long long> torus_f{9, 27, 18};
  CHECK(torus.complex->f_vector() == torus_f);
  CHECK(oracle::product_f_vector_bruteforce(*s1, *s1) == torus_f);
  CHECK(torus.complex->euler_characteristic() == 0);
}

TEST_CASE("ordered product: projections of simplices are simplices of the factors") {
  oracle::Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    auto k = share(oracle::random_complex(rng, 4));
    auto l = share(oracle::random_complex(rng, 4));
    auto prod = ordered_product(k, l);
    for (const auto& m : prod.complex->maximal_simplices()) {
      Simplex pu, pv;
      for (int w : m) {
        pu.push_back(prod.vertex_decode[static_cast<size_t>(w)].first);
        pv.push_back(prod.vertex_decode[static_cast<size_t>(w)].second);
      }
      std::sort(pu.begin(), pu.end());
      pu.erase(std::unique(pu.begin(), pu.end()), pu.end());
      std::sort(pv.begin(), pv.end());
      pv.erase(std::unique(pv.begin(), pv.end()), pv.end());
      CHECK(k->has_simplex(pu));
      CHECK(l->has_simplex(pv));
    }
  }
}

TEST_CASE("euler characteristic is multiplicative over the product") {
  oracle::Rng rng(43);
  for (int t = 0; t < 25; ++t) {
    auto k = oracle::random_complex(rng, 5);
    auto l = oracle::random_complex(rng, 5);
    auto prod = ordered_product(share(k), share(l));
    auto f = oracle::product_f_vector_bruteforce(k, l);
    CHECK(prod.complex->f_vector() == f);
    CHECK(prod.complex->euler_characteristic() ==
          k.euler_characteristic() * l.euler_characteristic());
  }
}

TEST_CASE("barycentric subdivision: point, triangle boundary, full triangle") {
  auto pt = share(build_complex({"p"}, {{0}}));
  auto sd_pt = barycentric_subdivision(pt);
  CHECK(sd_pt.complex->n_vertices() == 1);
  CHECK(sd_pt.complex->label(0) == "{p}");

  auto d2 = share(build_complex({"0", "1", "2"}, {{0, 1, 2}}));
  auto sd_d2 = barycentric_subdivision(d2);
  const std::vector<long long> expected{7, 12, 6};
  CHECK(sd_d2.complex->f_vector() == expected);
  CHECK(oracle::sd_f_vector_bruteforce(*d2) == expected);

  auto s1 = circle();
  auto sd_s1 = barycentric_subdivision(s1);
  const std::vector<long long> cycle6{6, 6};
  CHECK(sd_s1.complex->f_vector() == cycle6);
  CHECK(oracle::sd_f_vector_bruteforce(*s1) == cycle6);
  // a 6-cycle: every vertex lies in exactly two edges
  std::vector<int> degree(6, 0);
  for (const auto& e : sd_s1.complex->maximal_simplices())
    for (int v : e) ++degree[static_cast<size_t>(v)];
  for (int d : degree) CHECK(d == 2);
}

TEST_CASE("subdivision preserves euler characteristic; flag count formula") {
  oracle::Rng rng(47);
  for (int t = 0; t < 25; ++t) {
    auto k = oracle::random_complex(rng, 5);
    auto sd = barycentric_subdivision(share(k));
    CHECK(sd.complex->euler_characteristic() == k.euler_characteristic());
    CHECK(oracle::sd_f_vector_bruteforce(k) == sd.complex->f_vector());
    long long flags = 0;
    for (const auto& m : k.maximal_simplices()) {
      long long fact = 1;
      for (size_t i = 2; i <= m.size(); ++i) fact *= static_cast<long long>(i);
      flags += fact;
    }
    CHECK(projected_subdivision_size(k) == flags);
    long long top = 0;
    for (const auto& m : sd.complex->maximal_simplices())
      if (static_cast<int>(m.size()) == k.dim() + 1 || k.dim() == 0) ++top;
    // every maximal simplex of Sd(K) is a full flag of a maximal simplex
    CHECK(static_cast<long long>(sd.complex->maximal_simplices().size()) == flags);
    (void)top;
  }
}

TEST_CASE("iterated subdivision and the size guardrail") {
  auto s1 = circle();
  auto t0 = iterated_subdivision(s1, 0);
  CHECK(t0.b() == 0);
  CHECK(*t0.level(0) == *s1);

  auto d2 = share(build_complex({"0", "1", "2"}, {{0, 1, 2}}));
  auto t1 = iterated_subdivision(d2, 1);
  CHECK(t1.level(1)->maximal_simplices().size() == 6);
  auto t2 = iterated_subdivision(d2, 2);
  CHECK(t2.level(2)->maximal_simplices().size() == 36);

  CHECK_THROWS_AS(iterated_subdivision(d2, 3, 100), SizeBudgetError);
  try {
    iterated_subdivision(d2, 3, 100);
  } catch (const SizeBudgetError& e) {
    CHECK(e.projected == 216);
  }
}

TEST_CASE("approx_identity on Sd(interval)") {
  auto edge = share(build_complex({"0", "1"}, {{0, 1}}));
  auto sd = barycentric_subdivision(edge);
  // vertex order: {0}, {1}, {0,1}
  auto max_map = approx_identity(sd, ApproxPolicy::kMaxVertex);
  CHECK(max_map.images == std::vector<int>{0, 1, 1});
  auto min_map = approx_identity(sd, ApproxPolicy::kMinVertex);
  CHECK(min_map.images == std::vector<int>{0, 1, 0});
  CHECK(is_simplicial(max_map));
  CHECK(is_simplicial(min_map));
}

TEST_CASE("approx_identity star condition and policy contiguity") {
  oracle::Rng rng(53);
  for (int t = 0; t < 15; ++t) {
    auto k = share(oracle::random_complex(rng, 5));
    auto sd = barycentric_subdivision(k);
    auto mn = approx_identity(sd, ApproxPolicy::kMinVertex);
    auto mx = approx_identity(sd, ApproxPolicy::kMaxVertex);
    for (size_t w = 0; w < sd.vertex_decode.size(); ++w) {
      const auto& parent = sd.vertex_decode[w];
      CHECK(std::find(parent.begin(), parent.end(), mn.images[w]) != parent.end());
      CHECK(std::find(parent.begin(), parent.end(), mx.images[w]) != parent.end());
    }
    CHECK(is_simplicial(mn));
    CHECK(is_simplicial(mx));
    CHECK(contiguous_pair(mn, mx));
  }
}

TEST_CASE("projection composites") {
  auto s1 = circle();
  auto prod = ordered_product(s1, s1);

  // b = 0: plain coordinate projections
  auto t0 = iterated_subdivision(prod.complex, 0);
  auto p1 = projection_composite(prod, t0, 1, ApproxPolicy::kMaxVertex);
  auto p2 = projection_composite(prod, t0, 2, ApproxPolicy::kMaxVertex);
  for (size_t w = 0; w < prod.vertex_decode.size(); ++w) {
    CHECK(p1.images[w] == prod.vertex_decode[w].first);
    CHECK(p2.images[w] == prod.vertex_decode[w].second);
  }

  // b = 1: barycenter of the diagonal edge {(0,0),(1,1)} maps through
  // its max vertex (1,1) to first factor 1
  auto t1 = iterated_subdivision(prod.complex, 1);
  auto q1 = projection_composite(prod, t1, 1, ApproxPolicy::kMaxVertex);
  const auto& decode = t1.levels[0].vertex_decode;
  const Simplex diagonal_edge{0, 4};  // product ids of (0,0) and (1,1)
  int w = -1;
  for (size_t i = 0; i < decode.size(); ++i)
    if (decode[i] == diagonal_edge) w = static_cast<int>(i);
  REQUIRE(w >= 0);
  CHECK(q1.images[static_cast<size_t>(w)] == 1);

  for (int b = 0; b <= 2; ++b) {
    auto tb = iterated_subdivision(prod.complex, b);
    for (int i : {1, 2}) {
      CHECK(is_simplicial(projection_composite(prod, tb, i, ApproxPolicy::kMaxVertex)));
      CHECK(is_simplicial(projection_composite(prod, tb, i, ApproxPolicy::kMinVertex)));
    }
  }

  auto other = iterated_subdivision(s1, 1);
  CHECK_THROWS_AS(projection_composite(prod, other, 1, ApproxPolicy::kMaxVertex),
                  std::invalid_argument);
}

TEST_CASE("constructions commute with relabeling up to isomorphism") {
  oracle::Rng rng(59);
  for (int t = 0; t < 10; ++t) {
    auto k = oracle::random_complex(rng, 4);
    std::vector<std::string> shuffled = k.labels();
    for (int i = static_cast<int>(shuffled.size()) - 1; i > 0; --i)
      std::swap(shuffled[static_cast<size_t>(i)], shuffled[static_cast<size_t>(rng.below(i + 1))]);
    std::map<std::string, std::string> perm;
    for (size_t i = 0; i < shuffled.size(); ++i) perm[k.labels()[i]] = shuffled[i];
    auto r = relabel(k, perm);

    CHECK(ordered_product(share(k), share(k)).complex->f_vector() ==
          ordered_product(share(r), share(r)).complex->f_vector());
    CHECK(barycentric_subdivision(share(k)).complex->f_vector() ==
          barycentric_subdivision(share(r)).complex->f_vector());
  }
}
