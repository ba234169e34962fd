#include "doctest.h"

#include "oracles.hpp"
#include "sc/complex.hpp"

using namespace sc;

namespace {

Complex circle() { return build_complex({"0", "1", "2"}, {{0, 1}, {0, 2}, {1, 2}}); }
Complex triangle_full() { return build_complex({"0", "1", "2"}, {{0, 1, 2}}); }

void check_antichain(const Complex& k) {
  const auto& m = k.maximal_simplices();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (i != j) CHECK_FALSE(is_subset(m[i], m[j]));
}

}  // namespace

TEST_CASE("build_complex basics") {
  auto point = build_complex({"a"}, {{0}});
  CHECK(point.n_vertices() == 1);
  CHECK(point.maximal_simplices().size() == 1);

  auto s1 = circle();
  CHECK(s1.f_vector() == std::vector<long long>{3, 3});
  check_antichain(s1);

  auto absorbed = build_complex({"a", "b"}, {{0, 1}, {0}});
  CHECK(absorbed.maximal_simplices() == std::vector<Simplex>{{0, 1}});

  // unsorted and duplicated generator entries are normalized
  auto messy = build_complex({"a", "b", "c"}, {{2, 0, 2}, {1}});
  CHECK(messy.maximal_simplices() == std::vector<Simplex>{{0, 2}, {1}});
}

TEST_CASE("build_complex errors") {
  CHECK_THROWS_AS(build_complex({"a", "a"}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_complex({"a", "b"}, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_complex({"a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_complex({"a"}, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(build_complex({"a", "b"}, {{0}}), std::invalid_argument);  // b uncovered
}

TEST_CASE("has_simplex") {
  auto s1 = circle();
  CHECK(s1.has_simplex({0, 1}));
  CHECK_FALSE(s1.has_simplex({0, 1, 2}));  // 2-simplex absent from the 1-skeleton
  for (int v = 0; v < 3; ++v) CHECK(s1.has_simplex({v}));
  CHECK_THROWS_AS(s1.has_simplex({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(s1.has_simplex({0, 7}), std::invalid_argument);
}

TEST_CASE("has_simplex is monotone on random complexes") {
  oracle::Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    auto k = oracle::random_complex(rng);
    for (const auto& s : k.all_simplices()) {
      CHECK(k.has_simplex(s));
      if (s.size() > 1) {
        Simplex face(s.begin() + 1, s.end());
        CHECK(k.has_simplex(face));
      }
    }
  }
}

TEST_CASE("f-vector and euler characteristic") {
  CHECK(build_complex({"a"}, {{0}}).euler_characteristic() == 1);
  CHECK(circle().euler_characteristic() == 0);
  CHECK(triangle_full().f_vector() == std::vector<long long>{3, 3, 1});

  // agreement with full-subset brute force
  oracle::Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    auto k = oracle::random_complex(rng);
    CHECK(k.f_vector() == oracle::f_vector_bruteforce(k));
    CHECK(k.euler_characteristic() == oracle::euler_from_f(oracle::f_vector_bruteforce(k)));
  }
}

TEST_CASE("all_simplices is lexicographic and duplicate-free") {
  auto faces = triangle_full().all_simplices();
  CHECK(faces.size() == 7);
  CHECK(std::is_sorted(faces.begin(), faces.end()));
  CHECK(std::adjacent_find(faces.begin(), faces.end()) == faces.end());
  CHECK(faces.front() == Simplex{0});
  CHECK(faces[1] == Simplex{0, 1});  // {0} < {0,1} < {0,1,2} < {0,2} < {1} ...
}

TEST_CASE("skeleton") {
  CHECK(skeleton(triangle_full(), 1) == circle());
  auto s1 = circle();
  CHECK(skeleton(s1, s1.dim()) == s1);
  CHECK(skeleton(s1, 5) == s1);

  auto d3 = build_complex({"0", "1", "2", "3"}, {{0, 1, 2, 3}});
  auto verts = skeleton(d3, 0);
  CHECK(verts.maximal_simplices() == std::vector<Simplex>{{0}, {1}, {2}, {3}});
  check_antichain(skeleton(d3, 1));
  CHECK(skeleton(d3, 1).f_vector() == std::vector<long long>{4, 6});
}

TEST_CASE("is_cover") {
  auto s1 = share(circle());
  auto whole = make_subcomplex(s1, s1->maximal_simplices());
  CHECK(is_cover(*s1, {whole}));

  auto partial = make_subcomplex(s1, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_cover(*s1, {partial}));
  auto rest = make_subcomplex(s1, {{0, 2}});
  CHECK(is_cover(*s1, {partial, rest}));

  auto other = share(triangle_full());
  auto foreign = make_subcomplex(other, {{0, 1, 2}});
  CHECK_THROWS_AS(is_cover(*s1, {foreign}), std::invalid_argument);
}

TEST_CASE("is_cover agrees with the all-simplices brute force") {
  oracle::Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    auto k = share(oracle::random_complex(rng));
    const auto& maximal = k->maximal_simplices();
    std::vector<Subcomplex> pieces;
    for (const auto& m : maximal)
      if (rng.below(3)) pieces.push_back(make_subcomplex(k, {m}));
    if (pieces.empty()) pieces.push_back(make_subcomplex(k, {maximal.front()}));

    bool brute = true;
    for (const auto& s : k->all_simplices()) {
      bool found = false;
      for (const auto& p : pieces)
        if (subcomplex_has(p, s)) found = true;
      if (!found) brute = false;
    }
    CHECK(is_cover(*k, pieces) == brute);
  }
}

TEST_CASE("relabel") {
  auto s1 = circle();
  std::map<std::string, std::string> id{{"0", "0"}, {"1", "1"}, {"2", "2"}};
  CHECK(relabel(s1, id) == s1);

  std::map<std::string, std::string> cyc{{"0", "1"}, {"1", "2"}, {"2", "0"}};
  auto rotated = relabel(s1, cyc);
  CHECK(rotated.f_vector() == s1.f_vector());

  std::map<std::string, std::string> inv{{"1", "0"}, {"2", "1"}, {"0", "2"}};
  CHECK(relabel(rotated, inv) == s1);

  std::map<std::string, std::string> bad{{"0", "1"}, {"1", "1"}, {"2", "0"}};
  CHECK_THROWS_AS(relabel(s1, bad), std::invalid_argument);
}

TEST_CASE("relabel preserves f-vector, euler and commutes with skeleton") {
  oracle::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    auto k = oracle::random_complex(rng);
    // random permutation of the labels
    std::vector<std::string> shuffled = k.labels();
    for (int i = static_cast<int>(shuffled.size()) - 1; i > 0; --i)
      std::swap(shuffled[static_cast<size_t>(i)], shuffled[static_cast<size_t>(rng.below(i + 1))]);
    std::map<std::string, std::string> perm;
    for (size_t i = 0; i < shuffled.size(); ++i) perm[k.labels()[i]] = shuffled[i];

    auto r = relabel(k, perm);
    CHECK(r.f_vector() == k.f_vector());
    CHECK(r.euler_characteristic() == k.euler_characteristic());
    const int d = k.dim() > 0 ? k.dim() - 1 : 0;
    CHECK(relabel(skeleton(k, d), perm) == skeleton(r, d));
    check_antichain(r);
  }
}
