#include "doctest.h"

#include "sc/io.hpp"

using namespace sc;

TEST_CASE("complex documents round-trip byte-exactly") {
  auto s1 = example_complex("circle");
  auto text = write_complex(s1);
  auto back = read_complex(text);
  CHECK(back == s1);
  CHECK(write_complex(back) == text);
}

TEST_CASE("complex reader rejects malformed documents") {
  CHECK_THROWS_AS(read_complex("not json"), std::invalid_argument);
  CHECK_THROWS_AS(read_complex("{}"), std::invalid_argument);
  CHECK_THROWS_AS(
      read_complex(R"({"format":"sc-v2","kind":"complex","vertices":["a"],"maximal_simplices":[[0]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      read_complex(R"({"format":"sc-v1","kind":"complex","vertices":["a","b"],"maximal_simplices":[[1,0]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      read_complex(R"({"format":"sc-v1","kind":"complex","vertices":["a","a"],"maximal_simplices":[[0,1]]})"),
      std::invalid_argument);
}

TEST_CASE("skeleton of the full triangle document is the circle") {
  auto d2 = example_complex("simplex(2)");
  CHECK(skeleton(d2, 1) == example_complex("circle"));
}

TEST_CASE("example generators") {
  CHECK(example_complex("circle").f_vector() == std::vector<long long>{3, 3});
  CHECK(example_complex("simplex(2)").f_vector() == std::vector<long long>{3, 3, 1});
  CHECK(example_complex("simplex2").f_vector() == std::vector<long long>{3, 3, 1});
  CHECK(example_complex("interval").f_vector() == std::vector<long long>{2, 1});
  CHECK(example_complex("torus").f_vector() == std::vector<long long>{9, 27, 18});
  CHECK(example_complex("torus").label(0) == "(0,0)");
  CHECK_THROWS_AS(example_complex("klein bottle"), std::invalid_argument);
  CHECK(example_embedding("circle").has_value());
  CHECK_FALSE(example_embedding("torus").has_value());
}

TEST_CASE("certificate documents round-trip byte-exactly") {
  auto s1 = share(example_complex("circle"));
  BoundOptions opt;
  opt.b = 1;
  opt.c_max = 16;
  opt.max_pieces = 2;
  auto report = sc_upper_bound(s1, opt);
  REQUIRE(report.certificate.has_value());

  auto text = write_certificate(*report.certificate);
  auto back = read_certificate(text);
  CHECK(write_certificate(back) == text);
  CHECK(verify_certificate(back).ok);
}

TEST_CASE("certificate reader rejects label and schema problems") {
  auto d1 = share(example_complex("interval"));
  BoundOptions opt;
  opt.b = 0;
  opt.c_max = 1;
  opt.max_pieces = 1;
  auto report = sc_upper_bound(d1, opt);
  REQUIRE(report.certificate.has_value());
  auto text = write_certificate(*report.certificate);

  // a certificate whose base complex changed no longer matches its labels
  auto wrong_base = text;
  auto pos = wrong_base.find("\"interval-ish\"");
  (void)pos;
  wrong_base.replace(wrong_base.find("(0,1)"), 5, "(0,9)");
  CHECK_THROWS_AS(read_certificate(wrong_base), std::invalid_argument);

  // edited to claim a smaller c: reading succeeds, verification fails
  auto claim = read_certificate(text);
  claim.c = -1;
  CHECK_FALSE(verify_certificate(claim).ok);

  CHECK_THROWS_AS(read_certificate("{\"format\":\"sc-v1\",\"kind\":\"certificate\"}"),
                  std::invalid_argument);
}

TEST_CASE("tampered chain entries are caught by verification with a located diagnostic") {
  auto s1 = share(example_complex("circle"));
  BoundOptions opt;
  opt.b = 1;
  opt.c_max = 16;
  opt.max_pieces = 2;
  auto report = sc_upper_bound(s1, opt);
  REQUIRE(report.certificate.has_value());
  auto text = write_certificate(*report.certificate);

  // corrupt one chain image entry textually: swap a "0" image for "1"
  auto doc = text;
  auto chains_at = doc.find("\"chain\"");
  auto entry = doc.find("\"0\"", chains_at);
  REQUIRE(entry != std::string::npos);
  doc.replace(entry, 3, "\"1\"");
  auto back = read_certificate(doc);
  auto check = verify_certificate(back);
  CHECK_FALSE(check.ok);
  CHECK(check.diagnostic.find("piece") != std::string::npos);
}

TEST_CASE("embedding documents") {
  auto s1 = example_complex("circle");
  auto e = circle_embedding();
  auto text = write_embedding(e, s1);
  auto back = read_embedding(text, s1);
  CHECK(back.dim == 2);
  CHECK(back.coords == e.coords);
  CHECK(write_embedding(back, s1) == text);

  CHECK_THROWS_AS(read_embedding(R"({"kind":"embedding","dim":2,"coords":{}})", s1),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_embedding(R"({"format":"sc-v0","kind":"embedding","dim":2,"coords":{}})", s1),
                  std::invalid_argument);
}

TEST_CASE("path documents carry time and point samples") {
  PLPath path;
  path.breakpoints = {{0.0, 1.0}, {0.5, 0.25}};
  path.times = {0.0, 1.0};
  auto text = write_path(path);
  CHECK(text.find("\"kind\": \"path\"") != std::string::npos);
  CHECK(text.find("0.25") != std::string::npos);
}
