#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cayley/abelian.hpp"
#include "cayley/houghton.hpp"
#include "cayley/metric.hpp"
#include "cayley/sym_support.hpp"
#include "oracles.hpp"

using namespace cayley;
using Elem = AbelianGroup::element_type;

namespace {

template <GroupLike G>
void check_against_naive(const G& g, int radius) {
  auto dmap = ball_distances(g, radius);
  auto naive = oracle::naive_ball(g, radius);
  REQUIRE(dmap.size() == naive.size());
  for (int d = 0; d <= radius; ++d)
    for (const auto& e : dmap.spheres()[d]) {
      auto it = naive.find(g.encode(e));
      REQUIRE(it != naive.end());
      CHECK(it->second == d);
    }
}

}  // namespace

TEST_CASE("small balls by hand", "[metric]") {
  AbelianGroup z23(1, {{2}, {3}});

  auto m0 = ball_distances(z23, 0);
  CHECK(m0.size() == 1);
  CHECK(m0.sphere_sizes() == std::vector<std::uint64_t>{1});
  CHECK(m0.distance(z23, z23.identity()) == 0);

  auto m1 = ball_distances(z23, 1);
  CHECK(m1.size() == 5);
  CHECK(m1.sphere_sizes() == std::vector<std::uint64_t>{1, 4});
  CHECK(m1.distance(z23, Elem{2}) == 1);
  CHECK(m1.distance(z23, Elem{-3}) == 1);
  CHECK(!m1.distance(z23, Elem{1}));

  CHECK_THROWS_AS(ball_distances(z23, -1), std::invalid_argument);
}

TEST_CASE("BFS agrees with raw word enumeration", "[metric]") {
  check_against_naive(AbelianGroup(1, {{2}, {3}}), 6);
  check_against_naive(AbelianGroup(1, {{1}}), 6);
  check_against_naive(AbelianGroup(2, {{1, 0}, {0, 1}, {1, 1}}), 5);
  check_against_naive(HoughtonH2{}, 6);
  check_against_naive(SupportSymmetricGroup(2), 6);
  check_against_naive(SupportSymmetricGroup(3), 6);
}

TEST_CASE("distances step by at most one along edges", "[metric]") {
  AbelianGroup z23(1, {{2}, {3}});
  auto dmap = ball_distances(z23, 8);
  for (int d = 0; d <= 8; ++d)
    for (const auto& e : dmap.spheres()[d]) {
      bool has_descent = d == 0;
      for (const auto& l : z23.labels()) {
        auto h = z23.multiply(e, z23.generator(l.index));
        auto dh = dmap.distance(z23, h);
        if (!dh) {
          CHECK(d == 8);  // absence is only possible from the boundary sphere
          continue;
        }
        CHECK(*dh >= d - 1);
        CHECK(*dh <= d + 1);
        has_descent = has_descent || *dh == d - 1;
      }
      CHECK(has_descent);
    }
}

TEST_CASE("worker count does not change the result", "[metric]") {
  HoughtonH2 h2;
  AbelianGroup z23(1, {{2}, {3}});

  auto reference = ball_distances(h2, 8);
  for (int workers : {2, 3, 8}) {
    BallOptions opts;
    opts.workers = workers;
    auto dmap = ball_distances(h2, 8, opts);
    REQUIRE(dmap.size() == reference.size());
    for (int d = 0; d <= 8; ++d) {
      REQUIRE(dmap.spheres()[d].size() == reference.spheres()[d].size());
      // Element order inside each sphere is part of the contract.
      for (std::size_t i = 0; i < dmap.spheres()[d].size(); ++i)
        CHECK(dmap.spheres()[d][i] == reference.spheres()[d][i]);
    }
  }

  std::ostringstream a, b;
  BallOptions eight;
  eight.workers = 8;
  dump_distance_map(z23, ball_distances(z23, 12), a);
  dump_distance_map(z23, ball_distances(z23, 12, eight), b);
  CHECK(a.str() == b.str());
}

TEST_CASE("memory budget cuts enumeration off loudly", "[metric]") {
  HoughtonH2 h2;
  BallOptions tiny;
  tiny.memory_budget_bytes = 64 * 1024;
  try {
    ball_distances(h2, 12, tiny);
    FAIL("expected MemoryBudgetError");
  } catch (const MemoryBudgetError& e) {
    CHECK(e.last_complete_radius() >= 0);
    CHECK(e.last_complete_radius() < 12);
    CHECK(std::string(e.what()).find("radius") != std::string::npos);
  }

  BallOptions roomy;
  roomy.memory_budget_bytes = 1ull << 30;
  CHECK(ball_distances(h2, 8, roomy).size() > 0);
}

TEST_CASE("exhaustion of finite groups is detected", "[metric]") {
  SupportSymmetricGroup s2(2);
  CHECK_FALSE(ball_distances(s2, 3).exhausted());
  CHECK(ball_distances(s2, 7).exhausted());
  CHECK(ball_distances(s2, 20).exhausted());
  CHECK(ball_distances(s2, 20).size() == 24);

  AbelianGroup z23(1, {{2}, {3}});
  CHECK_FALSE(ball_distances(z23, 10).exhausted());
}

TEST_CASE("dead-end detection on the integers with generators 2 and 3", "[metric]") {
  AbelianGroup z23(1, {{2}, {3}});
  auto dmap = ball_distances(z23, 12);

  CHECK_FALSE(is_dead_end(z23, z23.identity(), dmap));
  CHECK(is_dead_end(z23, Elem{1}, dmap));
  CHECK(is_dead_end(z23, Elem{-1}, dmap));
  CHECK_FALSE(is_dead_end(z23, Elem{2}, dmap));
  CHECK_FALSE(is_dead_end(z23, Elem{7}, dmap));
  CHECK_THROWS_AS(is_dead_end(z23, Elem{1001}, dmap), OutOfRadiusError);

  auto depth = dead_end_depth(z23, Elem{1}, dmap);
  CHECK(depth.depth == 1);
  CHECK(depth.exact);

  // A cap below the true escape level downgrades the result to a bound.
  auto capped = dead_end_depth(z23, Elem{1}, dmap, 1);
  CHECK(capped.depth == 1);
  CHECK_FALSE(capped.exact);

  CHECK_THROWS_AS(dead_end_depth(z23, Elem{2}, dmap), std::domain_error);
  CHECK(strong_depth(z23, Elem{1}, dmap) == 1);
  CHECK(strong_depth(z23, Elem{-1}, dmap) == 1);
  CHECK_THROWS_AS(strong_depth(z23, Elem{2}, dmap), std::domain_error);
}

TEST_CASE("scan finds exactly the two shallow dead ends", "[metric]") {
  AbelianGroup z23(1, {{2}, {3}});
  auto records = scan_dead_ends(z23, 20);
  REQUIRE(records.size() == 2);
  CHECK(records[0].element == Elem{-1});
  CHECK(records[1].element == Elem{1});
  for (const auto& r : records) {
    CHECK(r.n == 2);
    CHECK(r.depth == 1);
    CHECK(r.depth_exact);
    CHECK(r.strong_depth == 1);
  }

  // Standard generating set of Z has no dead ends at all.
  CHECK(scan_dead_ends(AbelianGroup(1, {{1}}), 10).empty());
}

TEST_CASE("H2 ball landmarks and the g_2 dead end", "[metric]") {
  HoughtonH2 h2;
  auto dmap = ball_distances(h2, 12);

  // Ball sizes pinned once computed; any change is an engine regression.
  CHECK(dmap.size() == 8064);
  CHECK(dmap.sphere_sizes()[10] == 1103);
  CHECK(dmap.sphere_sizes()[12] == 3659);

  auto g2 = HoughtonH2::make_gk(2);
  CHECK(dmap.distance(h2, g2) == 12);
  CHECK(is_dead_end(h2, g2, dmap));
  auto depth = dead_end_depth(h2, g2, dmap);
  CHECK(depth.depth == 2);
  CHECK(depth.exact);
  CHECK(strong_depth(h2, g2, dmap) == 2);

  // Three more dead ends live one sphere in; pinned as regression anchors.
  auto records = scan_dead_ends(h2, dmap);
  REQUIRE(records.size() == 3);
  CHECK(h2.format(records[0].element) == "((-3,-2)(-1,1)(2,3))_0");
  CHECK(h2.format(records[1].element) == "((-4,-3)(-2,1))_-1");
  CHECK(h2.format(records[2].element) == "((-1,2)(3,4))_1");
  for (const auto& r : records) {
    CHECK(r.n == 11);
    CHECK(r.depth == 2);
    CHECK(r.depth_exact);
    CHECK(r.strong_depth == 2);
  }
}

TEST_CASE("exhausted finite groups degrade depth and strong depth honestly", "[metric]") {
  SupportSymmetricGroup s2(2);
  auto dmap = ball_distances(s2, 10);
  auto g2 = s2.reversal();

  // Every neighbor loses distance, so the reversal is a dead end; but the
  // whole group lies inside B_1(6), so depth never certifies and no exterior
  // exists for strong depth.
  CHECK(is_dead_end(s2, g2, dmap));
  auto depth = dead_end_depth(s2, g2, dmap, 8);
  CHECK(depth.depth == 8);
  CHECK_FALSE(depth.exact);
  CHECK_THROWS_AS(strong_depth(s2, g2, dmap), NoExteriorError);

  auto records = scan_dead_ends(s2, dmap);
  REQUIRE(records.size() == 1);
  CHECK(records[0].element == g2);
  CHECK(records[0].n == 6);
  CHECK_FALSE(records[0].depth_exact);
  CHECK_FALSE(records[0].strong_depth.has_value());
}

TEST_CASE("annulus components count the visible ends", "[metric]") {
  AbelianGroup z23(1, {{2}, {3}});
  auto m30 = ball_distances(z23, 30);
  auto a = annulus_components(z23, m30, 4);
  CHECK(a.inner_radius == 4);
  CHECK(a.components() == 2);
  CHECK(a.component_sizes == std::vector<std::size_t>{78, 78});

  AbelianGroup z1(1, {{1}});
  auto az = annulus_components(z1, ball_distances(z1, 20), 3);
  CHECK(az.components() == 2);
  CHECK(az.component_sizes == std::vector<std::size_t>{17, 17});

  HoughtonH2 h2;
  auto ah = annulus_components(h2, ball_distances(h2, 10), 2);
  CHECK(ah.components() == 1);

  CHECK_THROWS_AS(annulus_components(z23, m30, 30), std::invalid_argument);
  CHECK_THROWS_AS(annulus_components(z23, m30, -1), std::invalid_argument);
}

TEST_CASE("depth bound check against the annulus parameter", "[metric]") {
  AbelianGroup z23(1, {{2}, {3}});
  auto records = scan_dead_ends(z23, 20);
  CHECK(check_depth_bound(records, 4));
  CHECK(check_depth_bound(records, 1));

  std::vector<DeadEndRecord<Elem>> fake{{Elem{1}, 2, 9, true, 1}};
  CHECK_FALSE(check_depth_bound(fake, 4));
  CHECK(check_depth_bound(fake, 5));
}

TEST_CASE("distance map dump is sorted with a footer", "[metric]") {
  AbelianGroup z23(1, {{2}, {3}});
  std::ostringstream os;
  dump_distance_map(z23, ball_distances(z23, 2), os);
  auto text = os.str();

  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  REQUIRE(lines.size() == 14);  // 13 elements plus footer
  CHECK(lines.front() == "7ffffffffffffffa 2");   // -6, the least encoding
  CHECK(lines[6] == "8000000000000000 0");        // the identity
  CHECK(lines.back() == "# radius=2 total=13");
  for (std::size_t i = 1; i + 1 < lines.size(); ++i)
    CHECK(lines[i - 1].substr(0, 16) < lines[i].substr(0, 16));
}
