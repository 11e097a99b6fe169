#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "rootlines/lines.hpp"

using namespace rootlines;

namespace {

const char* kCatalog[] = {"A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"};

// Inner product straight from coordinates and the simple Gram matrix.
std::int64_t raw_inner(const RootSystem& s, std::size_t a, std::size_t b) {
  const auto& x = s.root(a);
  const auto& y = s.root(b);
  const IntMatrix& g = s.form()->matrix();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) acc += std::int64_t{x[i]} * g[i][j] * y[j];
  return acc;
}

// All stars of the line system, as triples of positive root indices.
std::vector<std::array<std::size_t, 3>> all_stars(const LineSystem& l) {
  const RootSystem& s = l.ambient();
  std::vector<std::array<std::size_t, 3>> out;
  const auto& r = l.reps();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      for (std::size_t k = j + 1; k < r.size(); ++k) {
        if (raw_inner(s, r[i], r[j]) == 0 || raw_inner(s, r[i], r[k]) == 0 || raw_inner(s, r[j], r[k]) == 0)
          continue;
        // coplanar: r_k = ±r_i ± r_j
        Coords sum(s.root(r[i]).size()), diff(sum.size());
        for (std::size_t t = 0; t < sum.size(); ++t) {
          sum[t] = s.root(r[i])[t] + s.root(r[j])[t];
          diff[t] = s.root(r[i])[t] - s.root(r[j])[t];
        }
        Coords neg = s.root(r[k]);
        for (auto& c : neg) c = -c;
        if (s.root(r[k]) == sum || s.root(r[k]) == diff || neg == sum || neg == diff) out.push_back({r[i], r[j], r[k]});
      }
  return out;
}

LineSystem part_a_of(const LineSystem& l) {
  auto star = first_star(l);
  REQUIRE(star);
  return star_decomposition(l, {l.reps()[(*star)[0]], l.reps()[(*star)[1]], l.reps()[(*star)[2]]}).part_a;
}

// Brute-force triads: pairwise orthogonal triples.
std::set<std::set<std::size_t>> brute_triads(const LineSystem& a) {
  std::set<std::set<std::size_t>> out;
  const RootSystem& s = a.ambient();
  const auto& r = a.reps();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      for (std::size_t k = j + 1; k < r.size(); ++k)
        if (raw_inner(s, r[i], r[j]) == 0 && raw_inner(s, r[i], r[k]) == 0 && raw_inner(s, r[j], r[k]) == 0)
          out.insert({i, j, k});
  return out;
}

std::set<std::set<std::size_t>> as_set(const IncidenceStructure& st) {
  std::set<std::set<std::size_t>> out;
  for (const auto& b : st.blocks) out.insert(std::set<std::size_t>(b.begin(), b.end()));
  return out;
}

// GQ one-point axiom: a point off a block is collinear with exactly one of its points.
bool one_point_axiom(const IncidenceStructure& st) {
  auto collinear = [&](std::size_t p, std::size_t q) {
    for (const auto& b : st.blocks)
      if (std::count(b.begin(), b.end(), p) && std::count(b.begin(), b.end(), q)) return true;
    return false;
  };
  for (const auto& b : st.blocks)
    for (std::size_t p = 0; p < st.points; ++p) {
      if (std::count(b.begin(), b.end(), p)) continue;
      int n = 0;
      for (auto q : b) n += collinear(p, q);
      if (n != 1) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("lines of catalog systems") {
  for (const char* label : kCatalog) {
    const RootSystem s = build_simply_laced(label);
    const LineSystem l = lines_of(s);
    CHECK(l.size() * 2 == s.size());
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = a + 1; b < l.size(); ++b) CHECK(std::abs(raw_inner(s, l.reps()[a], l.reps()[b])) <= 1);
  }
  CHECK(lines_of(build_simply_laced("E7")).size() == 63);
  const LineSystem a2 = lines_of(build_simply_laced("A2"));
  CHECK(a2.size() == 3);
  CHECK(all_stars(a2).size() == 1);
  const LineSystem a1n = lines_of(build_simply_laced("A1xA1xA1xA1"));
  CHECK(a1n.size() == 4);
  CHECK(a1n.nonorthogonality_graph().edge_count() == 0);
  CHECK_THROWS_AS(lines_of(build_non_simply_laced("B3")), std::invalid_argument);
}

TEST_CASE("line representatives are canonical") {
  const RootSystem s = build_simply_laced("D4");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto r = line_of(s, i);
    CHECK(line_of(s, s.negative_of(i)) == r);
    const auto& c = s.root(r);
    auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    CHECK(*first > 0);
  }
  const LineSystem both(s, {0, s.negative_of(0)});
  CHECK(both.size() == 1);
}

TEST_CASE("line system type validation") {
  const RootSystem s = build_simply_laced("A3");
  CHECK_THROWS_AS(LineSystem(s, {s.size()}), std::invalid_argument);
  const RootSystem b = build_non_simply_laced("B2");
  std::vector<std::size_t> all(b.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK_THROWS_AS(LineSystem(b, all), std::invalid_argument);
}

TEST_CASE("star closure") {
  const RootSystem a2 = build_simply_laced("A2");
  const LineSystem two(a2, {0, 1});
  CHECK(star_closure(two).size() == 3);
  for (const char* label : kCatalog) {
    const LineSystem l = lines_of(build_simply_laced(label));
    CHECK(is_star_closed(l));
    CHECK(is_indecomposable(l));
    // closure of a pair of simple-root lines stays inside, and is idempotent
    const LineSystem simple(l.ambient(), l.ambient().simple_roots());
    const LineSystem c = star_closure(simple);
    CHECK(star_closure(c) == c);
    for (auto r : simple.reps()) CHECK(c.contains(r));
    CHECK(c == l);
  }
  const LineSystem d4 = lines_of(build_simply_laced("D4"));
  const LineSystem a = part_a_of(d4);
  CHECK(is_star_free(a));
  CHECK(star_closure(a).size() >= a.size());
}

TEST_CASE("Lemma 1 holds for every star of every catalog system") {
  for (const char* label : kCatalog) {
    const LineSystem l = lines_of(build_simply_laced(label));
    const auto stars = all_stars(l);
    CHECK_FALSE(stars.empty());
    for (const auto& st : stars) {
      for (auto r : l.reps()) {
        if (r == st[0] || r == st[1] || r == st[2]) continue;
        int orth = 0;
        for (int i = 0; i < 3; ++i) orth += raw_inner(l.ambient(), r, st[static_cast<std::size_t>(i)]) == 0;
        CHECK((orth == 1 || orth == 3));
      }
      const auto d = star_decomposition(l, st);
      CHECK(d.part_a.size() + d.part_b.size() + d.part_c.size() + d.part_d.size() + 3 == l.size());
      CHECK(d.part_a.size() == d.part_b.size());
      CHECK(d.part_b.size() == d.part_c.size());
      CHECK(is_star_free(d.part_a));
      // S u A recovers L
      std::vector<std::size_t> seed(st.begin(), st.end());
      seed.insert(seed.end(), d.part_a.reps().begin(), d.part_a.reps().end());
      CHECK(star_closure(LineSystem(l.ambient(), seed)) == l);
      // non-negative representation
      const Representation rep = representation_graph(d.part_a);
      for (std::size_t u = 0; u < rep.roots.size(); ++u)
        for (std::size_t v = u + 1; v < rep.roots.size(); ++v) {
          const auto ip = raw_inner(l.ambient(), rep.roots[u], rep.roots[v]);
          CHECK((ip == 0 || ip == 1));
          CHECK((ip == 1) == rep.graph.adjacent(u, v));
        }
    }
  }
}

TEST_CASE("E7 star decomposition counts") {
  const LineSystem l = lines_of(build_simply_laced("E7"));
  for (const auto& st : all_stars(l)) {
    // independent count by coordinates
    std::size_t a = 0, b = 0, c = 0, d = 0;
    for (auto r : l.reps()) {
      if (r == st[0] || r == st[1] || r == st[2]) continue;
      const bool o0 = raw_inner(l.ambient(), r, st[0]) == 0, o1 = raw_inner(l.ambient(), r, st[1]) == 0,
                 o2 = raw_inner(l.ambient(), r, st[2]) == 0;
      if (o0 && o1 && o2) ++d;
      else if (o0) ++a;
      else if (o1) ++b;
      else if (o2) ++c;
    }
    const auto dec = star_decomposition(l, st);
    CHECK(dec.part_a.size() == a);
    CHECK(dec.part_b.size() == b);
    CHECK(dec.part_c.size() == c);
    CHECK(dec.part_d.size() == d);
    CHECK(a == 15);
    CHECK(d == 15);
  }
}

TEST_CASE("star decomposition errors") {
  const LineSystem l = lines_of(build_simply_laced("A2"));
  const auto st = all_stars(l).front();
  const auto d = star_decomposition(l, st);
  CHECK(d.part_a.empty());
  CHECK(d.part_d.empty());
  const LineSystem d4 = lines_of(build_simply_laced("D4"));
  // orthogonal triple is not a star
  const auto triads = brute_triads(d4);
  const auto& t = *triads.begin();
  std::vector<std::size_t> tv(t.begin(), t.end());
  CHECK_THROWS_AS(star_decomposition(d4, {d4.reps()[tv[0]], d4.reps()[tv[1]], d4.reps()[tv[2]]}),
                  std::invalid_argument);
  // a star not contained in the system
  const LineSystem partial(d4.ambient(), {d4.reps()[0]});
  const auto s4 = all_stars(d4).front();
  CHECK_THROWS_AS(star_decomposition(partial, s4), std::invalid_argument);
  // representation of a star is impossible
  CHECK_THROWS_AS(representation_graph(l), std::domain_error);
}

TEST_CASE("representation graphs of exceptional part A") {
  struct Case {
    const char* label;
    SrgParameters p;
  } cases[] = {{"E6", {9, 4, 1, 2}}, {"E7", {15, 8, 4, 4}}, {"E8", {27, 16, 10, 8}}};
  for (const auto& c : cases) {
    const LineSystem a = part_a_of(lines_of(build_simply_laced(c.label)));
    const auto r = srg_check(representation_graph(a).graph);
    REQUIRE(r.ok());
    CHECK(*r.params == c.p);
  }
  const RootSystem d4 = build_simply_laced("D4");
  const auto triad = *brute_triads(lines_of(d4)).begin();
  std::vector<std::size_t> roots;
  for (auto i : triad) roots.push_back(lines_of(d4).reps()[i]);
  const Representation rep = representation_graph(LineSystem(d4, roots));
  CHECK(rep.graph.order() == 3);
  CHECK(rep.graph.edge_count() == 0);
}

TEST_CASE("triads and generalized quadrangles") {
  const LineSystem e7a = part_a_of(lines_of(build_simply_laced("E7")));
  const auto t7 = triads_of(e7a);
  CHECK(t7.points == 15);
  CHECK(t7.blocks.size() == 15);
  CHECK(as_set(t7) == brute_triads(e7a));
  CHECK(one_point_axiom(t7));
  const auto g7 = gq_check(t7);
  REQUIRE(g7.ok);
  CHECK(g7.s == 2);
  CHECK(g7.t == 2);

  const LineSystem e6a = part_a_of(lines_of(build_simply_laced("E6")));
  const auto t6 = triads_of(e6a);
  CHECK(t6.points == 9);
  CHECK(t6.blocks.size() == 6);
  CHECK(as_set(t6) == brute_triads(e6a));
  CHECK(one_point_axiom(t6));
  const auto g6 = gq_check(t6);
  REQUIRE(g6.ok);
  CHECK(g6.s == 2);
  CHECK(g6.t == 1);

  const LineSystem a7a = part_a_of(lines_of(build_simply_laced("A7")));
  CHECK(triads_of(a7a).blocks.empty());

  // every orthogonal pair of E8 part A lies in exactly one triad
  const LineSystem e8a = part_a_of(lines_of(build_simply_laced("E8")));
  const auto t8 = triads_of(e8a);
  CHECK(as_set(t8) == brute_triads(e8a));
  for (std::size_t u = 0; u < e8a.size(); ++u)
    for (std::size_t v = u + 1; v < e8a.size(); ++v) {
      if (e8a.inner(u, v) != 0) continue;
      int n = 0;
      for (const auto& b : t8.blocks) n += std::count(b.begin(), b.end(), u) && std::count(b.begin(), b.end(), v);
      CHECK(n == 1);
    }

  // D_n part A is CP(m)+K1: one triad per matched pair, all through the isolated line
  const LineSystem d6a = part_a_of(lines_of(build_simply_laced("D6")));
  const auto t6d = triads_of(d6a);
  CHECK(t6d.blocks.size() == 3);
  CHECK(as_set(t6d) == brute_triads(d6a));
  CHECK(gq_check(t6d).failure == "point degree");

  // an orthogonal pair with nothing else cannot extend to a triad
  const LineSystem d4 = lines_of(build_simply_laced("D4"));
  const auto pair = *brute_triads(d4).begin();
  auto it = pair.begin();
  const std::size_t p0 = d4.reps()[*it++];
  const std::size_t p1 = d4.reps()[*it];
  CHECK_THROWS_AS(triads_of(LineSystem(d4.ambient(), {p0, p1})), std::domain_error);
}

TEST_CASE("gq_check failures") {
  IncidenceStructure tri{3, {{0, 1, 2}}};
  const auto r = gq_check(tri);
  CHECK_FALSE(r.ok);
  CHECK(r.failure == "diameter");
  CHECK(gq_check(IncidenceStructure{}).failure == "empty");
  CHECK(gq_check(IncidenceStructure{4, {{0, 1, 2}, {2, 3}}}).failure == "block size");
  CHECK(gq_check(IncidenceStructure{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}}).failure == "point degree");
  // a triangle of 2-point blocks: diameter 3 in the incidence graph (hexagon)
  CHECK(gq_check(IncidenceStructure{3, {{0, 1}, {1, 2}, {0, 2}}}).failure == "diameter");
  // 4x4 grid of 2-point blocks is GQ(1,1) (octagon)
  const auto sq = gq_check(IncidenceStructure{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}});
  CHECK(sq.ok);
  CHECK(sq.s == 1);
  CHECK(sq.t == 1);
  // two disjoint octagons: degree and size fine, girth 8, but disconnected
  CHECK(gq_check(IncidenceStructure{8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}}}).failure ==
        "diameter");
}

TEST_CASE("equiangular bound") {
  RatMatrix hex(3, 3);
  const int g[3][3] = {{2, 1, -1}, {1, 2, 1}, {-1, 1, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) hex(i, j) = Rational(g[i][j]);
  const auto r = equiangular_bound_check(hex, 2);
  CHECK(r.bound == 3);
  CHECK(r.meets_bound);
  CHECK(r.cos_squared == Rational(1, 4));
  REQUIRE(r.cos);
  CHECK(*r.cos == Rational(1, 2));

  RatMatrix orth(2, 2);
  orth(0, 0) = orth(1, 1) = Rational(1);
  const auto o = equiangular_bound_check(orth, 2);
  CHECK_FALSE(o.meets_bound);
  CHECK(o.cos_squared == Rational(0));

  RatMatrix bad(3, 3);
  bad(0, 0) = bad(1, 1) = bad(2, 2) = Rational(2);
  bad(0, 1) = bad(1, 0) = Rational(1);
  CHECK_THROWS_AS(equiangular_bound_check(bad, 3), std::domain_error);
  RatMatrix same(2, 2);
  same(0, 0) = same(1, 1) = same(0, 1) = same(1, 0) = Rational(2);
  CHECK_THROWS_AS(equiangular_bound_check(same, 2), std::invalid_argument);
}

TEST_CASE("Theorem 2 classification") {
  struct Case {
    const char* label;
    char c;
    const char* graph;
  } cases[] = {{"A2", 'a', "K0"},         {"A5", 'a', "K3"},          {"A8", 'a', "K6"},
               {"D4", 'b', "CP(1)+K1"},   {"D5", 'b', "CP(2)+K1"},    {"D8", 'b', "CP(5)+K1"},
               {"E6", 'c', "srg(9,4,1,2)"}, {"E7", 'd', "srg(15,8,4,4)"}, {"E8", 'e', "srg(27,16,10,8)"}};
  for (const auto& c : cases) {
    const auto res = classify_indecomposable(lines_of(build_simply_laced(c.label)));
    CHECK(res.theorem_case == c.c);
    CHECK(res.label == c.label);
    CHECK(res.graph == c.graph);
  }
  CHECK_THROWS_AS(classify_indecomposable(lines_of(build_simply_laced("A2xA2"))), std::invalid_argument);
  const LineSystem e7 = lines_of(build_simply_laced("E7"));
  CHECK_THROWS_AS(classify_indecomposable(LineSystem(e7.ambient(), {e7.reps()[0], e7.reps()[1]})),
                  std::invalid_argument);
}

TEST_CASE("classification does not depend on the chosen star") {
  for (const char* label : {"D6", "E6", "E7"}) {
    const LineSystem l = lines_of(build_simply_laced(label));
    const Graph ref = representation_graph(part_a_of(l)).graph;
    for (const auto& st : all_stars(l)) {
      const Graph g = representation_graph(star_decomposition(l, st).part_a).graph;
      CHECK(find_isomorphism(g, ref).has_value());
    }
  }
}

TEST_CASE("decomposability matches connectivity") {
  CHECK_FALSE(is_indecomposable(lines_of(build_simply_laced("A1xA2"))));
  CHECK_FALSE(is_indecomposable(lines_of(build_simply_laced("D4xE6"))));
  CHECK(is_indecomposable(lines_of(build_simply_laced("A1"))));
}
