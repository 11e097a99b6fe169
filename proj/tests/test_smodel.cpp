#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "rootlines/smodel.hpp"

using namespace rootlines;

namespace {

const StandardModel& model() {
  static const StandardModel sm;
  return sm;
}

using Triad = std::array<std::string, 3>;

Triad sorted(Triad t) {
  std::sort(t.begin(), t.end());
  return t;
}

// The printed triads of the generation remark.
std::vector<Triad> printed_triads() {
  std::vector<Triad> t = {
      {"nu_L", "u_L^r", "u_R^r"},  {"nu_L", "u_L^g", "u_R^g"},  {"nu_L", "u_L^b", "u_R^b"},
      {"e-_L", "d_L^r", "u_R^r"},  {"e-_L", "d_L^g", "u_R^g"},  {"e-_L", "d_L^b", "u_R^b"},
      {"e-_R", "u_R^r", "d_R^r"},  {"e-_R", "u_R^g", "d_R^g"},  {"e-_R", "u_R^b", "d_R^b"},
      {"u_L^r", "d_L^g", "d_R^b"}, {"u_L^r", "d_L^b", "d_R^g"}, {"u_L^g", "d_L^r", "d_R^b"},
      {"u_L^b", "d_L^r", "d_R^g"}, {"u_L^g", "d_L^b", "d_R^r"}, {"u_L^b", "d_L^g", "d_R^r"},
  };
  for (auto& x : t) x = sorted(x);
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Triad> printed_lepton_free() {
  auto all = printed_triads();
  std::vector<Triad> out;
  for (const auto& t : all)
    if (std::none_of(t.begin(), t.end(), [](const std::string& s) { return s[0] == 'n' || s[0] == 'e'; }))
      out.push_back(t);
  return out;
}

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("operators") {
  const RootSystem& e7 = model().e7();
  // the label vectors are over E7's simple roots in node order
  for (std::size_t i = 0; i < 7; ++i) {
    Coords unit(7, 0);
    unit[i] = 1;
    CHECK(e7.root(e7.simple_roots()[i]) == unit);
  }
  const auto& ops = standard_operators();
  REQUIRE(ops.size() == 7);
  CHECK(ops[kH].labels == RatVector{r(1), r(3, 2), r(2), r(3), r(5, 2), r(5, 3), r(5, 6)});
  CHECK(ops[kB].labels == RatVector{r(2, 3), r(1), r(4, 3), r(2), r(0), r(0), r(0)});
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = a + 1; b < 7; ++b)
      CHECK(e7.form()->inner(operator_vector(e7, ops[a]).q, operator_vector(e7, ops[b]).q).is_zero());
  // B is orthogonal to the A1xA2 roots and lies in the span of the A4 simple roots
  const Coweight b = operator_vector(e7, ops[kB]);
  for (auto root : model().sm_roots()) CHECK(pairing(e7, root, b).is_zero());
  CHECK(std::all_of(b.q.begin() + 4, b.q.end(), [](const Rational& x) { return x.is_zero(); }));
}

TEST_CASE("coweight gradings of the operators") {
  const RootSystem& e7 = model().e7();
  const auto& ops = standard_operators();
  auto scaled = [&](std::size_t k, std::int64_t f) {
    Coweight w = operator_vector(e7, ops[k]);
    for (auto& x : w.q) x *= Rational(f);
    return w;
  };
  struct Case {
    std::size_t op;
    std::int64_t factor;
    int top;
  } cases[] = {{kW0, 2, 2}, {kB, 3, 6}, {kH, 3, 3}};
  for (const auto& c : cases) {
    const Coweight w = scaled(c.op, c.factor);
    CHECK(is_coweight(e7, w));
    const ZGrading g = grading_from_coweight(e7, w);
    CHECK(g.parts.size() == static_cast<std::size_t>(2 * c.top + 1));
    for (int i = -c.top; i <= c.top; ++i) CHECK_FALSE(g.part(i).empty());
  }
  CHECK_FALSE(is_coweight(e7, operator_vector(e7, ops[kB])));
  CHECK_FALSE(is_coweight(e7, operator_vector(e7, ops[kH])));
}

TEST_CASE("quantum numbers") {
  const StandardModel& sm = model();
  std::set<Rational> bvals, hvals, w0vals;
  for (const auto& rec : sm.records()) {
    bvals.insert(rec.eigenvalues[kB]);
    hvals.insert(rec.eigenvalues[kH]);
    w0vals.insert(rec.eigenvalues[kW0]);
    // negation negates every eigenvalue
    const auto& neg = sm.record(sm.e7().negative_of(rec.root)).eigenvalues;
    for (std::size_t k = 0; k < kOperatorCount; ++k) CHECK(neg[k] == -rec.eigenvalues[k]);
  }
  std::set<Rational> allowed_b, allowed_h;
  for (std::int64_t n = -6; n <= 6; ++n) allowed_b.insert(Rational(n, 3));
  for (std::int64_t n = -3; n <= 3; ++n) allowed_h.insert(Rational(n, 3));
  CHECK(std::includes(allowed_b.begin(), allowed_b.end(), bvals.begin(), bvals.end()));
  CHECK(std::includes(allowed_h.begin(), allowed_h.end(), hvals.begin(), hvals.end()));
  CHECK(w0vals == std::set<Rational>{r(-1), r(-1, 2), r(0), r(1, 2), r(1)});
  for (const auto& rec : sm.records())
    if (rec.eigenvalues[kW0].abs() == r(1)) CHECK(rec.kind == ParticleClass::WBoson);

  auto sig = [&](std::size_t root) {
    const auto& e = sm.record(root).eigenvalues;
    return std::array<Rational, 4>{e[kB], e[kW0], e[kLambda3], e[kLambda8]};
  };
  CHECK(sig(sm.root_named(1, "e-_L")) == std::array<Rational, 4>{r(-1), r(-1, 2), r(0), r(0)});
  CHECK(sig(sm.root_named(1, "u_R^b")) == std::array<Rational, 4>{r(4, 3), r(0), r(0), r(2)});
  CHECK_THROWS_AS(quantum_numbers(sm.e7(), 126), std::invalid_argument);
  // the generation roots never have all four Fig. 4 values zero; nu_R is the neutrino sl3
  for (auto root : sm.neutrino_roots()) CHECK(sig(root) == std::array<Rational, 4>{r(0), r(0), r(0), r(0)});
}

TEST_CASE("colours and generations") {
  const StandardModel& sm = model();
  std::map<std::string, int> colours;
  std::map<int, int> generations;
  for (const auto& rec : sm.records()) {
    ++colours[rec.colour];
    ++generations[rec.generation];
  }
  for (const char* c : {"red", "green", "blue", "anti-red", "anti-green", "anti-blue"}) CHECK(colours[c] == 15);
  CHECK(colours["colourless"] == 30);
  CHECK(colours["none"] == 6);
  CHECK(generations[1] == 30);
  CHECK(generations[2] == 30);
  CHECK(generations[3] == 30);
  CHECK(generations[0] == 36);
  // of the 36, the g_SM roots and the 22 extra root spaces have rho eigenvalues (0,0)
  int zero_rho = 0;
  for (const auto& rec : sm.records())
    if (rec.eigenvalues[kRho3].is_zero() && rec.eigenvalues[kRho8].is_zero()) ++zero_rho;
  CHECK(zero_rho == 30);
  for (const auto& rec : sm.records()) {
    if (rec.kind == ParticleClass::Gluon) {
      CHECK(rec.generation == 0);
      CHECK(rec.colour == "none");
    }
  }
  std::array<Rational, kOperatorCount> bad{};
  bad[kLambda3] = Rational(3);
  CHECK_THROWS_AS(colour_of(bad), std::domain_error);
}

TEST_CASE("particle census") {
  const StandardModel& sm = model();
  auto c = census_counts(sm);
  CHECK(c[ParticleClass::Fermion] == 45);
  CHECK(c[ParticleClass::AntiFermion] == 45);
  CHECK(c[ParticleClass::WBoson] == 2);
  CHECK(c[ParticleClass::Gluon] == 6);
  CHECK(c[ParticleClass::NeutrinoSl3] == 6);
  CHECK(c[ParticleClass::Exotic] == 12);
  CHECK(c[ParticleClass::Extra] == 10);
  std::size_t total = 0;
  for (auto [k, v] : c) total += v;
  CHECK(total == 126);
  CHECK(sm.sm_roots().size() == 8);
  CHECK(identify_type(std::vector<Coords>([&] {
                        std::vector<Coords> v;
                        for (auto x : sm.sm_roots()) v.push_back(sm.e7().root(x));
                        return v;
                      }()),
                      sm.e7().form()) == "A1xA2");
  // neutrino sl3: exactly the roots orthogonal to A4, forming A2
  std::vector<Coords> nu;
  for (auto x : sm.neutrino_roots()) nu.push_back(sm.e7().root(x));
  CHECK(nu.size() == 6);
  CHECK(identify_type(nu, sm.e7().form()) == "A2");
  // exotics are exactly A4 minus A1xA2
  std::set<std::size_t> exotic, a4_minus;
  for (const auto& rec : sm.records())
    if (rec.kind == ParticleClass::Exotic) exotic.insert(rec.root);
  for (auto x : sm.a4_roots())
    if (!std::count(sm.sm_roots().begin(), sm.sm_roots().end(), x)) a4_minus.insert(x);
  CHECK(exotic == a4_minus);
  // each generation: 15 Fig. 4 names (nu_R omitted) and their anti-names
  for (int g = 1; g <= 3; ++g) {
    std::set<std::string> names;
    for (auto x : sm.generation_roots(g)) names.insert(sm.record(x).name);
    CHECK(names.size() == 30);
    for (const auto& row : particle_table()) {
      if (row.symbol == "nu_R") continue;
      CHECK(names.count(row.symbol) == 1);
      CHECK(names.count("anti-" + row.symbol) == 1);
    }
  }
  CHECK_THROWS_AS(sm.generation_roots(4), std::invalid_argument);
}

TEST_CASE("the nested sequence behind the model") {
  const auto& seq = model().sequence();
  CHECK(sequence_labels(seq) == std::vector<std::string>{"E7", "E6", "D5", "A4", "A1xA2"});
  CHECK(is_local_sequence(seq).local);
  CHECK(is_maximal_sequence(seq));
}

TEST_CASE("Fig. 4 table") {
  const auto& rows = particle_table();
  REQUIRE(rows.size() == 16);
  CHECK(rows[0].symbol == "nu_R");
  CHECK(rows[0].values == std::array<Rational, 4>{r(0), r(0), r(0), r(0)});
  CHECK(rows[1].values == std::array<Rational, 4>{r(-2), r(0), r(0), r(0)});
  CHECK(rows[14].symbol == "d_L^g");
  CHECK(rows[14].values == std::array<Rational, 4>{r(1, 3), r(-1, 2), r(1), r(-1)});
  const std::string csv = particle_table_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
  CHECK(csv.rfind("name,symbol,B,W0,lambda3,sqrt3lambda8\n", 0) == 0);
  CHECK(csv.find("Left-handed electron,e-_L,-1,-1/2,0,0\n") != std::string::npos);
  // every row is realized by a root of every generation
  for (int g = 1; g <= 3; ++g)
    for (const auto& row : rows) {
      if (row.symbol == "nu_R") continue;
      CHECK_NOTHROW(model().root_named(g, row.symbol));
    }
}

TEST_CASE("generation triads") {
  const StandardModel& sm = model();
  for (int g = 1; g <= 3; ++g) {
    const auto t = generation_triads(sm, g);
    CHECK(t.names == printed_triads());
    CHECK(t.structure.blocks.size() == 15);
    REQUIRE(t.gq.ok);
    CHECK(t.gq.s == 2);
    CHECK(t.gq.t == 2);
    const auto srg = srg_check(t.graph);
    REQUIRE(srg.ok());
    CHECK(*srg.params == SrgParameters{15, 8, 4, 4});
    CHECK(is_star_free(LineSystem(sm.e7(), sm.particle_roots(g))));

    const auto lf = lepton_free_triads(sm, g);
    CHECK(lf.names == printed_lepton_free());
    CHECK(lf.structure.points == 9);
    REQUIRE(lf.gq.ok);
    CHECK(lf.gq.s == 2);
    CHECK(lf.gq.t == 1);

    const auto split = sign_split_check(sm, g);
    CHECK(split.within_gq21_min >= 0);
    CHECK(split.within_rest_min >= 0);
    CHECK(split.cross_max <= 0);
    CHECK(split.triad_sums_zero);
    CHECK(split.ok());
  }
  // only the lepton-free triads sum to zero
  for (const auto& t : printed_triads()) {
    bool zero = true;
    for (std::size_t k : {kB, kW0, kLambda3, kLambda8}) {
      Rational s(0);
      for (const auto& n : t) s += sm.record(sm.root_named(1, n)).eigenvalues[k];
      zero = zero && s.is_zero();
    }
    const auto lf = printed_lepton_free();
    CHECK(zero == (std::find(lf.begin(), lf.end(), t) != lf.end()));
  }
}

TEST_CASE("trimming") {
  const StandardModel& sm = model();
  const auto kept = trim_standard(sm);
  CHECK(kept.size() == 104);
  std::size_t gen = 0, sm_roots = 0, nu = 0;
  for (auto x : kept) {
    const auto& rec = sm.record(x);
    if (rec.generation) ++gen;
    if (rec.kind == ParticleClass::WBoson || rec.kind == ParticleClass::Gluon) ++sm_roots;
    if (rec.kind == ParticleClass::NeutrinoSl3) ++nu;
  }
  CHECK(gen == 90);
  CHECK(sm_roots == 8);
  CHECK(nu == 6);
  std::set<Rational> hgen;
  for (const auto& rec : sm.records())
    if (rec.generation) hgen.insert(rec.eigenvalues[kH]);
  CHECK(hgen == std::set<Rational>{r(-2, 3), r(-1, 3), r(1, 3), r(2, 3)});
  // H = 0 consists of g_SM, the neutrino sl3 and the exotics
  for (const auto& rec : sm.records()) {
    const bool h0 = rec.eigenvalues[kH].is_zero();
    const bool expected = rec.kind == ParticleClass::WBoson || rec.kind == ParticleClass::Gluon ||
                          rec.kind == ParticleClass::NeutrinoSl3 || rec.kind == ParticleClass::Exotic;
    CHECK(h0 == expected);
  }
}

TEST_CASE("centralizer of the standard model algebra") {
  const StandardModel& sm = model();
  const LieAlgebra e7(sm.e7());
  const Subalgebra gsm = standard_model_algebra(e7, sm);
  CHECK(gsm.dim() == 12);
  CHECK(is_closed(e7, gsm));
  const Subalgebra c = centralizer(e7, gsm);
  CHECK(c.dim() == 10);
  CHECK(center(e7, c).dim() == 2);
  const Subalgebra d = derived_subalgebra(e7, c);
  CHECK(d.dim() == 8);
  // the root spaces in the derived part are the neutrino sl3, of type A2
  std::vector<Coords> roots;
  for (std::size_t x = 0; x < e7.system().size(); ++x)
    if (d.contains(Element::basis(e7.e(x)))) roots.push_back(e7.system().root(x));
  CHECK(roots.size() == 6);
  CHECK(identify_type(roots, e7.system().form()) == "A2");
  // H and B span the center
  const Subalgebra z = center(e7, c);
  CHECK(z.contains(e7.cartan_element(standard_operators()[kH].labels)));
  CHECK(z.contains(e7.cartan_element(standard_operators()[kB].labels)));
}

TEST_CASE("census export") {
  const std::string csv = census_csv(model());
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 127);
  CHECK(csv.rfind("name,B,W0,lambda3,sqrt3lambda8,rho3,sqrt3rho8,H,colour,generation,classification\n", 0) == 0);
  CHECK(csv == census_csv(StandardModel()));
  CHECK(csv.find('.') == std::string::npos);
}
