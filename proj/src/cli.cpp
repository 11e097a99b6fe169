#include "rootlines/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

namespace rootlines {

namespace {

const char* kSimplyLaced[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5",
                              "D6", "D7", "D8", "E6", "E7", "E8"};

const std::vector<std::string> kStar = {"E7", "E6", "D5", "A4", "A1xA2"};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string srg_string(const Graph& g) {
  const auto r = srg_check(g);
  return r.ok() ? r.params->str() : "not srg (" + r.failure + ")";
}

Graph prism() {
  Graph g(6);
  for (std::size_t i = 0; i < 3; ++i) {
    g.add_edge(i, (i + 1) % 3);
    g.add_edge(3 + i, 3 + (i + 1) % 3);
    g.add_edge(i, i + 3);
  }
  return g;
}

bool abelian(const LieAlgebra& l, const Subalgebra& s) {
  const auto b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!l.bracket(b[i], b[j]).is_zero()) return false;
  return true;
}

std::string root_space_type(const LieAlgebra& l, const Subalgebra& s) {
  std::vector<Coords> roots;
  for (std::size_t r = 0; r < l.system().size(); ++r)
    if (s.contains(Element::basis(l.e(r)))) roots.push_back(l.system().root(r));
  return identify_type(roots, l.system().form());
}

using Triad = std::array<std::string, 3>;

// The fifteen triads of one generation in their printed order.
const std::vector<Triad> kPrintedTriads = {
      {"nu_L", "u_L^r", "u_R^r"},  {"nu_L", "u_L^g", "u_R^g"},  {"nu_L", "u_L^b", "u_R^b"},
      {"e-_L", "d_L^r", "u_R^r"},  {"e-_L", "d_L^g", "u_R^g"},  {"e-_L", "d_L^b", "u_R^b"},
      {"e-_R", "u_R^r", "d_R^r"},  {"e-_R", "u_R^g", "d_R^g"},  {"e-_R", "u_R^b", "d_R^b"},
      {"u_L^r", "d_L^g", "d_R^b"}, {"u_L^r", "d_L^b", "d_R^g"}, {"u_L^g", "d_L^r", "d_R^b"},
      {"u_L^b", "d_L^r", "d_R^g"}, {"u_L^g", "d_L^b", "d_R^r"}, {"u_L^b", "d_L^g", "d_R^r"},
};

Triad sorted(Triad t) {
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Triad> printed_triads() {
  std::vector<Triad> t;
  for (const auto& x : kPrintedTriads) t.push_back(sorted(x));
  std::sort(t.begin(), t.end());
  return t;
}

class Suite {
 public:
  explicit Suite(VerificationReport& r) : report_(r) {}

  void add(const std::string& name, const std::string& expected,
           const std::function<std::pair<bool, std::string>()>& body) {
    Check c;
    c.name = name;
    c.expected = expected;
    const auto start = std::chrono::steady_clock::now();
    try {
      auto [ok, computed] = body();
      c.ok = ok;
      c.computed = computed;
    } catch (const std::exception& e) {
      c.ok = false;
      c.computed = std::string("exception: ") + e.what();
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(c));
  }

 private:
  VerificationReport& report_;
};

}  // namespace

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

json VerificationReport::to_json(bool timings) const {
  json list = json::array();
  for (const auto& c : checks) {
    json j = {{"name", c.name}, {"status", c.ok ? "pass" : "fail"}, {"expected", c.expected}, {"computed", c.computed}};
    if (timings) j["elapsed_ms"] = static_cast<std::int64_t>(c.elapsed_ms);
    list.push_back(j);
  }
  return {{"status", ok() ? "pass" : "fail"}, {"checks", list}};
}

std::string VerificationReport::text(bool timings) const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    os << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.computed;
    if (timings) os << " [" << static_cast<std::int64_t>(c.elapsed_ms) << " ms]";
    os << '\n';
    if (!c.ok) {
      os << "     expected: " << c.expected << '\n';
      ++failed;
    }
  }
  if (failed)
    os << failed << " of " << checks.size() << " checks failed\n";
  else
    os << "all " << checks.size() << " checks passed\n";
  return os.str();
}

VerificationReport verify_all(unsigned jobs) {
  VerificationReport report;
  Suite suite(report);

  suite.add("root-counts", "|Phi| = n(n+1), 2n(n-1), 72, 126, 240 and dim = |Phi| + rank = n(n+2), n(2n-1), 78, 133, 248",
            [] {
              bool ok = true;
              std::vector<std::string> parts;
              for (const char* label : kSimplyLaced) {
                const RootSystem s = build_simply_laced(label);
                const LieAlgebra l(s);
                const int n = static_cast<int>(s.rank());
                std::size_t roots = 0, dim = 0;
                switch (label[0]) {
                  case 'A': roots = n * (n + 1), dim = n * (n + 2); break;
                  case 'D': roots = 2 * n * (n - 1), dim = n * (2 * n - 1); break;
                  default: roots = n == 6 ? 72 : n == 7 ? 126 : 240, dim = n == 6 ? 78 : n == 7 ? 133 : 248;
                }
                ok = ok && s.size() == roots && l.dim() == dim && l.dim() == s.size() + s.rank();
                parts.push_back(std::string(label) + " " + std::to_string(s.size()) + "/" + std::to_string(l.dim()));
              }
              return std::pair{ok, join(parts, ", ")};
            });

  const std::string census =
      "E7: 27 E6 Albert | E6: 16 D5 bi-Cayley | D5: 10 A4 alternating, 8 D4 even quadratic | "
      "A4: 6 A1xA2 rectangular, 4 A3 rectangular | E8: none | G2: none | F4: none";
  suite.add("grading-census", census, [&census] {
              std::vector<std::string> parts;
              for (const char* label : {"E7", "E6", "D5", "A4", "E8", "G2", "F4"}) {
                const RootSystem s =
                    label[0] == 'G' || label[0] == 'F' ? build_non_simply_laced(label) : build_simply_laced(label);
                std::set<std::tuple<std::size_t, std::string, std::string>, std::greater<>> seen;
                for (const auto& g : enumerate_three_gradings(s)) seen.insert({g.weight(), g.zero_type, g.name});
                std::vector<std::string> items;
                for (const auto& [w, t, n] : seen) items.push_back(std::to_string(w) + " " + t + " " + n);
                parts.push_back(std::string(label) + ": " + (items.empty() ? "none" : join(items, ", ")));
              }
              const std::string computed = join(parts, " | ");
              return std::pair{computed == census, computed};
            });

  suite.add("unique-sequence", "unique local and unique maximal sequence, both E7 > E6 > D5 > A4 > A1xA2", [] {
    const auto r = verify_exceptional_uniqueness(8);
    const bool ok = r.unique_local && r.unique_maximal && r.agree && r.winner == kStar;
    return std::pair{ok, "sources " + join(r.sources, ",") + "; " + std::to_string(r.sequences.size()) +
                             " sequences, " + std::to_string(r.local.size()) + " local, " +
                             std::to_string(r.maximal.size()) + " maximal; winner " + join(r.winner, " > ")};
  });

  suite.add("part-a-graphs",
            "E6 srg(9,4,1,2), E7 srg(15,8,4,4), E8 srg(27,16,10,8), A_n K_(n-2), D_n CP(n-3)+K1 for n <= 8", [] {
              bool ok = true;
              std::vector<std::string> parts;
              for (const char* label : kSimplyLaced) {
                if (std::string(label) == "A1") continue;
                const RootSystem s = build_simply_laced(label);
                const int n = static_cast<int>(s.rank());
                std::string expected;
                switch (label[0]) {
                  case 'A': expected = "K" + std::to_string(n - 2); break;
                  case 'D': expected = "CP(" + std::to_string(n - 3) + ")+K1"; break;
                  default: expected = n == 6 ? "srg(9,4,1,2)" : n == 7 ? "srg(15,8,4,4)" : "srg(27,16,10,8)";
                }
                const auto c = classify_indecomposable(lines_of(s));
                ok = ok && c.graph == expected && c.label == label;
                parts.push_back(std::string(label) + " " + c.graph);
              }
              return std::pair{ok, join(parts, ", ")};
            });

  suite.add("star-lemma", "no line orthogonal to exactly two members of any star, in every catalog system", [] {
    std::size_t stars = 0, violations = 0;
    for (const char* label : kSimplyLaced) {
      const RootSystem s = build_simply_laced(label);
      const LineSystem l = lines_of(s);
      for (std::size_t a = 0; a < l.size(); ++a)
        for (std::size_t b = a + 1; b < l.size(); ++b) {
          if (l.inner(a, b) == 0) continue;
          const auto c = third_line(s, l.reps()[a], l.reps()[b]);
          if (!c) {
            ++violations;
            continue;
          }
          const std::size_t cp = l.position_of(*c);
          if (cp < b) continue;
          ++stars;
          for (std::size_t x = 0; x < l.size(); ++x) {
            const int zeros = (l.inner(x, a) == 0) + (l.inner(x, b) == 0) + (l.inner(x, cp) == 0);
            if (zeros == 2) ++violations;
          }
        }
    }
    return std::pair{violations == 0 && stars > 0,
                     std::to_string(stars) + " stars, " + std::to_string(violations) + " violations"};
  });

  suite.add("jacobi", "Jacobi and antisymmetry hold on every basis triple of a1, a2, a4, d5, e6", [jobs] {
    bool ok = true;
    std::vector<std::string> parts;
    for (const char* label : {"A1", "A2", "A4", "D5", "E6"}) {
      const auto r = verify_jacobi(LieAlgebra(build_simply_laced(label)), jobs);
      ok = ok && r.ok;
      parts.push_back(std::string(label) + (r.ok ? " ok " : " FAILED ") + std::to_string(r.triples));
    }
    return std::pair{ok, join(parts, ", ")};
  });

  suite.add("e7-jacobi", "Jacobi holds on all 383306 triples of the 133 basis elements of e7", [jobs] {
    const LieAlgebra e7(build_simply_laced("E7"));
    const auto r = verify_jacobi(e7, jobs);
    std::string computed = std::string(r.ok ? "ok" : "failed") + " on " + std::to_string(r.triples) + " triples of " +
                           std::to_string(e7.dim()) + " basis elements";
    if (!r.ok)
      computed += "; witness (" + std::to_string(r.witness[0]) + "," + std::to_string(r.witness[1]) + "," +
                  std::to_string(r.witness[2]) + ")";
    return std::pair{r.ok && r.triples == 383306, computed};
  });

  StandardModel sm;

  suite.add("graded-pieces",
            "along E7 > E6 > D5 > A4 > A1xA2: g(+-1) abelian of dims 27, 16, 10, 6; dim g(0) = |Phi0| + rank; "
            "[g(0), g(0)] of codimension 1 with root type Phi0",
            [&sm] {
              bool ok = true;
              std::vector<std::string> parts;
              const std::size_t dims[] = {27, 16, 10, 6};
              for (std::size_t k = 0; k < sm.sequence().size(); ++k) {
                const ThreeGrading& g = sm.sequence()[k];
                const LieAlgebra l(g.system);
                const GradedPieces p = graded_pieces(l, g);
                const Subalgebra d = derived_subalgebra(l, p.zero);
                const std::string type = root_space_type(l, d);
                ok = ok && p.plus.dim() == dims[k] && p.minus.dim() == dims[k] && abelian(l, p.plus) &&
                     abelian(l, p.minus) && p.zero.dim() == g.zero.size() + l.rank() && d.dim() + 1 == p.zero.dim() &&
                     type == g.zero_type;
                parts.push_back(g.system.label() + ": " + std::to_string(p.plus.dim()) + ", g(0) " +
                                std::to_string(p.zero.dim()) + ", derived " + std::to_string(d.dim()) + " " + type);
              }
              return std::pair{ok, join(parts, "; ")};
            });

  suite.add("particle-table", "every Fig. 4 row is the (B, W0, lambda3, sqrt3 lambda8) of one root per generation; "
                              "nu_R on the 6 neutrino-sl3 roots",
            [&sm] {
              bool ok = particle_table().size() == 16;
              std::size_t matched = 0;
              for (const auto& row : particle_table()) {
                std::vector<const ParticleRecord*> hits;
                for (const auto& rec : sm.records()) {
                  const auto& e = rec.eigenvalues;
                  if (std::array<Rational, 4>{e[kB], e[kW0], e[kLambda3], e[kLambda8]} == row.values)
                    hits.push_back(&rec);
                }
                // extra root spaces can share these four values; only generation roots count
                std::set<std::size_t> roots;
                std::multiset<int> gens;
                bool named = true;
                for (auto* h : hits) {
                  if (h->kind == ParticleClass::NeutrinoSl3) roots.insert(h->root);
                  if (!h->generation) continue;
                  gens.insert(h->generation);
                  named = named && h->name == row.symbol && h->kind == ParticleClass::Fermion;
                }
                const bool row_ok =
                    row.symbol == "nu_R"
                        ? gens.empty() && roots == std::set<std::size_t>(sm.neutrino_roots().begin(),
                                                                         sm.neutrino_roots().end())
                        : named && gens == std::multiset<int>{1, 2, 3};
                ok = ok && row_ok;
                if (row_ok) ++matched;
              }
              return std::pair{ok, std::to_string(matched) + " of " + std::to_string(particle_table().size()) +
                                       " rows matched"};
            });

  suite.add("particle-census",
            "30 roots per generation x 3; 8 g_SM roots; 6 neutrino-sl3 roots of type A2; 12 with B = +-5/3; "
            "10 with H = +-1; total 126",
            [&sm] {
              std::size_t b53 = 0, h1 = 0;
              for (const auto& rec : sm.records()) {
                if (rec.eigenvalues[kB].abs() == Rational(5, 3)) ++b53;
                if (rec.eigenvalues[kH].abs() == Rational(1)) ++h1;
              }
              std::vector<Coords> nu;
              for (auto r : sm.neutrino_roots()) nu.push_back(sm.e7().root(r));
              const std::string nu_type = identify_type(nu, sm.e7().form());
              const auto c = census_counts(sm);
              std::size_t total = 0;
              for (auto [k, v] : c) total += v;
              std::ostringstream os;
              os << "generations " << sm.generation_roots(1).size() << "/" << sm.generation_roots(2).size() << "/"
                 << sm.generation_roots(3).size() << ", g_SM " << sm.sm_roots().size() << ", neutrino-sl3 "
                 << nu.size() << " " << nu_type << ", B=+-5/3 " << b53 << ", H=+-1 " << h1 << ", total " << total;
              const bool ok = sm.generation_roots(1).size() == 30 && sm.generation_roots(2).size() == 30 &&
                              sm.generation_roots(3).size() == 30 && sm.sm_roots().size() == 8 && nu.size() == 6 &&
                              nu_type == "A2" && b53 == 12 && h1 == 10 && total == 126 &&
                              c.at(ParticleClass::Exotic) == 12 && c.at(ParticleClass::Extra) == 10;
              return std::pair{ok, os.str()};
            });

  suite.add("coweight-gradings", "2W0 a 5-grading, 3B a 13-grading, 3H a 7-grading, every degree realized", [&sm] {
    bool ok = true;
    std::vector<std::string> parts;
    const std::pair<std::size_t, int> cases[] = {{kW0, 2}, {kB, 3}, {kH, 3}};
    const int tops[] = {2, 6, 3};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& op = standard_operators()[cases[k].first];
      Coweight w = operator_vector(sm.e7(), op);
      for (auto& x : w.q) x *= Rational(cases[k].second);
      const ZGrading g = grading_from_coweight(sm.e7(), w);
      bool full = is_coweight(sm.e7(), w) && g.parts.size() == static_cast<std::size_t>(2 * tops[k] + 1);
      for (int i = -tops[k]; i <= tops[k]; ++i) full = full && g.parts.count(i) && !g.part(i).empty();
      ok = ok && full;
      parts.push_back(std::to_string(cases[k].second) + op.name + " " + std::to_string(g.parts.size()) + "-grading");
    }
    return std::pair{ok, join(parts, ", ")};
  });

  suite.add("centralizer", "C(g_SM) has dim 10 = center 2 + derived 8 of type A2", [&sm] {
    const LieAlgebra e7(sm.e7());
    const Subalgebra c = centralizer(e7, standard_model_algebra(e7, sm));
    const Subalgebra z = center(e7, c);
    const Subalgebra d = derived_subalgebra(e7, c);
    const std::string type = root_space_type(e7, d);
    const bool ok = c.dim() == 10 && z.dim() == 2 && d.dim() == 8 && type == "A2";
    return std::pair{ok, "dim " + std::to_string(c.dim()) + ", center " + std::to_string(z.dim()) + ", derived " +
                             std::to_string(d.dim()) + " " + type};
  });

  suite.add("generation-triads",
            "15 triads equal to the printed list, GQ(2,2); 6 lepton-free triads GQ(2,1); sign split holds", [&sm] {
              const auto t = generation_triads(sm, 1);
              const auto lf = lepton_free_triads(sm, 1);
              const auto split = sign_split_check(sm, 1);
              const bool ok = t.names == printed_triads() && t.gq.ok && t.gq.s == 2 && t.gq.t == 2 &&
                              lf.names.size() == 6 && lf.gq.ok && lf.gq.s == 2 && lf.gq.t == 1 && split.ok();
              std::ostringstream os;
              os << t.names.size() << " triads" << (t.names == printed_triads() ? " (match)" : " (differ)") << ", GQ("
                 << t.gq.s << "," << t.gq.t << ")" << (t.gq.ok ? "" : " " + t.gq.failure) << "; " << lf.names.size()
                 << " lepton-free, GQ(" << lf.gq.s << "," << lf.gq.t << ")" << (lf.gq.ok ? "" : " " + lf.gq.failure)
                 << "; sign split " << (split.ok() ? "ok" : "failed");
              return std::pair{ok, os.str()};
            });

  suite.add("absolute-bound-28",
            "56 minuscule coweights, 28 lines in R^7 at |cos| = 1/3 meeting the bound 28; acute 1..4 give E6, D5, "
            "A4, A1xA2",
            [&sm] {
              const auto orbit = minuscule_orbit(sm.e7());
              const auto r = equiangular_bound_check(orbit_line_gram(sm.e7(), orbit), 7);
              std::vector<Coweight> acute;
              std::vector<std::string> types;
              for (const auto& w : orbit) {
                if (acute.size() == 4) break;
                if (std::all_of(acute.begin(), acute.end(),
                                [&](const Coweight& a) { return sm.e7().form()->inner(a.q, w.q).sign() > 0; })) {
                  acute.push_back(w);
                  types.push_back(orthogonal_subsystem(sm.e7(), acute));
                }
              }
              const bool ok = orbit.size() == 56 && r.lines == 28 && r.bound == 28 && r.meets_bound && r.cos &&
                              *r.cos == Rational(1, 3) && types == std::vector<std::string>{"E6", "D5", "A4", "A1xA2"};
              return std::pair{ok, std::to_string(orbit.size()) + " coweights, " + std::to_string(r.lines) +
                                       " lines, bound " + std::to_string(r.bound) + ", |cos| " +
                                       (r.cos ? r.cos->str() : "irrational") + "; " + join(types, ", ")};
            });

  suite.add("local-subgraph-chain",
            "srg(27,16,10,8) -> srg(16,10,6,6) -> srg(10,6,3,4) -> prism with isomorphism certificates "
            "(the listed srg(16,10,6,4) violates k(k-lambda-1) = (v-k-1)mu)",
            [&sm] {
              std::vector<Graph> g;
              for (const auto& a : sm.sequence()) g.push_back(decomposition_graph(a));
              bool ok = g.size() == 4;
              std::vector<std::string> parts;
              for (std::size_t k = 0; k + 1 < g.size(); ++k) {
                const Graph local = local_subgraph(g[k]);
                const auto iso = find_isomorphism(g[k + 1], local);
                ok = ok && iso && is_isomorphism(g[k + 1], local, *iso);
                parts.push_back(srg_string(g[k]));
              }
              const auto prism_iso = find_isomorphism(g.back(), prism());
              ok = ok && prism_iso && is_isomorphism(g.back(), prism(), *prism_iso);
              parts.push_back(prism_iso ? "prism" : srg_string(g.back()));
              ok = ok && parts == std::vector<std::string>{"srg(27,16,10,8)", "srg(16,10,6,6)", "srg(10,6,3,4)", "prism"};
              const bool listed_feasible = 10 * (10 - 6 - 1) == (16 - 10 - 1) * 4;
              return std::pair{ok && !listed_feasible, join(parts, " -> ") + (ok ? ", certified" : ", not certified")};
            });

  suite.add("non-simply-laced", "B3 18, C3 18, G2 12, F4 48 roots, reflection-closed with two root norms", [] {
    bool ok = true;
    std::vector<std::string> parts;
    const std::pair<const char*, std::size_t> cases[] = {{"B3", 18}, {"C3", 18}, {"G2", 12}, {"F4", 48}};
    for (const auto& [label, count] : cases) {
      const RootSystem s = build_non_simply_laced(label);
      std::set<std::int64_t> norms;
      for (std::size_t r = 0; r < s.size(); ++r) norms.insert(s.norm(r));
      const bool closed = is_reflection_closed(s);
      ok = ok && s.size() == count && closed && norms.size() == 2;
      parts.push_back(std::string(label) + " " + std::to_string(s.size()) + (closed ? " closed" : " not closed") +
                      " norms " + std::to_string(norms.size()));
    }
    return std::pair{ok, join(parts, ", ")};
  });

  return report;
}

namespace {

enum class Format { Text, Json, Csv, Dot };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootSystem build_any(const std::string& label) {
  if (!label.empty() && (label[0] == 'B' || label[0] == 'C' || label[0] == 'F' || label[0] == 'G'))
    return build_non_simply_laced(label);
  return build_simply_laced(label);
}

std::string coords_str(const Coords& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string rational_vector_str(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

void print_lines(std::ostream& os, const char* name, const LineSystem& l) {
  os << name << " (" << l.size() << "):";
  for (auto r : l.reps()) os << ' ' << coords_str(l.ambient().root(r));
  os << '\n';
}

void require(Format f, std::initializer_list<Format> allowed, const std::string& verb) {
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw Usage("format not supported by '" + verb + "'");
}

std::string triad_str(const std::array<std::string, 3>& t) { return "{" + t[0] + ", " + t[1] + ", " + t[2] + "}"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, line systems, gradings and the e7 particle classification", "rootlines"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string output;
  auto* format_opt = app.add_option("--format", format_name, "Output format (verify-all defaults to json)")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
      ->capture_default_str();
  app.add_option("-o,--output", output, "Write to this file instead of standard output");

  std::string type;
  int generation = 1;
  int max_rank = 8;
  unsigned jobs = 0;
  bool dot = false, jacobi = false, timings = false;

  auto* roots = app.add_subcommand("roots", "Root systems")->require_subcommand(1);
  auto* roots_build = roots->add_subcommand("build", "Build a root system");
  roots_build->add_option("--type", type, "Type label, e.g. E7 or A1xA2")->required();

  auto* lines = app.add_subcommand("lines", "Line systems")->require_subcommand(1);
  auto* lines_classify = lines->add_subcommand("classify", "Classify the line system of a root system");
  lines_classify->add_option("--type", type)->required();
  auto* lines_decompose = lines->add_subcommand("decompose", "Star-decomposition about the first star");
  lines_decompose->add_option("--type", type)->required();

  auto* gradings = app.add_subcommand("gradings", "3-gradings")->require_subcommand(1);
  auto* gradings_enum = gradings->add_subcommand("enumerate", "List the 3-gradings of a root system");
  gradings_enum->add_option("--type", type)->required();

  auto* mesh = app.add_subcommand("mesh", "Grading mesh of the catalog up to a rank");
  mesh->add_option("--max-rank", max_rank)->check(CLI::Range(1, 8))->capture_default_str();
  mesh->add_flag("--dot", dot, "Same as --format dot");

  auto* sequence = app.add_subcommand("sequence", "Nested sequences")->require_subcommand(1);
  auto* verify_star = sequence->add_subcommand("verify-star", "Check the unique local and maximal sequence");

  auto* lie = app.add_subcommand("lie", "Chevalley Lie algebras")->require_subcommand(1);
  auto* lie_build = lie->add_subcommand("build", "Build a Chevalley basis");
  lie_build->add_option("--type", type)->required();
  lie_build->add_flag("--verify-jacobi", jacobi, "Check the Jacobi identity on every basis triple");
  lie_build->add_option("--jobs", jobs, "Threads for the Jacobi check (0 = all cores)");

  auto* particles = app.add_subcommand("particles", "The e7 particle classification")->require_subcommand(1);
  auto* particles_table = particles->add_subcommand("table", "Fermion table of one generation");
  auto* particles_triads = particles->add_subcommand("triads", "Orthogonal triads of a generation");
  particles_triads->add_option("--generation", generation)->check(CLI::Range(1, 3))->capture_default_str();
  auto* particles_census = particles->add_subcommand("census", "Classification of all 126 root spaces");

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_option("--jobs", jobs, "Threads for the Jacobi checks (0 = all cores)");
  verify->add_flag("--timings", timings, "Include elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  Format format = format_name == "json"  ? Format::Json
                  : format_name == "csv" ? Format::Csv
                  : format_name == "dot" ? Format::Dot
                                         : Format::Text;
  if (dot) format = Format::Dot;
  if (*verify && format_opt->count() == 0) format = Format::Json;

  std::ostringstream os;
  int status = 0;
  try {
    if (*roots_build) {
      require(format, {Format::Text, Format::Json}, "roots build");
      const RootSystem s = build_any(type);
      if (format == Format::Json) {
        os << to_json(s).dump(2) << '\n';
      } else {
        os << s.label() << ": rank " << s.rank() << ", " << s.size() << " roots\ngram:\n";
        for (const auto& row : s.form()->matrix()) {
          for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
          os << '\n';
        }
        os << "roots:\n";
        for (const auto& r : s.roots()) os << coords_str(r) << '\n';
      }
    } else if (*lines_classify) {
      require(format, {Format::Text, Format::Json, Format::Dot}, "lines classify");
      const RootSystem s = build_simply_laced(type);
      const Classification c = classify_indecomposable(lines_of(s));
      if (format == Format::Json)
        os << to_json(c).dump(2) << '\n';
      else if (format == Format::Dot)
        os << to_dot(c.part_a_graph, "part_a");
      else
        os << c.label << ": " << lines_of(s).size() << " lines, case (" << c.theorem_case << "), part A graph "
           << c.graph << '\n';
    } else if (*lines_decompose) {
      require(format, {Format::Text, Format::Json}, "lines decompose");
      const RootSystem s = build_simply_laced(type);
      const LineSystem l = lines_of(s);
      const auto star = first_star(l);
      if (!star) throw std::invalid_argument(s.label() + " has no star");
      const StarDecomposition d = star_decomposition(l, *star);
      if (format == Format::Json) {
        os << to_json(d).dump(2) << '\n';
      } else {
        os << "star:";
        for (auto r : d.star) os << ' ' << coords_str(s.root(r));
        os << '\n';
        print_lines(os, "part A", d.part_a);
        print_lines(os, "part B", d.part_b);
        print_lines(os, "part C", d.part_c);
        print_lines(os, "part D", d.part_d);
      }
    } else if (*gradings_enum) {
      require(format, {Format::Text, Format::Json}, "gradings enumerate");
      const auto gs = enumerate_three_gradings(build_any(type));
      if (format == Format::Json) {
        json arr = json::array();
        for (const auto& g : gs) arr.push_back(to_json(g));
        os << arr.dump(2) << '\n';
      } else {
        if (gs.empty()) os << "no 3-gradings\n";
        for (const auto& g : gs)
          os << "node " << g.node << ": " << g.system.label() << " -" << g.weight() << "-> " << g.zero_type << " ("
             << g.name << "), coweight " << rational_vector_str(g.q.q) << '\n';
      }
    } else if (*mesh) {
      require(format, {Format::Text, Format::Json, Format::Dot}, "mesh");
      const GradingMesh m = build_mesh(max_rank);
      if (format == Format::Json)
        os << to_json(m).dump(2) << '\n';
      else if (format == Format::Dot)
        os << mesh_to_dot(m);
      else
        for (const auto& a : m.arrows) os << a.source << " -" << a.weight << "-> " << a.target << " (" << a.name << ")\n";
    } else if (*verify_star) {
      require(format, {Format::Text, Format::Json}, "sequence verify-star");
      const UniquenessReport r = verify_exceptional_uniqueness(8);
      const bool ok = r.unique_local && r.unique_maximal && r.agree && r.winner == kStar;
      if (format == Format::Json) {
        json j = to_json(r);
        j["status"] = ok ? "pass" : "fail";
        os << j.dump(2) << '\n';
      } else {
        os << "non-extendable sources: " << join(r.sources, ", ") << '\n';
        for (std::size_t i = 0; i < r.sequences.size(); ++i) {
          const bool loc = std::count(r.local.begin(), r.local.end(), i) > 0;
          const bool max = std::count(r.maximal.begin(), r.maximal.end(), i) > 0;
          os << "  " << join(sequence_labels(r.sequences[i]), " > ") << (loc ? "  local" : "") << (max ? "  maximal" : "")
             << '\n';
        }
        os << (ok ? "PASS" : "FAIL") << ": unique local and maximal sequence " << join(r.winner, " > ") << '\n';
      }
      status = ok ? 0 : 1;
    } else if (*lie_build) {
      require(format, {Format::Text, Format::Json}, "lie build");
      const LieAlgebra l(build_simply_laced(type));
      std::optional<JacobiResult> jr;
      if (jacobi) jr = verify_jacobi(l, jobs);
      if (format == Format::Json) {
        json basis = json::array();
        for (std::size_t i = 0; i < l.dim(); ++i) basis.push_back(l.basis_name(i));
        json j = {{"label", l.system().label()}, {"rank", l.rank()}, {"dim", l.dim()}, {"basis", basis}};
        j["structure_constants"] = structure_constants_json(l);
        if (jr) j["jacobi"] = {{"ok", jr->ok}, {"triples", jr->triples}};
        os << j.dump(2) << '\n';
      } else {
        os << l.system().label() << ": rank " << l.rank() << ", dim " << l.dim() << ", " << l.system().size()
           << " root spaces\n";
        if (jr) {
          os << "jacobi: " << (jr->ok ? "ok" : "FAILED") << " on " << jr->triples << " triples";
          if (!jr->ok)
            os << ", witness " << l.basis_name(jr->witness[0]) << ", " << l.basis_name(jr->witness[1]) << ", "
               << l.basis_name(jr->witness[2]);
          os << '\n';
        }
      }
      if (jr && !jr->ok) status = 1;
    } else if (*particles_table) {
      require(format, {Format::Text, Format::Json, Format::Csv}, "particles table");
      if (format == Format::Csv) {
        os << particle_table_csv();
      } else if (format == Format::Json) {
        os << particle_table_json().dump(2) << '\n';
      } else {
        for (const auto& row : particle_table()) {
          os << row.symbol << std::string(8 - std::min<std::size_t>(8, row.symbol.size()), ' ');
          for (const auto& v : row.values) os << ' ' << std::string(5 - std::min<std::size_t>(5, v.str().size()), ' ') << v;
          os << "  " << row.name << '\n';
        }
      }
    } else if (*particles_triads) {
      require(format, {Format::Text, Format::Json, Format::Dot}, "particles triads");
      const StandardModel sm;
      const NamedTriads t = generation_triads(sm, generation);
      const NamedTriads lf = lepton_free_triads(sm, generation);
      const SignSplitReport split = sign_split_check(sm, generation);
      if (format == Format::Json) {
        json j = {{"generation", generation},
                  {"triads", to_json(t)},
                  {"lepton_free", to_json(lf)},
                  {"sign_split",
                   {{"within_gq21_min", split.within_gq21_min},
                    {"within_rest_min", split.within_rest_min},
                    {"cross_max", split.cross_max},
                    {"triad_sums_zero", split.triad_sums_zero},
                    {"ok", split.ok()}}}};
        os << j.dump(2) << '\n';
      } else if (format == Format::Dot) {
        os << to_dot(t.graph, "generation" + std::to_string(generation));
      } else {
        os << "generation " << generation << ": " << t.names.size() << " triads";
        if (t.gq.ok)
          os << ", GQ(" << t.gq.s << "," << t.gq.t << ")\n";
        else
          os << ", not a GQ (" << t.gq.failure << ")\n";
        std::vector<Triad> rest = t.names;
        for (const auto& p : kPrintedTriads) {
          auto it = std::find(rest.begin(), rest.end(), sorted(p));
          if (it == rest.end()) continue;
          os << "  " << triad_str(p) << '\n';
          rest.erase(it);
        }
        for (const auto& b : rest) os << "  " << triad_str(b) << '\n';
        os << "lepton-free: " << lf.names.size() << " triads";
        if (lf.gq.ok)
          os << ", GQ(" << lf.gq.s << "," << lf.gq.t << ")\n";
        else
          os << ", not a GQ (" << lf.gq.failure << ")\n";
        os << "sign split: " << (split.ok() ? "ok" : "failed") << '\n';
      }
    } else if (*particles_census) {
      require(format, {Format::Text, Format::Json, Format::Csv}, "particles census");
      const StandardModel sm;
      if (format == Format::Csv) {
        os << census_csv(sm);
      } else if (format == Format::Json) {
        os << census_json(sm).dump(2) << '\n';
      } else {
        std::size_t total = 0;
        for (auto [k, v] : census_counts(sm)) {
          os << to_string(k) << ": " << v << '\n';
          total += v;
        }
        os << "total: " << total << '\n';
      }
    } else if (*verify) {
      require(format, {Format::Text, Format::Json}, "verify-all");
      const VerificationReport r = verify_all(jobs);
      if (format == Format::Text)
        os << r.text(timings);
      else
        os << r.to_json(timings).dump(2) << '\n';
      status = r.ok() ? 0 : 1;
    }
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (output.empty()) {
    out << os.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << output << '\n';
      return 2;
    }
    file << os.str();
  }
  return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rootlines
