#include "rootlines/smodel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rootlines {

namespace {

RatVector labels(std::initializer_list<Rational> v) { return RatVector(v); }

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

const std::set<std::string> kLeptons = {"nu_R", "e-_R", "nu_L", "e-_L"};

std::array<Rational, 4> fig4_signature(const std::array<Rational, kOperatorCount>& e) {
  return {e[kB], e[kW0], e[kLambda3], e[kLambda8]};
}

// Roots whose simple-root support lies within the first k catalog nodes.
std::set<Coords> supported_on_first(const RootSystem& e7, std::size_t k) {
  std::set<Coords> out;
  for (const auto& r : e7.roots()) {
    const auto c = e7.simple_coefficients(r);
    if (std::all_of(c.begin() + static_cast<long>(k), c.end(), [](int x) { return x == 0; })) out.insert(r);
  }
  return out;
}

}  // namespace

const std::vector<GradingOperator>& standard_operators() {
  static const std::vector<GradingOperator> ops = {
      {"W0", labels({0, q(1, 2), 0, 0, 0, 0, 0})},
      {"lambda3", labels({1, 0, 0, 0, 0, 0, 0})},
      {"sqrt3lambda8", labels({1, 0, 2, 0, 0, 0, 0})},
      {"B", labels({q(2, 3), 1, q(4, 3), 2, 0, 0, 0})},
      {"rho3", labels({0, 0, 0, 0, 0, 1, 0})},
      {"sqrt3rho8", labels({0, 0, 0, 0, 0, 1, 2})},
      {"H", labels({1, q(3, 2), 2, 3, q(5, 2), q(5, 3), q(5, 6)})},
  };
  return ops;
}

Coweight operator_vector(const RootSystem& e7, const GradingOperator& op) {
  Coweight w{RatVector(e7.ambient_dim(), Rational(0))};
  const auto& simple = e7.simple_roots();
  if (op.labels.size() != simple.size()) throw std::invalid_argument("label vector length differs from the rank");
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t k = 0; k < w.q.size(); ++k) w.q[k] += op.labels[i] * Rational(e7.root(simple[i])[k]);
  return w;
}

const std::vector<FermionRow>& particle_table() {
  static const std::vector<FermionRow> rows = {
      {"Right-handed neutrino", "nu_R", {0, 0, 0, 0}},
      {"Right-handed electron", "e-_R", {-2, 0, 0, 0}},
      {"Right-handed red up quark", "u_R^r", {q(4, 3), 0, -1, -1}},
      {"Right-handed green up quark", "u_R^g", {q(4, 3), 0, 1, -1}},
      {"Right-handed blue up quark", "u_R^b", {q(4, 3), 0, 0, 2}},
      {"Right-handed red down quark", "d_R^r", {q(-2, 3), 0, -1, -1}},
      {"Right-handed green down quark", "d_R^g", {q(-2, 3), 0, 1, -1}},
      {"Right-handed blue down quark", "d_R^b", {q(-2, 3), 0, 0, 2}},
      {"Left-handed neutrino", "nu_L", {-1, q(1, 2), 0, 0}},
      {"Left-handed electron", "e-_L", {-1, q(-1, 2), 0, 0}},
      {"Left-handed red up quark", "u_L^r", {q(1, 3), q(1, 2), -1, -1}},
      {"Left-handed green up quark", "u_L^g", {q(1, 3), q(1, 2), 1, -1}},
      {"Left-handed blue up quark", "u_L^b", {q(1, 3), q(1, 2), 0, 2}},
      {"Left-handed red down quark", "d_L^r", {q(1, 3), q(-1, 2), -1, -1}},
      {"Left-handed green down quark", "d_L^g", {q(1, 3), q(-1, 2), 1, -1}},
      {"Left-handed blue down quark", "d_L^b", {q(1, 3), q(-1, 2), 0, 2}},
  };
  return rows;
}

std::string to_string(ParticleClass c) {
  switch (c) {
    case ParticleClass::Fermion: return "fermion";
    case ParticleClass::AntiFermion: return "anti-fermion";
    case ParticleClass::WBoson: return "W boson";
    case ParticleClass::Gluon: return "gluon";
    case ParticleClass::NeutrinoSl3: return "neutrino-sl3";
    case ParticleClass::Exotic: return "exotic";
    case ParticleClass::Extra: return "extra";
  }
  return "?";
}

std::array<Rational, kOperatorCount> quantum_numbers(const RootSystem& e7, std::size_t root) {
  if (root >= e7.size()) throw std::invalid_argument("not a root of E7");
  std::array<Rational, kOperatorCount> out;
  const auto& ops = standard_operators();
  for (std::size_t k = 0; k < kOperatorCount; ++k) out[k] = cartan_eigenvalue(e7, ops[k].labels, root);
  return out;
}

std::string colour_of(const std::array<Rational, kOperatorCount>& e) {
  const std::pair<int, int> p{static_cast<int>(e[kLambda3].num()), static_cast<int>(e[kLambda8].num())};
  if (!e[kLambda3].is_integer() || !e[kLambda8].is_integer()) throw std::domain_error("non-integral colour eigenvalues");
  if (p == std::pair{0, 0}) return "colourless";
  if (p == std::pair{0, 2}) return "blue";
  if (p == std::pair{-1, -1}) return "red";
  if (p == std::pair{1, -1}) return "green";
  if (p == std::pair{0, -2}) return "anti-blue";
  if (p == std::pair{1, 1}) return "anti-red";
  if (p == std::pair{-1, 1}) return "anti-green";
  for (auto g : {std::pair{2, 0}, std::pair{-1, 3}, std::pair{-1, -3}})
    if (p == g || p == std::pair{-g.first, -g.second}) return "none";
  throw std::domain_error("colour eigenvalues outside the allowed set");
}

int generation_of(const std::array<Rational, kOperatorCount>& e) {
  auto is = [&](int a, int b) {
    return (e[kRho3] == Rational(a) && e[kRho8] == Rational(b)) || (e[kRho3] == Rational(-a) && e[kRho8] == Rational(-b));
  };
  if (is(0, 2)) return 1;
  if (is(1, 1)) return 2;
  if (is(1, -1)) return 3;
  return 0;
}

StandardModel::StandardModel() : e7_(build_simply_laced("E7")) {
  const auto& simple = e7_.simple_roots();
  const auto nodes = decompose_type(e7_).components.front().nodes;
  if (!std::equal(simple.begin(), simple.end(), nodes.begin()))
    throw std::logic_error("E7 simple roots are not in node order");

  RootSystem current = e7_;
  for (std::size_t k : {6u, 5u, 4u, 3u}) {
    const auto target = supported_on_first(e7_, k);
    bool found = false;
    for (auto& g : enumerate_three_gradings(current)) {
      std::set<Coords> zero;
      for (auto z : g.zero) zero.insert(current.root(z));
      if (zero != target) continue;
      current = g.zero_system();
      sequence_.push_back(std::move(g));
      found = true;
      break;
    }
    if (!found) throw std::logic_error("no grading with zero part on the first " + std::to_string(k) + " nodes");
  }

  const auto sm = supported_on_first(e7_, 3);
  const auto a4 = supported_on_first(e7_, 4);
  for (std::size_t r = 0; r < e7_.size(); ++r) {
    if (sm.count(e7_.root(r))) sm_roots_.push_back(r);
    if (a4.count(e7_.root(r))) a4_roots_.push_back(r);
  }
  for (std::size_t r = 0; r < e7_.size(); ++r)
    if (std::all_of(a4_roots_.begin(), a4_roots_.end(), [&](std::size_t a) { return e7_.inner(a, r) == 0; }))
      neutrino_roots_.push_back(r);

  for (std::size_t r = 0; r < e7_.size(); ++r) {
    ParticleRecord rec;
    rec.root = r;
    rec.eigenvalues = quantum_numbers(e7_, r);
    rec.generation = generation_of(rec.eigenvalues);
    rec.colour = colour_of(rec.eigenvalues);
    const auto& e = rec.eigenvalues;
    if (rec.generation != 0) {
      const auto sig = fig4_signature(e);
      std::array<Rational, 4> neg;
      for (std::size_t i = 0; i < 4; ++i) neg[i] = -sig[i];
      for (const auto& row : particle_table()) {
        if (row.values == sig) {
          rec.kind = ParticleClass::Fermion;
          rec.name = row.symbol;
        } else if (row.values == neg) {
          rec.kind = ParticleClass::AntiFermion;
          rec.name = "anti-" + row.symbol;
        }
      }
      if (rec.name.empty()) throw std::logic_error("generation root matches no Fig. 4 row");
    } else if (sm.count(e7_.root(r))) {
      if (e[kW0].abs() == Rational(1)) {
        rec.kind = ParticleClass::WBoson;
        rec.name = e[kW0].sign() > 0 ? "W+" : "W-";
      } else {
        rec.kind = ParticleClass::Gluon;
        rec.name = "gluon";
      }
    } else if (std::count(neutrino_roots_.begin(), neutrino_roots_.end(), r)) {
      rec.kind = ParticleClass::NeutrinoSl3;
      rec.name = "neutrino-sl3";
    } else if (e[kB].abs() == Rational(5, 3)) {
      rec.kind = ParticleClass::Exotic;
      rec.name = "exotic";
    } else if (e[kH].abs() == Rational(1)) {
      rec.kind = ParticleClass::Extra;
      rec.name = "extra";
    } else {
      throw std::logic_error("unclassifiable root " + std::to_string(r));
    }
    records_.push_back(std::move(rec));
  }
}

std::vector<std::size_t> StandardModel::generation_roots(int generation) const {
  if (generation < 1 || generation > 3) throw std::invalid_argument("generation must be 1, 2 or 3");
  std::vector<std::size_t> out;
  for (const auto& rec : records_)
    if (rec.generation == generation) out.push_back(rec.root);
  return out;
}

std::vector<std::size_t> StandardModel::particle_roots(int generation) const {
  const auto roots = generation_roots(generation);
  std::vector<std::size_t> out;
  for (const auto& row : particle_table())
    for (auto r : roots)
      if (records_[r].kind == ParticleClass::Fermion && records_[r].name == row.symbol) out.push_back(r);
  return out;
}

std::size_t StandardModel::root_named(int generation, const std::string& symbol) const {
  for (auto r : generation_roots(generation))
    if (records_[r].name == symbol) return r;
  throw std::invalid_argument("no root named " + symbol + " in generation " + std::to_string(generation));
}

NamedTriads generation_triads(const StandardModel& sm, int generation) {
  const auto roots = sm.particle_roots(generation);
  const LineSystem l(sm.e7(), roots);
  std::vector<std::string> name(l.size());
  for (auto r : roots) name[l.position_of(r)] = sm.record(r).name;
  NamedTriads out{triads_of(l), {}, representation_graph(l).graph, {}};
  for (const auto& b : out.structure.blocks) {
    std::array<std::string, 3> t{name[b[0]], name[b[1]], name[b[2]]};
    std::sort(t.begin(), t.end());
    out.names.push_back(t);
  }
  std::sort(out.names.begin(), out.names.end());
  out.gq = gq_check(out.structure);
  return out;
}

NamedTriads lepton_free_triads(const StandardModel& sm, int generation) {
  NamedTriads all = generation_triads(sm, generation);
  const auto roots = sm.particle_roots(generation);
  const LineSystem l(sm.e7(), roots);
  std::vector<std::string> name(l.size());
  for (auto r : roots) name[l.position_of(r)] = sm.record(r).name;

  std::vector<std::vector<std::size_t>> kept;
  std::set<std::size_t> points;
  for (const auto& b : all.structure.blocks)
    if (std::none_of(b.begin(), b.end(), [&](std::size_t p) { return kLeptons.count(name[p]); })) {
      kept.push_back(b);
      points.insert(b.begin(), b.end());
    }
  const std::vector<std::size_t> pts(points.begin(), points.end());
  NamedTriads out;
  out.structure.points = pts.size();
  for (const auto& b : kept) {
    std::vector<std::size_t> nb;
    for (auto p : b) nb.push_back(static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin()));
    out.structure.blocks.push_back(nb);
    std::array<std::string, 3> t{name[b[0]], name[b[1]], name[b[2]]};
    std::sort(t.begin(), t.end());
    out.names.push_back(t);
  }
  std::sort(out.names.begin(), out.names.end());
  out.graph = all.graph.induced(pts);
  out.gq = gq_check(out.structure);
  return out;
}

SignSplitReport sign_split_check(const StandardModel& sm, int generation) {
  const auto lf = lepton_free_triads(sm, generation);
  std::set<std::string> in_gq;
  for (const auto& t : lf.names) in_gq.insert(t.begin(), t.end());
  std::vector<std::size_t> gq, rest;
  for (auto r : sm.particle_roots(generation)) (in_gq.count(sm.record(r).name) ? gq : rest).push_back(r);

  const RootSystem& e7 = sm.e7();
  SignSplitReport rep;
  auto extreme = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, bool same, bool min) {
    std::int64_t v = min ? 2 : -2;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = same ? i + 1 : 0; j < b.size(); ++j) {
        const auto ip = e7.inner(a[i], b[j]);
        v = min ? std::min(v, ip) : std::max(v, ip);
      }
    return v;
  };
  rep.within_gq21_min = extreme(gq, gq, true, true);
  rep.within_rest_min = extreme(rest, rest, true, true);
  rep.cross_max = extreme(gq, rest, false, false);

  rep.triad_sums_zero = !lf.names.empty();
  for (const auto& t : lf.names)
    for (std::size_t k : {kB, kW0, kLambda3, kLambda8}) {
      Rational sum(0);
      for (const auto& n : t) sum += sm.record(sm.root_named(generation, n)).eigenvalues[k];
      if (!sum.is_zero()) rep.triad_sums_zero = false;
    }
  return rep;
}

std::vector<std::size_t> trim_standard(const StandardModel& sm) {
  std::vector<std::size_t> out;
  for (const auto& rec : sm.records())
    if (rec.eigenvalues[kH].abs() != Rational(1) && rec.eigenvalues[kB].abs() != Rational(5, 3)) out.push_back(rec.root);
  return out;
}

std::map<ParticleClass, std::size_t> census_counts(const StandardModel& sm) {
  std::map<ParticleClass, std::size_t> out;
  for (const auto& rec : sm.records()) ++out[rec.kind];
  return out;
}

std::string particle_table_csv() {
  std::ostringstream os;
  os << "name,symbol,B,W0,lambda3,sqrt3lambda8\n";
  for (const auto& row : particle_table()) {
    os << row.name << ',' << row.symbol;
    for (const auto& v : row.values) os << ',' << v.str();
    os << '\n';
  }
  return os.str();
}

std::string census_csv(const StandardModel& sm) {
  std::ostringstream os;
  os << "name,B,W0,lambda3,sqrt3lambda8,rho3,sqrt3rho8,H,colour,generation,classification\n";
  for (const auto& rec : sm.records()) {
    const auto& e = rec.eigenvalues;
    os << rec.name;
    for (std::size_t k : {kB, kW0, kLambda3, kLambda8, kRho3, kRho8, kH}) os << ',' << e[k].str();
    os << ',' << rec.colour << ',' << (rec.generation ? std::to_string(rec.generation) : "none") << ','
       << to_string(rec.kind) << '\n';
  }
  return os.str();
}

Subalgebra standard_model_algebra(const LieAlgebra& e7, const StandardModel& sm) {
  std::vector<Element> span;
  for (auto r : sm.sm_roots()) span.push_back(Element::basis(e7.e(*e7.system().index_of(sm.e7().root(r)))));
  for (std::size_t i = 0; i < 3; ++i) span.push_back(Element::basis(e7.h(i)));
  span.push_back(e7.cartan_element(standard_operators()[kB].labels));
  return Subalgebra(e7.dim(), span);
}

}  // namespace rootlines
