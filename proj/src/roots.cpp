#include "rootlines/roots.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace rootlines {

namespace {

bool lex_positive(const Coords& c) {
  for (int x : c)
    if (x != 0) return x > 0;
  return false;
}

Coords negated(Coords c) {
  for (int& x : c) x = -x;
  return c;
}

int height(const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); }

// Largest integer <= p/q for q > 0.
std::int64_t floor_div(std::int64_t p, std::int64_t q) {
  std::int64_t d = p / q;
  if ((p % q != 0) && (p < 0)) --d;
  return d;
}

std::int64_t round_nearest(const Rational& r) {
  return floor_div(2 * r.num() + r.den(), 2 * r.den());
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  IntMatrix m(n, std::vector<int>(n, 0));
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) m[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return m;
}

// Cartan entry 2<a,b>/<b,b>; integral for any crystallographic pair.
int cartan_entry(std::int64_t ab, std::int64_t bb) {
  if ((2 * ab) % bb != 0) throw std::invalid_argument("non-crystallographic pair of simple roots");
  return static_cast<int>(2 * ab / bb);
}

using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix cartan_from_gram(const IntMatrix& g) {
  CartanMatrix c(g.size(), std::vector<int>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) c[i][j] = cartan_entry(g[i][j], g[j][j]);
  return c;
}

std::vector<std::pair<int, int>> node_signature(const CartanMatrix& c, std::size_t a) {
  std::vector<std::pair<int, int>> sig;
  for (std::size_t b = 0; b < c.size(); ++b)
    if (b != a && (c[a][b] != 0 || c[b][a] != 0)) sig.emplace_back(c[a][b], c[b][a]);
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Bijection perm with catalog[a][b] == comp[perm[a]][perm[b]], found by
// backtracking over catalog nodes with neighbourhood-signature pruning.
std::optional<std::vector<std::size_t>> match_cartan(const CartanMatrix& catalog,
                                                     const CartanMatrix& comp) {
  const std::size_t n = catalog.size();
  if (comp.size() != n) return std::nullopt;
  std::vector<std::vector<std::pair<int, int>>> sig_cat(n), sig_comp(n);
  for (std::size_t a = 0; a < n; ++a) {
    sig_cat[a] = node_signature(catalog, a);
    sig_comp[a] = node_signature(comp, a);
  }
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t a) -> bool {
    if (a == n) return true;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x] || sig_cat[a] != sig_comp[x] || catalog[a][a] != comp[x][x]) continue;
      bool ok = true;
      for (std::size_t b = 0; b < a && ok; ++b)
        ok = catalog[a][b] == comp[x][perm[b]] && catalog[b][a] == comp[perm[b]][x];
      if (!ok) continue;
      used[x] = true;
      perm[a] = x;
      if (extend(a + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return perm;
}

std::vector<std::pair<char, int>> catalog_candidates(int rank) {
  std::vector<std::pair<char, int>> out;
  out.emplace_back('A', rank);
  if (rank >= 2) out.emplace_back('B', rank);
  if (rank >= 3) out.emplace_back('C', rank);
  if (rank >= 4) out.emplace_back('D', rank);
  if (rank >= 6 && rank <= 8) out.emplace_back('E', rank);
  if (rank == 4) out.emplace_back('F', 4);
  if (rank == 2) out.emplace_back('G', 2);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- GramForm

GramForm::GramForm(IntMatrix gram) : gram_(std::move(gram)) {
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i].size() != gram_.size()) throw std::invalid_argument("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("Gram matrix is not symmetric");
  }
}

std::int64_t GramForm::inner(const Coords& a, const Coords& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < b.size(); ++j) row += static_cast<std::int64_t>(gram_[i][j]) * b[j];
    s += a[i] * row;
  }
  return s;
}

Rational GramForm::inner(const RatVector& a, const Coords& b) const {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < b.size(); ++j) row += static_cast<std::int64_t>(gram_[i][j]) * b[j];
    s += a[i] * row;
  }
  return s;
}

Rational GramForm::inner(const RatVector& a, const RatVector& b) const {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (gram_[i][j] != 0 && !b[j].is_zero()) s += a[i] * b[j] * gram_[i][j];
  }
  return s;
}

// -------------------------------------------------------------- RootVector

RootVector RootVector::operator-() const { return {negated(coords), form}; }

Rational inner_product(const RootVector& r, const RootVector& s) {
  if (!r.form || r.form != s.form) throw std::invalid_argument("inner product across different ambient systems");
  return Rational(r.form->inner(r.coords, s.coords));
}

RootVector reflect(const RootVector& r, const RootVector& s) {
  if (!r.form || r.form != s.form) throw std::invalid_argument("reflection across different ambient systems");
  const std::int64_t rr = r.form->inner(r.coords, r.coords);
  const std::int64_t rs = r.form->inner(r.coords, s.coords);
  if (rr == 0) throw std::invalid_argument("reflection in the zero vector");
  if ((2 * rs) % rr != 0) throw std::invalid_argument("reflection leaves the lattice");
  const int k = static_cast<int>(2 * rs / rr);
  RootVector out = s;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= k * r.coords[i];
  return out;
}

// -------------------------------------------------------------- RootSystem

RootSystem::RootSystem(std::string label, FormPtr form, std::vector<Coords> roots) {
  auto d = std::make_shared<Data>();
  d->label = std::move(label);
  d->form = std::move(form);
  if (!d->form) throw std::invalid_argument("root system without a form");
  std::vector<Coords> positive;
  std::unordered_set<Coords, CoordsHash> all;
  for (auto& r : roots) {
    if (r.size() != d->form->dim()) throw std::invalid_argument("root has wrong dimension");
    if (!all.insert(r).second) throw std::invalid_argument("duplicate root");
    if (lex_positive(r)) positive.push_back(r);
  }
  for (const auto& r : positive)
    if (!all.count(negated(r))) throw std::invalid_argument("root set is not closed under negation");
  if (2 * positive.size() != roots.size()) throw std::invalid_argument("zero vector in root set");

  std::sort(positive.begin(), positive.end(), [](const Coords& a, const Coords& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  auto& rs = d->roots;
  rs = positive;
  for (const auto& r : positive) rs.push_back(negated(r));
  for (std::size_t i = 0; i < rs.size(); ++i) d->index.emplace(rs[i], i);

  const std::size_t n = rs.size();
  d->table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) d->table[i * n + j] = d->table[j * n + i] = d->form->inner(rs[i], rs[j]);

  const std::size_t npos = positive.size();
  for (std::size_t i = 0; i < npos; ++i) {
    bool decomposable = false;
    for (std::size_t j = 0; j < npos && !decomposable; ++j) {
      if (j == i) continue;
      Coords diff = rs[i];
      for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= rs[j][k];
      auto it = d->index.find(diff);
      decomposable = it != d->index.end() && it->second < npos;
    }
    if (!decomposable) d->simple.push_back(i);
  }
  std::sort(d->simple.begin(), d->simple.end(), [&](std::size_t a, std::size_t b) { return rs[a] > rs[b]; });

  const std::size_t k = d->simple.size();
  d->simple_gram = RatMatrix(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) d->simple_gram(a, b) = d->table[d->simple[a] * n + d->simple[b]];
  if (k > 0) d->simple_gram_inv = rootlines::inverse(d->simple_gram);
  d_ = std::move(d);
}

std::size_t RootSystem::negative_of(std::size_t i) const {
  const std::size_t npos = positive_count();
  return i < npos ? i + npos : i - npos;
}

std::optional<std::size_t> RootSystem::index_of(const Coords& c) const {
  auto it = d_->index.find(c);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::simply_laced() const {
  for (std::size_t i = 1; i < size(); ++i)
    if (norm(i) != norm(0)) return false;
  return true;
}

std::vector<int> RootSystem::simple_coefficients(const Coords& v) const {
  const auto& simple = d_->simple;
  const std::size_t k = simple.size();
  RatVector b(k);
  for (std::size_t a = 0; a < k; ++a) b[a] = Rational(d_->form->inner(root(simple[a]), v));
  const RatVector c = k ? d_->simple_gram_inv * b : RatVector{};
  std::vector<int> out(k);
  Coords check(v.size(), 0);
  for (std::size_t a = 0; a < k; ++a) {
    if (!c[a].is_integer()) throw std::invalid_argument("vector is not an integral combination of simple roots");
    out[a] = static_cast<int>(c[a].num());
    for (std::size_t dd = 0; dd < v.size(); ++dd) check[dd] += out[a] * root(simple[a])[dd];
  }
  if (check != v) throw std::invalid_argument("vector is outside the span of the simple roots");
  return out;
}

RootSystem RootSystem::subsystem(const std::vector<std::size_t>& indices) const {
  std::vector<Coords> sub;
  sub.reserve(indices.size());
  for (auto i : indices) sub.push_back(d_->roots.at(i));
  std::string lbl = identify_type(sub, d_->form);
  return RootSystem(std::move(lbl), d_->form, std::move(sub));
}

bool is_reflection_closed(const RootSystem& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::int64_t ii = s.norm(i);
    for (std::size_t j = 0; j < s.size(); ++j) {
      const std::int64_t ij = s.inner(i, j);
      if ((2 * ij) % ii != 0) return false;
      const int k = static_cast<int>(2 * ij / ii);
      if (k == 0) continue;
      Coords img = s.root(j);
      for (std::size_t d = 0; d < img.size(); ++d) img[d] -= k * s.root(i)[d];
      if (!s.index_of(img)) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------ identification

std::string TypeDecomposition::label() const {
  if (components.empty()) return "∅";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += "x";
    out += c.label();
  }
  return out;
}

TypeDecomposition decompose_type(const RootSystem& system) {
  if (!is_reflection_closed(system)) throw std::invalid_argument("root set is not closed under reflection");
  const auto& simple = system.simple_roots();
  const std::size_t k = simple.size();

  std::vector<int> comp_of(k, -1);
  int ncomp = 0;
  for (std::size_t a = 0; a < k; ++a) {
    if (comp_of[a] >= 0) continue;
    std::deque<std::size_t> queue{a};
    comp_of[a] = ncomp;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < k; ++y)
        if (comp_of[y] < 0 && system.inner(simple[x], simple[y]) != 0) {
          comp_of[y] = ncomp;
          queue.push_back(y);
        }
    }
    ++ncomp;
  }

  TypeDecomposition out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < k; ++a)
      if (comp_of[a] == c) members.push_back(a);
    IntMatrix g(members.size(), std::vector<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        g[i][j] = static_cast<int>(system.inner(simple[members[i]], simple[members[j]]));
    const CartanMatrix cartan = cartan_from_gram(g);
    const int rank = static_cast<int>(members.size());
    bool found = false;
    for (auto [family, r] : catalog_candidates(rank)) {
      auto perm = match_cartan(cartan_from_gram(catalog_gram(family, r)), cartan);
      if (!perm) continue;
      TypeComponent tc{family, r, {}};
      for (auto p : *perm) tc.nodes.push_back(simple[members[p]]);
      out.components.push_back(std::move(tc));
      found = true;
      break;
    }
    if (!found) throw std::runtime_error("component matches no catalog Cartan matrix");
  }
  std::stable_sort(out.components.begin(), out.components.end(), [](const TypeComponent& a, const TypeComponent& b) {
    return std::pair(a.family, a.rank) < std::pair(b.family, b.rank);
  });
  return out;
}

std::string identify_type(const std::vector<Coords>& roots, const FormPtr& form) {
  return decompose_type(RootSystem("", form, roots)).label();
}

std::string identify_type(const std::vector<RootVector>& roots) {
  if (roots.empty()) return "∅";
  std::vector<Coords> coords;
  for (const auto& r : roots) {
    if (r.form != roots.front().form) throw std::invalid_argument("roots from different ambient systems");
    coords.push_back(r.coords);
  }
  return identify_type(coords, roots.front().form);
}

// ------------------------------------------------------------------ catalog

IntMatrix catalog_gram(char family, int n) {
  auto chain = [](int len, int norm) {
    IntMatrix g(len, std::vector<int>(len, 0));
    for (int i = 0; i < len; ++i) {
      g[i][i] = norm;
      if (i + 1 < len) g[i][i + 1] = g[i + 1][i] = -norm / 2;
    }
    return g;
  };
  switch (family) {
    case 'A':
      if (n < 1) break;
      return chain(n, 2);
    case 'B': {
      if (n < 2) break;
      IntMatrix g = chain(n, 2);
      g[n - 1][n - 1] = 1;  // e_{n-1} - e_n long, e_n short
      return g;
    }
    case 'C': {
      if (n < 2) break;
      IntMatrix g = chain(n, 2);
      g[n - 1][n - 1] = 4;
      g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
      return g;
    }
    case 'D': {
      if (n < 4) break;
      IntMatrix g(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      auto edge = [&](int a, int b) { g[a - 1][b - 1] = g[b - 1][a - 1] = -1; };
      for (int i = 1; i + 1 <= n - 2; ++i) edge(i, i + 1);
      edge(n - 2, n - 1);
      edge(n - 2, n);
      return g;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      IntMatrix g(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      auto edge = [&](int a, int b) { g[a - 1][b - 1] = g[b - 1][a - 1] = -1; };
      edge(1, 3);
      edge(2, 4);
      for (int i = 3; i < n; ++i) edge(i, i + 1);
      return g;
    }
    case 'F':
      if (n != 4) break;
      return {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    case 'G':
      if (n != 2) break;
      return {{2, -3}, {-3, 6}};
    default:
      break;
  }
  throw std::invalid_argument("no catalog type " + std::string(1, family) + std::to_string(n));
}

std::vector<TypeComponent> parse_simply_laced_label(std::string_view label) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == 'x' || label[i] == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (label.substr(i, 2) == "\xC3\x97") {  // U+00D7
      parts.push_back(cur);
      cur.clear();
      ++i;
    } else if (label[i] != '_' && label[i] != ' ') {
      cur += label[i];
    }
  }
  parts.push_back(cur);

  std::vector<TypeComponent> out;
  for (const auto& p : parts) {
    if (p.size() < 2 || std::string("ADE").find(p[0]) == std::string::npos ||
        !std::all_of(p.begin() + 1, p.end(), [](char c) { return c >= '0' && c <= '9'; }) || p.size() > 4)
      throw std::invalid_argument("unsupported root system label: " + std::string(label));
    const char fam = p[0];
    const int n = std::stoi(p.substr(1));
    if (fam == 'A' && n >= 1) {
      out.push_back({'A', n, {}});
    } else if (fam == 'D' && n == 2) {
      out.push_back({'A', 1, {}});
      out.push_back({'A', 1, {}});
    } else if (fam == 'D' && n == 3) {
      out.push_back({'A', 3, {}});
    } else if (fam == 'D' && n >= 4) {
      out.push_back({'D', n, {}});
    } else if (fam == 'E' && n >= 6 && n <= 8) {
      out.push_back({'E', n, {}});
    } else {
      throw std::invalid_argument("unsupported root system label: " + std::string(label));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const TypeComponent& a, const TypeComponent& b) {
    return std::pair(a.family, a.rank) < std::pair(b.family, b.rank);
  });
  return out;
}

RootSystem build_simply_laced(std::string_view label) {
  const auto comps = parse_simply_laced_label(label);
  std::vector<IntMatrix> blocks;
  TypeDecomposition td;
  for (const auto& c : comps) {
    blocks.push_back(catalog_gram(c.family, c.rank));
    td.components.push_back(c);
  }
  auto form = std::make_shared<const GramForm>(block_diagonal(blocks));
  const std::size_t n = form->dim();

  std::vector<Coords> roots;
  std::unordered_set<Coords, CoordsHash> seen;
  std::deque<Coords> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    for (const Coords& c : {e, negated(e)}) {
      seen.insert(c);
      roots.push_back(c);
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    Coords r = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += (*form)(i, j) * r[j];
      if (pairing == 0) continue;
      Coords img = r;
      img[i] -= static_cast<int>(pairing);
      if (seen.insert(img).second) {
        roots.push_back(img);
        queue.push_back(img);
      }
    }
  }
  return RootSystem(td.label(), std::move(form), std::move(roots));
}

RootSystem build_non_simply_laced(std::string_view label) {
  std::string lbl(label);
  lbl.erase(std::remove(lbl.begin(), lbl.end(), '_'), lbl.end());
  if (lbl.size() < 2 || !std::all_of(lbl.begin() + 1, lbl.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      lbl.size() > 3)
    throw std::invalid_argument("unsupported non-simply-laced label: " + std::string(label));
  const char fam = lbl[0];
  const int n = std::stoi(lbl.substr(1));

  FormPtr form;
  std::vector<Coords> roots;
  auto add_all = [&](const std::vector<Coords>& vs) { roots.insert(roots.end(), vs.begin(), vs.end()); };

  if (fam == 'B' && n >= 2) {
    std::string frame = "A1";
    for (int i = 1; i < n; ++i) frame += "xA1";
    const RootSystem base = build_simply_laced(frame);
    form = base.form();
    Lattice lat(form);
    add_all(lat.layer(1));
    add_all(lat.layer(2));
  } else if (fam == 'C' && n >= 2) {
    const RootSystem base = build_simply_laced("D" + std::to_string(n));
    form = base.form();
    add_all(base.roots());
    // Layer-2 vectors whose reflection permutes the D_n roots, then an
    // orthogonal frame of n such lines.
    std::vector<Coords> symmetric;
    for (const Coords& v : Lattice(form).layer(2)) {
      if (!lex_positive(v)) continue;
      const RootVector rv{v, form};
      bool keeps = true;
      for (std::size_t i = 0; i < base.size() && keeps; ++i) {
        const RootVector r = base.vector(i);
        try {
          keeps = base.index_of(reflect(rv, r).coords).has_value();
        } catch (const std::invalid_argument&) {
          keeps = false;
        }
      }
      if (keeps) symmetric.push_back(v);
    }
    std::sort(symmetric.begin(), symmetric.end(), std::greater<>());
    std::vector<Coords> frame;
    for (const auto& v : symmetric) {
      bool orth = true;
      for (const auto& f : frame) orth = orth && form->inner(v, f) == 0;
      if (orth) frame.push_back(v);
    }
    if (frame.size() != static_cast<std::size_t>(n)) throw std::logic_error("no orthogonal frame in layer 2");
    for (const auto& v : frame) {
      roots.push_back(v);
      roots.push_back(negated(v));
    }
  } else if ((fam == 'G' && n == 2) || (fam == 'F' && n == 4)) {
    const RootSystem base = build_simply_laced(fam == 'G' ? "A2" : "D4");
    form = base.form();
    Lattice lat(form);
    add_all(lat.layer(1));
    add_all(lat.layer(2));
  } else {
    throw std::invalid_argument("unsupported non-simply-laced label: " + std::string(label));
  }

  RootSystem sys(lbl, form, std::move(roots));
  if (!is_reflection_closed(sys)) throw std::logic_error(lbl + " construction is not reflection-closed");
  const std::string found = decompose_type(sys).label();
  // C2 and B2 are the same root system
  if (found != lbl && !(lbl == "C2" && found == "B2")) throw std::logic_error(lbl + " construction identified as " + found);
  return sys;
}

// ------------------------------------------------------------------ Lattice

Lattice::Lattice(FormPtr form) : form_(std::move(form)) {
  const std::size_t n = form_->dim();
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = (*form_)(i, j);
  ldl_ = ldl_positive_definite(g);
}

std::vector<Coords> Lattice::vectors_up_to(std::int64_t bound) const {
  // Exact Fincke-Pohst: Q(x) = sum_i d_i (x_i + sum_{j>i} L_ji x_j)^2.
  const std::size_t n = form_->dim();
  std::vector<Coords> out;
  Coords x(n, 0);
  std::function<void(std::ptrdiff_t, Rational)> descend = [&](std::ptrdiff_t i, Rational remaining) {
    if (i < 0) {
      if (std::any_of(x.begin(), x.end(), [](int v) { return v != 0; })) out.push_back(x);
      return;
    }
    const auto ui = static_cast<std::size_t>(i);
    Rational centre;
    for (std::size_t j = ui + 1; j < n; ++j)
      if (x[j] != 0) centre += ldl_.lower(j, ui) * x[j];
    const Rational& d = ldl_.diag[ui];
    auto cost = [&](std::int64_t v) {
      const Rational t = Rational(v) + centre;
      return d * t * t;
    };
    const std::int64_t mid = round_nearest(-centre);
    if (cost(mid) > remaining) return;
    std::int64_t lo = mid, hi = mid;
    while (cost(lo - 1) <= remaining) --lo;
    while (cost(hi + 1) <= remaining) ++hi;
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[ui] = static_cast<int>(v);
      descend(i - 1, remaining - cost(v));
    }
    x[ui] = 0;
  };
  descend(static_cast<std::ptrdiff_t>(n) - 1, Rational(bound));

  std::vector<std::pair<std::int64_t, Coords>> keyed;
  keyed.reserve(out.size());
  for (auto& v : out) keyed.emplace_back(form_->inner(v, v), std::move(v));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<Coords> sorted;
  sorted.reserve(keyed.size());
  for (auto& [norm, v] : keyed) sorted.push_back(std::move(v));
  return sorted;
}

std::vector<Coords> Lattice::layer(int k) const {
  if (k < 1 || k > 2) throw std::invalid_argument("lattice layers beyond the second are not supported");
  std::int64_t bound = 0;
  for (std::size_t i = 0; i < form_->dim(); ++i) bound = std::max<std::int64_t>(bound, (*form_)(i, i));
  for (;;) {
    const auto vs = vectors_up_to(bound);
    std::vector<std::int64_t> norms;
    for (const auto& v : vs) {
      const auto nv = form_->inner(v, v);
      if (norms.empty() || norms.back() != nv) norms.push_back(nv);
    }
    if (norms.size() >= static_cast<std::size_t>(k)) {
      const std::int64_t target = norms[static_cast<std::size_t>(k - 1)];
      std::vector<Coords> layer;
      for (const auto& v : vs)
        if (form_->inner(v, v) == target) layer.push_back(v);
      return layer;
    }
    bound *= 2;
  }
}

std::vector<Coords> lattice_layer(const RootSystem& system, int k) { return Lattice(system.form()).layer(k); }

}  // namespace rootlines
