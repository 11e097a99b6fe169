#include "rootlines/chevalley.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rootlines {

Rational Element::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add(std::size_t index, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add(const Element& other, const Rational& c) {
  for (const auto& [i, v] : other.terms_) add(i, v * c);
}

Element operator*(const Rational& c, const Element& e) {
  Element out;
  out.add(e, c);
  return out;
}

RatVector Element::dense(std::size_t dim) const {
  RatVector v(dim, Rational(0));
  for (const auto& [i, c] : terms_) v.at(i) = c;
  return v;
}

Element Element::from_dense(const RatVector& v) {
  Element e;
  for (std::size_t i = 0; i < v.size(); ++i) e.add(i, v[i]);
  return e;
}

LieAlgebra::LieAlgebra(RootSystem system) : system_(std::move(system)) {
  if (system_.size() == 0) throw std::invalid_argument("empty root system");
  if (!system_.simply_laced()) throw std::invalid_argument("Chevalley construction needs a simply-laced system");
  for (std::size_t i = 0; i < system_.size(); ++i)
    if (system_.norm(i) != 2) throw std::invalid_argument("roots must have norm 2");
  rank_ = system_.rank();
  for (const auto& r : system_.roots()) coeffs_.push_back(system_.simple_coefficients(r));

  // Bimultiplicative sign eps(a, b) = (-1)^{sum a_i b_j} over pairs i < j
  // joined in the diagram and over i = j; then rescale e_r for negative r.
  const std::size_t n = system_.size();
  const auto& simple = system_.simple_roots();
  std::vector<std::pair<std::size_t, std::size_t>> odd;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i; j < rank_; ++j)
      if (i == j || system_.inner(simple[i], simple[j]) != 0) odd.emplace_back(i, j);
  sign_.assign(n * n, 0);
  Coords sum(system_.ambient_dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = system_.root(a)[k] + system_.root(b)[k];
      auto c = system_.index_of(sum);
      if (!c) continue;
      int parity = 0;
      for (auto [i, j] : odd) parity += coeffs_[a][i] * coeffs_[b][j];
      int s = (parity % 2 == 0) ? 1 : -1;
      auto sigma = [&](std::size_t r) { return system_.is_positive(r) ? 1 : -1; };
      sign_[a * n + b] = s * sigma(a) * sigma(b) * sigma(*c);
    }
  build_table();
}

void LieAlgebra::build_table() {
  const std::size_t d = dim();
  const std::size_t n = system_.size();
  const auto& simple = system_.simple_roots();
  table_.assign(d * d, Element());
  Coords sum(system_.ambient_dim());
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t r = 0; r < n; ++r) {
      const Rational v(system_.inner(simple[i], r));
      table_[h(i) * d + e(r)].add(e(r), v);
      table_[e(r) * d + h(i)].add(e(r), -v);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element& out = table_[e(a) * d + e(b)];
      if (b == system_.negative_of(a)) {
        out = coroot(a);
      } else if (int s = sign_[a * n + b]; s != 0) {
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = system_.root(a)[k] + system_.root(b)[k];
        out.add(e(*system_.index_of(sum)), Rational(s));
      }
    }
}

std::string LieAlgebra::basis_name(std::size_t index) const {
  if (index < rank_) return "h" + std::to_string(index + 1);
  std::ostringstream os;
  os << "e(";
  const auto& c = coeffs_.at(index - rank_);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

Element LieAlgebra::coroot(std::size_t root) const {
  Element out;
  for (std::size_t i = 0; i < rank_; ++i) out.add(h(i), Rational(coeffs_[root][i]));
  return out;
}

Element LieAlgebra::cartan_element(const RatVector& labels) const {
  if (labels.size() != rank_) throw std::invalid_argument("label vector length differs from the rank");
  Element out;
  for (std::size_t i = 0; i < rank_; ++i) out.add(h(i), labels[i]);
  return out;
}

int LieAlgebra::structure_constant(std::size_t r, std::size_t s) const { return sign_.at(r * system_.size() + s); }

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) out.add(bracket_basis(i, j), a * b);
  return out;
}

LieAlgebra LieAlgebra::with_flipped_sign(std::size_t r, std::size_t s) const {
  LieAlgebra copy = *this;
  const std::size_t n = system_.size();
  if (sign_.at(r * n + s) == 0) throw std::invalid_argument("r + s is not a root");
  copy.sign_[r * n + s] = -copy.sign_[r * n + s];
  copy.sign_[s * n + r] = -copy.sign_[s * n + r];
  copy.build_table();
  return copy;
}

JacobiResult verify_jacobi(const LieAlgebra& l, unsigned jobs) {
  const std::size_t d = l.dim();
  JacobiResult res;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (l.bracket_basis(i, j) + l.bracket_basis(j, i) != Element()) {
        res.ok = false;
        res.witness = {i, j, j};
        return res;
      }

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> count{0};
  std::mutex m;
  std::optional<std::array<std::size_t, 3>> witness;
  auto worker = [&] {
    std::size_t local = 0;
    for (std::size_t i; (i = next.fetch_add(1)) < d;) {
      for (std::size_t j = i + 1; j < d; ++j) {
        const Element xy = l.bracket_basis(i, j);
        for (std::size_t k = j + 1; k < d; ++k) {
          ++local;
          Element sum = l.bracket(xy, Element::basis(k));
          sum += l.bracket(l.bracket_basis(j, k), Element::basis(i));
          sum += l.bracket(l.bracket_basis(k, i), Element::basis(j));
          if (!sum.is_zero()) {
            std::lock_guard lock(m);
            const std::array<std::size_t, 3> w{i, j, k};
            if (!witness || w < *witness) witness = w;
          }
        }
      }
    }
    count += local;
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  res.triples = count;
  if (witness) {
    res.ok = false;
    res.witness = *witness;
  }
  return res;
}

Subalgebra::Subalgebra(std::size_t ambient_dim, const std::vector<Element>& span)
    : ambient_(ambient_dim), basis_(ambient_dim) {
  for (const auto& x : span) basis_.insert(x.dense(ambient_));
}

bool Subalgebra::contains(const Element& x) const { return basis_.contains(x.dense(ambient_)); }

std::vector<Element> Subalgebra::basis() const {
  std::vector<Element> out;
  for (const auto& v : basis_.basis()) out.push_back(Element::from_dense(v));
  return out;
}

bool is_closed(const LieAlgebra& l, const Subalgebra& s) {
  const auto b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(l.bracket(b[i], b[j]))) return false;
  return true;
}

GradedPieces graded_pieces(const LieAlgebra& l, const ThreeGrading& g) {
  const RootSystem& sys = l.system();
  if (!g.system.same_ambient(sys) || g.system.size() != sys.size())
    throw std::invalid_argument("grading belongs to another root system");
  std::vector<int> degree(sys.size(), 0);
  auto to_index = [&](std::size_t r) {
    auto idx = sys.index_of(g.system.root(r));
    if (!idx) throw std::invalid_argument("grading belongs to another root system");
    return *idx;
  };
  std::vector<Element> minus, zero, plus;
  for (auto r : g.minus) {
    degree[to_index(r)] = -1;
    minus.push_back(Element::basis(l.e(to_index(r))));
  }
  for (auto r : g.plus) {
    degree[to_index(r)] = 1;
    plus.push_back(Element::basis(l.e(to_index(r))));
  }
  for (std::size_t i = 0; i < l.rank(); ++i) zero.push_back(Element::basis(l.h(i)));
  for (auto r : g.zero) zero.push_back(Element::basis(l.e(to_index(r))));

  auto deg = [&](std::size_t idx) { return l.is_cartan(idx) ? 0 : degree[idx - l.rank()]; };
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = 0; b < l.dim(); ++b) {
      const int target = deg(a) + deg(b);
      for (const auto& [k, c] : l.bracket_basis(a, b).terms())
        if (deg(k) != target) throw std::domain_error("bracket leaves the graded piece");
    }
  return {Subalgebra(l.dim(), minus), Subalgebra(l.dim(), zero), Subalgebra(l.dim(), plus)};
}

Subalgebra derived_subalgebra(const LieAlgebra& l, const Subalgebra& s) {
  const auto b = s.basis();
  std::vector<Element> span;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) span.push_back(l.bracket(b[i], b[j]));
  return Subalgebra(l.dim(), span);
}

Subalgebra centralizer(const LieAlgebra& l, const Subalgebra& s) {
  const std::size_t d = l.dim();
  // rows: for each spanning element y and output coordinate k, the linear
  // form x -> [x, y]_k
  SpanBasis rows(d);
  for (const auto& y : s.basis()) {
    std::map<std::size_t, RatVector> by_output;
    for (std::size_t j = 0; j < d; ++j) {
      const Element col = l.bracket(Element::basis(j), y);
      for (const auto& [k, c] : col.terms()) {
        auto [it, fresh] = by_output.try_emplace(k, RatVector(d, Rational(0)));
        it->second[j] = c;
      }
    }
    for (const auto& [k, row] : by_output) rows.insert(row);
    if (rows.dim() == d) break;
  }
  RatMatrix m(rows.dim(), d);
  for (std::size_t i = 0; i < rows.dim(); ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = rows.basis()[i][j];
  std::vector<Element> span;
  if (rows.dim() == 0) {
    for (std::size_t j = 0; j < d; ++j) span.push_back(Element::basis(j));
  } else {
    for (const auto& v : nullspace(m)) span.push_back(Element::from_dense(v));
  }
  return Subalgebra(d, span);
}

Subalgebra center(const LieAlgebra& l, const Subalgebra& s) {
  const auto b = s.basis();
  const std::size_t m = b.size();
  // x = sum c_j b_j with [x, b_k] = 0 for all k
  std::vector<RatVector> rows;
  for (std::size_t k = 0; k < m; ++k) {
    std::map<std::size_t, RatVector> by_output;
    for (std::size_t j = 0; j < m; ++j) {
      const Element col = l.bracket(b[j], b[k]);
      for (const auto& [idx, c] : col.terms()) {
        auto [it, fresh] = by_output.try_emplace(idx, RatVector(m, Rational(0)));
        it->second[j] = c;
      }
    }
    for (auto& [idx, row] : by_output) rows.push_back(std::move(row));
  }
  std::vector<Element> span;
  if (rows.empty()) {
    span = b;
  } else {
    RatMatrix mat(rows.size(), m);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < m; ++j) mat(i, j) = rows[i][j];
    for (const auto& v : nullspace(mat)) {
      Element x;
      for (std::size_t j = 0; j < m; ++j) x.add(b[j], v[j]);
      span.push_back(x);
    }
  }
  return Subalgebra(l.dim(), span);
}

Rational cartan_eigenvalue(const RootSystem& system, const RatVector& labels, std::size_t root) {
  const auto& simple = system.simple_roots();
  if (labels.size() != simple.size()) throw std::invalid_argument("label vector length differs from the rank");
  Rational out(0);
  for (std::size_t i = 0; i < simple.size(); ++i) out += labels[i] * Rational(system.inner(simple[i], root));
  return out;
}

}  // namespace rootlines
