#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootlines/gradings.hpp"
#include "rootlines/linalg.hpp"
#include "rootlines/roots.hpp"

namespace rootlines {

/// Sparse rational combination of basis elements; zero coefficients are
/// never stored.
class Element {
 public:
  Element() = default;
  static Element basis(std::size_t index) {
    Element e;
    e.terms_[index] = Rational(1);
    return e;
  }

  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(std::size_t index) const;
  /// Adds c times basis element `index`.
  void add(std::size_t index, const Rational& c);
  void add(const Element& other, const Rational& c = Rational(1));

  Element& operator+=(const Element& o) { add(o); return *this; }
  Element& operator-=(const Element& o) { add(o, Rational(-1)); return *this; }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, const Element& e);
  friend bool operator==(const Element&, const Element&) = default;

  RatVector dense(std::size_t dim) const;
  static Element from_dense(const RatVector& v);

 private:
  std::map<std::size_t, Rational> terms_;
};

/// Lie algebra of a simply-laced root system in a Chevalley basis.
/// Basis index i < rank() is h_i for the i-th simple root (in
/// system.simple_roots() order); index rank() + r is e_r for root r.
class LieAlgebra {
 public:
  /// Throws std::invalid_argument for non-simply-laced or empty systems.
  explicit LieAlgebra(RootSystem system);

  const RootSystem& system() const { return system_; }
  std::size_t rank() const { return rank_; }
  std::size_t dim() const { return rank_ + system_.size(); }

  std::size_t h(std::size_t i) const { return i; }
  std::size_t e(std::size_t root) const { return rank_ + root; }
  bool is_cartan(std::size_t index) const { return index < rank_; }
  std::string basis_name(std::size_t index) const;

  /// h_r = sum c_i h_i where r = sum c_i s_i.
  Element coroot(std::size_t root) const;
  /// sum a_i h_i.
  Element cartan_element(const RatVector& labels) const;
  /// N_{r,s}: the sign with [e_r, e_s] = N e_{r+s}, or 0 if r+s is not a root.
  int structure_constant(std::size_t r, std::size_t s) const;

  const Element& bracket_basis(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
  Element bracket(const Element& x, const Element& y) const;

  /// Copy whose N_{r,s} (and N_{s,r}) have the opposite sign.
  LieAlgebra with_flipped_sign(std::size_t r, std::size_t s) const;

 private:
  void build_table();

  RootSystem system_;
  std::size_t rank_ = 0;
  std::vector<std::vector<int>> coeffs_;  // simple coefficients of each root
  std::vector<int> sign_;                 // N_{r,s}, |Phi| x |Phi|
  std::vector<Element> table_;            // dim x dim
};

struct JacobiResult {
  bool ok = true;
  std::size_t triples = 0;
  std::array<std::size_t, 3> witness{0, 0, 0};
};
/// Exhaustive over basis triples i < j < k, split across `jobs` threads
/// (0 = hardware concurrency). Also checks antisymmetry on basis pairs.
JacobiResult verify_jacobi(const LieAlgebra& l, unsigned jobs = 0);

/// A subspace given by a spanning set, with its echelon basis.
class Subalgebra {
 public:
  Subalgebra(std::size_t ambient_dim, const std::vector<Element>& span);
  std::size_t dim() const { return basis_.dim(); }
  bool contains(const Element& x) const;
  std::vector<Element> basis() const;

 private:
  std::size_t ambient_;
  SpanBasis basis_;
};

/// True when every bracket of two basis elements of s lies in s.
bool is_closed(const LieAlgebra& l, const Subalgebra& s);

struct GradedPieces {
  Subalgebra minus, zero, plus;
};
/// Throws std::invalid_argument if the grading is of another system and
/// std::domain_error if [g(i), g(j)] escapes g(i+j).
GradedPieces graded_pieces(const LieAlgebra& l, const ThreeGrading& g);

Subalgebra derived_subalgebra(const LieAlgebra& l, const Subalgebra& s);
Subalgebra centralizer(const LieAlgebra& l, const Subalgebra& s);
/// Elements of s commuting with all of s.
Subalgebra center(const LieAlgebra& l, const Subalgebra& s);

/// sum_i a_i <s_i, r>. Throws std::invalid_argument on a length mismatch.
Rational cartan_eigenvalue(const RootSystem& system, const RatVector& labels, std::size_t root);

}  // namespace rootlines
