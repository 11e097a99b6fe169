#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rootlines/linalg.hpp"
#include "rootlines/rational.hpp"

namespace rootlines {

/// Integer coordinates with respect to the basis of a GramForm.
using Coords = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : c) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
    return h;
  }
};

/// Symmetric integral bilinear form on Z^n: the inner products of a lattice basis.
class GramForm {
 public:
  explicit GramForm(IntMatrix gram);

  std::size_t dim() const { return gram_.size(); }
  int operator()(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const IntMatrix& matrix() const { return gram_; }

  std::int64_t inner(const Coords& a, const Coords& b) const;
  Rational inner(const RatVector& a, const Coords& b) const;
  Rational inner(const RatVector& a, const RatVector& b) const;

 private:
  IntMatrix gram_;
};

using FormPtr = std::shared_ptr<const GramForm>;

/// A lattice vector tied to the form it lives in.
struct RootVector {
  Coords coords;
  FormPtr form;

  RootVector operator-() const;
  friend bool operator==(const RootVector& a, const RootVector& b) {
    return a.form == b.form && a.coords == b.coords;
  }
};

/// Throws std::invalid_argument when the two vectors live in different forms.
Rational inner_product(const RootVector& r, const RootVector& s);

/// s - (2<r,s>/<r,r>) r. Throws when the coefficient is not integral.
RootVector reflect(const RootVector& r, const RootVector& s);

/// A finite root system embedded in an integral lattice.
///
/// Roots are stored positive-first: the lexicographically positive roots
/// ordered by height then by descending coordinates, followed by their
/// negatives in the same order, so that root i + size()/2 is -root(i).
/// Subsystems share the form of their parent, which is how "same ambient"
/// is decided.
class RootSystem {
 public:
  /// Takes an arbitrary root set (closed under negation); computes order,
  /// simple roots and the inner product table. Does not check reflection
  /// closure; use is_reflection_closed for that.
  RootSystem(std::string label, FormPtr form, std::vector<Coords> roots);

  const std::string& label() const { return d_->label; }
  const FormPtr& form() const { return d_->form; }
  std::size_t ambient_dim() const { return d_->form->dim(); }
  std::size_t rank() const { return d_->simple.size(); }
  std::size_t size() const { return d_->roots.size(); }
  std::size_t positive_count() const { return d_->roots.size() / 2; }

  const std::vector<Coords>& roots() const { return d_->roots; }
  const Coords& root(std::size_t i) const { return d_->roots[i]; }
  RootVector vector(std::size_t i) const { return {d_->roots[i], d_->form}; }

  bool is_positive(std::size_t i) const { return i < positive_count(); }
  std::size_t negative_of(std::size_t i) const;
  std::optional<std::size_t> index_of(const Coords& c) const;

  /// Indices of the simple roots, in descending lexicographic order.
  const std::vector<std::size_t>& simple_roots() const { return d_->simple; }

  std::int64_t norm(std::size_t i) const { return inner(i, i); }
  std::int64_t inner(std::size_t i, std::size_t j) const { return d_->table[i * d_->roots.size() + j]; }
  bool simply_laced() const;

  /// Coefficients of a vector in the span of the simple roots.
  /// Throws std::invalid_argument when v is outside that span or not integral.
  std::vector<int> simple_coefficients(const Coords& v) const;
  const RatMatrix& simple_gram() const { return d_->simple_gram; }
  const RatMatrix& simple_gram_inverse() const { return d_->simple_gram_inv; }

  bool same_ambient(const RootSystem& o) const { return d_->form == o.d_->form; }
  /// Same object (copies share their data).
  bool identical(const RootSystem& o) const { return d_ == o.d_; }

  /// Root subset sharing this system's form, labelled by identify_type.
  RootSystem subsystem(const std::vector<std::size_t>& indices) const;

 private:
  struct Data {
    std::string label;
    FormPtr form;
    std::vector<Coords> roots;
    std::unordered_map<Coords, std::size_t, CoordsHash> index;
    std::vector<std::int64_t> table;
    std::vector<std::size_t> simple;
    RatMatrix simple_gram;
    RatMatrix simple_gram_inv;
  };
  std::shared_ptr<const Data> d_;
};

/// Every catalog type this library can name.
struct TypeComponent {
  char family = 'A';  // A B C D E F G
  int rank = 0;
  /// nodes[k] = index into the system's roots of the simple root that plays
  /// the role of catalog Dynkin node k+1.
  std::vector<std::size_t> nodes;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
};

struct TypeDecomposition {
  std::vector<TypeComponent> components;  // sorted by family then rank
  /// "A1xA2", "E7", or "∅" for the empty system.
  std::string label() const;
};

/// Irreducible components of a root system, each matched against the
/// catalog Cartan matrices. Throws std::invalid_argument if the set is not
/// closed under negation and reflection, std::runtime_error if a component
/// matches no catalog Cartan matrix.
TypeDecomposition decompose_type(const RootSystem& system);
std::string identify_type(const std::vector<Coords>& roots, const FormPtr& form);
std::string identify_type(const std::vector<RootVector>& roots);

bool is_reflection_closed(const RootSystem& system);

/// Catalog Gram matrix (symmetric) of simple roots for one irreducible type,
/// in Bourbaki node order. E7 is the chain 1-3-4-5-6-7 with node 2 on node 4.
IntMatrix catalog_gram(char family, int rank);

/// Parses "E7", "A4", "A1xA2" (also "A1×A2"). D2 and D3 normalize to
/// A1xA1 and A3. Throws std::invalid_argument on anything unsupported.
std::vector<TypeComponent> parse_simply_laced_label(std::string_view label);

/// A/D/E root system (or a product of them) generated by closing the simple
/// roots under simple reflections.
RootSystem build_simply_laced(std::string_view label);

/// B_n, C_n (n >= 2), G2 and F4 assembled from the first two layers of a
/// simply-laced root lattice.
RootSystem build_non_simply_laced(std::string_view label);

/// Integer combinations of the form's basis vectors, enumerated by norm.
class Lattice {
 public:
  explicit Lattice(FormPtr form);

  const FormPtr& form() const { return form_; }

  /// All nonzero vectors with norm <= bound, sorted by norm then coordinates.
  std::vector<Coords> vectors_up_to(std::int64_t bound) const;

  /// Vectors of the k-th smallest positive norm. Only k = 1, 2 are supported.
  std::vector<Coords> layer(int k) const;

 private:
  FormPtr form_;
  LdlFactor ldl_;
};

std::vector<Coords> lattice_layer(const RootSystem& system, int k);

}  // namespace rootlines
