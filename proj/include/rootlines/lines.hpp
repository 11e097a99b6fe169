#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootlines/graph.hpp"
#include "rootlines/linalg.hpp"
#include "rootlines/roots.hpp"

namespace rootlines {

/// Lines spanned by norm-2 roots of an ambient system, pairwise at 60 or 90
/// degrees. A line is stored as the index of its positive root, which is the
/// member of {r, -r} whose first nonzero coordinate is positive.
class LineSystem {
 public:
  /// `roots` may name either root of a line; duplicates collapse. Throws
  /// std::invalid_argument if a root is not of norm 2 or two lines make an
  /// angle other than 60 or 90 degrees.
  LineSystem(RootSystem ambient, const std::vector<std::size_t>& roots);

  const RootSystem& ambient() const { return ambient_; }
  /// Positive ambient root indices, ascending (the canonical line order).
  const std::vector<std::size_t>& reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }
  bool empty() const { return reps_.empty(); }
  bool contains(std::size_t root) const;

  RootVector rep_vector(std::size_t k) const { return ambient_.vector(reps_[k]); }
  /// Inner product of the representatives of lines a and b (positions).
  std::int64_t inner(std::size_t a, std::size_t b) const { return ambient_.inner(reps_[a], reps_[b]); }
  std::size_t position_of(std::size_t root) const;

  /// Graph on lines, edges joining non-orthogonal pairs.
  Graph nonorthogonality_graph() const;

  friend bool operator==(const LineSystem& a, const LineSystem& b);

 private:
  RootSystem ambient_;
  std::vector<std::size_t> reps_;
};

/// Canonical (positive) root index for the line through `root`.
std::size_t line_of(const RootSystem& system, std::size_t root);

/// Throws std::invalid_argument unless every root has norm 2.
LineSystem lines_of(const RootSystem& system);

/// Index of the third line of the star through two non-orthogonal lines
/// (given as root indices), or nullopt when it is not an ambient root.
std::optional<std::size_t> third_line(const RootSystem& ambient, std::size_t a, std::size_t b);

/// Smallest star-closed superset. Throws std::domain_error if a third line
/// falls outside the ambient root system.
LineSystem star_closure(const LineSystem& partial);
bool is_star_closed(const LineSystem& l);
bool is_star_free(const LineSystem& l);
bool is_indecomposable(const LineSystem& l);

/// First star in canonical line order, as three line positions.
std::optional<std::array<std::size_t, 3>> first_star(const LineSystem& l);

struct StarDecomposition {
  std::array<std::size_t, 3> star;  // ambient root indices of a, b, c
  LineSystem part_a;  // orthogonal to a only
  LineSystem part_b;
  LineSystem part_c;
  LineSystem part_d;  // orthogonal to all of a, b, c
};

/// `star` holds root indices of three lines of l pairwise at 60 degrees.
/// Throws std::invalid_argument if they are not a star of l, and
/// std::domain_error if some line is orthogonal to exactly two (or none) of
/// them, which no valid line system allows.
StarDecomposition star_decomposition(const LineSystem& l, const std::array<std::size_t, 3>& star);

/// Vectors chosen on a star-free set of lines so that every inner product is
/// 0 or 1; the graph joins the non-orthogonal pairs.
struct Representation {
  Graph graph;
  std::vector<std::size_t> roots;  // ambient root index chosen on each line
};
/// Throws std::domain_error if no such sign choice exists (a star is present).
Representation representation_graph(const LineSystem& star_free);

/// Points and blocks (lists of point indices).
struct IncidenceStructure {
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> blocks;
};

/// Triads (orthogonal triples) of a star-free system as an incidence
/// structure on its lines. Throws std::domain_error if some orthogonal pair
/// lies in no triad, or in a maximal orthogonal set that is not a triad.
IncidenceStructure triads_of(const LineSystem& star_free);

struct GqResult {
  bool ok = false;
  std::size_t s = 0, t = 0;
  std::string failure;  // "empty", "block size", "point degree", "diameter", "girth"
};
GqResult gq_check(const IncidenceStructure& structure);

struct EquiangularReport {
  std::size_t lines = 0;
  std::size_t dimension = 0;
  std::size_t bound = 0;  // (d+1 choose 2)
  bool meets_bound = false;
  Rational cos_squared;
  std::optional<Rational> cos;  // |cos| when cos_squared is a rational square
};
/// `gram` holds inner products of one spanning vector per line. Throws
/// std::invalid_argument for coincident lines and std::domain_error (naming
/// the witness pair) when the lines are not equiangular.
EquiangularReport equiangular_bound_check(const RatMatrix& gram, std::size_t dimension);

struct Classification {
  char theorem_case = '?';  // 'a'..'e'
  std::string label;        // e.g. "E7"
  std::string graph;        // e.g. "K3", "CP(2)+K1", "srg(15,8,4,4)"
  StarDecomposition decomposition;
  Graph part_a_graph;
};
/// Picks the first star, builds part A's representation graph and matches it
/// against the five families of indecomposable star-closed systems. Throws
/// std::invalid_argument for decomposable or non-star-closed input.
Classification classify_indecomposable(const LineSystem& l);

}  // namespace rootlines
