#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootlines/graph.hpp"
#include "rootlines/lines.hpp"
#include "rootlines/roots.hpp"

namespace rootlines {

/// A vector q in the ambient lattice's rational span (coordinates in the
/// basis of the form), paired with roots through the form.
struct Coweight {
  RatVector q;
  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight& a, const Coweight& b) { return a.q <=> b.q; }
};

Rational pairing(const RootSystem& system, std::size_t root, const Coweight& q);
bool is_coweight(const RootSystem& system, const Coweight& q);
bool is_minuscule(const RootSystem& system, const Coweight& q);

/// The coweight dual to the simple roots of `system`: pairs to 1 with the
/// simple root of index `simple_root` and to 0 with the others.
Coweight fundamental_coweight(const RootSystem& system, std::size_t simple_root);

struct ZGrading {
  RootSystem system;
  Coweight q;
  std::map<int, std::vector<std::size_t>> parts;  // degree -> root indices
  const std::vector<std::size_t>& part(int i) const;
};

/// Throws std::invalid_argument if some root pairs non-integrally with q.
ZGrading grading_from_coweight(const RootSystem& system, const Coweight& q);

struct ThreeGrading {
  RootSystem system;
  Coweight q;
  int node = 0;  // catalog Dynkin node (1-based) of the coweight
  std::vector<std::size_t> minus, zero, plus;
  std::string name;       // Fig. 1 family name
  std::string zero_type;  // label of the zero part
  std::size_t weight() const { return plus.size(); }
  RootSystem zero_system() const { return system.subsystem(zero); }
};

/// One grading per node whose coefficient in the highest root is 1, in node
/// order. Throws std::invalid_argument for reducible or empty systems.
std::vector<ThreeGrading> enumerate_three_gradings(const RootSystem& system);

struct GradingCheck {
  bool ok = true;
  std::string failure;  // "partition", "negation", "sum", "difference"
  std::vector<std::size_t> witness;
};
GradingCheck verify_three_grading(const RootSystem& system, const std::vector<std::size_t>& minus,
                                  const std::vector<std::size_t>& zero, const std::vector<std::size_t>& plus);
GradingCheck verify_three_grading(const ThreeGrading& g);

struct BinaryDecomposition {
  LineSystem closed;  // lines of the zero part
  LineSystem free;    // lines of the plus part
};
/// Throws std::domain_error if the zero lines are not star-closed, the plus
/// lines are not star-free, or the plus lines do not star-close to all lines.
BinaryDecomposition binary_decomposition(const ThreeGrading& g);

/// Non-orthogonality graph on the lines of the plus part (vertex k is
/// g.plus[k]). Throws std::runtime_error unless every vertex neighbourhood
/// is isomorphic to that of vertex 0.
Graph decomposition_graph(const ThreeGrading& g);

using GradingSequence = std::vector<ThreeGrading>;

/// Each arrow's system is, root for root, the zero part of the previous one.
bool is_nested(const GradingSequence& seq);

struct LocalityReport {
  bool local = false;
  std::string failure;
  /// certificates[k] maps the vertices of arrow k+1's graph onto the local
  /// subgraph of arrow k's graph.
  std::vector<std::vector<std::size_t>> certificates;
};
LocalityReport is_local_sequence(const GradingSequence& seq);
bool is_maximal_sequence(const GradingSequence& seq);

/// Starting with `system`, every way of following gradings (one per weight
/// and zero type) until the zero part is empty, reducible, or has no
/// grading. Arrows to an empty zero part are dropped when
/// `nonempty_zero` is set.
std::vector<GradingSequence> enumerate_sequences(const RootSystem& system, bool nonempty_zero = true);

std::vector<std::string> sequence_labels(const GradingSequence& seq);

struct MeshArrow {
  std::string source, target;
  std::size_t weight = 0;
  std::string name;
  friend bool operator==(const MeshArrow&, const MeshArrow&) = default;
};
struct GradingMesh {
  std::vector<std::string> nodes;
  std::vector<MeshArrow> arrows;
  bool has_arrow(const std::string& source, const std::string& target, std::size_t weight) const;
};
/// Irreducible A/D/E types up to `max_rank` (at most 8) and their zero-part
/// targets; arrows are deduplicated by (source, target, weight).
GradingMesh build_mesh(int max_rank, bool nonempty_zero = true);
std::string mesh_to_dot(const GradingMesh& mesh);

struct UniquenessReport {
  std::vector<std::string> sources;  // non-extendable starting types
  std::vector<std::string> notes;
  std::vector<GradingSequence> sequences;
  std::vector<std::size_t> local, maximal;  // indices into sequences
  bool unique_local = false, unique_maximal = false, agree = false;
  std::vector<std::string> winner;  // labels of the unique sequence
};
UniquenessReport verify_exceptional_uniqueness(int max_rank = 8);

/// Weyl orbit of the fundamental coweight of E7's node 7 (56 elements),
/// sorted. Throws std::invalid_argument unless the system is E7.
std::vector<Coweight> minuscule_orbit(const RootSystem& e7);

/// Gram matrix of one coweight per line of the orbit (28 lines).
RatMatrix orbit_line_gram(const RootSystem& e7, const std::vector<Coweight>& orbit);

/// Label of the roots orthogonal to every chosen coweight. Throws
/// std::invalid_argument unless the coweights pair positively.
std::string orthogonal_subsystem(const RootSystem& system, const std::vector<Coweight>& acute);

}  // namespace rootlines
