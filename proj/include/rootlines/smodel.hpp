#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rootlines/chevalley.hpp"
#include "rootlines/gradings.hpp"
#include "rootlines/lines.hpp"
#include "rootlines/roots.hpp"

namespace rootlines {

/// A Cartan element given by Dynkin labels over the E7 simple roots.
struct GradingOperator {
  std::string name;
  RatVector labels;
};

/// W0, lambda3, sqrt3lambda8, B, rho3, sqrt3rho8, H in that order.
const std::vector<GradingOperator>& standard_operators();
enum OperatorIndex { kW0, kLambda3, kLambda8, kB, kRho3, kRho8, kH, kOperatorCount };

/// The operator as a vector sum a_i s_i in the lattice coordinates of `e7`.
Coweight operator_vector(const RootSystem& e7, const GradingOperator& op);

/// A Fig. 4 row.
struct FermionRow {
  std::string name;    // "Right-handed neutrino"
  std::string symbol;  // "nu_R"
  std::array<Rational, 4> values;  // B, W0, lambda3, sqrt3lambda8
};
const std::vector<FermionRow>& particle_table();

enum class ParticleClass { Fermion, AntiFermion, WBoson, Gluon, NeutrinoSl3, Exotic, Extra };
std::string to_string(ParticleClass c);

struct ParticleRecord {
  std::size_t root = 0;
  std::array<Rational, kOperatorCount> eigenvalues;
  ParticleClass kind = ParticleClass::Extra;
  int generation = 0;  // 0 when none
  std::string colour;  // "red", ..., "anti-blue", "colourless", or "none" for gluons
  std::string name;    // Fig. 4 symbol, "anti-" prefixed symbol, "W+", "W-", "gluon", ...
};

/// E7 with its operators, the nested sequence (E7 > E6 > D5 > A4 > A1xA2
/// on nodes 1..k) and a record for every root.
class StandardModel {
 public:
  StandardModel();

  const RootSystem& e7() const { return e7_; }
  const GradingSequence& sequence() const { return sequence_; }
  const std::vector<ParticleRecord>& records() const { return records_; }
  const ParticleRecord& record(std::size_t root) const { return records_.at(root); }

  /// Roots of A1xA2 (the zero part of the last arrow).
  const std::vector<std::size_t>& sm_roots() const { return sm_roots_; }
  /// Roots of A4 (the zero part of the third arrow).
  const std::vector<std::size_t>& a4_roots() const { return a4_roots_; }
  /// Roots orthogonal to all of A4.
  const std::vector<std::size_t>& neutrino_roots() const { return neutrino_roots_; }

  /// Throws std::invalid_argument for a generation outside 1..3.
  std::vector<std::size_t> generation_roots(int generation) const;
  /// The 15 particle (not anti-particle) roots of a generation, in Fig. 4
  /// row order (nu_R omitted).
  std::vector<std::size_t> particle_roots(int generation) const;

  std::size_t root_named(int generation, const std::string& symbol) const;

 private:
  RootSystem e7_;
  GradingSequence sequence_;
  std::vector<std::size_t> sm_roots_, a4_roots_, neutrino_roots_;
  std::vector<ParticleRecord> records_;
};

std::array<Rational, kOperatorCount> quantum_numbers(const RootSystem& e7, std::size_t root);
/// Throws std::domain_error on an eigenvalue pair outside the seven allowed.
std::string colour_of(const std::array<Rational, kOperatorCount>& q);
int generation_of(const std::array<Rational, kOperatorCount>& q);

struct NamedTriads {
  IncidenceStructure structure;
  std::vector<std::array<std::string, 3>> names;  // each sorted, list sorted
  Graph graph;
  GqResult gq;
};
NamedTriads generation_triads(const StandardModel& sm, int generation);
/// The triads containing no lepton.
NamedTriads lepton_free_triads(const StandardModel& sm, int generation);

struct SignSplitReport {
  std::int64_t within_gq21_min = 0;
  std::int64_t within_rest_min = 0;
  std::int64_t cross_max = 0;
  bool triad_sums_zero = false;
  bool ok() const { return within_gq21_min >= 0 && within_rest_min >= 0 && cross_max <= 0 && triad_sums_zero; }
};
SignSplitReport sign_split_check(const StandardModel& sm, int generation);

/// Roots left after forbidding H = +-1 and B = +-5/3.
std::vector<std::size_t> trim_standard(const StandardModel& sm);

std::map<ParticleClass, std::size_t> census_counts(const StandardModel& sm);

/// name,symbol,B,W0,lambda3,sqrt3lambda8 for the 16 rows.
std::string particle_table_csv();
/// One row per root: name,B,W0,lambda3,sqrt3lambda8,rho3,sqrt3rho8,H,colour,generation,classification.
std::string census_csv(const StandardModel& sm);

/// Span of the A1xA2 root spaces, their coroots and B.
Subalgebra standard_model_algebra(const LieAlgebra& e7, const StandardModel& sm);

}  // namespace rootlines
