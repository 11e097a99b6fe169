#pragma once

#include <string>

#include "json.hpp"
#include "rootlines/chevalley.hpp"
#include "rootlines/gradings.hpp"
#include "rootlines/lines.hpp"
#include "rootlines/smodel.hpp"

namespace rootlines {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"label", "gram", "roots"}
json to_json(const RootSystem& system);
/// Throws std::invalid_argument on a malformed document.
RootSystem root_system_from_json(const json& j);

/// {"vertices": n, "edges": [[u, v], ...]}
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"points": [0..n-1], "blocks": [[...]]}
json to_json(const IncidenceStructure& s);
json to_json(const NamedTriads& t);

json to_json(const LineSystem& l);
json to_json(const StarDecomposition& d);
json to_json(const Classification& c);
json to_json(const ThreeGrading& g);
json to_json(const MeshArrow& a);
json to_json(const GradingMesh& mesh);
/// Array of arrows {source, target, weight, name}.
json sequence_to_json(const GradingSequence& seq);
json to_json(const UniquenessReport& r);

/// [{x, y, result: [[index, "p/q"], ...]}] for basis pairs x < y with a
/// nonzero bracket.
json structure_constants_json(const LieAlgebra& l);

json particle_table_json();
/// One object per root with the census CSV fields.
json census_json(const StandardModel& sm);

}  // namespace rootlines
