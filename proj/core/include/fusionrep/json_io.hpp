#pragma once

#include "fusionrep/biset.hpp"
#include "fusionrep/chartable.hpp"
#include "fusionrep/rational_reps.hpp"
#include "fusionrep/repring.hpp"
#include "fusionrep/superclass.hpp"

// vendored single-header library, on the include path via the vendor dir
#include "json.hpp"

#include <string>
#include <vector>

namespace fusrep {

using Json = nlohmann::ordered_json;

Json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const Json& j);
// "preset:<name>" or a path to a JSON group file
GroupPtr group_from_source(const std::string& source);

Json subgroup_classes_to_json(const SubgroupClassification& subs);
Json cyclo_to_json(const Cyclo& v);
Json class_function_to_json(const ClassFunction& chi);
Json table_to_json(const CharacterTable& t);
Json rational_basis_to_json(const RationalIrreducibleBasis& b,
                            const SubgroupClassification& subs);

// { "domain": "S" | "F" | "G-prime-power", "values": { classLabel: int } }
Json super_function_to_json(SuperDomain domain, const std::vector<Int>& values,
                            const std::vector<std::string>& labels);
// values may also be a plain array in class order
std::vector<Int> super_function_values_from_json(const Json& j,
                                                 const std::vector<std::string>& labels);

// HNF rows plus the class-label legend
Json lattice_to_json(const IntegerLattice& lat, const std::vector<std::string>& legend);

Json biset_to_json(const BisetElement& x, const GroupPtr& s);

// field tag + coordinate map keyed by irreducible labels
Json rep_vector_to_json(const IrreducibleBasis& basis, const IntVec& coords);

std::string input_hash(const std::string& payload);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace fusrep
