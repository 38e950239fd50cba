#include "fusionrep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace fusrep {

Json group_to_json(const GroupPtr& g) {
    Json j;
    j["name"] = g->name();
    j["degree"] = g->degree();
    j["order"] = g->order();
    Json gens = Json::array();
    for (const auto& p : g->generators())
        gens.push_back(p.images);
    j["generators"] = std::move(gens);
    return j;
}

GroupPtr group_from_json(const Json& j) {
    for (const auto& key : {"name", "degree", "generators"})
        if (!j.contains(key))
            throw PreconditionError(std::string("group JSON misses field '") + key + "'");
    int degree = j.at("degree").get<int>();
    std::vector<Permutation> gens;
    for (const auto& imgs : j.at("generators")) {
        auto v = imgs.get<std::vector<int>>();
        if (static_cast<int>(v.size()) != degree)
            throw PreconditionError("generator image list length differs from the degree");
        gens.emplace_back(std::move(v));
    }
    return FiniteGroup::enumerate(std::move(gens), j.at("name").get<std::string>());
}

GroupPtr group_from_source(const std::string& source) {
    if (source.rfind("preset:", 0) == 0)
        return preset_group(source.substr(7));
    return group_from_json(load_json_file(source));
}

Json subgroup_classes_to_json(const SubgroupClassification& subs) {
    Json out = Json::array();
    for (int c = 0; c < subs.class_count(); ++c) {
        Json e;
        e["label"] = subs.class_labels[c];
        e["order"] = subs.class_rep(c).order();
        e["class_size"] = subs.classes[c].size();
        e["representative"] = subs.class_rep(c).members;
        out.push_back(std::move(e));
    }
    return out;
}

Json cyclo_to_json(const Cyclo& v) {
    if (v.is_rational())
        return rat_to_string(v.rational_value());
    Json j;
    j["level"] = v.level();
    Json coords = Json::array();
    for (const auto& c : v.coords())
        coords.push_back(rat_to_string(c));
    j["coords"] = std::move(coords);
    return j;
}

Json class_function_to_json(const ClassFunction& chi) {
    Json vals = Json::array();
    for (const auto& v : chi.values)
        vals.push_back(cyclo_to_json(v));
    return vals;
}

Json table_to_json(const CharacterTable& t) {
    Json j;
    j["group"] = t.group->name();
    j["conductor"] = t.conductor;
    Json reps = Json::array();
    for (const auto& cls : t.group->conjugacy_classes()) {
        Json e;
        e["size"] = cls.size();
        e["element_order"] = t.group->element_order(cls[0]);
        reps.push_back(std::move(e));
    }
    j["classes"] = std::move(reps);
    Json irr = Json::array();
    for (int i = 0; i < t.size(); ++i) {
        Json e;
        e["degree"] = t.degrees[i];
        e["values"] = class_function_to_json(t.irreducibles[i]);
        irr.push_back(std::move(e));
    }
    j["irreducibles"] = std::move(irr);
    return j;
}

Json rational_basis_to_json(const RationalIrreducibleBasis& b,
                            const SubgroupClassification& subs) {
    Json j;
    Json chars = Json::array();
    for (size_t i = 0; i < b.characters.size(); ++i) {
        Json e;
        e["degree"] = rat_to_string(b.characters[i].degree().rational_value());
        e["provenance"] = b.provenance[i];
        e["values"] = class_function_to_json(b.characters[i]);
        chars.push_back(std::move(e));
    }
    j["characters"] = std::move(chars);
    DetectionMatrix dm = cyclic_detection_matrix(subs, b);
    Json cyc = Json::array();
    for (int c : dm.cyclic_classes)
        cyc.push_back(subs.class_labels[c]);
    j["cyclic_classes"] = std::move(cyc);
    Json rows = Json::array();
    for (const auto& row : dm.entries) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    j["detection_matrix"] = std::move(rows);
    return j;
}

static std::string domain_name(SuperDomain d) {
    switch (d) {
    case SuperDomain::SClasses:
        return "S";
    case SuperDomain::FClasses:
        return "F";
    case SuperDomain::PrimePower:
        return "G-prime-power";
    }
    return "?";
}

Json super_function_to_json(SuperDomain domain, const std::vector<Int>& values,
                            const std::vector<std::string>& labels) {
    Json j;
    j["domain"] = domain_name(domain);
    Json vals;
    for (size_t i = 0; i < values.size(); ++i)
        vals[labels[i]] = values[i].get_str();
    j["values"] = std::move(vals);
    return j;
}

static Int int_from_json(const Json& v) {
    if (v.is_number_integer())
        return Int(v.get<long>());
    return Int(v.get<std::string>());
}

std::vector<Int> super_function_values_from_json(const Json& j,
                                                 const std::vector<std::string>& labels) {
    const Json& vals = j.contains("values") ? j.at("values") : j;
    if (vals.is_array()) {
        if (vals.size() != labels.size())
            throw PreconditionError("function value count differs from the class count");
        std::vector<Int> out;
        for (const auto& v : vals)
            out.push_back(int_from_json(v));
        return out;
    }
    std::vector<Int> out;
    for (const auto& label : labels) {
        if (!vals.contains(label))
            throw PreconditionError("function misses a value for class '" + label + "'");
        out.push_back(int_from_json(vals.at(label)));
    }
    if (vals.size() != labels.size())
        throw PreconditionError("function carries values for unknown classes");
    return out;
}

Json lattice_to_json(const IntegerLattice& lat, const std::vector<std::string>& legend) {
    Json j;
    j["ambient"] = lat.ambient;
    j["rank"] = lat.rank();
    j["legend"] = legend;
    Json rows = Json::array();
    for (const auto& row : lat.basis) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    j["hnf_rows"] = std::move(rows);
    return j;
}

Json biset_to_json(const BisetElement& x, const GroupPtr& s) {
    Json out = Json::array();
    for (const auto& [pair, coeff] : x.coeffs) {
        Json e;
        e["Q"] = pair.q;
        e["psi"] = pair.psi;
        e["Q_order"] = pair.q.size();
        e["coeff"] = rat_to_string(coeff);
        out.push_back(std::move(e));
    }
    (void)s;
    return out;
}

Json rep_vector_to_json(const IrreducibleBasis& basis, const IntVec& coords) {
    Json j;
    j["field"] = field_name(basis.field);
    Json m;
    for (int i = 0; i < basis.size(); ++i)
        if (coords[i] != 0)
            m[basis.labels[i]] = coords[i].get_str();
    j["coordinates"] = std::move(m);
    return j;
}

std::string input_hash(const std::string& payload) {
    // FNV-1a, 64 bit
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open '" + path + "'");
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw PreconditionError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace fusrep
