#include "fusionrep/repring.hpp"

#include "fusionrep/numbers.hpp"

#include <algorithm>
#include <numeric>

namespace fusrep {

std::string field_name(FieldTag f) {
    switch (f) {
    case FieldTag::Q:
        return "Q";
    case FieldTag::R:
        return "R";
    case FieldTag::C:
        return "C";
    }
    return "?";
}

IrreducibleBasis irreducible_basis(FieldTag field, const CharacterTable& t,
                                   const RationalIrreducibleBasis* rs) {
    IrreducibleBasis out;
    out.field = field;
    out.group = t.group;
    switch (field) {
    case FieldTag::C:
        out.characters = t.irreducibles;
        break;
    case FieldTag::R:
        out.characters = real_irreducible_characters(t);
        break;
    case FieldTag::Q:
        if (rs == nullptr)
            throw PreconditionError("rational basis data missing");
        out.characters = rs->characters;
        break;
    }
    for (size_t i = 0; i < out.characters.size(); ++i) {
        out.complex_coords.push_back(t.decompose(out.characters[i]));
        Rat deg = out.characters[i].degree().rational_value();
        out.labels.push_back(field_name(field) + std::to_string(i) + "_d" +
                             deg.get_num().get_str());
    }
    return out;
}

ClassFunction combine(const IrreducibleBasis& b, const IntVec& coords) {
    ClassFunction out(b.group, std::vector<Cyclo>(b.group->class_count(), Cyclo()));
    for (size_t i = 0; i < b.characters.size(); ++i)
        if (coords[i] != 0)
            out = out + b.characters[i].scaled(Rat(coords[i]));
    return out;
}

IntVec decompose_in_basis(const IrreducibleBasis& b, const CharacterTable& t,
                          const ClassFunction& chi) {
    IntVec target = t.decompose(chi);
    // solve complex_coords^T x = target
    int rows = t.size();
    int cols = b.size();
    IntMat a(rows, IntVec(cols));
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < rows; ++j)
            a[j][i] = b.complex_coords[i][j];
    auto x = solve_integer(a, target);
    if (!x)
        throw ConsistencyError("character lies outside the integral span of the basis");
    return *x;
}

IntMat dim_matrix(const IrreducibleBasis& b, const SubgroupClassification& subs) {
    IntMat out;
    for (int c = 0; c < subs.class_count(); ++c) {
        IntVec row;
        for (const auto& chi : b.characters) {
            Rat d = fixed_dim(chi, subs.class_rep(c));
            if (d.get_den() != 1)
                throw ConsistencyError("fixed-subspace dimension is not an integer");
            row.push_back(d.get_num());
        }
        out.push_back(std::move(row));
    }
    return out;
}

IntMat dim_matrix_f(const IrreducibleBasis& b, const FusionSystem& f) {
    IntMat full = dim_matrix(b, f.subgroup_classes());
    IntMat out;
    for (const auto& fc : f.subgroup_f_classes())
        out.push_back(full[fc[0]]);
    return out;
}

IntegerLattice stable_sublattice(const IrreducibleBasis& b, const FusionSystem& f) {
    if (b.group != f.s())
        throw PreconditionError("basis lives on a different group");
    int nb = b.size();
    long level = 1;
    for (const auto& chi : b.characters)
        for (const auto& v : chi.values)
            level = std::lcm(level, v.level());
    IntMat rows;
    for (const auto& fc : f.element_f_classes()) {
        for (size_t i = 1; i < fc.size(); ++i) {
            // chi(x) = chi(y) coefficientwise at a common cyclotomic level
            std::vector<std::vector<Rat>> diffs(nb);
            for (int j = 0; j < nb; ++j) {
                Cyclo d = b.characters[j].at_class(fc[0]) - b.characters[j].at_class(fc[i]);
                diffs[j] = d.at_level(level).coords();
            }
            size_t width = diffs[0].size();
            for (size_t k = 0; k < width; ++k) {
                Int den = 1;
                for (int j = 0; j < nb; ++j)
                    den = int_lcm(den, diffs[j][k].get_den());
                IntVec row(nb);
                bool nonzero = false;
                for (int j = 0; j < nb; ++j) {
                    Rat scaled = diffs[j][k] * Rat(den);
                    row[j] = scaled.get_num();
                    if (row[j] != 0)
                        nonzero = true;
                }
                if (nonzero)
                    rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty())
        return IntegerLattice::full(nb);
    return integer_kernel(rows);
}

IntVec product(const IrreducibleBasis& b, const CharacterTable& t, const IntVec& x,
               const IntVec& y) {
    ClassFunction prod = combine(b, x) * combine(b, y);
    return decompose_in_basis(b, t, prod);
}

} // namespace fusrep
