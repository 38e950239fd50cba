#include "fusionrep/numbers.hpp"
#include "fusionrep/perm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

namespace fusrep {

namespace {

Permutation cycle_shift(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i)
        img[i] = (i + 1) % n;
    return Permutation(std::move(img));
}

GroupPtr cyclic(int n, const std::string& name) {
    if (n == 1)
        return FiniteGroup::enumerate({Permutation::identity(1)}, name);
    return FiniteGroup::enumerate({cycle_shift(n)}, name);
}

// acts on disjoint blocks [0,a) and [a,a+b)
GroupPtr product_of_cyclics(int a, int b, const std::string& name) {
    int deg = a + b;
    std::vector<int> ga(deg), gb(deg);
    for (int i = 0; i < deg; ++i)
        ga[i] = gb[i] = i;
    for (int i = 0; i < a; ++i)
        ga[i] = (i + 1) % a;
    for (int i = 0; i < b; ++i)
        gb[a + i] = a + (i + 1) % b;
    return FiniteGroup::enumerate({Permutation(ga), Permutation(gb)}, name);
}

// dihedral group of ORDER n (n even, n >= 4), natural action on n/2 points
GroupPtr dihedral(int order, const std::string& name) {
    if (order < 4 || order % 2 != 0)
        throw PreconditionError("dihedral preset needs an even order >= 4");
    int m = order / 2;
    std::vector<int> refl(m);
    for (int i = 0; i < m; ++i)
        refl[i] = (m - i) % m;
    return FiniteGroup::enumerate({cycle_shift(m), Permutation(refl)}, name);
}

// points: 1, -1, i, -i, j, -j, k, -k
GroupPtr quaternion8() {
    Permutation gi({2, 3, 1, 0, 6, 7, 5, 4});
    Permutation gj({4, 5, 7, 6, 1, 0, 2, 3});
    auto g = FiniteGroup::enumerate({gi, gj}, "Q8");
    if (g->order() != 8)
        throw ConsistencyError("Q8 preset has wrong order");
    return g;
}

// semidihedral of order 16: r^8 = s^2 = 1, s r s = r^3
GroupPtr semidihedral16() {
    std::vector<int> s(8);
    for (int i = 0; i < 8; ++i)
        s[i] = (3 * i) % 8;
    auto g = FiniteGroup::enumerate({cycle_shift(8), Permutation(s)}, "SD16");
    if (g->order() != 16)
        throw ConsistencyError("SD16 preset has wrong order");
    return g;
}

// C_p : C_m for m | p-1, acting on Z/p: x -> x+1 and x -> u x with u of
// multiplicative order m
GroupPtr metacyclic(int p, int m, const std::string& name) {
    if (p < 2 || m < 1 || (p - 1) % m != 0)
        throw PreconditionError("metacyclic preset needs m dividing p-1");
    // find a generator of (Z/p)^*, then take the power of order m
    int gen = -1;
    for (int c = 2; c < p && gen < 0; ++c) {
        long x = 1;
        int ord = 0;
        do {
            x = x * c % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1)
            gen = c;
    }
    if (gen < 0)
        throw ConsistencyError("no primitive root found");
    long u = 1;
    for (int i = 0; i < (p - 1) / m; ++i)
        u = u * gen % p;
    std::vector<int> mult(p);
    for (int i = 0; i < p; ++i)
        mult[i] = static_cast<int>(u * i % p);
    auto g = FiniteGroup::enumerate({cycle_shift(p), Permutation(mult)}, name);
    if (g->order() != static_cast<long>(p) * m)
        throw ConsistencyError("metacyclic preset has wrong order");
    return g;
}

GroupPtr alternating4() {
    auto g = FiniteGroup::enumerate(
        {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 1, 2}})},
        "A4");
    if (g->order() != 12)
        throw ConsistencyError("A4 preset has wrong order");
    return g;
}

GroupPtr alternating6() {
    auto g = FiniteGroup::enumerate(
        {Permutation::from_cycles(6, {{0, 1, 2}}), Permutation::from_cycles(6, {{1, 2, 3, 4, 5}})},
        "A6");
    if (g->order() != 360)
        throw ConsistencyError("A6 preset has wrong order");
    return g;
}

GroupPtr symmetric(int n, const std::string& name) {
    auto g = FiniteGroup::enumerate(
        {Permutation::from_cycles(n, {{0, 1}}),
         n > 2 ? cycle_shift(n) : Permutation::identity(n)},
        name);
    long fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    if (g->order() != fact)
        throw ConsistencyError("symmetric preset has wrong order");
    return g;
}

// SL_2(3) on the 8 nonzero vectors of F_3^2
GroupPtr special_linear_2_3() {
    auto vec_index = [](int x, int y) {
        // nonzero (x,y) with x,y in {0,1,2}, skipping (0,0)
        return 3 * x + y - 1;
    };
    auto act = [&](int a, int b, int c, int d) {
        std::vector<int> img(8);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                if (x == 0 && y == 0)
                    continue;
                int nx = (a * x + b * y) % 3;
                int ny = (c * x + d * y) % 3;
                img[vec_index(x, y)] = vec_index(nx, ny);
            }
        return Permutation(img);
    };
    auto g = FiniteGroup::enumerate({act(1, 1, 0, 1), act(0, 2, 1, 0)}, "SL2(3)");
    if (g->order() != 24)
        throw ConsistencyError("SL2(3) preset has wrong order");
    return g;
}

// PGL_3(3) = PSL_3(3) on the 13 points of the projective plane over F_3
GroupPtr projective_linear_3_3() {
    // canonical projective points: nonzero vectors with first nonzero coord 1
    std::vector<std::array<int, 3>> pts;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                std::array<int, 3> v{x, y, z};
                int lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
                if (lead == 1)
                    pts.push_back(v);
            }
    if (pts.size() != 13)
        throw ConsistencyError("projective plane over F3 has 13 points");
    auto find_pt = [&](std::array<int, 3> v) {
        int lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
        if (lead == 2)
            for (auto& c : v)
                c = 2 * c % 3;
        for (size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == v)
                return static_cast<int>(i);
        throw ConsistencyError("projective point lookup failed");
    };
    auto act = [&](const std::array<std::array<int, 3>, 3>& m) {
        std::vector<int> img(13);
        for (size_t i = 0; i < pts.size(); ++i) {
            std::array<int, 3> w{0, 0, 0};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    w[r] = (w[r] + m[r][c] * pts[i][c]) % 3;
            img[i] = find_pt(w);
        }
        return Permutation(img);
    };
    std::array<std::array<int, 3>, 3> transvection{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
    std::array<std::array<int, 3>, 3> rotate{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
    std::array<std::array<int, 3>, 3> diag{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    auto g = FiniteGroup::enumerate({act(transvection), act(rotate), act(diag)}, "PGL3(3)",
                                    GroupBounds{.max_degree = 64, .max_order = 10000});
    if (g->order() != 5616)
        throw ConsistencyError("PGL3(3) preset has wrong order");
    return g;
}

std::optional<long> parse_long(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        return std::nullopt;
    return std::stol(s);
}

} // namespace

GroupPtr preset_group(const std::string& name) {
    if (name == "Q8")
        return quaternion8();
    if (name == "SD16")
        return semidihedral16();
    if (name == "A4")
        return alternating4();
    if (name == "A6")
        return alternating6();
    if (name == "S3" || name == "Sigma3")
        return symmetric(3, name);
    if (name == "S4" || name == "Sigma4")
        return symmetric(4, name);
    if (name == "SL2(3)")
        return special_linear_2_3();
    if (name == "PGL3(3)")
        return projective_linear_3_3();
    if (name.size() > 1 && name[0] == 'C') {
        auto x = name.find('x');
        if (x != std::string::npos && x >= 2 && x + 2 < name.size() && name[x + 1] == 'C') {
            auto a = parse_long(name.substr(1, x - 1));
            auto b = parse_long(name.substr(x + 2));
            if (a && b && *a >= 1 && *b >= 1)
                return product_of_cyclics(static_cast<int>(*a), static_cast<int>(*b), name);
        }
        auto colon = name.find(':');
        if (colon != std::string::npos && colon + 2 < name.size() && name[colon + 1] == 'C') {
            auto p = parse_long(name.substr(1, colon - 1));
            auto m = parse_long(name.substr(colon + 2));
            if (p && m)
                return metacyclic(static_cast<int>(*p), static_cast<int>(*m), name);
        }
        if (auto n = parse_long(name.substr(1)); n && *n >= 1)
            return cyclic(static_cast<int>(*n), name);
    }
    if (name.size() > 1 && name[0] == 'D') {
        if (auto n = parse_long(name.substr(1)); n && *n >= 4)
            return dihedral(static_cast<int>(*n), name);
    }
    throw PreconditionError("unknown preset group: " + name);
}

std::vector<std::string> preset_names() {
    return {"C<n>",  "C<a>xC<b>", "D<n>", "Q8", "SD16", "C<p>:C<m>", "A4",
            "A6",    "S3",        "S4",   "SL2(3)", "PGL3(3)"};
}

} // namespace fusrep
