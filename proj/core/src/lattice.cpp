#include "fusionrep/lattice.hpp"

#include <algorithm>

namespace fusrep {

namespace {

int rows(const IntMat& a) { return static_cast<int>(a.size()); }
int cols(const IntMat& a) { return a.empty() ? 0 : static_cast<int>(a[0].size()); }

IntMat identity_mat(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

} // namespace

SmithResult smith_normal_form(const IntMat& a) {
    int m = rows(a), n = cols(a);
    SmithResult r;
    r.d = a;
    r.u = identity_mat(m);
    r.v = identity_mat(n);
    r.vinv = identity_mat(n);
    IntMat& d = r.d;

    auto swap_rows = [&](int i, int j) {
        std::swap(d[i], d[j]);
        std::swap(r.u[i], r.u[j]);
    };
    auto add_row = [&](int dst, int src, const Int& c) { // row dst += c * row src
        for (int k = 0; k < n; ++k)
            d[dst][k] += c * d[src][k];
        for (int k = 0; k < m; ++k)
            r.u[dst][k] += c * r.u[src][k];
    };
    auto negate_row = [&](int i) {
        for (int k = 0; k < n; ++k)
            d[i][k] = -d[i][k];
        for (int k = 0; k < m; ++k)
            r.u[i][k] = -r.u[i][k];
    };
    auto swap_cols = [&](int i, int j) {
        for (int k = 0; k < m; ++k)
            std::swap(d[k][i], d[k][j]);
        for (int k = 0; k < n; ++k)
            std::swap(r.v[k][i], r.v[k][j]);
        std::swap(r.vinv[i], r.vinv[j]);
    };
    auto add_col = [&](int dst, int src, const Int& c) { // col dst += c * col src
        for (int k = 0; k < m; ++k)
            d[k][dst] += c * d[k][src];
        for (int k = 0; k < n; ++k)
            r.v[k][dst] += c * r.v[k][src];
        // inverse op on vinv: row src -= c * row dst
        for (int k = 0; k < n; ++k)
            r.vinv[src][k] -= c * r.vinv[dst][k];
    };

    int t = 0;
    while (t < m && t < n) {
        // find smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (d[i][j] != 0 &&
                    (pi < 0 || abs(d[i][j]) < abs(d[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;
        if (pi != t)
            swap_rows(t, pi);
        if (pj != t)
            swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i)
                if (d[i][t] != 0) {
                    Int q = d[i][t] / d[t][t];
                    add_row(i, t, -q);
                    if (d[i][t] != 0) { // remainder smaller than pivot
                        swap_rows(t, i);
                        clean = false;
                    }
                }
            for (int j = t + 1; j < n; ++j)
                if (d[t][j] != 0) {
                    Int q = d[t][j] / d[t][t];
                    add_col(j, t, -q);
                    if (d[t][j] != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
        }
        if (d[t][t] < 0)
            negate_row(t);
        ++t;
    }
    r.rank = t;
    // enforce divisibility chain (repairs can break earlier links, so sweep
    // until stable)
    bool chain_dirty = true;
    while (chain_dirty) {
    chain_dirty = false;
    for (int i = 0; i + 1 < r.rank; ++i) {
        while (d[i + 1][i + 1] % d[i][i] != 0) {
            chain_dirty = true;
            add_col(i, i + 1, 1);
            // re-eliminate the 2x2 block at (i, i)
            bool clean = false;
            while (!clean) {
                clean = true;
                if (d[i + 1][i] != 0) {
                    if (abs(d[i + 1][i]) < abs(d[i][i]) || d[i][i] == 0) {
                        swap_rows(i, i + 1);
                        clean = false;
                    }
                    if (d[i + 1][i] != 0) {
                        Int q = d[i + 1][i] / d[i][i];
                        add_row(i + 1, i, -q);
                        if (d[i + 1][i] != 0)
                            clean = false;
                    }
                }
                if (d[i][i + 1] != 0) {
                    Int q = d[i][i + 1] / d[i][i];
                    add_col(i + 1, i, -q);
                    if (d[i][i + 1] != 0) {
                        swap_cols(i, i + 1);
                        clean = false;
                    }
                }
            }
            if (d[i][i] < 0)
                negate_row(i);
            if (d[i + 1][i + 1] < 0)
                negate_row(i + 1);
        }
    }
    }
    return r;
}

IntMat hermite_normal_form(IntMat a) {
    int m = rows(a), n = cols(a);
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // gcd-reduce all entries of this column below `row` into one pivot
        int pivot = -1;
        for (int i = row; i < m; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[row], a[pivot]);
        for (int i = row + 1; i < m; ++i) {
            while (a[i][col] != 0) {
                Int q = a[row][col] / a[i][col];
                for (int k = 0; k < n; ++k)
                    a[row][k] -= q * a[i][k];
                std::swap(a[row], a[i]);
            }
        }
        if (a[row][col] < 0)
            for (int k = 0; k < n; ++k)
                a[row][k] = -a[row][k];
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
            if (q != 0)
                for (int k = 0; k < n; ++k)
                    a[i][k] -= q * a[row][k];
        }
        ++row;
    }
    a.resize(row);
    return a;
}

IntegerLattice IntegerLattice::from_generators(int ambient, IntMat generators) {
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != ambient)
            throw StructuralError("generator dimension mismatch");
    IntegerLattice l;
    l.ambient = ambient;
    l.basis = hermite_normal_form(std::move(generators));
    return l;
}

IntegerLattice IntegerLattice::full(int n) {
    IntegerLattice l;
    l.ambient = n;
    l.basis = identity_mat(n);
    return l;
}

IntegerLattice IntegerLattice::zero(int n) {
    IntegerLattice l;
    l.ambient = n;
    return l;
}

std::optional<IntVec> IntegerLattice::coordinates(const IntVec& v) const {
    if (static_cast<int>(v.size()) != ambient)
        throw StructuralError("vector dimension mismatch");
    IntVec rem = v;
    IntVec coords(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        int pc = 0;
        while (basis[i][pc] == 0)
            ++pc;
        if (rem[pc] % basis[i][pc] != 0)
            return std::nullopt;
        Int q = rem[pc] / basis[i][pc];
        coords[i] = q;
        if (q != 0)
            for (int k = 0; k < ambient; ++k)
                rem[k] -= q * basis[i][k];
    }
    for (const auto& x : rem)
        if (x != 0)
            return std::nullopt;
    return coords;
}

bool IntegerLattice::contains(const IntVec& v) const {
    return coordinates(v).has_value();
}

bool IntegerLattice::contains_lattice(const IntegerLattice& other) const {
    for (const auto& row : other.basis)
        if (!contains(row))
            return false;
    return true;
}

Int IntegerLattice::index_of_sublattice(const IntegerLattice& sub) const {
    if (sub.rank() != rank())
        throw PreconditionError("sublattice rank differs; index is infinite");
    IntMat t;
    for (const auto& row : sub.basis) {
        auto c = coordinates(row);
        if (!c)
            throw PreconditionError("not a sublattice");
        t.push_back(*c);
    }
    Int d = determinant(t);
    return d < 0 ? Int(-d) : d;
}

IntegerLattice integer_kernel(const IntMat& a) {
    int n = cols(a);
    if (rows(a) == 0)
        throw StructuralError("kernel of an empty matrix needs explicit ambient");
    SmithResult s = smith_normal_form(a);
    IntMat gens;
    for (int j = s.rank; j < n; ++j) {
        IntVec col(n);
        for (int i = 0; i < n; ++i)
            col[i] = s.v[i][j];
        gens.push_back(std::move(col));
    }
    return IntegerLattice::from_generators(n, std::move(gens));
}

IntegerLattice congruence_kernel(const IntMat& a, const IntVec& moduli, int n) {
    if (a.empty())
        return IntegerLattice::full(n);
    if (moduli.size() != a.size())
        throw StructuralError("one modulus per constraint row required");
    int m = rows(a);
    // columns: n unknowns + one slack column per nonzero modulus
    std::vector<int> slack_row;
    for (int i = 0; i < m; ++i)
        if (moduli[i] != 0)
            slack_row.push_back(i);
    int k = static_cast<int>(slack_row.size());
    IntMat block(m, IntVec(n + k, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            block[i][j] = a[i][j];
    for (int s = 0; s < k; ++s)
        block[slack_row[s]][n + s] = moduli[slack_row[s]];
    IntegerLattice ker = integer_kernel(block);
    IntMat projected;
    for (const auto& row : ker.basis)
        projected.emplace_back(row.begin(), row.begin() + n);
    return IntegerLattice::from_generators(n, std::move(projected));
}

std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
    int m = rows(a), n = cols(a);
    SmithResult s = smith_normal_form(a);
    // D y = U b ; x = V y
    IntVec ub(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            ub[i] += s.u[i][j] * b[j];
    IntVec y(n, 0);
    for (int i = 0; i < std::min(m, n); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.d[i][i] != 0)
                return std::nullopt;
            y[i] = ub[i] / s.d[i][i];
        }
    }
    for (int i = s.rank; i < m; ++i)
        if (ub[i] != 0)
            return std::nullopt;
    IntVec x(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            x[i] += s.v[i][j] * y[j];
    return x;
}

std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b) {
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a[0].size()) : 0;
    RatMat aug(m, RatVec(n + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (aug[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(aug[row], aug[p]);
        Rat inv = 1 / aug[row][col];
        for (int k = col; k <= n; ++k)
            aug[row][k] *= inv;
        for (int i = 0; i < m; ++i)
            if (i != row && aug[i][col] != 0) {
                Rat f = aug[i][col];
                for (int k = col; k <= n; ++k)
                    aug[i][k] -= f * aug[row][k];
            }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (aug[i][n] != 0)
            return std::nullopt;
    RatVec x(n, Rat(0));
    for (int i = 0; i < row; ++i)
        x[pivot_col[i]] = aug[i][n];
    return x;
}

RatMat rational_kernel(const RatMat& a) {
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a[0].size()) : 0;
    RatMat red = a;
    std::vector<int> pivot_of_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (red[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(red[row], red[p]);
        Rat inv = 1 / red[row][col];
        for (int k = col; k < n; ++k)
            red[row][k] *= inv;
        for (int i = 0; i < m; ++i)
            if (i != row && red[i][col] != 0) {
                Rat f = red[i][col];
                for (int k = col; k < n; ++k)
                    red[i][k] -= f * red[row][k];
            }
        pivot_of_col[col] = row;
        ++row;
    }
    RatMat kernel;
    for (int col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0)
            continue;
        RatVec v(n, Rat(0));
        v[col] = 1;
        for (int c = 0; c < n; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = -red[pivot_of_col[c]][col];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

Int determinant(const IntMat& a) {
    int n = rows(a);
    if (n == 0)
        return 1;
    if (cols(a) != n)
        throw StructuralError("determinant of non-square matrix");
    // fraction-free via rational elimination
    RatMat m(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = Rat(a[i][j]);
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = 1 / m[c][c];
        for (int i = c + 1; i < n; ++i)
            if (m[i][c] != 0) {
                Rat f = m[i][c] * inv;
                for (int k = c; k < n; ++k)
                    m[i][k] -= f * m[c][k];
            }
    }
    if (det.get_den() != 1)
        throw ConsistencyError("integer determinant came out fractional");
    return det.get_num();
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
    IntVec out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            out[i] += a[i][j] * x[j];
    return out;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
    RatVec out(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            out[i] += a[i][j] * x[j];
    return out;
}

} // namespace fusrep
