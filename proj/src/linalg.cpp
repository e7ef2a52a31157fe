#include "symint/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace symint {

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DependentGenerators: return "DependentGenerators";
        case ErrorKind::InfiniteIndex: return "InfiniteIndex";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotPositiveSystem: return "NotPositiveSystem";
        case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorKind::ParityViolation: return "ParityViolation";
        case ErrorKind::NotARootSystem: return "NotARootSystem";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::CountMismatch: return "CountMismatch";
        case ErrorKind::FormulaMismatch: return "FormulaMismatch";
        case ErrorKind::EmptySimpleSet: return "EmptySimpleSet";
        case ErrorKind::BadParameters: return "BadParameters";
        case ErrorKind::InvolutionInvalid: return "InvolutionInvalid";
        case ErrorKind::IncompatiblePositiveSystem: return "IncompatiblePositiveSystem";
        case ErrorKind::InvalidProfile: return "InvalidProfile";
        case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    }
    return "Unknown";
}

std::string to_string(const Rational& x) {
    Rational y = x;
    y.canonicalize();
    if (y.get_den() == 1) return y.get_num().get_str();
    return y.get_num().get_str() + "/" + y.get_den().get_str();
}

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return EngineError(ErrorKind::InvalidProfile, "not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + i, t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw bad();
        return Rational(Integer(strip_plus(s)));
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!valid_int(a) || !valid_int(b)) throw bad();
    Integer den(strip_plus(b));
    if (den == 0) throw bad();
    Rational r(Integer(strip_plus(a)), den);
    r.canonicalize();
    return r;
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(static_cast<long>(v[i]));
    return r;
}

RatVec to_rat(const ZVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

ZVec to_z(const IntVec& v) {
    ZVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Integer(static_cast<long>(v[i]));
    return r;
}

RatVec zero_vec(std::size_t d) { return RatVec(d, Rational(0)); }

static void check_dims(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw EngineError(ErrorKind::DimensionMismatch,
                          "dimension " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    RatVec r = a;
    r += b;
    return r;
}
RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec r = a;
    r -= b;
    return r;
}
RatVec operator-(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
RatVec operator*(const Rational& s, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}
RatVec& operator+=(RatVec& a, const RatVec& b) {
    check_dims(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
RatVec& operator-=(RatVec& a, const RatVec& b) {
    check_dims(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
Rational dot(const RatVec& a, const RatVec& b) {
    check_dims(a, b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RatVec act(const IntMat& m, const RatVec& v) {
    if (m.size() != v.size())
        throw EngineError(ErrorKind::DimensionMismatch, "matrix/vector dimension mismatch");
    RatVec r(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw EngineError(ErrorKind::DimensionMismatch, "matrix is not square");
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j]) r[i] += Rational(static_cast<long>(m[i][j])) * v[j];
    }
    return r;
}

bool is_involution(const IntMat& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long long s = 0;
            for (std::size_t k = 0; k < n; ++k) s += m[i][k] * m[k][j];
            if (s != (i == j ? 1 : 0)) return false;
        }
    return true;
}

RatVec eigenprojection(const RatVec& v, const IntMat& theta, int sign) {
    if (!is_involution(theta)) throw EngineError(ErrorKind::InvolutionInvalid, "theta^2 != I");
    RatVec tv = act(theta, v);
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = sign > 0 ? Rational((v[i] + tv[i]) / 2) : Rational((v[i] - tv[i]) / 2);
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank_of(const std::vector<RatVec>& vs) {
    if (vs.empty()) return 0;
    std::vector<RatVec> a = vs;
    return rref(a, a[0].size()).size();
}

bool linearly_independent(const std::vector<RatVec>& vs) { return rank_of(vs) == vs.size(); }

std::optional<std::vector<Rational>> solve_in_span(const RatVec& target,
                                                   const std::vector<RatVec>& generators) {
    std::size_t k = generators.size(), d = target.size();
    for (const auto& g : generators)
        if (g.size() != d) throw EngineError(ErrorKind::DimensionMismatch, "generator dimension mismatch");
    // rows = coordinates, columns = generators | target
    std::vector<RatVec> a(d, RatVec(k + 1));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = generators[j][i];
        a[i][k] = target[i];
    }
    auto piv = rref(a, k + 1);
    std::size_t gen_rank = std::count_if(piv.begin(), piv.end(), [&](std::size_t c) { return c < k; });
    if (gen_rank < k) throw EngineError(ErrorKind::DependentGenerators, "generators are linearly dependent");
    if (!piv.empty() && piv.back() == k) return std::nullopt;
    std::vector<Rational> c(k);
    for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = a[r][k];
    return c;
}

std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& gens, std::size_t dim) {
    std::vector<RatVec> a = gens;
    for (const auto& g : a)
        if (g.size() != dim) throw EngineError(ErrorKind::DimensionMismatch, "generator dimension mismatch");
    auto piv = rref(a, dim);
    std::vector<bool> is_piv(dim, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_piv[f]) continue;
        RatVec x = zero_vec(dim);
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a[r][f];
        basis.push_back(x);
    }
    return basis;
}

RatVec project_onto_span(const RatVec& v, const std::vector<RatVec>& gens) {
    std::vector<RatVec> basis;
    for (const auto& g : gens) {
        basis.push_back(g);
        if (!linearly_independent(basis)) basis.pop_back();
    }
    RatVec out = zero_vec(v.size());
    if (basis.empty()) return out;
    std::size_t k = basis.size();
    std::vector<RatVec> gram(k, RatVec(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
        gram[i][k] = dot(basis[i], v);
    }
    rref(gram, k);
    for (std::size_t i = 0; i < k; ++i) out += gram[i][k] * basis[i];
    return out;
}

ColumnHermite column_hermite(const ZMat& A) {
    ColumnHermite res;
    res.H = A;
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    res.U.assign(n, ZVec(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) res.U[i][i] = 1;
    auto& H = res.H;
    auto& U = res.U;
    // column ops applied to both H and U
    auto combine = [&](std::size_t c1, std::size_t c2, const Integer& a, const Integer& b, const Integer& c,
                       const Integer& d) {
        // (col c1, col c2) <- (a*c1 + b*c2, c*c1 + d*c2)
        for (auto* M : {&H, &U})
            for (auto& row : *M) {
                Integer x = row[c1], y = row[c2];
                row[c1] = a * x + b * y;
                row[c2] = c * x + d * y;
            }
    };
    auto add_multiple = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (auto* M : {&H, &U})
            for (auto& row : *M) row[dst] -= q * row[src];
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto* M : {&H, &U})
            for (auto& row : *M) std::swap(row[a], row[b]);
    };
    auto negate_col = [&](std::size_t c) {
        for (auto* M : {&H, &U})
            for (auto& row : *M) row[c] = -row[c];
    };

    std::size_t col = 0;
    for (std::size_t i = 0; i < m && col < n; ++i) {
        for (std::size_t j = col + 1; j < n; ++j) {
            if (H[i][j] == 0) continue;
            if (H[i][col] == 0) {
                swap_cols(col, j);
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H[i][col].get_mpz_t(), H[i][j].get_mpz_t());
            Integer a = H[i][col] / g, b = H[i][j] / g;
            // [s t; -b a] has determinant s*a + t*b = 1
            combine(col, j, s, t, -b, a);
        }
        if (H[i][col] == 0) continue;
        if (H[i][col] < 0) negate_col(col);
        for (std::size_t j = 0; j < col; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H[i][j].get_mpz_t(), H[i][col].get_mpz_t());
            if (q != 0) add_multiple(j, col, q);
        }
        res.pivot_rows.push_back(i);
        ++col;
    }
    res.rank = col;
    return res;
}

std::vector<ZVec> integer_kernel(const ZMat& A, std::size_t n) {
    ZMat M = A;
    if (M.empty()) {
        std::vector<ZVec> basis;
        for (std::size_t i = 0; i < n; ++i) {
            ZVec e(n, Integer(0));
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    auto ch = column_hermite(M);
    std::vector<ZVec> basis;
    for (std::size_t j = ch.rank; j < n; ++j) {
        ZVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = ch.U[i][j];
        basis.push_back(v);
    }
    return basis;
}

LatticeQuotient lattice_quotient(std::size_t p, const std::vector<ZVec>& gens) {
    LatticeQuotient q;
    q.ambient_rank = p;
    q.generators = gens;
    if (p == 0) {
        q.index = 1;
        q.transversal.push_back({});
        return q;
    }
    ZMat A(p, ZVec(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].size() != p) throw EngineError(ErrorKind::DimensionMismatch, "generator dimension mismatch");
        for (std::size_t i = 0; i < p; ++i) A[i][j] = gens[j][i];
    }
    if (gens.empty()) throw EngineError(ErrorKind::InfiniteIndex, "no generators");
    auto ch = column_hermite(A);
    if (ch.rank < p)
        throw EngineError(ErrorKind::InfiniteIndex, "sublattice rank " + std::to_string(ch.rank) + " < " + std::to_string(p));
    q.hermite.assign(p, ZVec(p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) q.hermite[i][j] = ch.H[i][j];
    q.index = 1;
    for (std::size_t i = 0; i < p; ++i) q.index *= q.hermite[i][i];
    // box [0, h_11) x ... x [0, h_pp)
    ZVec cur(p, Integer(0));
    while (true) {
        q.transversal.push_back(cur);
        std::size_t i = p;
        while (i > 0) {
            --i;
            cur[i] += 1;
            if (cur[i] < q.hermite[i][i]) break;
            cur[i] = 0;
            if (i == 0) return q;
        }
    }
}

ZVec LatticeQuotient::reduce(const ZVec& x) const {
    ZVec r = x;
    for (std::size_t j = 0; j < ambient_rank; ++j) {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), r[j].get_mpz_t(), hermite[j][j].get_mpz_t());
        if (f == 0) continue;
        for (std::size_t i = j; i < ambient_rank; ++i) r[i] -= f * hermite[i][j];
    }
    return r;
}

bool LatticeQuotient::contains(const ZVec& x) const {
    ZVec r = reduce(x);
    return std::all_of(r.begin(), r.end(), [](const Integer& z) { return z == 0; });
}

}  // namespace symint
