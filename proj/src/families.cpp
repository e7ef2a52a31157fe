#include "symint/families.hpp"

#include <algorithm>

namespace symint {

namespace {

IntVec unit(std::size_t n, std::size_t i, long long c = 1) {
    IntVec v(n, 0);
    v[i] = c;
    return v;
}

IntVec combo(std::size_t n, std::size_t i, long long a, std::size_t j, long long b) {
    IntVec v(n, 0);
    v[i] += a;
    v[j] += b;
    return v;
}

IntVec neg(IntVec v) {
    for (auto& x : v) x = -x;
    return v;
}

// Accumulates roots with multiplicities and θ-traces, then assembles the datum.
struct Builder {
    std::size_t n;
    std::vector<IntVec> roots;
    std::vector<int> mult;
    std::vector<int> trace;  // meaningful only on θ-fixed roots
    std::vector<bool> has_trace;

    explicit Builder(std::size_t rank) : n(rank) {}

    // adds ±v
    void pair(const IntVec& v, int m, int t = 0, bool with_trace = false) {
        for (const auto& r : {v, neg(v)}) {
            roots.push_back(r);
            mult.push_back(m);
            trace.push_back(t);
            has_trace.push_back(with_trace);
        }
    }

    std::pair<RootDatumG, InvolutionData> finish(const std::vector<IntVec>& simple, const IntMat& theta) const {
        std::vector<std::size_t> sidx;
        for (const auto& s : simple) {
            auto it = std::find(roots.begin(), roots.end(), s);
            sidx.push_back(static_cast<std::size_t>(it - roots.begin()));
        }
        auto d = make_root_datum(n, roots, sidx, mult);
        InvolutionData inv;
        inv.theta = theta;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (has_trace[i]) inv.fixed_trace[i] = trace[i];
        return {d, inv};
    }
};

IntMat identity(std::size_t n) {
    IntMat m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void bad(const std::string& what) { throw EngineError(ErrorKind::BadParameters, what); }

long param(const FamilySpec& s, const std::string& key) {
    auto it = s.params.find(key);
    if (it == s.params.end()) bad(s.tag + ": missing parameter '" + key + "'");
    return it->second;
}

long param_or(const FamilySpec& s, const std::string& key, long dflt) {
    auto it = s.params.find(key);
    return it == s.params.end() ? dflt : it->second;
}

void add_type_roots(Builder& b, const std::string& type, std::size_t n, int m, int t, bool with_trace,
                    std::vector<IntVec>& simple) {
    if (type == "A") {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) b.pair(combo(n, i, 1, j, -1), m, t, with_trace);
        for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(combo(n, i, 1, i + 1, -1));
        return;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            b.pair(combo(n, i, 1, j, -1), m, t, with_trace);
            b.pair(combo(n, i, 1, j, 1), m, t, with_trace);
        }
    if (type == "B")
        for (std::size_t i = 0; i < n; ++i) b.pair(unit(n, i), m, t, with_trace);
    if (type == "C")
        for (std::size_t i = 0; i < n; ++i) b.pair(unit(n, i, 2), m, t, with_trace);
    for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(combo(n, i, 1, i + 1, -1));
    if (type == "B") simple.push_back(unit(n, n - 1));
    if (type == "C") simple.push_back(unit(n, n - 1, 2));
    if (type == "D") simple.push_back(combo(n, n - 2, 1, n - 1, 1));
}

std::size_t ambient_for(const std::string& type, long n) {
    if (type == "A") return static_cast<std::size_t>(n + 1);
    return static_cast<std::size_t>(n);
}

void check_type(const std::string& tag, const std::string& type, long n) {
    if (type != "A" && type != "B" && type != "C" && type != "D") bad(tag + ": type must be one of A, B, C, D");
    if (n < 1) bad(tag + ": need n >= 1");
    if (type == "D" && n < 2) bad(tag + ": type D needs n >= 2");
    if (n > 8) bad(tag + ": n <= 8 supported");
}

}  // namespace

RootDatumG split_datum(const std::string& type, long n, int mult) {
    check_type("split", type, n);
    std::size_t dim = ambient_for(type, n);
    Builder b(dim);
    std::vector<IntVec> simple;
    add_type_roots(b, type, dim, mult, 0, false, simple);
    return make_root_datum(dim, b.roots, [&] {
        std::vector<std::size_t> s;
        for (const auto& v : simple) s.push_back(static_cast<std::size_t>(std::find(b.roots.begin(), b.roots.end(), v) - b.roots.begin()));
        return s;
    }(), b.mult);
}

std::pair<RootDatumG, InvolutionData> doubled_pair(const RootDatumG& h) {
    std::size_t n = h.rank;
    std::vector<IntVec> roots;
    std::vector<int> mult;
    for (int half = 0; half < 2; ++half)
        for (std::size_t i = 0; i < h.roots.size(); ++i) {
            IntVec v(2 * n, 0);
            for (std::size_t k = 0; k < n; ++k) v[k + half * n] = h.roots[i][k];
            roots.push_back(v);
            mult.push_back(h.mult[i]);
        }
    std::vector<std::size_t> simple;
    for (int half = 0; half < 2; ++half)
        for (auto s : h.simple) simple.push_back(s + half * h.roots.size());
    IntMat theta(2 * n, IntVec(2 * n, 0));
    for (std::size_t k = 0; k < n; ++k) {
        theta[k][k + n] = 1;
        theta[k + n][k] = 1;
    }
    return {make_root_datum(2 * n, roots, simple, mult), InvolutionData{theta, {}}};
}

const std::vector<FamilyInfo>& family_catalog() {
    static const std::vector<FamilyInfo> cat = {
        {"galois_doubling", "type in {A,B,C,D}, n", "Res_{E/F} H / H for split H of the given type and rank"},
        {"gl_orthogonal", "n, r (0 <= 2r <= n)", "GL_n / O_J with Witt index r"},
        {"unitary_orthogonal", "n, r (1 <= r, 2r <= n)", "U_{J,E/F} / O_J with Witt index r"},
        {"gl2n_gln_E", "n >= 1", "GL_{2n}(F) / GL_n(E)"},
        {"sp_unitary", "n, quasi_split (0/1; 0 needs n even)", "Sp_{2n} / U_{J,E/F}"},
        {"sp_gln", "n >= 1", "Sp_{2n} / GL_n (Siegel Levi)"},
        {"gl_linear", "n1, n2 (1 <= n1 <= n2)", "GL_{n1+n2} / GL_{n1} x GL_{n2}"},
        {"group_case", "type in {A,B,C,D}, n", "(H x H) / diagonal H for split H"},
    };
    return cat;
}

std::string describe(const FamilySpec& spec) {
    std::string s = spec.tag + "(";
    bool first = true;
    if (!spec.type.empty()) {
        s += "type=" + spec.type;
        first = false;
    }
    for (const auto& [k, v] : spec.params) {
        if (!first) s += ",";
        s += k + "=" + std::to_string(v);
        first = false;
    }
    return s + ")";
}

std::pair<RootDatumG, InvolutionData> instantiate(const FamilySpec& spec) {
    const std::string& tag = spec.tag;

    if (tag == "galois_doubling" || tag == "group_case") {
        long n = param(spec, "n");
        check_type(tag, spec.type, n);
        if (tag == "group_case") return doubled_pair(split_datum(spec.type, n));
        std::size_t dim = ambient_for(spec.type, n);
        Builder b(dim);
        std::vector<IntVec> simple;
        add_type_roots(b, spec.type, dim, 2, 0, true, simple);
        return b.finish(simple, identity(dim));
    }

    if (tag == "gl_orthogonal") {
        long n = param(spec, "n"), r = param(spec, "r");
        if (n < 1 || n > 12) bad("gl_orthogonal: need 1 <= n <= 12");
        if (r < 0 || 2 * r > n) bad("gl_orthogonal: need 0 <= 2r <= n");
        std::size_t N = static_cast<std::size_t>(n);
        Builder b(N);
        IntMat theta(N, IntVec(N, 0));
        for (std::size_t i = 0; i < N; ++i) {
            bool outer = static_cast<long>(i) < r || static_cast<long>(i) >= n - r;
            if (outer) theta[N - 1 - i][i] = -1;
            else theta[i][i] = -1;
        }
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) {
                bool fixed = static_cast<long>(i) < r && j == N - 1 - i;
                b.pair(combo(N, i, 1, j, -1), 1, -1, fixed);
            }
        std::vector<IntVec> simple;
        for (std::size_t i = 0; i + 1 < N; ++i) simple.push_back(combo(N, i, 1, i + 1, -1));
        return b.finish(simple, theta);
    }

    if (tag == "unitary_orthogonal") {
        long n = param(spec, "n"), r = param(spec, "r");
        if (r < 1 || 2 * r > n || n > 16) bad("unitary_orthogonal: need 1 <= r and 2r <= n <= 16");
        std::size_t R = static_cast<std::size_t>(r);
        Builder b(R);
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = i + 1; j < R; ++j) {
                b.pair(combo(R, i, 1, j, -1), 2, 0, true);
                b.pair(combo(R, i, 1, j, 1), 2, 0, true);
            }
        for (std::size_t i = 0; i < R; ++i) {
            if (2 * r < n) b.pair(unit(R, i), static_cast<int>(2 * (n - 2 * r)), 0, true);
            b.pair(unit(R, i, 2), 1, -1, true);
        }
        std::vector<IntVec> simple;
        for (std::size_t i = 0; i + 1 < R; ++i) simple.push_back(combo(R, i, 1, i + 1, -1));
        simple.push_back(2 * r < n ? unit(R, R - 1) : unit(R, R - 1, 2));
        return b.finish(simple, identity(R));
    }

    if (tag == "gl2n_gln_E") {
        long n = param(spec, "n");
        if (n < 1 || n > 6) bad("gl2n_gln_E: need 1 <= n <= 6");
        std::size_t N = static_cast<std::size_t>(2 * n);
        Builder b(N);
        IntMat theta(N, IntVec(N, 0));
        for (std::size_t i = 0; i < N; i += 2) {
            theta[i][i + 1] = 1;
            theta[i + 1][i] = 1;
        }
        std::vector<IntVec> simple;
        add_type_roots(b, "A", N, 1, 0, false, simple);
        return b.finish(simple, theta);
    }

    if (tag == "sp_unitary") {
        long n = param(spec, "n");
        long qs = param_or(spec, "quasi_split", 1);
        if (n < 1 || n > 8) bad("sp_unitary: need 1 <= n <= 8");
        if (qs != 0 && qs != 1) bad("sp_unitary: quasi_split must be 0 or 1");
        if (!qs && n % 2) bad("sp_unitary: the non-quasi-split form needs n even");
        long r = qs ? n / 2 : n / 2 - 1;
        std::size_t N = static_cast<std::size_t>(n);
        IntMat theta(N, IntVec(N, 0));
        for (std::size_t i = 0; i < N; ++i) {
            if (static_cast<long>(i) < 2 * r) theta[i ^ 1][i] = 1;
            else theta[i][i] = -1;
        }
        Builder b(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) {
                b.pair(combo(N, i, 1, j, -1), 1);
                bool fixed = static_cast<long>(j) < 2 * r && i % 2 == 0 && j == i + 1;
                b.pair(combo(N, i, 1, j, 1), 1, -1, fixed);
            }
        for (std::size_t i = 0; i < N; ++i) b.pair(unit(N, i, 2), 1);
        std::vector<IntVec> simple;
        for (std::size_t i = 0; i + 1 < N; ++i) simple.push_back(combo(N, i, 1, i + 1, -1));
        simple.push_back(unit(N, N - 1, 2));
        return b.finish(simple, theta);
    }

    if (tag == "sp_gln") {
        long n = param(spec, "n");
        if (n < 1 || n > 8) bad("sp_gln: need 1 <= n <= 8");
        std::size_t N = static_cast<std::size_t>(n);
        // θ = Ad(diag(I_n, −I_n)): +1 on the Levi roots ε_i − ε_j, −1 on the unipotent radical
        Builder b(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) {
                b.pair(combo(N, i, 1, j, -1), 1, 1, true);
                b.pair(combo(N, i, 1, j, 1), 1, -1, true);
            }
        for (std::size_t i = 0; i < N; ++i) b.pair(unit(N, i, 2), 1, -1, true);
        std::vector<IntVec> simple;
        for (std::size_t i = 0; i + 1 < N; ++i) simple.push_back(combo(N, i, 1, i + 1, -1));
        simple.push_back(unit(N, N - 1, 2));
        return b.finish(simple, identity(N));
    }

    if (tag == "gl_linear") {
        long n1 = param(spec, "n1"), n2 = param(spec, "n2");
        if (n1 < 1 || n1 > n2) bad("gl_linear: need 1 <= n1 <= n2");
        if (n1 + n2 > 10) bad("gl_linear: need n1 + n2 <= 10");
        std::size_t N = static_cast<std::size_t>(n1 + n2);
        Builder b(N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) {
                bool same = (static_cast<long>(i) < n1) == (static_cast<long>(j) < n1);
                b.pair(combo(N, i, 1, j, -1), 1, same ? 1 : -1, true);
            }
        std::vector<IntVec> simple;
        for (std::size_t i = 0; i + 1 < N; ++i) simple.push_back(combo(N, i, 1, i + 1, -1));
        return b.finish(simple, identity(N));
    }

    bad("unknown family '" + tag + "'");
    return {};
}

}  // namespace symint
