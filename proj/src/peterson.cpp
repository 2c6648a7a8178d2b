#include "qsch/peterson.hpp"

#include <json.hpp>

#include <numeric>
#include <stdexcept>

namespace qsch {

std::string to_string(GroupKind k) {
    switch (k) {
        case GroupKind::C: return "C";
        case GroupKind::B: return "B";
        case GroupKind::D: return "D";
    }
    return "?";
}

namespace {

int field_order(const PointVec& coords) {
    int m = 1;
    for (const auto& c : coords) m = std::lcm(m, c.order());
    return m;
}

template <class R>
Matrix<R> product_transpose_left(const Matrix<R>& u, const Matrix<R>& j, const R& zero) {
    const std::size_t s = u.size();
    Matrix<R> ju(s, std::vector<R>(s, zero)), out(s, std::vector<R>(s, zero));
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            for (std::size_t k = 0; k < s; ++k)
                if (!j[a][k].is_zero()) ju[a][b] += j[a][k] * u[k][b];
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            for (std::size_t k = 0; k < s; ++k) out[a][b] += u[k][a] * ju[k][b];
    return out;
}

SparsePoly laplace_det(const Matrix<SparsePoly>& a, int nvars) {
    const std::size_t m = a.size();
    if (m == 0) return SparsePoly::constant(nvars, 1);
    if (m == 1) return a[0][0];
    SparsePoly acc(nvars);
    for (std::size_t j = 0; j < m; ++j) {
        if (a[0][j].is_zero()) continue;
        Matrix<SparsePoly> sub;
        for (std::size_t i = 1; i < m; ++i) {
            std::vector<SparsePoly> row;
            for (std::size_t k = 0; k < m; ++k)
                if (k != j) row.push_back(a[i][k]);
            sub.push_back(std::move(row));
        }
        SparsePoly term = a[0][j] * laplace_det(sub, nvars);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

void validate(const MinorSpec& spec, int size) {
    if (spec.rows.size() != spec.cols.size()) throw std::invalid_argument("minor needs as many rows as columns");
    for (const auto* set : {&spec.rows, &spec.cols})
        for (std::size_t k = 0; k < set->size(); ++k) {
            int v = (*set)[k];
            if (v < 1 || v > size) throw std::invalid_argument("minor index out of range");
            if (k > 0 && (*set)[k - 1] >= v) throw std::invalid_argument("minor indices must increase");
        }
}

template <class R>
Matrix<R> submatrix(const Matrix<R>& m, const MinorSpec& spec) {
    Matrix<R> out;
    for (int r : spec.rows) {
        std::vector<R> row;
        for (int c : spec.cols) row.push_back(m[r - 1][c - 1]);
        out.push_back(std::move(row));
    }
    return out;
}

// The block matrix in terms of X_0..X_n and Y_n..Y_2n (x[k], y[k - n]).
template <class R>
Matrix<R> block_matrix(int n, const std::vector<R>& x, const std::vector<R>& y, const R& zero) {
    const int s = 2 * n + 2, h = n + 1;
    auto X = [&](int k) { return (k < 0 || k > n) ? zero : x[k]; };
    auto Y = [&](int k) { return y[k - n]; };
    auto Xp = [&](int k) { return k <= n - 1 ? X(k) : Y(k); };
    auto sgn = [](int k, R v) { return k % 2 ? -v : v; };
    Matrix<R> v(s, std::vector<R>(s, zero));
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            v[i][j] = X(j - i);
            v[h + i][h + j] = j - i == n ? zero : sgn(j - i, X(j - i));
        }
    R two_yn = Y(n) * Rational(2);
    R w = n % 2 ? X(n) - two_yn : X(n);
    R z = n % 2 ? -X(n) : two_yn - X(n);
    v[h][s - 1] = z;
    v[0][h] = two_yn - X(n);
    for (int r = 1; r < n; ++r) v[r][h] = X(n - r);
    for (int c = 1; c <= n; ++c) {
        for (int r = 0; r < n; ++r) v[r][h + c] = sgn(c, Xp(n + c - r) * Rational(2));
        v[n][h + c] = c == n ? w : sgn(c, X(c));
    }
    return v;
}

}  // namespace

Matrix<CycloNum> toeplitz_unipotent(int size, const std::vector<CycloNum>& bands) {
    int order = 1;
    for (const auto& b : bands) order = std::lcm(order, b.order());
    Matrix<CycloNum> m(size, std::vector<CycloNum>(size, CycloNum(order)));
    for (int i = 0; i < size; ++i) {
        m[i][i] = CycloNum(order, Rational(1));
        for (int k = 1; k <= static_cast<int>(bands.size()) && i + k < size; ++k) m[i][i + k] = bands[k - 1];
    }
    return m;
}

PetersonMatrix build_u(GroupKind kind, const PointVec& coords) {
    if (kind == GroupKind::D) throw std::invalid_argument("build_u takes kind C or B; use build_v for D");
    const int m = static_cast<int>(coords.size());
    const int n = kind == GroupKind::C ? m : m - 1;
    if (n < 1) throw std::invalid_argument("build_u: too few coordinates");
    auto e = elementary_values(coords);
    std::vector<CycloNum> bands(e.begin() + 1, e.end());
    return {kind, n, toeplitz_unipotent(kind == GroupKind::C ? 2 * n : 2 * n + 1, bands)};
}

PetersonMatrix build_v(const PointVec& coords) {
    const int n = static_cast<int>(coords.size());
    if (n < 2) throw std::invalid_argument("build_v needs n >= 2");
    auto e = elementary_values(coords);
    const CycloNum zero(field_order(coords));
    std::vector<CycloNum> x(e.begin(), e.begin() + n), y(n + 1, zero);
    x.push_back(zero);  // X_n = 0
    y[0] = e[n];        // Y_n = E_n
    for (auto& v : x) v = v.lift(zero.order());
    return {GroupKind::D, n, block_matrix(n, x, y, zero)};
}

int symbolic_x(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("X index");
    return i - 1;
}

int symbolic_y(int n, int i) {
    if (i < n || i > 2 * n) throw std::out_of_range("Y index");
    return i;
}

Matrix<SparsePoly> symbolic_v(int n) {
    if (n < 2) throw std::invalid_argument("symbolic_v needs n >= 2");
    const int nv = 2 * n + 1;
    std::vector<SparsePoly> x{SparsePoly::constant(nv, 1)}, y;
    for (int i = 1; i <= n; ++i) x.push_back(SparsePoly::variable(nv, symbolic_x(n, i)));
    for (int i = n; i <= 2 * n; ++i) y.push_back(SparsePoly::variable(nv, symbolic_y(n, i)));
    return block_matrix(n, x, y, SparsePoly(nv));
}

Matrix<CycloNum> bilinear_form(GroupKind kind, int size) {
    Matrix<CycloNum> j(size, std::vector<CycloNum>(size, CycloNum(1)));
    for (int i = 1; i <= size; ++i) {
        int partner = size + 1 - i;
        Rational v = kind == GroupKind::D ? 1 : (i % 2 ? 1 : -1);
        j[i - 1][partner - 1] = CycloNum(1, v);
    }
    return j;
}

bool preserves_form(const PetersonMatrix& u) {
    const int s = u.size();
    const int order = s ? u.entries[0][0].order() : 1;
    Matrix<CycloNum> j = bilinear_form(u.kind, s);
    for (auto& row : j)
        for (auto& v : row) v = v.lift(order);
    return product_transpose_left(u.entries, j, CycloNum(order)) == j;
}

std::string MinorSpec::to_string() const {
    auto list = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
        return s;
    };
    return "rows {" + list(rows) + "} cols {" + list(cols) + "}";
}

MinorSpec upper_right(int r, int size) {
    if (r < 1 || r > size) throw std::invalid_argument("upper_right size");
    MinorSpec m;
    for (int k = 1; k <= r; ++k) {
        m.rows.push_back(k);
        m.cols.push_back(size - r + k);
    }
    return m;
}

MinorSpec spin_minor(int n) {
    MinorSpec m;
    for (int k = 1; k <= n; ++k) m.rows.push_back(k);
    m.rows.push_back(n % 2 ? n + 2 : n + 1);
    m.cols.push_back(n + 1);
    for (int c = n + 3; c <= 2 * n + 2; ++c) m.cols.push_back(c);
    return m;
}

std::vector<MinorSpec> defining_minors(GroupKind kind, int n) {
    std::vector<MinorSpec> out;
    const int size = kind == GroupKind::C ? 2 * n : kind == GroupKind::B ? 2 * n + 1 : 2 * n + 2;
    for (int r = 1; r < n; ++r) out.push_back(upper_right(r, size));
    if (kind == GroupKind::D) out.push_back(spin_minor(n));
    return out;
}

CycloNum minor(const PetersonMatrix& u, const MinorSpec& spec) {
    validate(spec, u.size());
    if (spec.rows.empty()) return CycloNum(1, Rational(1));
    return determinant(submatrix(u.entries, spec));
}

SparsePoly minor(const Matrix<SparsePoly>& m, const MinorSpec& spec) {
    validate(spec, static_cast<int>(m.size()));
    const int nv = m.empty() ? 0 : m[0][0].nvars();
    return laplace_det(submatrix(m, spec), nv);
}

bool member(GroupKind kind, const PointVec& coords) {
    const int m = static_cast<int>(coords.size());
    (void)kind;  // the index range is m - 1 for every kind
    const int last = m - 1;
    PointVec sq;
    for (const auto& c : coords) sq.push_back(c * c);
    auto e = elementary_values(sq);
    for (int i = 1; i <= last; ++i)
        if (!e[i].is_zero()) return false;
    return true;
}

bool member_by_minors(const PetersonMatrix& u) {
    if (!preserves_form(u)) return false;
    for (const auto& spec : defining_minors(u.kind, u.n))
        if (!minor(u, spec).is_zero()) return false;
    return true;
}

CycloNum quantum_value(GroupKind kind, const PointVec& coords) {
    if (kind == GroupKind::D) throw std::invalid_argument("quantum_value is defined for kinds C and B");
    if (!member(kind, coords)) throw std::invalid_argument("quantum_value: point is not on the variety");
    const int m = static_cast<int>(coords.size());
    if (kind == GroupKind::C) return at_point(coords).ptilde(Partition({m, m}));
    return elem(m, coords) * Rational(2);
}

SparsePoly band_relation(int i, const std::vector<SparsePoly>& x) {
    const int nv = x.at(0).nvars();
    auto X = [&](int k) { return k < static_cast<int>(x.size()) ? x[k] : SparsePoly(nv); };
    SparsePoly tail(nv);
    for (int k = 1; k <= i; ++k) {
        SparsePoly p = X(i + k) * X(i - k);
        if (k % 2) tail -= p;
        else tail += p;
    }
    return X(i) * X(i) + tail * Rational(2);
}

std::string matrix_to_json(const PetersonMatrix& u) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : u.entries) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) {
            nlohmann::json c = nlohmann::json::array();
            for (const auto& q : v.coeffs()) c.push_back(q.get_str());
            r.push_back(c);
        }
        rows.push_back(r);
    }
    nlohmann::json doc{{"kind", to_string(u.kind)}, {"n", u.n}, {"size", u.size()},
                       {"field_order", u.size() ? u.entries[0][0].order() : 1},
                       {"basis", "power basis of the cyclotomic field, constant first"},
                       {"entries", rows}};
    return doc.dump(1);
}

}  // namespace qsch
