#include "qsch/qhring.hpp"

#include "qsch/parallel.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace qsch {

using nlohmann::json;

// ---- QHClass ---------------------------------------------------------------

QHClass QHClass::basis(RingTag tag, const StrictPartition& nu, int q_power, const Integer& c) {
    QHClass x(tag);
    x.add_term(nu, q_power, c);
    return x;
}

QHClass QHClass::special(RingTag tag, int j) {
    if (j < 0 || j > tag.n) return QHClass(tag);
    if (j == 0) return one(tag);
    return basis(tag, StrictPartition({j}, tag.n));
}

Integer QHClass::coeff(const StrictPartition& nu, int q_power) const {
    auto it = c_.find({StrictPartition(nu.parts(), tag_.n), q_power});
    return it == c_.end() ? Integer(0) : it->second;
}

void QHClass::add_term(const StrictPartition& nu, int q_power, const Integer& c) {
    if (q_power < 0) throw std::invalid_argument("negative q power");
    if (c == 0) return;
    Term key{StrictPartition(nu.parts(), tag_.n), q_power};
    auto [it, fresh] = c_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

void QHClass::check_same(const QHClass& o) const {
    if (!(tag_ == o.tag_)) throw std::invalid_argument("classes from different rings: " + tag_.to_string() + " and " +
                                                       o.tag_.to_string());
}

QHClass& QHClass::operator+=(const QHClass& o) {
    check_same(o);
    for (const auto& [t, c] : o.c_) add_term(t.first, t.second, c);
    return *this;
}

QHClass& QHClass::operator-=(const QHClass& o) {
    check_same(o);
    for (const auto& [t, c] : o.c_) add_term(t.first, t.second, -c);
    return *this;
}

QHClass& QHClass::operator*=(const Integer& c) {
    if (c == 0) c_.clear();
    for (auto& [t, v] : c_) v *= c;
    return *this;
}

QHClass operator*(const QHClass& a, const QHClass& b) {
    a.check_same(b);
    const VIEngine& e = engine(a.tag_);
    QHClass out(a.tag_);
    for (const auto& [ta, ca] : a.c_)
        for (const auto& [tb, cb] : b.c_)
            for (const auto& [t, c] : e.product(ta.first, tb.first))
                out.add_term(t.first, t.second + ta.second + tb.second, ca * cb * c);
    return out;
}

QHClass multiply(const QHClass& a, const QHClass& b) { return a * b; }

std::string QHClass::to_string() const {
    if (c_.empty()) return "0";
    const char* sym = tag_.kind == RingKind::og ? "tau" : "sigma";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : c_) {
        Integer mag = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        bool bare = true;
        if (mag != 1) {
            out << mag.get_str();
            bare = false;
        }
        if (!t.first.empty()) {
            out << (bare ? "" : "*") << sym << "[" << t.first.to_string() << "]";
            bare = false;
        }
        if (t.second > 0) {
            out << (bare ? "" : "*") << "q";
            if (t.second > 1) out << "^" << t.second;
            bare = false;
        }
        if (bare) out << "1";
    }
    return out.str();
}

// ---- presentation ----------------------------------------------------------

bool PresentationReport::ok() const {
    for (const auto& r : relations)
        if (!r.residual.is_zero()) return false;
    return true;
}

PresentationReport verify_presentation(RingTag tag) {
    const int n = tag.n;
    auto g = [&](int j) { return QHClass::special(tag, j); };
    PresentationReport rep{tag, {}};
    if (tag.kind == RingKind::og) {
        for (int r = 1; r <= n - 1; ++r) {
            QHClass rel = g(r) * g(r);
            for (int i = 1; i <= r - 1; ++i) rel += Integer(i % 2 ? -2 : 2) * (g(r + i) * g(r - i));
            rel += Integer(r % 2 ? -1 : 1) * g(2 * r);
            rep.relations.push_back({"tau_{" + std::to_string(r) + "," + std::to_string(r) + "}", rel});
        }
        rep.relations.push_back({"tau_" + std::to_string(n) + "^2 - q", g(n) * g(n) - QHClass::q(tag)});
    } else {
        for (int r = 1; r <= n; ++r) {
            QHClass rel = g(r) * g(r);
            for (int i = 1; i <= n - r; ++i) rel += Integer(i % 2 ? -2 : 2) * (g(r + i) * g(r - i));
            QHClass rhs = g(2 * r - n - 1) * QHClass::q(tag);
            if ((n - r) % 2) rel += rhs;
            else rel -= rhs;
            rep.relations.push_back({"r=" + std::to_string(r), rel});
        }
    }
    return rep;
}

// ---- provenance ------------------------------------------------------------

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::vi_formula: return "vi_formula";
        case Provenance::ortho_extraction: return "ortho_extraction";
        case Provenance::ideal_reduction: return "ideal_reduction";
    }
    return "?";
}

Provenance parse_provenance(const std::string& s) {
    if (s == "vi_formula" || s == "vi") return Provenance::vi_formula;
    if (s == "ortho_extraction" || s == "ortho") return Provenance::ortho_extraction;
    if (s == "ideal_reduction" || s == "ideal") return Provenance::ideal_reduction;
    throw std::invalid_argument("unknown provenance '" + s + "'");
}

namespace {

Integer checked(const Rational& v, const char* who) {
    if (v.get_den() != 1 || sgn(v) < 0)
        throw FormulaError(std::string(who) + ": structure constant " + v.get_str() + " is not a nonnegative integer");
    return v.get_num();
}

Rational two_pow(int e) {
    Rational r(1);
    if (e >= 0) mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
    else mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -e);
    return r;
}

// ---- orthogonality oracle --------------------------------------------------

struct OrthoData {
    std::vector<StrictPartition> basis;         // D(n)
    std::vector<std::vector<CycloNum>> factor;  // Pt_lambda (OG) or Qt_lambda (LG) at each tuple
    std::vector<StrictPartition> dual_basis;    // D(r), r = tuple rank
    std::vector<std::vector<CycloNum>> dual;    // Pt_{alpha-hat}(zeta^I) / S_rho(zeta^I)
};

const OrthoData& ortho_data(RingTag tag) {
    static std::mutex mu;
    static std::map<RingTag, std::unique_ptr<OrthoData>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[tag];
    if (slot) return *slot;
    auto d = std::make_unique<OrthoData>();
    const int r = tag.tuple_rank();
    const bool og = tag.kind == RingKind::og;
    d->basis = enumerate_D(tag.n);
    d->dual_basis = enumerate_D(r);
    const auto& tuples = enumerate_I(r);
    d->factor.assign(d->basis.size(), std::vector<CycloNum>(tuples.size()));
    d->dual.assign(d->dual_basis.size(), std::vector<CycloNum>(tuples.size()));
    parallel_for(tuples.size(), [&](std::size_t i) {
        PointVec pt = tuples[i].points();
        for (std::size_t b = 0; b < d->basis.size(); ++b) {
            const Partition& lam = d->basis[b].as_partition();
            d->factor[b][i] = og ? ptilde(lam, pt) : qtilde(lam, pt);
        }
        CycloNum s_rho_inv = schur(rho(r).as_partition(), pt).inverse();
        for (std::size_t b = 0; b < d->dual_basis.size(); ++b)
            d->dual[b][i] = ptilde(complement(d->dual_basis[b], r).as_partition(), pt) * s_rho_inv;
    });
    slot = std::move(d);
    return *slot;
}

std::size_t position(const std::vector<StrictPartition>& v, const std::vector<int>& parts, int ambient) {
    StrictPartition key(parts, ambient);
    return std::lower_bound(v.begin(), v.end(), key) - v.begin();
}

}  // namespace

Coefficients oracle_ortho(const StrictPartition& lambda, const StrictPartition& mu, RingTag tag) {
    const OrthoData& d = ortho_data(tag);
    const int n = tag.n, r = tag.tuple_rank(), qd = tag.q_degree();
    const bool og = tag.kind == RingKind::og;
    const auto& fl = d.factor[position(d.basis, lambda.parts(), n)];
    const auto& fm = d.factor[position(d.basis, mu.parts(), n)];
    std::vector<CycloNum> prod(fl.size());
    for (std::size_t i = 0; i < fl.size(); ++i) prod[i] = fl[i] * fm[i];

    auto extract = [&](const std::vector<int>& alpha) {
        const auto& w = d.dual[position(d.dual_basis, alpha, r)];
        CycloNum s(enumerate_I(r).front().field_order());
        for (std::size_t i = 0; i < prod.size(); ++i) s += prod[i] * w[i];
        auto v = as_rational(s);
        if (!v) throw FormulaError("ortho extraction: non-rational sum");
        return *v;
    };

    Coefficients out;
    const int total = lambda.weight() + mu.weight();
    for (const auto& nu : d.basis) {
        int diff = total - nu.weight();
        bool graded = diff >= 0 && diff % qd == 0;
        int k = graded ? diff / qd : 0;
        Rational c;
        if (og) {
            // the quantum parameter takes the value 1/4 at these points
            c = extract(nu.parts()) * two_pow(2 * k);
        } else {
            // q = 2 E_{n+1}; odd powers of q live on (n+1, nu)
            std::vector<int> alpha = nu.parts();
            if (k % 2) alpha.insert(alpha.begin(), n + 1);
            c = extract(alpha) * two_pow(-k - static_cast<int>(alpha.size()));
        }
        if (!graded) {
            if (c != 0 && og) throw FormulaError("ortho extraction: nonzero coefficient off the grading");
            continue;
        }
        Integer v = checked(c, "ortho extraction");
        if (v != 0) out.emplace(Term{nu, k}, v);
    }
    return out;
}

// ---- ideal reduction -------------------------------------------------------

namespace {

using Monomial = SparsePoly::Monomial;

// Symbolic E_1..E_r as variables of weights 1..r.
ElementaryValues<SparsePoly> e_ring(int r) {
    std::vector<SparsePoly> e{SparsePoly::constant(r, 1)};
    for (int i = 0; i < r; ++i) e.push_back(SparsePoly::variable(r, i));
    return ElementaryValues<SparsePoly>(e);
}

std::vector<Monomial> monomials_of(int degree, int r) {
    std::vector<Monomial> out;
    for (const auto& p : partitions_of(degree, r)) {
        Monomial m(r, 0);
        for (int part : p.parts()) ++m[part - 1];
        out.push_back(m);
    }
    return out;
}

SparsePoly ring_power(const SparsePoly& x, int k) {
    SparsePoly r = SparsePoly::constant(x.nvars(), 1);
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

// Row-reduction of [ideal | basis] in one degree, remembering the transform
// so that any target reduces with a matrix-vector product.
struct DegreeSolver {
    std::map<Monomial, int> row;
    std::vector<std::vector<Rational>> transform;  // T with T * M = RREF(M)
    std::vector<int> basis_row;                    // pivot row of each basis column, -1 if not a pivot
    std::vector<int> free_rows;                    // rows of RREF(M) that are zero
    std::vector<Term> basis_terms;
    int ideal_rank = 0;
};

struct RingSymbols {
    int r = 0;
    std::vector<SparsePoly> generators;  // ideal generators Qt_{i,i}
    std::vector<int> gen_degree;
    SparsePoly q_image;
    std::vector<SparsePoly> basis_poly;  // Pt_nu (OG) or Qt_nu (LG)
    std::vector<StrictPartition> basis;
};

RingSymbols make_symbols(RingTag tag) {
    RingSymbols s;
    const bool og = tag.kind == RingKind::og;
    s.r = tag.tuple_rank();
    auto sym = e_ring(s.r);
    const int gens = og ? tag.n - 1 : tag.n;
    for (int i = 1; i <= gens; ++i) {
        s.generators.push_back(sym.qtilde_pair(i, i));
        s.gen_degree.push_back(2 * i);
    }
    s.q_image = og ? sym.ptilde(Partition({tag.n, tag.n})) : sym.E(tag.n + 1) * Rational(2);
    s.basis = enumerate_D(tag.n);
    for (const auto& nu : s.basis)
        s.basis_poly.push_back(og ? sym.ptilde(nu.as_partition()) : sym.qtilde(nu.as_partition()));
    return s;
}

const RingSymbols& symbols(RingTag tag) {
    static std::mutex mu;
    static std::map<RingTag, std::unique_ptr<RingSymbols>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[tag];
    if (!slot) slot = std::make_unique<RingSymbols>(make_symbols(tag));
    return *slot;
}

DegreeSolver build_solver(RingTag tag, int degree) {
    const RingSymbols& s = symbols(tag);
    const int r = s.r, qd = tag.q_degree();
    DegreeSolver ds;
    std::vector<Monomial> monos = monomials_of(degree, r);
    for (std::size_t i = 0; i < monos.size(); ++i) ds.row[monos[i]] = static_cast<int>(i);

    std::vector<SparsePoly> cols;
    for (std::size_t g = 0; g < s.generators.size(); ++g) {
        int rest = degree - s.gen_degree[g];
        if (rest < 0) continue;
        for (const auto& m : monomials_of(rest, r)) cols.push_back(SparsePoly::monomial(m) * s.generators[g]);
    }
    const std::size_t n_ideal = cols.size();
    for (std::size_t b = 0; b < s.basis.size(); ++b) {
        int diff = degree - s.basis[b].weight();
        if (diff < 0 || diff % qd) continue;
        ds.basis_terms.push_back({s.basis[b], diff / qd});
        cols.push_back(s.basis_poly[b] * ring_power(s.q_image, diff / qd));
    }

    const std::size_t rows = monos.size(), ncols = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + rows));
    for (std::size_t c = 0; c < ncols; ++c)
        for (const auto& [mono, v] : cols[c].terms()) m[ds.row.at(mono)][c] = v;
    for (std::size_t i = 0; i < rows; ++i) m[i][ncols + i] = 1;

    std::vector<int> pivot_of_col(ncols, -1);
    std::size_t prow = 0;
    for (std::size_t c = 0; c < ncols && prow < rows; ++c) {
        std::size_t p = prow;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[prow]);
        Rational inv = 1 / m[prow][c];
        for (auto& x : m[prow]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == prow || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < ncols + rows; ++j)
                if (m[prow][j] != 0) m[i][j] -= f * m[prow][j];
        }
        pivot_of_col[c] = static_cast<int>(prow);
        if (c < n_ideal) ++ds.ideal_rank;
        ++prow;
    }
    for (std::size_t i = prow; i < rows; ++i) ds.free_rows.push_back(static_cast<int>(i));
    for (std::size_t b = 0; b < ds.basis_terms.size(); ++b) ds.basis_row.push_back(pivot_of_col[n_ideal + b]);
    ds.transform.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) ds.transform[i].assign(m[i].begin() + ncols, m[i].end());
    return ds;
}

const DegreeSolver& solver(RingTag tag, int degree) {
    static std::mutex mu;
    static std::map<std::pair<RingTag, int>, std::shared_ptr<DegreeSolver>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({tag, degree});
        if (it != cache.end()) return *it->second;
    }
    auto ds = std::make_shared<DegreeSolver>(build_solver(tag, degree));
    std::lock_guard lock(mu);
    auto [it, fresh] = cache.emplace(std::make_pair(tag, degree), ds);
    return *it->second;
}

std::vector<Rational> apply(const DegreeSolver& ds, const SparsePoly& target) {
    std::vector<Rational> b(ds.transform.size());
    for (const auto& [mono, v] : target.terms()) b[ds.row.at(mono)] = v;
    std::vector<Rational> out(ds.transform.size());
    for (std::size_t i = 0; i < ds.transform.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0 && ds.transform[i][j] != 0) out[i] += ds.transform[i][j] * b[j];
    return out;
}

}  // namespace

Coefficients oracle_ideal_reduction(const StrictPartition& lambda, const StrictPartition& mu, RingTag tag) {
    const RingSymbols& s = symbols(tag);
    const int degree = lambda.weight() + mu.weight();
    const DegreeSolver& ds = solver(tag, degree);
    for (int b : ds.basis_row)
        if (b < 0) throw FormulaError("ideal reduction: basis classes dependent in degree " + std::to_string(degree));
    SparsePoly target = s.basis_poly[position(s.basis, lambda.parts(), tag.n)] *
                        s.basis_poly[position(s.basis, mu.parts(), tag.n)];
    std::vector<Rational> red = apply(ds, target);
    for (int f : ds.free_rows)
        if (red[f] != 0) throw FormulaError("ideal reduction: product outside the span in degree " +
                                            std::to_string(degree));
    Coefficients out;
    for (std::size_t b = 0; b < ds.basis_terms.size(); ++b) {
        Integer v = checked(red[ds.basis_row[b]], "ideal reduction");
        if (v != 0) out.emplace(ds.basis_terms[b], v);
    }
    return out;
}

std::vector<BasisDegreeCheck> verify_basis(RingTag tag, int max_degree) {
    std::vector<BasisDegreeCheck> out;
    for (int deg = 0; deg <= max_degree; ++deg) {
        const DegreeSolver& ds = solver(tag, deg);
        BasisDegreeCheck c;
        c.degree = deg;
        c.monomials = static_cast<int>(ds.row.size());
        c.ideal_rank = ds.ideal_rank;
        c.basis_count = static_cast<int>(ds.basis_terms.size());
        c.independent = std::all_of(ds.basis_row.begin(), ds.basis_row.end(), [](int b) { return b >= 0; });
        out.push_back(c);
    }
    return out;
}

// ---- tables ----------------------------------------------------------------

MultTable full_table(RingTag tag, Provenance provenance, int jobs) {
    const auto& d = enumerate_D(tag.n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i; j < d.size(); ++j) pairs.emplace_back(i, j);
    if (provenance == Provenance::vi_formula) engine(tag);
    std::vector<Coefficients> slot(pairs.size());
    parallel_for(
        pairs.size(),
        [&](std::size_t p) {
            const auto& l = d[pairs[p].first];
            const auto& m = d[pairs[p].second];
            switch (provenance) {
                case Provenance::vi_formula: slot[p] = engine(tag).product(l, m); break;
                case Provenance::ortho_extraction: slot[p] = oracle_ortho(l, m, tag); break;
                case Provenance::ideal_reduction: slot[p] = oracle_ideal_reduction(l, m, tag); break;
            }
        },
        jobs);
    MultTable t{tag, provenance, {}};
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& l = d[pairs[p].first];
        const auto& m = d[pairs[p].second];
        t.entries[{l, m}] = slot[p];
        t.entries[{m, l}] = slot[p];
    }
    return t;
}

std::optional<std::pair<StrictPartition, StrictPartition>> first_difference(const MultTable& a, const MultTable& b) {
    for (const auto& [key, v] : a.entries) {
        auto it = b.entries.find(key);
        if (it == b.entries.end() || it->second != v) return key;
    }
    for (const auto& [key, v] : b.entries)
        if (!a.entries.count(key)) return key;
    return std::nullopt;
}

// ---- serialization ---------------------------------------------------------

namespace {

json coeff_json(const Integer& c) {
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();
}

Integer coeff_from(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long>());
}

json entries_json(const MultTable& t) {
    json entries = json::array();
    for (const auto& [key, coeffs] : t.entries) {
        json terms = json::array();
        for (const auto& [term, c] : coeffs)
            terms.push_back({{"nu", term.first.parts()}, {"k", term.second}, {"coeff", coeff_json(c)}});
        entries.push_back({{"lambda", key.first.parts()}, {"mu", key.second.parts()}, {"terms", terms}});
    }
    return entries;
}

std::string ring_name(RingTag tag) { return tag.kind == RingKind::og ? "og" : "lg"; }

std::string csv_partition(const StrictPartition& p) { return "\"" + p.to_string() + "\""; }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') quoted = !quoted;
        else if (ch == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else cur += ch;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string table_checksum(const MultTable& t) {
    std::string s = entries_json(t).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

std::string table_to_json(const MultTable& t) {
    json j;
    j["schema"] = "qschub-multtable";
    j["schema_version"] = kTableSchemaVersion;
    j["library_version"] = QSCH_VERSION;
    j["ring"] = ring_name(t.tag);
    j["n"] = t.tag.n;
    j["provenance"] = to_string(t.provenance);
    j["checksum"] = table_checksum(t);
    j["entries"] = entries_json(t);
    return j.dump(1) + "\n";
}

MultTable table_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("schema") != "qschub-multtable") throw std::invalid_argument("not a multiplication table");
    if (j.at("schema_version").get<int>() != kTableSchemaVersion) throw std::invalid_argument("schema version mismatch");
    const int n = j.at("n").get<int>();
    MultTable t{RingTag::parse(j.at("ring").get<std::string>(), n),
                parse_provenance(j.at("provenance").get<std::string>()),
                {}};
    for (const auto& e : j.at("entries")) {
        StrictPartition l(e.at("lambda").get<std::vector<int>>(), n);
        StrictPartition m(e.at("mu").get<std::vector<int>>(), n);
        Coefficients c;
        for (const auto& term : e.at("terms"))
            c[{StrictPartition(term.at("nu").get<std::vector<int>>(), n), term.at("k").get<int>()}] =
                coeff_from(term.at("coeff"));
        t.entries[{l, m}] = c;
    }
    if (j.contains("checksum") && j["checksum"].get<std::string>() != table_checksum(t))
        throw std::invalid_argument("table checksum mismatch");
    return t;
}

std::string table_to_csv(const MultTable& t) {
    std::ostringstream out;
    out << "lambda,mu,nu,k,coeff\n";
    for (const auto& [key, coeffs] : t.entries) {
        if (coeffs.empty()) out << csv_partition(key.first) << "," << csv_partition(key.second) << ",,,\n";
        for (const auto& [term, c] : coeffs)
            out << csv_partition(key.first) << "," << csv_partition(key.second) << "," << csv_partition(term.first)
                << "," << term.second << "," << c.get_str() << "\n";
    }
    return out.str();
}

MultTable table_from_csv(const std::string& text, RingTag tag, Provenance provenance) {
    MultTable t{tag, provenance, {}};
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (line != "lambda,mu,nu,k,coeff") throw std::invalid_argument("unexpected CSV header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 5) throw std::invalid_argument("malformed CSV row: " + line);
        auto& c = t.entries[{StrictPartition::parse(f[0], tag.n), StrictPartition::parse(f[1], tag.n)}];
        if (f[3].empty()) continue;
        c[{StrictPartition::parse(f[2], tag.n), std::stoi(f[3])}] = Integer(f[4]);
    }
    return t;
}

// ---- cache -----------------------------------------------------------------

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::default_dir() {
    if (const char* env = std::getenv("QSCHUB_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "qschub";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "qschub";
    return std::filesystem::temp_directory_path() / "qschub";
}

std::filesystem::path TableCache::path_for(RingTag tag, Provenance provenance) const {
    return dir_ / (ring_name(tag) + std::to_string(tag.n) + "-" + to_string(provenance) + "-s" +
                   std::to_string(kTableSchemaVersion) + "-v" + QSCH_VERSION + ".json");
}

std::optional<MultTable> TableCache::load(RingTag tag, Provenance provenance) const {
    std::ifstream in(path_for(tag, provenance));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        json j = json::parse(buf.str());
        if (j.value("library_version", "") != QSCH_VERSION) return std::nullopt;
        MultTable t = table_from_json(buf.str());
        if (!(t.tag == tag) || t.provenance != provenance) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void TableCache::store(const MultTable& t) const {
    std::filesystem::create_directories(dir_);
    auto path = path_for(t.tag, t.provenance);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << table_to_json(t);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace qsch
