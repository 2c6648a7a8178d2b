#pragma once

#include "qsch/viformula.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsch {

using Coefficients = std::map<Term, Integer>;

// Finite Z-combination of classes sigma_nu q^k (LG) or tau_nu q^k (OG).
class QHClass {
public:
    explicit QHClass(RingTag tag) : tag_(tag) {}
    static QHClass basis(RingTag tag, const StrictPartition& nu, int q_power = 0, const Integer& c = 1);
    static QHClass one(RingTag tag) { return basis(tag, StrictPartition({}, tag.n)); }
    static QHClass q(RingTag tag, int power = 1) { return basis(tag, StrictPartition({}, tag.n), power); }
    // sigma_j / tau_j with the conventions X_0 = 1 and X_j = 0 outside 0..n.
    static QHClass special(RingTag tag, int j);

    const RingTag& tag() const noexcept { return tag_; }
    const Coefficients& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    Integer coeff(const StrictPartition& nu, int q_power) const;
    void add_term(const StrictPartition& nu, int q_power, const Integer& c);

    QHClass& operator+=(const QHClass& o);
    QHClass& operator-=(const QHClass& o);
    QHClass& operator*=(const Integer& c);
    friend QHClass operator+(QHClass a, const QHClass& b) { return a += b; }
    friend QHClass operator-(QHClass a, const QHClass& b) { return a -= b; }
    friend QHClass operator*(QHClass a, const Integer& c) { return a *= c; }
    friend QHClass operator*(const Integer& c, QHClass a) { return a *= c; }
    friend QHClass operator*(const QHClass& a, const QHClass& b);
    friend bool operator==(const QHClass&, const QHClass&) = default;

    std::string to_string() const;

private:
    void check_same(const QHClass& o) const;

    RingTag tag_;
    Coefficients c_;
};

QHClass multiply(const QHClass& a, const QHClass& b);

struct RelationCheck {
    std::string name;
    QHClass residual;
};

struct PresentationReport {
    RingTag tag;
    std::vector<RelationCheck> relations;
    bool ok() const;
};

PresentationReport verify_presentation(RingTag tag);

enum class Provenance { vi_formula, ortho_extraction, ideal_reduction };
std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& s);

// Structure constants of lambda * mu by evaluating at the exclusive tuples
// with the quantum parameter specialized, then restoring q-degrees.
Coefficients oracle_ortho(const StrictPartition& lambda, const StrictPartition& mu, RingTag tag);

// Structure constants by exact linear algebra in the graded piece of degree
// |lambda| + |mu| of the polynomial ring in the elementary functions.
Coefficients oracle_ideal_reduction(const StrictPartition& lambda, const StrictPartition& mu, RingTag tag);

// Returns, for each degree up to max_degree, whether the basis monomials
// q^k Pt_nu (OG) / q^k Qt_nu (LG) are independent modulo the ideal and span
// the degree piece. Used by the basis verification suite.
struct BasisDegreeCheck {
    int degree = 0;
    int monomials = 0;    // dimension of the degree piece of the polynomial ring
    int ideal_rank = 0;   // rank of the ideal in that degree
    int basis_count = 0;  // number of q^k nu of that degree
    bool independent = false;
    bool ok() const { return independent && ideal_rank + basis_count == monomials; }
};
std::vector<BasisDegreeCheck> verify_basis(RingTag tag, int max_degree);

struct MultTable {
    RingTag tag;
    Provenance provenance = Provenance::vi_formula;
    std::map<std::pair<StrictPartition, StrictPartition>, Coefficients> entries;

    friend bool operator==(const MultTable&, const MultTable&) = default;
};

MultTable full_table(RingTag tag, Provenance provenance, int jobs = 0);

// First (lambda, mu) whose entries differ, if any; provenance is ignored.
std::optional<std::pair<StrictPartition, StrictPartition>> first_difference(const MultTable& a, const MultTable& b);

inline constexpr int kTableSchemaVersion = 1;

std::string table_to_json(const MultTable& t);
MultTable table_from_json(const std::string& text);
std::string table_to_csv(const MultTable& t);
MultTable table_from_csv(const std::string& text, RingTag tag, Provenance provenance);
// FNV-1a of the canonical entry serialization.
std::string table_checksum(const MultTable& t);

// Directory holding serialized tables; QSCHUB_CACHE_DIR overrides the default.
class TableCache {
public:
    explicit TableCache(std::filesystem::path dir);
    static std::filesystem::path default_dir();

    std::filesystem::path path_for(RingTag tag, Provenance provenance) const;
    // Loads a stored table whose version keys and checksum match.
    std::optional<MultTable> load(RingTag tag, Provenance provenance) const;
    void store(const MultTable& t) const;

private:
    std::filesystem::path dir_;
};

}  // namespace qsch
