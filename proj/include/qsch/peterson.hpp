#pragma once

#include "qsch/symfunc.hpp"

#include <string>
#include <vector>

namespace qsch {

enum class GroupKind { C, B, D };
std::string to_string(GroupKind k);

template <class R>
using Matrix = std::vector<std::vector<R>>;

struct PetersonMatrix {
    GroupKind kind = GroupKind::C;
    int n = 0;  // rank: size is 2n (C), 2n+1 (B), 2n+2 (D)
    Matrix<CycloNum> entries;

    int size() const { return static_cast<int>(entries.size()); }
    const CycloNum& at(int i, int j) const { return entries[i - 1][j - 1]; }  // 1-based
};

// Unipotent banded Toeplitz matrix with bands a_1, a_2, ... above the diagonal.
Matrix<CycloNum> toeplitz_unipotent(int size, const std::vector<CycloNum>& bands);

// Banded matrix with bands E_1..E_m of the coordinates: m = n (C, size 2n) or
// m = n + 1 (B, size 2n + 1, taking n + 1 coordinates).
PetersonMatrix build_u(GroupKind kind, const PointVec& coords);
// The block matrix of the even orthogonal case specialized at
// X_i = E_i (i < n), Y_n = E_n, X_n = 0, Y_{n+1..2n} = 0.
PetersonMatrix build_v(const PointVec& coords);

// Block matrix with live variables X_1..X_n (indices 0..n-1) and Y_n..Y_2n
// (indices n..2n), 2n + 1 variables in total.
Matrix<SparsePoly> symbolic_v(int n);
int symbolic_x(int n, int i);  // variable index of X_i
int symbolic_y(int n, int i);  // variable index of Y_i

// Bilinear form preserved by the group of the given kind and size.
Matrix<CycloNum> bilinear_form(GroupKind kind, int size);
bool preserves_form(const PetersonMatrix& u);

// Index sets are 1-based and strictly increasing.
struct MinorSpec {
    std::vector<int> rows, cols;
    std::string to_string() const;
    friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

MinorSpec upper_right(int r, int size);
// Rows and columns realizing the spin-weight minor of the even orthogonal case.
MinorSpec spin_minor(int n);
// Minors whose vanishing cuts the variety out of the stabilizer.
std::vector<MinorSpec> defining_minors(GroupKind kind, int n);

CycloNum minor(const PetersonMatrix& u, const MinorSpec& spec);
SparsePoly minor(const Matrix<SparsePoly>& m, const MinorSpec& spec);

// Coordinates define a point of the variety: E_i(x^2) = 0 for i = 1..n-1
// (C with n coordinates, D with n coordinates) or i = 1..n (B, n + 1 coordinates).
bool member(GroupKind kind, const PointVec& coords);
// Matrix-side test: the form is preserved and every defining minor vanishes.
bool member_by_minors(const PetersonMatrix& u);

// Image of the quantum parameter: Pt_{n,n} (C) or 2 E_{n+1} (B).
CycloNum quantum_value(GroupKind kind, const PointVec& coords);

// X_{i,i} = X_i^2 + 2 sum_k (-1)^k X_{i+k} X_{i-k} in any ring; x[0] is X_0 = 1.
SparsePoly band_relation(int i, const std::vector<SparsePoly>& x);

std::string matrix_to_json(const PetersonMatrix& u);

}  // namespace qsch
