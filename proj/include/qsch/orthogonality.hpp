#pragma once

#include <string>
#include <vector>

namespace qsch {

// Outcome of one exact identity checked over a finite index range.
struct IdentityCheck {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::string first_failure{};  // empty when nothing failed

    bool ok() const { return checked > 0 && failed == 0; }
    void record(bool good, const std::string& where);
};

// Root-product and E/H exchange identities over I_n x I_n.
IdentityCheck check_root_product(int n);
IdentityCheck check_elementary_complete(int n);

// Cauchy-type kernel identity, checked as a polynomial identity in z on a
// product grid with n + 1 rational values per variable.
IdentityCheck check_kernel_polynomial(int n);
// Row orthogonality over R(n): P_lambda(zeta^{J*}) against Qt_lambda(zeta^I).
IdentityCheck check_row_hall_littlewood(int n);
// Same with conj(omega(P_lambda)(zeta^J)) in place of P_lambda(zeta^{J*}).
IdentityCheck check_row_omega(int n);
// Row orthogonality over D(n): Pt_lambda(zeta^I) Pt_{lambda-hat}(zeta^J).
IdentityCheck check_row_ptilde(int n);

// Column orthogonality over I_n for lambda, mu in D(n).
IdentityCheck check_column_ptilde(int n);
IdentityCheck check_column_hall_littlewood(int n);
IdentityCheck check_column_omega(int n);

std::vector<IdentityCheck> orthogonality_suite(int n);

}  // namespace qsch
