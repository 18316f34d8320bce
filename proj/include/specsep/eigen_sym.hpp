/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================
*/
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace specsep {

// Eigenvalues-only dense symmetric solver: Householder reduction to
// tridiagonal form followed by implicit-shift QL. Backward error is a small
// multiple of machine epsilon times the spectral norm.

/// Reduce the symmetric matrix `a` (row-major n×n, lower triangle read) to
/// tridiagonal form. On return d holds the diagonal, e the subdiagonal with
/// e[0] = 0. The contents of `a` are destroyed.
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e);

/// Eigenvalues of the tridiagonal matrix (d, e) in place, unsorted.
/// e is indexed so that e[i] couples d[i] and d[i+1] on input... the
/// convention matches householder_tridiag output (e[0] = 0, subdiagonal in
/// e[1..n-1]). Throws NumericalError after 50 sweeps without deflation.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e);

/// Eigenvalues of a dense symmetric matrix (row-major n×n), ascending.
std::vector<double> sym_eigenvalues(std::vector<double> a, int n);

/// Eigenvalues of a dense Hermitian matrix, ascending. Solved through the
/// real symmetric 2n×2n embedding [[Re, -Im], [Im, Re]], whose spectrum is
/// that of the Hermitian matrix with every eigenvalue doubled.
std::vector<double> herm_eigenvalues(const std::vector<std::complex<double>>& a, int n);

}  // namespace specsep
