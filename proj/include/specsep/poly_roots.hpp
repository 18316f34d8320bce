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
#include <vector>

namespace specsep {

/// All complex roots of Σ coeffs[k]·z^k. Coefficients are ascending in
/// degree; negligible leading coefficients are stripped; roots at the origin
/// are deflated exactly. Degree 1 and 2 use closed forms, higher degrees the
/// Aberth-Ehrlich simultaneous iteration with a Newton finish.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> coeffs);

/// Horner evaluation of the polynomial and its derivative.
void poly_eval(const std::vector<std::complex<double>>& coeffs, std::complex<double> z,
               std::complex<double>& value, std::complex<double>& deriv);

}  // namespace specsep
