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

#include <stdexcept>
#include <string>

namespace specsep {

/// Iterative numerics (eigensolver, fixed point, quadrature) failed to
/// converge to the stated contract. CLI maps this to exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested model cannot be realized (e.g. no nonnegative two-block
/// spectrum with the given moments). CLI maps this to exit code 4.
struct InfeasibleModelError : std::runtime_error {
    explicit InfeasibleModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specsep
