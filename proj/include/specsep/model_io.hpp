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

#include <filesystem>
#include <string>
#include <vector>

#include "specsep/lsd.hpp"
#include "specsep/mixture.hpp"

namespace specsep {

/// Parsed model file: the spatial mixture and the temporal factor spec.
struct ModelSpec {
    AtomicMixture a;
    BFactorSpec b;
};

/// Model JSON schema (field names are fixed):
///   {"A": {"atoms": [...], "weights": [...]},
///    "B": {"moments": [b̄, b̄₂]}}        or  {"B": {"eigenvalues": [...]}}
ModelSpec load_model(const std::filesystem::path& path);
ModelSpec parse_model(const std::string& text);

/// Eigenvalue list: one value per line, optional header line, '#' comments.
std::vector<double> load_eigenvalue_csv(const std::filesystem::path& path);

/// Curve CSV with header x,re_beta,im_beta,omega,density (plus
/// oracle_density when given), 17 significant digits.
void write_curve_csv(const std::filesystem::path& path, const LsdCurve& curve,
                     const std::vector<double>* oracle_density = nullptr);

/// Support intervals and the atom mass as a JSON sidecar.
void write_support_json(const std::filesystem::path& path, const LsdCurve& curve);

/// Rebuild a curve from the CSV + sidecar pair (round-trips cdf exactly).
LsdCurve read_curve_csv(const std::filesystem::path& csv_path,
                        const std::filesystem::path& support_path);

/// Sidecar path for a curve CSV: extension replaced by ".support.json".
std::filesystem::path support_sidecar_path(const std::filesystem::path& csv_path);

/// "%.17g" rendering used by every CSV writer.
std::string format_double(double v);

}  // namespace specsep
