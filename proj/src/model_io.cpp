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
#include "specsep/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace specsep {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<double> as_doubles(const nlohmann::json& node, const std::string& what) {
    if (!node.is_array()) throw std::invalid_argument(what + " must be an array");
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto& v : node) {
        if (!v.is_number()) throw std::invalid_argument(what + " entries must be numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ModelSpec parse_model(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("model JSON parse error: ") + e.what());
    }
    if (!doc.contains("A") || !doc.contains("B"))
        throw std::invalid_argument("model JSON must have \"A\" and \"B\" objects");
    const auto& a = doc["A"];
    if (!a.contains("atoms") || !a.contains("weights"))
        throw std::invalid_argument("model \"A\" must have \"atoms\" and \"weights\"");
    AtomicMixture mix(as_doubles(a["atoms"], "A.atoms"), as_doubles(a["weights"], "A.weights"));

    const auto& b = doc["B"];
    if (b.contains("moments")) {
        const std::vector<double> m = as_doubles(b["moments"], "B.moments");
        if (m.size() != 2)
            throw std::invalid_argument("B.moments must be [b_bar, b_bar2]");
        return {std::move(mix), BFactorSpec::from_moments(m[0], m[1])};
    }
    if (b.contains("eigenvalues"))
        return {std::move(mix),
                BFactorSpec::from_eigenvalues(as_doubles(b["eigenvalues"], "B.eigenvalues"))};
    throw std::invalid_argument("model \"B\" must have \"moments\" or \"eigenvalues\"");
}

ModelSpec load_model(const std::filesystem::path& path) {
    return parse_model(read_file(path));
}

std::vector<double> load_eigenvalue_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path.string());
    std::vector<double> values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        const std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(line.substr(start), &used);
            values.push_back(v);
        } catch (const std::exception&) {
            if (first) {
                first = false;  // tolerate one header line
                continue;
            }
            throw std::invalid_argument("malformed eigenvalue file: " + path.string() +
                                        " at line \"" + line + "\"");
        }
        first = false;
    }
    if (values.empty())
        throw std::invalid_argument("eigenvalue file has no values: " + path.string());
    return values;
}

void write_curve_csv(const std::filesystem::path& path, const LsdCurve& curve,
                     const std::vector<double>* oracle_density) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path.string());
    out << "x,re_beta,im_beta,omega,density";
    if (oracle_density) out << ",oracle_density";
    out << "\n";
    for (std::size_t k = 0; k < curve.grid.size(); ++k) {
        out << format_double(curve.grid[k]) << ',' << format_double(curve.beta[k].real()) << ','
            << format_double(curve.beta[k].imag()) << ',' << format_double(curve.omega[k]) << ','
            << format_double(curve.density[k]);
        if (oracle_density) out << ',' << format_double((*oracle_density)[k]);
        out << "\n";
    }
}

void write_support_json(const std::filesystem::path& path, const LsdCurve& curve) {
    nlohmann::ordered_json doc;
    doc["atom_at_zero"] = curve.atom_at_zero;
    doc["b_bar2"] = curve.b_bar2;
    doc["support"] = nlohmann::json::array();
    for (const Interval& iv : curve.support) doc["support"].push_back({iv.lo, iv.hi});
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path.string());
    out << doc.dump(2) << "\n";
}

LsdCurve read_curve_csv(const std::filesystem::path& csv_path,
                        const std::filesystem::path& support_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::invalid_argument("cannot open file: " + csv_path.string());
    LsdCurve curve;
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty curve file: " + csv_path.string());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> cells;
        while (std::getline(row, cell, ',')) cells.push_back(std::stod(cell));
        if (cells.size() < 5)
            throw std::invalid_argument("curve row needs 5 columns: " + line);
        curve.grid.push_back(cells[0]);
        curve.beta.emplace_back(cells[1], cells[2]);
        curve.omega.push_back(cells[3]);
        curve.density.push_back(cells[4]);
    }

    nlohmann::json side = nlohmann::json::parse(read_file(support_path));
    curve.atom_at_zero = side.at("atom_at_zero").get<double>();
    curve.b_bar2 = side.at("b_bar2").get<double>();
    for (const auto& iv : side.at("support"))
        curve.support.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});

    curve.cumulative.assign(curve.grid.size(), 0.0);
    for (std::size_t k = 1; k < curve.grid.size(); ++k)
        curve.cumulative[k] = curve.cumulative[k - 1] +
                              0.5 * (curve.density[k] + curve.density[k - 1]) *
                                  (curve.grid[k] - curve.grid[k - 1]);
    return curve;
}

std::filesystem::path support_sidecar_path(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p.replace_extension(".support.json");
    return p;
}

}  // namespace specsep
