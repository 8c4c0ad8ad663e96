// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <numbers>

#include "qgeom/entanglement.hpp"
#include "qgeom/error.hpp"
#include "qgeom/sweep.hpp"

namespace qgeom {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kThetaPoints = 181;
constexpr int kChiPoints = 361;
constexpr int kEntPoints = 201;
constexpr double kEdgeInset = 1e-6;

struct FigureInfo {
    FigureId id;
    std::string_view name;
};

constexpr std::array<FigureInfo, 11> kFigures = {{
    {FigureId::Fig2b, "fig2b"},
    {FigureId::Fig3, "fig3"},
    {FigureId::Fig4a, "fig4a"},
    {FigureId::Fig4b, "fig4b"},
    {FigureId::Fig5, "fig5"},
    {FigureId::Fig6a, "fig6a"},
    {FigureId::Fig6b, "fig6b"},
    {FigureId::Fig6c, "fig6c"},
    {FigureId::Fig7a, "fig7a"},
    {FigureId::Fig7b, "fig7b"},
    {FigureId::Fig7c, "fig7c"},
}};

const std::vector<double> kChiFamily = {kPi / 6, kPi / 4, kPi / 3, kPi / 2};

std::vector<SweepConfig> spin_family(Quantity q, const std::vector<int> &spins,
                                     std::map<Param, double> extra) {
    std::vector<SweepConfig> out;
    for (const int n : spins) {
        SweepConfig c;
        c.quantity = q;
        c.axes = {Axis::range(Param::Theta, 0.0, kPi, kThetaPoints)};
        c.pinned = extra;
        c.pinned[Param::N] = n;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<SweepConfig> chi_family(Quantity q) {
    std::vector<SweepConfig> out;
    for (const double chi : kChiFamily) {
        SweepConfig c;
        c.quantity = q;
        c.axes = {Axis::range(Param::E, 0.0, entanglement_reach(chi) - kEdgeInset,
                              kEntPoints)};
        c.pinned = {{Param::Chi, chi}, {Param::Theta, kPi / 2}};
        if (q == Quantity::EntSpeed || q == Quantity::EntTime) {
            c.pinned[Param::J] = 1.0;
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

std::string_view to_string(FigureId id) {
    for (const auto &f : kFigures) {
        if (f.id == id) {
            return f.name;
        }
    }
    return "?";
}

std::optional<FigureId> parse_figure(std::string_view name) {
    for (const auto &f : kFigures) {
        if (f.name == name) {
            return f.id;
        }
    }
    return std::nullopt;
}

const std::vector<FigureId> &all_figures() {
    static const std::vector<FigureId> all = [] {
        std::vector<FigureId> v;
        for (const auto &f : kFigures) {
            v.push_back(f.id);
        }
        return v;
    }();
    return all;
}

std::vector<SweepConfig> figure_preset(FigureId id) {
    switch (id) {
    case FigureId::Fig2b:
        return spin_family(Quantity::Curvature, {2, 3, 4, 5, 6}, {});
    case FigureId::Fig3:
        return spin_family(Quantity::AaPhase, {2, 3, 4, 5}, {});
    case FigureId::Fig4a:
        return spin_family(Quantity::Speed, {2, 3, 4, 5, 6}, {{Param::J, 1.0}});
    case FigureId::Fig4b:
        return spin_family(Quantity::Distance, {2, 3, 4, 5, 6},
                           {{Param::J, 1.0}, {Param::Chi, 1.0}});
    case FigureId::Fig5: {
        std::vector<SweepConfig> out;
        for (const double theta : {kPi / 6, kPi / 4, kPi / 3, kPi / 2}) {
            SweepConfig c;
            c.quantity = Quantity::Entanglement;
            c.axes = {Axis::range(Param::Chi, 0.0, 2 * kPi, kChiPoints)};
            c.pinned = {{Param::Theta, theta}};
            out.push_back(std::move(c));
        }
        return out;
    }
    case FigureId::Fig6a:
        return chi_family(Quantity::EntCurvature);
    case FigureId::Fig6b:
        return chi_family(Quantity::EntPhase);
    case FigureId::Fig6c:
        return chi_family(Quantity::EntAaPhase);
    case FigureId::Fig7a:
        return chi_family(Quantity::EntSpeed);
    case FigureId::Fig7b:
        return chi_family(Quantity::EntDistance);
    case FigureId::Fig7c:
        return chi_family(Quantity::EntTime);
    }
    fail(ErrorKind::InvalidArgument, "unknown figure");
}

Table reproduce_figure(FigureId id, Exec exec) {
    const auto configs = figure_preset(id);
    Table out;
    std::string group;
    for (const auto &config : configs) {
        Table part = run_sweep(config, exec);
        if (out.columns.empty()) {
            out.columns = part.columns;
            out.meta = part.meta;
            out.meta.grids.clear();
            out.meta.pinned.clear();
            for (const auto &[param, value] : config.pinned) {
                bool shared = true;
                for (const auto &other : configs) {
                    const auto it = other.pinned.find(param);
                    shared = shared && it != other.pinned.end() && it->second == value;
                }
                if (shared) {
                    out.meta.pinned.emplace_back(std::string(to_string(param)), value);
                } else {
                    group = std::string(to_string(param));
                }
            }
        }
        out.rows.insert(out.rows.end(), part.rows.begin(), part.rows.end());
        out.meta.grids.insert(out.meta.grids.end(), part.meta.grids.begin(),
                              part.meta.grids.end());
    }
    out.meta.group_column = group;
    return out;
}

std::vector<std::filesystem::path> write_figure(FigureId id,
                                                const std::filesystem::path &dir) {
    const Table table = reproduce_figure(id);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    require(!ec, ErrorKind::Io, "cannot create " + dir.string());
    std::vector<std::filesystem::path> paths;
    const std::string stem(to_string(id));
    for (const auto &[format, ext] : {std::pair{Format::Csv, ".csv"},
                                      std::pair{Format::Json, ".json"},
                                      std::pair{Format::Svg, ".svg"}}) {
        const auto path = dir / (stem + ext);
        emit(table, format, path);
        paths.push_back(path);
    }
    return paths;
}

} // namespace qgeom
