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

#pragma once

/**
 * @file
 * Parameter sweeps, figure presets and table emission (CSV, JSON, SVG).
 *
 * A sweep never contains formula logic of its own: every quantity maps onto
 * one library operation. Point-wise singularities (orthogonal overlap,
 * unreachable entanglement coordinates) become NaN cells; configuration
 * errors throw before anything is evaluated.
 */

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgeom/statevector.hpp"

namespace qgeom {

enum class Quantity {
    Metric,
    Curvature,
    TotalPhase,
    GeometricPhase,
    AaPhase,
    TopologicalPhase,
    Speed,
    Distance,
    Brachistochrone,
    Entanglement,
    EntCurvature,
    EntPhase,
    EntAaPhase,
    EntSpeed,
    EntDistance,
    EntTime,
};

enum class Param { N, J, Theta, Phi, Chi, E };

std::string_view to_string(Quantity q);
std::string_view to_string(Param p);
std::optional<Quantity> parse_quantity(std::string_view name);
std::optional<Param> parse_param(std::string_view name);
const std::vector<Quantity> &all_quantities();

/// Parameters a quantity reads, in column order.
std::vector<Param> quantity_inputs(Quantity q);
std::vector<std::string> quantity_outputs(Quantity q);

/// Values for every Param, indexed by the enum.
struct Point {
    double n = 2.0;
    double J = 1.0;
    double theta = 1.5707963267948966;
    double phi = 0.0;
    double chi = 1.5707963267948966;
    double e = 0.25;

    [[nodiscard]] double get(Param p) const;
    void set(Param p, double v);
};

/// Evaluates one grid point; throws qgeom::Error on point-wise failures.
std::vector<double> evaluate(Quantity q, const Point &pt);

struct Axis {
    Param param;
    std::vector<double> values;

    /// count >= 2 evenly spaced points, endpoints included.
    static Axis range(Param param, double start, double stop, int count);
    static Axis list(Param param, std::vector<double> values);
};

struct SweepConfig {
    Quantity quantity = Quantity::Curvature;
    std::vector<Axis> axes; ///< one or two swept parameters
    std::map<Param, double> pinned;
};

struct GridSpec {
    std::string name;
    double start;
    double stop;
    int count;
};

struct TableMeta {
    std::string quantity;
    std::vector<std::pair<std::string, double>> pinned;
    std::vector<GridSpec> grids;
    std::string x_column;     ///< plotted abscissa
    std::string group_column; ///< series key for plots, may be empty
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    TableMeta meta;

    [[nodiscard]] std::size_t column_index(std::string_view name) const;
    [[nodiscard]] std::vector<double> column(std::string_view name) const;
};

/// Throws InvalidArgument on malformed configs.
void validate(const SweepConfig &config);

/// Row-major over the axes (first axis outermost); deterministic.
Table run_sweep(const SweepConfig &config, Exec exec = Exec::Parallel);

enum class FigureId {
    Fig2b,
    Fig3,
    Fig4a,
    Fig4b,
    Fig5,
    Fig6a,
    Fig6b,
    Fig6c,
    Fig7a,
    Fig7b,
    Fig7c,
};

std::string_view to_string(FigureId id);
std::optional<FigureId> parse_figure(std::string_view name);
const std::vector<FigureId> &all_figures();

/// One config per plotted curve family member.
std::vector<SweepConfig> figure_preset(FigureId id);
Table reproduce_figure(FigureId id, Exec exec = Exec::Parallel);
/// Writes <id>.csv, <id>.json and <id>.svg into `dir`; returns the paths.
std::vector<std::filesystem::path>
write_figure(FigureId id, const std::filesystem::path &dir);

enum class Format { Csv, Json, Svg };
std::optional<Format> parse_format(std::string_view name);

/// Header row then one line per row; cells are %.17g ("nan"/"inf"
/// for non-finite values) with UNIX newlines.
std::string to_csv(const Table &table);
Table parse_csv(std::string_view text);
std::string to_json(const Table &table);
std::string to_svg(const Table &table);
std::string render(const Table &table, Format format);
/// Throws ErrorKind::Io if the file cannot be written.
void emit(const Table &table, Format format, const std::filesystem::path &path);

inline constexpr std::string_view kVersion = QGEOM_VERSION;

} // namespace qgeom
