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

#include "qgeom/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "qgeom/entanglement.hpp"
#include "qgeom/error.hpp"
#include "qgeom/geometry.hpp"
#include "qgeom/motion.hpp"
#include "qgeom/numeric.hpp"
#include "qgeom/phases.hpp"

namespace qgeom {

namespace {

struct QuantityInfo {
    Quantity q;
    std::string_view name;
    std::vector<Param> inputs;
    std::vector<std::string> outputs;
    int min_spins;
    bool chi_nonnegative;
};

const std::vector<QuantityInfo> &quantity_table() {
    using P = Param;
    static const std::vector<QuantityInfo> table = {
        {Quantity::Metric, "metric", {P::N, P::Theta}, {"g_tt", "g_pp", "g_cc", "g_pc"}, 1, false},
        {Quantity::Curvature, "curvature", {P::N, P::Theta}, {"R", "metric_degenerate"}, 2, false},
        {Quantity::TotalPhase, "total-phase", {P::N, P::Theta, P::Chi}, {"total"}, 1, false},
        {Quantity::GeometricPhase, "geometric-phase", {P::N, P::Theta, P::Chi}, {"geometric", "dynamical", "total"}, 1, false},
        {Quantity::AaPhase, "aa-phase", {P::N, P::Theta}, {"aa", "topological"}, 1, false},
        {Quantity::TopologicalPhase, "topological-phase", {P::N}, {"topological"}, 1, false},
        {Quantity::Speed, "speed", {P::N, P::J, P::Theta}, {"V"}, 1, false},
        {Quantity::Distance, "distance", {P::N, P::Theta, P::Chi}, {"S"}, 1, true},
        {Quantity::Brachistochrone, "brachistochrone", {P::N, P::J, P::Chi}, {"t_min", "chi_min", "S_min", "V_max"}, 2, true},
        {Quantity::Entanglement, "entanglement", {P::Theta, P::Chi}, {"E"}, 1, false},
        {Quantity::EntCurvature, "ent-curvature", {P::Chi, P::E}, {"R"}, 1, false},
        {Quantity::EntPhase, "ent-phase", {P::Chi, P::E}, {"geometric"}, 1, false},
        {Quantity::EntAaPhase, "ent-aa-phase", {P::Chi, P::E}, {"aa"}, 1, false},
        {Quantity::EntSpeed, "ent-speed", {P::J, P::Chi, P::E}, {"V"}, 1, false},
        {Quantity::EntDistance, "ent-distance", {P::Chi, P::E}, {"S"}, 1, true},
        {Quantity::EntTime, "ent-time", {P::J, P::Chi, P::E}, {"tau"}, 1, true},
    };
    return table;
}

const QuantityInfo &info(Quantity q) {
    for (const auto &row : quantity_table()) {
        if (row.q == q) {
            return row;
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown quantity");
}

constexpr std::array<Param, 6> kParams = {Param::N,   Param::J,   Param::Theta,
                                          Param::Phi, Param::Chi, Param::E};

int spins_of(double n) {
    require(std::isfinite(n) && n >= 1.0 && n == std::round(n),
            ErrorKind::InvalidArgument, "n must be a positive integer");
    return static_cast<int>(n);
}

bool pointwise(ErrorKind kind) {
    return kind != ErrorKind::InvalidArgument && kind != ErrorKind::OracleRange &&
           kind != ErrorKind::Io;
}

void check_value(const QuantityInfo &qi, Param p, double v) {
    const std::string name(to_string(p));
    require(std::isfinite(v), ErrorKind::InvalidArgument, name + " must be finite");
    switch (p) {
    case Param::N:
        require(spins_of(v) >= qi.min_spins, ErrorKind::InvalidArgument,
                std::string(qi.name) + " needs n >= " + std::to_string(qi.min_spins));
        break;
    case Param::Theta:
        require(v >= 0.0 && v <= std::numbers::pi, ErrorKind::InvalidArgument,
                "theta must lie in [0, pi]");
        break;
    case Param::E:
        require(v >= 0.0 && v <= 0.5, ErrorKind::InvalidArgument,
                "E must lie in [0, 1/2]");
        break;
    case Param::Chi:
        require(!qi.chi_nonnegative || v >= 0.0, ErrorKind::InvalidArgument,
                std::string(qi.name) + " needs chi >= 0");
        break;
    case Param::J:
    case Param::Phi:
        break;
    }
}

} // namespace

std::string_view to_string(Quantity q) { return info(q).name; }

std::string_view to_string(Param p) {
    switch (p) {
    case Param::N:
        return "n";
    case Param::J:
        return "J";
    case Param::Theta:
        return "theta";
    case Param::Phi:
        return "phi";
    case Param::Chi:
        return "chi";
    case Param::E:
        return "E";
    }
    return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
    for (const auto &row : quantity_table()) {
        if (row.name == name) {
            return row.q;
        }
    }
    return std::nullopt;
}

std::optional<Param> parse_param(std::string_view name) {
    for (const Param p : kParams) {
        if (to_string(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

const std::vector<Quantity> &all_quantities() {
    static const std::vector<Quantity> all = [] {
        std::vector<Quantity> v;
        for (const auto &row : quantity_table()) {
            v.push_back(row.q);
        }
        return v;
    }();
    return all;
}

std::vector<Param> quantity_inputs(Quantity q) { return info(q).inputs; }
std::vector<std::string> quantity_outputs(Quantity q) { return info(q).outputs; }

double Point::get(Param p) const {
    switch (p) {
    case Param::N:
        return n;
    case Param::J:
        return J;
    case Param::Theta:
        return theta;
    case Param::Phi:
        return phi;
    case Param::Chi:
        return chi;
    case Param::E:
        return e;
    }
    return 0.0;
}

void Point::set(Param p, double v) {
    switch (p) {
    case Param::N:
        n = v;
        break;
    case Param::J:
        J = v;
        break;
    case Param::Theta:
        theta = v;
        break;
    case Param::Phi:
        phi = v;
        break;
    case Param::Chi:
        chi = v;
        break;
    case Param::E:
        e = v;
        break;
    }
}

std::vector<double> evaluate(Quantity q, const Point &pt) {
    const EntCoord coord{pt.e, pt.chi};
    switch (q) {
    case Quantity::Metric: {
        const auto m = metric_full(spins_of(pt.n), pt.theta);
        return {m.g_tt, m.g_pp, m.g_cc, m.g_pc};
    }
    case Quantity::Curvature: {
        const auto r = curvature_closed(spins_of(pt.n), pt.theta);
        return {r.value, r.metric_degenerate ? 1.0 : 0.0};
    }
    case Quantity::TotalPhase:
        return {total_phase_closed(spins_of(pt.n), pt.theta, pt.chi)};
    case Quantity::GeometricPhase: {
        const auto ps = phase_set(spins_of(pt.n), pt.theta, pt.chi);
        return {ps.geometric, ps.dynamical, ps.total};
    }
    case Quantity::AaPhase: {
        const auto cp = cyclic_phase(spins_of(pt.n), pt.theta);
        return {cp.aa, cp.topological};
    }
    case Quantity::TopologicalPhase:
        return {topological_phase(spins_of(pt.n))};
    case Quantity::Speed:
        return {speed(spins_of(pt.n), pt.theta, pt.J)};
    case Quantity::Distance:
        return {fs_distance(spins_of(pt.n), pt.theta, pt.chi)};
    case Quantity::Brachistochrone: {
        require(pt.J > 0.0, ErrorKind::InvalidArgument, "brachistochrone needs J > 0");
        const int n = spins_of(pt.n);
        const double t_min = brachistochrone_time(n, pt.chi / pt.J);
        return {t_min, pt.J * t_min, fs_distance_min(n, pt.chi), speed_max(n, pt.J)};
    }
    case Quantity::Entanglement:
        return {entanglement(pt.theta, pt.chi)};
    case Quantity::EntCurvature:
        return {curvature_ent(coord)};
    case Quantity::EntPhase:
        return {geometric_phase_ent(coord)};
    case Quantity::EntAaPhase:
        return {aa_phase_ent(coord)};
    case Quantity::EntSpeed:
        return {speed_ent(coord, pt.J)};
    case Quantity::EntDistance:
        return {distance_ent(coord)};
    case Quantity::EntTime:
        return {optimal_time_ent(coord, pt.J)};
    }
    fail(ErrorKind::InvalidArgument, "unknown quantity");
}

Axis Axis::range(Param param, double start, double stop, int count) {
    return {param, numeric::linspace(start, stop, count)};
}

Axis Axis::list(Param param, std::vector<double> values) {
    return {param, std::move(values)};
}

std::size_t Table::column_index(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    require(it != columns.end(), ErrorKind::InvalidArgument,
            "no column named " + std::string(name));
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> Table::column(std::string_view name) const {
    const std::size_t k = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        out.push_back(row[k]);
    }
    return out;
}

void validate(const SweepConfig &config) {
    const QuantityInfo &qi = info(config.quantity);
    require(!config.axes.empty() && config.axes.size() <= 2,
            ErrorKind::InvalidArgument, "a sweep needs one or two swept parameters");
    if (config.axes.size() == 2) {
        require(config.axes[0].param != config.axes[1].param,
                ErrorKind::InvalidArgument, "the same parameter is swept twice");
    }
    for (const Axis &axis : config.axes) {
        const std::string name(to_string(axis.param));
        require(std::find(qi.inputs.begin(), qi.inputs.end(), axis.param) !=
                    qi.inputs.end(),
                ErrorKind::InvalidArgument,
                std::string(qi.name) + " does not depend on " + name);
        require(config.pinned.count(axis.param) == 0, ErrorKind::InvalidArgument,
                name + " is both swept and pinned");
        require(axis.values.size() >= 2, ErrorKind::InvalidArgument,
                "grid for " + name + " needs at least 2 points");
        for (const double v : axis.values) {
            check_value(qi, axis.param, v);
        }
    }
    for (const auto &[param, value] : config.pinned) {
        check_value(qi, param, value);
    }
    Point defaults;
    for (const Param p : qi.inputs) {
        if (config.pinned.count(p) == 0) {
            check_value(qi, p, defaults.get(p));
        }
    }
}

Table run_sweep(const SweepConfig &config, Exec exec) {
    validate(config);
    const QuantityInfo &qi = info(config.quantity);

    std::vector<Param> params;
    for (const Param p : kParams) {
        const bool swept = std::any_of(config.axes.begin(), config.axes.end(),
                                       [p](const Axis &a) { return a.param == p; });
        const bool used = std::find(qi.inputs.begin(), qi.inputs.end(), p) !=
                          qi.inputs.end();
        if (swept || used || config.pinned.count(p) != 0) {
            params.push_back(p);
        }
    }

    Point base;
    for (const auto &[param, value] : config.pinned) {
        base.set(param, value);
    }

    std::vector<Axis> axes = config.axes;
    std::stable_sort(axes.begin(), axes.end(), [](const Axis &a, const Axis &b) {
        return static_cast<int>(a.param) < static_cast<int>(b.param);
    });
    const std::size_t inner = axes.size() == 2 ? axes[1].values.size() : 1;
    const std::size_t total = axes[0].values.size() * inner;

    Table table;
    for (const Param p : params) {
        table.columns.emplace_back(to_string(p));
    }
    for (const auto &out : qi.outputs) {
        table.columns.push_back(out);
    }
    table.rows.assign(total, {});

    auto fill_row = [&](std::size_t idx) {
        Point pt = base;
        pt.set(axes[0].param, axes[0].values[idx / inner]);
        if (axes.size() == 2) {
            pt.set(axes[1].param, axes[1].values[idx % inner]);
        }
        std::vector<double> row;
        row.reserve(table.columns.size());
        for (const Param p : params) {
            row.push_back(pt.get(p));
        }
        std::vector<double> values;
        try {
            values = evaluate(config.quantity, pt);
        } catch (const Error &e) {
            if (!pointwise(e.kind())) {
                throw;
            }
            values.assign(qi.outputs.size(), std::numeric_limits<double>::quiet_NaN());
        }
        row.insert(row.end(), values.begin(), values.end());
        table.rows[idx] = std::move(row);
    };

    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < total; ++i) {
            fill_row(i);
        }
    } else {
        const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) {
            fill_row(static_cast<std::size_t>(i));
        }
    }

    table.meta.quantity = std::string(qi.name);
    for (const auto &[param, value] : config.pinned) {
        table.meta.pinned.emplace_back(std::string(to_string(param)), value);
    }
    for (const Axis &axis : axes) {
        table.meta.grids.push_back({std::string(to_string(axis.param)),
                                    axis.values.front(), axis.values.back(),
                                    static_cast<int>(axis.values.size())});
    }
    table.meta.x_column = std::string(to_string(axes.back().param));
    if (axes.size() == 2) {
        table.meta.group_column = std::string(to_string(axes.front().param));
    }
    return table;
}

std::optional<Format> parse_format(std::string_view name) {
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "svg") {
        return Format::Svg;
    }
    return std::nullopt;
}

} // namespace qgeom
