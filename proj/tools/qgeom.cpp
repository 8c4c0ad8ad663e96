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

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgeom/error.hpp"
#include "qgeom/sweep.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

double parse_factor(const std::string &token) {
    if (token == "pi") {
        return std::numbers::pi;
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    qgeom::require(!token.empty() && used == token.size(),
                   qgeom::ErrorKind::InvalidArgument, "cannot read number '" + token + "'");
    return v;
}

/// Accepts plain numbers and products/quotients with pi, e.g. "-3*pi/4".
double parse_number(std::string text) {
    double sign = 1.0;
    if (!text.empty() && text.front() == '-') {
        sign = -1.0;
        text.erase(0, 1);
    }
    double value = 1.0;
    char op = '*';
    std::string token;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const bool end = i == text.size();
        if (end || ((text[i] == '*' || text[i] == '/') && !token.empty() &&
                    token.back() != 'e' && token.back() != 'E')) {
            const double f = parse_factor(token);
            value = op == '*' ? value * f : value / f;
            if (!end) {
                op = text[i];
            }
            token.clear();
        } else {
            token += text[i];
        }
    }
    return sign * value;
}

struct ValueSpec {
    std::optional<double> single;
    std::optional<qgeom::Axis> axis;
};

ValueSpec parse_spec(qgeom::Param param, const std::string &text, int grid) {
    ValueSpec spec;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        qgeom::require(grid >= 2, qgeom::ErrorKind::InvalidArgument,
                       "--grid must be at least 2");
        spec.axis = qgeom::Axis::range(param, parse_number(text.substr(0, colon)),
                                       parse_number(text.substr(colon + 1)), grid);
        return spec;
    }
    if (text.find(',') != std::string::npos) {
        std::vector<double> values;
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            values.push_back(parse_number(text.substr(start, comma - start)));
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
        spec.axis = qgeom::Axis::list(param, std::move(values));
        return spec;
    }
    spec.single = parse_number(text);
    return spec;
}

struct SweepArgs {
    qgeom::Quantity quantity{};
    std::map<qgeom::Param, std::string> values;
    int grid = 101;
    std::string format = "csv";
    std::string out;
    bool serial = false;
};

int run_quantity(const SweepArgs &args) {
    qgeom::SweepConfig config;
    config.quantity = args.quantity;
    for (const auto &[param, text] : args.values) {
        if (text.empty()) {
            continue;
        }
        const ValueSpec spec = parse_spec(param, text, args.grid);
        if (spec.axis) {
            config.axes.push_back(*spec.axis);
        } else {
            config.pinned[param] = *spec.single;
        }
    }
    const auto format = qgeom::parse_format(args.format);
    qgeom::require(format.has_value(), qgeom::ErrorKind::InvalidArgument,
                   "unknown format '" + args.format + "'");
    const qgeom::Table table = qgeom::run_sweep(
        config, args.serial ? qgeom::Exec::Serial : qgeom::Exec::Parallel);
    if (args.out.empty() || args.out == "-") {
        std::cout << qgeom::render(table, *format);
        std::cout.flush();
        qgeom::require(static_cast<bool>(std::cout), qgeom::ErrorKind::Io,
                       "cannot write to stdout");
    } else {
        qgeom::emit(table, *format, args.out);
    }
    return 0;
}

int run_figure(const std::string &name, const std::string &dir) {
    std::vector<qgeom::FigureId> ids;
    if (name == "all") {
        ids = qgeom::all_figures();
    } else {
        const auto id = qgeom::parse_figure(name);
        qgeom::require(id.has_value(), qgeom::ErrorKind::InvalidArgument,
                       "unknown figure '" + name + "'");
        ids.push_back(*id);
    }
    for (const auto id : ids) {
        for (const auto &path : qgeom::write_figure(id, dir)) {
            std::cout << path.string() << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Geometry, phases and entanglement of one-axis twisted spin ensembles"};
    app.set_version_flag("--version", std::string(qgeom::kVersion));
    app.require_subcommand(1);

    SweepArgs args;
    std::map<qgeom::Param, std::string> texts;
    std::vector<std::pair<CLI::App *, qgeom::Quantity>> subs;
    for (const auto q : qgeom::all_quantities()) {
        auto *sub = app.add_subcommand(std::string(qgeom::to_string(q)),
                                       "Sweep " + std::string(qgeom::to_string(q)));
        for (const auto p : {qgeom::Param::N, qgeom::Param::J, qgeom::Param::Theta,
                             qgeom::Param::Phi, qgeom::Param::Chi, qgeom::Param::E}) {
            sub->add_option("--" + std::string(qgeom::to_string(p)), texts[p],
                            "value, list a,b,c or range a:b (pi expressions allowed)");
        }
        sub->add_option("--grid", args.grid, "points per range")->capture_default_str();
        sub->add_option("--format", args.format, "csv, json or svg")
            ->capture_default_str();
        sub->add_option("--out", args.out, "output file (stdout if omitted)");
        sub->add_flag("--serial", args.serial, "evaluate without threads");
        subs.emplace_back(sub, q);
    }

    std::string figure_name;
    std::string out_dir = ".";
    auto *figure = app.add_subcommand("figure", "Regenerate a figure's data and plot");
    figure->add_option("id", figure_name, "fig2b ... fig7c or all")->required();
    figure->add_option("--out-dir", out_dir, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (figure->parsed()) {
            return run_figure(figure_name, out_dir);
        }
        for (const auto &[sub, q] : subs) {
            if (sub->parsed()) {
                args.quantity = q;
                args.values = texts;
                return run_quantity(args);
            }
        }
    } catch (const qgeom::Error &e) {
        std::cerr << "qgeom: " << e.what() << '\n';
        return e.kind() == qgeom::ErrorKind::Io ? kExitIo : kExitUsage;
    }
    return kExitUsage;
}
