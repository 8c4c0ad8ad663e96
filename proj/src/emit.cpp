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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "qgeom/error.hpp"
#include "qgeom/sweep.hpp"

namespace qgeom {

namespace {

std::string format_cell(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_short(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double parse_cell(std::string_view cell) {
    if (cell == "nan") {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (cell == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (cell == "-inf") {
        return -std::numeric_limits<double>::infinity();
    }
    const std::string s(cell);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    require(!s.empty() && end == s.c_str() + s.size(), ErrorKind::InvalidArgument,
            "malformed CSV cell '" + s + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

nlohmann::json json_number(double v) {
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

} // namespace

std::string to_csv(const Table &table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + table.columns[i];
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += format_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

Table parse_csv(std::string_view text) {
    Table table;
    bool header = true;
    for (const auto line : split(text, '\n')) {
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (header) {
            for (const auto cell : cells) {
                table.columns.emplace_back(cell);
            }
            header = false;
            continue;
        }
        require(cells.size() == table.columns.size(), ErrorKind::InvalidArgument,
                "CSV row width does not match the header");
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto cell : cells) {
            row.push_back(parse_cell(cell));
        }
        table.rows.push_back(std::move(row));
    }
    require(!header, ErrorKind::InvalidArgument, "CSV text has no header");
    return table;
}

std::string to_json(const Table &table) {
    nlohmann::json j;
    j["columns"] = table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : table.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const double v : row) {
            r.push_back(json_number(v));
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);

    nlohmann::json meta;
    meta["quantity"] = table.meta.quantity;
    meta["version"] = std::string(kVersion);
    nlohmann::json pinned = nlohmann::json::object();
    for (const auto &[name, value] : table.meta.pinned) {
        pinned[name] = json_number(value);
    }
    meta["pinned"] = std::move(pinned);
    nlohmann::json grids = nlohmann::json::array();
    for (const auto &g : table.meta.grids) {
        grids.push_back({{"name", g.name},
                         {"start", json_number(g.start)},
                         {"stop", json_number(g.stop)},
                         {"count", g.count}});
    }
    meta["grids"] = std::move(grids);
    meta["x_column"] = table.meta.x_column;
    meta["group_column"] = table.meta.group_column;
    j["meta"] = std::move(meta);
    return j.dump(2) + "\n";
}

std::string to_svg(const Table &table) {
    constexpr double width = 640.0;
    constexpr double height = 420.0;
    constexpr double left = 70.0;
    constexpr double right = 20.0;
    constexpr double top = 40.0;
    constexpr double bottom = 50.0;

    const std::string x_name =
        table.meta.x_column.empty() ? table.columns.front() : table.meta.x_column;
    const std::size_t xi = table.column_index(x_name);
    std::size_t yi = table.columns.size() - 1;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (table.columns[i] == x_name) {
            continue;
        }
        static constexpr std::array<std::string_view, 6> inputs = {
            "n", "J", "theta", "phi", "chi", "E"};
        if (std::find(inputs.begin(), inputs.end(), table.columns[i]) == inputs.end()) {
            yi = i;
            break;
        }
    }
    const bool grouped = !table.meta.group_column.empty();
    const std::size_t gi = grouped ? table.column_index(table.meta.group_column) : 0;

    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -x_lo;
    double y_lo = x_lo;
    double y_hi = -x_lo;
    for (const auto &row : table.rows) {
        if (std::isfinite(row[xi]) && std::isfinite(row[yi])) {
            x_lo = std::min(x_lo, row[xi]);
            x_hi = std::max(x_hi, row[xi]);
            y_lo = std::min(y_lo, row[yi]);
            y_hi = std::max(y_hi, row[yi]);
        }
    }
    if (!std::isfinite(x_lo)) {
        x_lo = 0.0;
        x_hi = 1.0;
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (x_hi == x_lo) {
        x_hi = x_lo + 1.0;
    }
    if (y_hi == y_lo) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    const auto px = [&](double x) {
        return left + (x - x_lo) / (x_hi - x_lo) * (width - left - right);
    };
    const auto py = [&](double y) {
        return height - bottom - (y - y_lo) / (y_hi - y_lo) * (height - top - bottom);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << table.meta.quantity
        << "</text>\n";
    svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\""
        << width - left - right << "\" height=\"" << height - top - bottom
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x_lo + (x_hi - x_lo) * k / 4.0;
        const double yv = y_lo + (y_hi - y_lo) * k / 4.0;
        svg << "<text x=\"" << format_short(px(xv)) << "\" y=\"" << height - bottom + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_short(xv) << "</text>\n";
        svg << "<text x=\"" << left - 6 << "\" y=\"" << format_short(py(yv) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_short(yv) << "</text>\n";
    }
    svg << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << x_name << "</text>\n";
    svg << "<text x=\"16\" y=\"" << (top + height - bottom) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 16 " << (top + height - bottom) / 2 << ")\">"
        << table.columns[yi] << "</text>\n";

    std::vector<double> groups;
    for (const auto &row : table.rows) {
        const double g = grouped ? row[gi] : 0.0;
        if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
            groups.push_back(g);
        }
    }
    for (std::size_t s = 0; s < groups.size(); ++s) {
        const auto colour = kPalette[s % kPalette.size()];
        std::vector<std::string> segments(1);
        for (const auto &row : table.rows) {
            if (grouped && row[gi] != groups[s]) {
                continue;
            }
            if (!std::isfinite(row[xi]) || !std::isfinite(row[yi])) {
                if (!segments.back().empty()) {
                    segments.emplace_back();
                }
                continue;
            }
            auto &seg = segments.back();
            seg += (seg.empty() ? "" : " ") + format_short(px(row[xi])) + "," +
                   format_short(py(row[yi]));
        }
        for (const auto &seg : segments) {
            if (!seg.empty()) {
                svg << "<polyline fill=\"none\" stroke=\"" << colour
                    << "\" stroke-width=\"1.5\" points=\"" << seg << "\"/>\n";
            }
        }
        if (grouped) {
            const double ly = top + 16.0 + 16.0 * static_cast<double>(s);
            svg << "<line x1=\"" << width - right - 90 << "\" y1=\"" << ly - 4
                << "\" x2=\"" << width - right - 70 << "\" y2=\"" << ly - 4
                << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
            svg << "<text x=\"" << width - right - 64 << "\" y=\"" << ly
                << "\" font-family=\"sans-serif\" font-size=\"11\">"
                << table.meta.group_column << "=" << format_short(groups[s])
                << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render(const Table &table, Format format) {
    switch (format) {
    case Format::Csv:
        return to_csv(table);
    case Format::Json:
        return to_json(table);
    case Format::Svg:
        return to_svg(table);
    }
    fail(ErrorKind::InvalidArgument, "unknown format");
}

void emit(const Table &table, Format format, const std::filesystem::path &path) {
    const std::string text = render(table, format);
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::Io, "cannot open " + path.string());
    out << text;
    out.flush();
    require(static_cast<bool>(out), ErrorKind::Io, "cannot write " + path.string());
}

} // namespace qgeom
