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

#include "qgeom/numeric.hpp"

#include <cmath>
#include <stdexcept>

#include "qgeom/error.hpp"

namespace qgeom {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument:
        return "invalid argument";
    case ErrorKind::OracleRange:
        return "outside oracle range";
    case ErrorKind::DimensionMismatch:
        return "dimension mismatch";
    case ErrorKind::SingularMetric:
        return "singular metric";
    case ErrorKind::PhaseUndefined:
        return "phase undefined";
    case ErrorKind::Unreachable:
        return "unreachable coordinate";
    case ErrorKind::BoundarySingular:
        return "boundary singular";
    case ErrorKind::CoordinateSingular:
        return "coordinate singular";
    case ErrorKind::NoInteriorMinimum:
        return "no interior minimum";
    case ErrorKind::Io:
        return "i/o error";
    }
    return "error";
}

} // namespace qgeom

namespace qgeom::numeric {

double central_difference(const ScalarFn &f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double richardson_difference(const ScalarFn &f, double x, double h) {
    const double coarse = central_difference(f, x, h);
    const double fine = central_difference(f, x, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

Extremum golden_section_min(const ScalarFn &f, double lo, double hi,
                            double tol) {
    require(hi > lo, ErrorKind::InvalidArgument, "empty search bracket");
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

Extremum golden_section_max(const ScalarFn &f, double lo, double hi,
                            double tol) {
    auto r = golden_section_min([&](double x) { return -f(x); }, lo, hi, tol);
    return {r.x, -r.value};
}

double wrap_to_pi(double angle) {
    double r = std::remainder(angle, two_pi); // [-pi, pi]
    if (r <= -pi) {
        r += two_pi;
    }
    return r;
}

double angular_distance(double a, double b) {
    return std::abs(wrap_to_pi(a - b));
}

std::vector<double> unwrap(std::span<const double> principal) {
    std::vector<double> out(principal.begin(), principal.end());
    double offset = 0.0;
    double last = std::nan("");
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (std::isnan(principal[i])) {
            continue;
        }
        if (!std::isnan(last)) {
            offset += two_pi * std::round((last - principal[i]) / two_pi);
        }
        last = principal[i];
        out[i] = principal[i] + offset;
    }
    return out;
}

double trapezoid(const ScalarFn &f, double a, double b, int steps) {
    require(steps >= 1, ErrorKind::InvalidArgument, "trapezoid needs steps >= 1");
    const double h = (b - a) / steps;
    double sum = 0.5 * (f(a) + f(b));
    for (int k = 1; k < steps; ++k) {
        sum += f(a + k * h);
    }
    return sum * h;
}

std::vector<double> linspace(double start, double stop, int count) {
    require(count >= 2, ErrorKind::InvalidArgument, "grid count must be >= 2");
    std::vector<double> v(static_cast<std::size_t>(count));
    const double h = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) {
        v[static_cast<std::size_t>(i)] = start + i * h;
    }
    v.back() = stop;
    return v;
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
           std::lgamma(n - k + 1.0);
}

} // namespace qgeom::numeric
