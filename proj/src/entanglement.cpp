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

#include "qgeom/entanglement.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qgeom/error.hpp"
#include "qgeom/numeric.hpp"

namespace qgeom {

namespace {

constexpr double kSinFloor = 1e-10;
constexpr double kSearchInset = 1e-9;
constexpr double kSearchTol = 1e-8;
constexpr int kScanPoints = 1000;

double abs_sin(double chi) { return std::abs(std::sin(chi)); }

/// sqrt(E(1-E)), the quantity every closed form is written in.
double root_ee(double e) { return std::sqrt(e * (1.0 - e)); }

/// (1 - sqrt(1 - a)) / 2 without cancellation for small a.
double half_one_minus_sqrt(double a) { return 0.5 * a / (1.0 + std::sqrt(1.0 - a)); }

void require_finite(const EntCoord &c) {
    require(std::isfinite(c.e) && std::isfinite(c.chi),
            ErrorKind::InvalidArgument, "non-finite entanglement coordinate");
}

void require_reachable(const EntCoord &c) {
    require_finite(c);
    if (!reachable(c)) {
        fail(ErrorKind::Unreachable,
             "(E=" + std::to_string(c.e) + ", chi=" + std::to_string(c.chi) +
                 ") is not the image of any (theta, chi)");
    }
}

void require_sin(double chi) {
    require(abs_sin(chi) > kSinFloor, ErrorKind::CoordinateSingular,
            "sin(chi) = 0 is a coordinate singularity of the (E, chi) chart");
}

void require_e_range(double e) {
    require(e >= 0.0 && e <= 0.5, ErrorKind::InvalidArgument,
            "entanglement must lie in [0, 1/2]");
}

} // namespace

bool reachable(const EntCoord &c) {
    if (!(c.e >= 0.0 && c.e <= 0.5)) {
        return false;
    }
    return 2.0 * root_ee(c.e) <= abs_sin(c.chi) + kReachSlack;
}

EntCoord make_ent_coord(double e, double chi) {
    EntCoord c{e, chi};
    require_reachable(c);
    return c;
}

double entanglement_reach(double chi) {
    return 0.5 * (1.0 - std::abs(std::cos(chi)));
}

StateVector two_spin_state(double theta, double phi, double chi) {
    validate(EnsembleParams{2, 1.0, theta, phi});
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex mixed = std::polar(s * c, phi);
    return {2,
            {std::polar(c * c, -chi), mixed, mixed,
             std::polar(s * s, 2.0 * phi - chi)}};
}

double entanglement(double theta, double chi) {
    const double s2 = std::sin(theta) * std::sin(theta);
    const double sc = std::sin(chi);
    return half_one_minus_sqrt(s2 * s2 * sc * sc);
}

double entanglement_max(double theta) {
    const double s2 = std::sin(theta) * std::sin(theta);
    return half_one_minus_sqrt(s2 * s2);
}

ReducedEnt reduced_entanglement(const EntCoord &c) {
    require_reachable(c);
    require_sin(c.chi);
    return {std::min(1.0, 2.0 * root_ee(c.e) / abs_sin(c.chi))};
}

EntMetric metric_ent(const EntCoord &c) {
    require_reachable(c);
    require_sin(c.chi);
    require(c.e > 0.0, ErrorKind::CoordinateSingular,
            "E = 0 is a coordinate singularity of the (E, chi) chart");
    const double x = root_ee(c.e);
    const double s = abs_sin(c.chi);
    const double gap = s - 2.0 * x;
    require(gap > kReachSlack, ErrorKind::BoundarySingular,
            "2 sqrt(E(1-E)) = |sin chi| is singular in (E, chi) coordinates");
    const double two_e_minus_one = 2.0 * c.e - 1.0;
    const double cot = std::cos(c.chi) / std::sin(c.chi);
    const double cos2 = std::cos(c.chi) * std::cos(c.chi);
    return {
        .g_ee = two_e_minus_one * two_e_minus_one / (16.0 * x * x * x * gap),
        .g_ec = 0.5 * two_e_minus_one * cot / (4.0 * x * gap),
        .g_cc = x / (s * s) * (cos2 / (4.0 * gap) + (s - x)),
    };
}

ReducedEntMetric metric_ent_diagonal(ReducedEnt r) {
    require(r.e_r >= 0.0 && r.e_r <= 1.0, ErrorKind::InvalidArgument,
            "reduced entanglement must lie in [0, 1]");
    const double denom = 8.0 * r.e_r * (1.0 - r.e_r);
    // g_rr diverges at the endpoints; reported as +inf.
    const double g_rr =
        denom > 0.0 ? 1.0 / denom : std::numeric_limits<double>::infinity();
    return {g_rr, 0.25 * r.e_r * (2.0 - r.e_r)};
}

double curvature_ent(const EntCoord &c, ChiLimit limit) {
    require_finite(c);
    require_e_range(c.e);
    const double s = abs_sin(c.chi);
    const double x = root_ee(c.e);
    if (s <= kReachSlack) {
        if (limit == ChiLimit::Static && x <= kReachSlack) {
            return 16.0;
        }
        fail(ErrorKind::CoordinateSingular,
             "curvature at sin(chi) = 0 is 0/0; use ChiLimit::Static");
    }
    const double d = x - s;
    require(std::abs(d) > kReachSlack, ErrorKind::SingularMetric,
            "sqrt(E(1-E)) = |sin chi| makes the curvature singular");
    return 8.0 * (2.0 + (2.0 * x - 3.0 * s) * s / (4.0 * d * d));
}

bool curvature_negative(const EntCoord &c) {
    require_finite(c);
    require_e_range(c.e);
    const double s = abs_sin(c.chi);
    const double x = root_ee(c.e);
    require(std::abs(x - s) > kReachSlack, ErrorKind::SingularMetric,
            "sqrt(E(1-E)) = |sin chi| makes the curvature singular");
    return (2.0 * x - 3.0 * s) * s < -8.0 * (x - s) * (x - s);
}

double curvature_min(double theta, double chi) {
    const double s2 = std::sin(theta) * std::sin(theta);
    const double s = abs_sin(chi);
    const double d = s2 - 2.0 * s;
    require(std::abs(d) > kReachSlack, ErrorKind::SingularMetric,
            "sin^2(theta) = 2|sin chi| makes R_min singular");
    return 8.0 * (2.0 + (s2 - 3.0 * s) * s / (d * d));
}

double geometric_phase_ent(const EntCoord &c) {
    require_reachable(c);
    require_sin(c.chi);
    const double x = root_ee(c.e);
    const double s = abs_sin(c.chi);
    const double num = (s - x) * std::sin(c.chi);
    const double den = (s - x) * std::cos(c.chi) + x;
    return std::atan2(-num, den) + c.chi * (1.0 - x / s);
}

double critical_entanglement_phase_closed(double chi) {
    const double h = 0.5 * chi;
    const double ch = std::cos(h);
    const double sh = std::sin(h);
    const double sinc = std::sin(chi) / chi;
    const double radical = chi * chi * chi * (2.0 - chi * ch / sh) /
                           std::pow(sh, 5) / std::pow(ch, 11);
    const double inner = 2.0 + 2.0 * std::cos(chi) + std::cos(2.0 * chi) -
                         2.0 * (1.0 + std::cos(chi)) * sinc +
                         8.0 * std::pow(ch, 8) * std::pow(sh, 4) *
                             std::sqrt(radical) / (chi * chi);
    return 0.5 * (1.0 - std::sqrt(inner));
}

CriticalPhase critical_entanglement_phase(double chi) {
    require_sin(chi);
    const double lo = kSearchInset;
    const double hi = entanglement_reach(chi) - kSearchInset;
    require(hi > lo, ErrorKind::NoInteriorMinimum, "empty entanglement range");
    auto phase = [chi](double e) { return geometric_phase_ent({e, chi}); };

    // Unimodality scan.
    const auto grid = numeric::linspace(lo, hi, kScanPoints);
    std::vector<double> values(grid.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        values[i] = phase(grid[i]);
        if (values[i] < values[best]) {
            best = i;
        }
    }
    require(best > 0 && best + 1 < grid.size(), ErrorKind::NoInteriorMinimum,
            "geometric phase has no interior minimum at chi = " +
                std::to_string(chi));
    constexpr double kFlat = 1e-13;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double step = values[i] - values[i - 1];
        const bool ok = i <= best ? step <= kFlat : step >= -kFlat;
        require(ok, ErrorKind::NoInteriorMinimum,
                "geometric phase is not unimodal at chi = " + std::to_string(chi));
    }

    const auto found = numeric::golden_section_min(phase, lo, hi, kSearchTol);
    return {critical_entanglement_phase_closed(chi), found.x};
}

double aa_phase_ent(const EntCoord &c) {
    require_reachable(c);
    require_sin(c.chi);
    return -2.0 * std::numbers::pi * root_ee(c.e) / abs_sin(c.chi);
}

namespace {
/// sqrt(sqrt(E(1-E)) (|sin chi| - sqrt(E(1-E)))), shared by speed/distance/time.
double motion_root(const EntCoord &c) {
    require_reachable(c);
    require_sin(c.chi);
    const double x = root_ee(c.e);
    return std::sqrt(x * (abs_sin(c.chi) - x));
}
} // namespace

double speed_ent(const EntCoord &c, double J) {
    return J / abs_sin(c.chi) * motion_root(c);
}

double critical_entanglement_speed(double chi) {
    require_sin(chi);
    const double folded = std::asin(std::min(1.0, abs_sin(chi)));
    const double principal =
        chi > 0.0 && chi <= 0.5 * std::numbers::pi ? chi : folded;
    const double s = std::sin(0.5 * principal);
    return s * s;
}

double distance_ent(const EntCoord &c) {
    require(c.chi >= 0.0, ErrorKind::InvalidArgument, "chi must be >= 0");
    return c.chi / abs_sin(c.chi) * motion_root(c);
}

double optimal_time_ent(const EntCoord &c, double J) {
    require(c.chi >= 0.0, ErrorKind::InvalidArgument, "chi must be >= 0");
    require(J > 0.0, ErrorKind::InvalidArgument, "J must be > 0");
    return 2.0 * c.chi / (J * abs_sin(c.chi)) * motion_root(c);
}

double optimal_metric_ent(const EntCoord &c) {
    const double r = motion_root(c);
    const double s = abs_sin(c.chi);
    return r * r / (s * s);
}

} // namespace qgeom
