#pragma once

// Parametric Morse embeddings shipped as fixtures, and the planar diagram of
// a sampled curve used as a combinatorial oracle.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "vassiliev/codes.hpp"
#include "vassiliev/morse.hpp"

namespace vassiliev {

using Point3 = std::array<double, 3>;  // (Re z, Im z, t)
using Rotation = std::array<double, 3>;  // angles (a, b, c) of Rz(c) Ry(b) Rx(a)

/// Samples theta = 2 pi k / samples for k < samples, rotates, and maps (x, y, t) to (x + iy, t).
CurveComponent sample_curve(const std::function<Point3(double)>& f, int samples, const Rotation& rotation = {0, 0, 0});

Curve round_circle(int samples = 400);
/// Unknot with two maxima: a circle with a dent pushed into its top.
Curve hump_unknot(int samples = 400);
Curve trefoil_two_maxima(int samples = 400);
Curve trefoil_three_maxima(int samples = 400);
Curve figure_eight_three_maxima(int samples = 400);
Curve hopf_link(int samples = 400);
Curve torus_link_2_4(int samples = 400);
Curve split_link(int samples = 400);
/// Two tilted unit circles whose centres are `separation` apart.
Curve disjoint_circles(double separation, int samples = 400);

std::vector<std::string> fixture_names();
Curve fixture_by_name(const std::string& name, int samples = 400);

/// Knot diagram of the sampled polygon projected along Im z (the viewer sits
/// at Im z = +infinity). Crossing signs follow the right-hand rule.
SingularDiagram curve_diagram(const Curve& curve);

}  // namespace vassiliev
