#include "vassiliev/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "vassiliev/error.hpp"

namespace vassiliev {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix3d rotation_matrix(const Rotation& r) {
  Eigen::Matrix3d m = (Eigen::AngleAxisd(r[2], Eigen::Vector3d::UnitZ()) *
                       Eigen::AngleAxisd(r[1], Eigen::Vector3d::UnitY()) *
                       Eigen::AngleAxisd(r[0], Eigen::Vector3d::UnitX()))
                          .toRotationMatrix();
  return m;
}

Point3 torus_knot_point(double th, int p, int q) {
  double r = 2 + std::cos(q * th);
  return {r * std::cos(p * th), r * std::sin(p * th), std::sin(q * th)};
}

}  // namespace

CurveComponent sample_curve(const std::function<Point3(double)>& f, int samples, const Rotation& rotation) {
  if (samples < 8) throw Error("kontsevich_integral", "fixtures need at least 8 samples");
  const Eigen::Matrix3d R = rotation_matrix(rotation);
  CurveComponent out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    Point3 p = f(2 * kPi * k / samples);
    Eigen::Vector3d v = R * Eigen::Vector3d(p[0], p[1], p[2]);
    out.push_back({Complex(v[0], v[1]), v[2]});
  }
  return out;
}

Curve round_circle(int samples) {
  return {sample_curve([](double th) { return Point3{std::cos(th), 0.0, std::sin(th) + 0.1 * std::cos(th)}; }, samples)};
}

Curve hump_unknot(int samples) {
  return {sample_curve(
      [](double th) {
        double dent = 0.6 * std::exp(-std::pow((th - kPi / 2) / 0.35, 2));
        return Point3{std::cos(th), 0.15 * std::sin(2 * th), std::sin(th) - dent + 0.05 * std::cos(th)};
      },
      samples)};
}

Curve trefoil_two_maxima(int samples) {
  return {sample_curve([](double th) { return torus_knot_point(th, 2, 3); }, samples, {4.344, 5.234, 2.246})};
}

Curve trefoil_three_maxima(int samples) {
  return {sample_curve([](double th) { return torus_knot_point(th, 2, 3); }, samples, {3.374, 2.834, 6.015})};
}

Curve figure_eight_three_maxima(int samples) {
  return {sample_curve(
      [](double th) {
        double r = 2 + std::cos(2 * th);
        return Point3{r * std::cos(3 * th), r * std::sin(3 * th), std::sin(4 * th)};
      },
      samples, {4.729, 2.369, 5.498})};
}

Curve hopf_link(int samples) {
  const Rotation rot{0.31, 0.53, 0.17};
  return {sample_curve([](double th) { return Point3{std::cos(th), std::sin(th), 0.0}; }, samples, rot),
          sample_curve([](double th) { return Point3{1 + std::cos(th), 0.0, std::sin(th)}; }, samples, rot)};
}

Curve torus_link_2_4(int samples) {
  const Rotation rot{0.23, 0.41, 0.0};
  Curve out;
  for (int k = 0; k < 2; ++k)
    out.push_back(sample_curve(
        [k](double th) {
          double phase = 2 * th + k * kPi;
          double r = 2 + std::cos(phase);
          return Point3{r * std::cos(th), r * std::sin(th), std::sin(phase)};
        },
        samples, rot));
  return out;
}

Curve split_link(int samples) {
  return {sample_curve([](double th) { return Point3{std::cos(th), 0.3 * std::sin(th), std::sin(th) + 0.1 * std::cos(th)}; },
                       samples),
          sample_curve(
              [](double th) { return Point3{3 + std::cos(th), 0.3 * std::sin(th), 0.2 + std::sin(th) - 0.1 * std::cos(th)}; },
              samples)};
}

Curve disjoint_circles(double separation, int samples) {
  if (!(separation > 2)) throw Error("kontsevich_integral", "circles of radius 1 need a separation above 2");
  auto circle = [](double dx, double dt) {
    return [dx, dt](double th) { return Point3{dx + std::cos(th), 0.3 * std::sin(th), dt + std::sin(th) + 0.1 * std::cos(th)}; };
  };
  return {sample_curve(circle(0, 0), samples), sample_curve(circle(separation, 0.1), samples)};
}

std::vector<std::string> fixture_names() {
  return {"round", "hump", "trefoil2", "trefoil3", "figure8", "hopf", "torus_2_4", "split", "disjoint3"};
}

Curve fixture_by_name(const std::string& name, int samples) {
  if (name == "round") return round_circle(samples);
  if (name == "hump") return hump_unknot(samples);
  if (name == "trefoil2") return trefoil_two_maxima(samples);
  if (name == "trefoil3") return trefoil_three_maxima(samples);
  if (name == "figure8") return figure_eight_three_maxima(samples);
  if (name == "hopf") return hopf_link(samples);
  if (name == "torus_2_4") return torus_link_2_4(samples);
  if (name == "split") return split_link(samples);
  if (name == "disjoint3") return disjoint_circles(3.0, samples);
  throw Error("kontsevich_integral", "unknown fixture '" + name + "'");
}

SingularDiagram curve_diagram(const Curve& curve) {
  // Plane coordinates (u, v) = (t, Re z) make (u, v, Im z) right-handed.
  struct Segment {
    std::size_t component, index;
    double u0, v0, u1, v1, y0, y1;
  };
  std::vector<Segment> segments;
  for (std::size_t c = 0; c < curve.size(); ++c) {
    const auto& comp = curve[c];
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const auto& p = comp[k];
      const auto& q = comp[(k + 1) % comp.size()];
      segments.push_back({c, k, p.t, p.z.real(), q.t, q.z.real(), p.z.imag(), q.z.imag()});
    }
  }
  struct Event {
    double position;  // segment index plus parameter along the segment
    Visit visit;
  };
  std::vector<std::vector<Event>> events(curve.size());
  std::map<int, int> signs;
  int next_id = 1;
  for (std::size_t a = 0; a < segments.size(); ++a)
    for (std::size_t b = a + 1; b < segments.size(); ++b) {
      const Segment& p = segments[a];
      const Segment& q = segments[b];
      if (p.component == q.component) {
        std::size_t n = curve[p.component].size();
        if (q.index == p.index + 1 || (p.index == 0 && q.index == n - 1)) continue;
      }
      double du1 = p.u1 - p.u0, dv1 = p.v1 - p.v0;
      double du2 = q.u1 - q.u0, dv2 = q.v1 - q.v0;
      double det = du1 * dv2 - dv1 * du2;
      if (std::abs(det) < 1e-300) continue;
      double ex = q.u0 - p.u0, ey = q.v0 - p.v0;
      double s = (ex * dv2 - ey * du2) / det;
      double r = (ex * dv1 - ey * du1) / det;
      if (s < 0 || s >= 1 || r < 0 || r >= 1) continue;
      double yp = p.y0 + s * (p.y1 - p.y0);
      double yq = q.y0 + r * (q.y1 - q.y0);
      if (yp == yq) throw Error("kontsevich_integral", "curve intersects itself in projection and in depth");
      bool p_over = yp > yq;
      double cross = p_over ? det : -det;  // over direction x under direction
      int id = next_id++;
      signs[id] = cross > 0 ? 1 : -1;
      events[p.component].push_back({p.index + s, {id, p_over ? Role::Over : Role::Under}});
      events[q.component].push_back({q.index + r, {id, p_over ? Role::Under : Role::Over}});
    }
  std::vector<Component> comps;
  for (auto& ev : events) {
    std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.position < y.position; });
    Component comp;
    for (const auto& e : ev) comp.push_back(e.visit);
    comps.push_back(std::move(comp));
  }
  return SingularDiagram(std::move(comps), std::move(signs));
}

}  // namespace vassiliev
