#include "vassiliev/lie.hpp"

#include <cmath>

#include "vassiliev/error.hpp"

namespace vassiliev {

namespace {

constexpr const char* kModule = "lie_weights";
const Complex kI(0.0, 1.0);

}  // namespace

std::vector<double> structure_constants_of(const std::vector<CMatrix>& generators) {
  const int dim = static_cast<int>(generators.size());
  std::vector<double> f(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      CMatrix comm = generators[a] * generators[b] - generators[b] * generators[a];
      for (int c = 0; c < dim; ++c)
        f[(static_cast<std::size_t>(a) * dim + b) * dim + c] = (-2.0 * kI * (comm * generators[c]).trace()).real();
    }
  return f;
}

LieAlgebraData su2_fundamental() {
  LieAlgebraData lie;
  lie.name = "su2";
  lie.dimension = 3;
  lie.representation = 2;
  CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -kI, kI, 0;
  s3 << 1, 0, 0, -1;
  lie.generators = {s1 / 2.0, s2 / 2.0, s3 / 2.0};
  lie.structure_constants.assign(27, 0.0);
  auto set = [&](int a, int b, int c, double v) { lie.structure_constants[(a * 3 + b) * 3 + c] = v; };
  set(0, 1, 2, 1);
  set(1, 2, 0, 1);
  set(2, 0, 1, 1);
  set(1, 0, 2, -1);
  set(2, 1, 0, -1);
  set(0, 2, 1, -1);
  return lie;
}

LieAlgebraData gl_fundamental(int n) {
  if (n < 2) throw Error(kModule, "gl(N) requires N >= 2");
  LieAlgebraData lie;
  lie.name = "gl" + std::to_string(n);
  lie.representation = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMatrix sym = CMatrix::Zero(n, n), anti = CMatrix::Zero(n, n);
      sym(i, j) = sym(j, i) = 0.5;
      anti(i, j) = -0.5 * kI;
      anti(j, i) = 0.5 * kI;
      lie.generators.push_back(sym);
      lie.generators.push_back(anti);
    }
  for (int k = 1; k < n; ++k) {
    CMatrix h = CMatrix::Zero(n, n);
    double scale = 1.0 / std::sqrt(2.0 * k * (k + 1));
    for (int i = 0; i < k; ++i) h(i, i) = scale;
    h(k, k) = -k * scale;
    lie.generators.push_back(h);
  }
  lie.generators.push_back(CMatrix::Identity(n, n) / std::sqrt(2.0 * n));
  lie.dimension = static_cast<int>(lie.generators.size());
  lie.structure_constants = structure_constants_of(lie.generators);
  return lie;
}

LieAxiomReport check_axioms(const LieAlgebraData& lie) {
  LieAxiomReport report;
  const int dim = lie.dimension;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Complex tr = (lie.generators[a] * lie.generators[b]).trace();
      report.normalization_error = std::max(report.normalization_error, std::abs(tr - (a == b ? 0.5 : 0.0)));
      CMatrix residual = lie.generators[a] * lie.generators[b] - lie.generators[b] * lie.generators[a];
      for (int c = 0; c < dim; ++c) residual -= kI * lie.f(a, b, c) * lie.generators[c];
      report.closure_error = std::max(report.closure_error, residual.cwiseAbs().maxCoeff());
      for (int c = 0; c < dim; ++c) {
        double v = lie.f(a, b, c);
        report.antisymmetry_error = std::max({report.antisymmetry_error, std::abs(v + lie.f(b, a, c)),
                                              std::abs(v - lie.f(b, c, a)), std::abs(v + lie.f(a, c, b))});
      }
    }
  return report;
}

bool commutator_4T_witness(const LieAlgebraData& lie, double tolerance) {
  const int dim = lie.dimension;
  const int n = lie.representation;
  // Commutators must close with the stored structure constants.
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      CMatrix residual = lie.generators[a] * lie.generators[b] - lie.generators[b] * lie.generators[a];
      for (int c = 0; c < dim; ++c) residual -= kI * lie.f(a, b, c) * lie.generators[c];
      if (residual.cwiseAbs().maxCoeff() > tolerance) return false;
    }
  // sum_a ([T_b, T_a] (x) T_a + T_a (x) [T_b, T_a]) = 0, with [T_b, T_a] expanded
  // through f so that the check exercises the structure constants.
  const int nn = n * n;
  for (int b = 0; b < dim; ++b) {
    CMatrix total = CMatrix::Zero(nn, nn);
    for (int a = 0; a < dim; ++a) {
      CMatrix comm = CMatrix::Zero(n, n);
      for (int c = 0; c < dim; ++c) comm += kI * lie.f(b, a, c) * lie.generators[c];
      const CMatrix& t = lie.generators[a];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) total(i * n + k, j * n + l) += comm(i, j) * t(k, l) + t(i, j) * comm(k, l);
    }
    if (total.cwiseAbs().maxCoeff() > tolerance) return false;
  }
  return true;
}

Complex weight(const LieAlgebraData& lie, const ChordDiagram& diagram) {
  const int n = lie.representation;
  const int dim = lie.dimension;
  const int m = static_cast<int>(diagram.degree());
  const auto word = diagram.word();
  const auto& sizes = diagram.circle_sizes();
  if (m == 0) return std::pow(Complex(n, 0), static_cast<double>(sizes.size()));
  std::vector<int> index(m, 0);
  Complex total = 0.0;
  CMatrix product(n, n);
  while (true) {
    // One trace per circle, multiplied together.
    Complex term = 1.0;
    std::size_t p = 0;
    for (int size : sizes) {
      product.setIdentity();
      for (int k = 0; k < size; ++k, ++p) product = product * lie.generators[index[word[p]]];
      term *= product.trace();
    }
    total += term;
    int c = 0;
    for (; c < m; ++c) {
      if (++index[c] < dim) break;
      index[c] = 0;
    }
    if (c == m) break;
  }
  return total;
}

WeightSystem weight_system(const LieAlgebraData& lie, int degree, int max_degree) {
  if (degree < 0 || degree > max_degree)
    throw Error(kModule, "degree " + std::to_string(degree) + " outside supported range 0.." +
                             std::to_string(max_degree));
  WeightSystem ws{lie.name, degree, {}};
  for (const auto& d : enumerate_chord_diagrams(degree).classes) ws.table.emplace(d, weight(lie, d));
  return ws;
}

LieAlgebraData lie_algebra_by_name(const std::string& name) {
  if (name == "su2") return su2_fundamental();
  if (name.size() > 2 && name.rfind("gl", 0) == 0) {
    int n = std::stoi(name.substr(2));
    return gl_fundamental(n);
  }
  throw Error(kModule, "unknown algebra '" + name + "' (expected su2 or glN)");
}

}  // namespace vassiliev
