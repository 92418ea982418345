#pragma once

// Lie-algebra representation data and chord-diagram weight systems obtained
// by inserting generators at chord ends and tracing around the circle.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vassiliev/chords.hpp"

namespace vassiliev {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Generators T_a of a matrix Lie algebra with tr(T_a T_b) = delta_ab / 2 and
/// [T_a, T_b] = i f^{abc} T_c.
struct LieAlgebraData {
  std::string name;
  int dimension = 0;       // number of generators
  int representation = 0;  // matrix size N
  std::vector<CMatrix> generators;
  std::vector<double> structure_constants;  // f[a * dim * dim + b * dim + c]

  double f(int a, int b, int c) const {
    return structure_constants[(static_cast<std::size_t>(a) * dimension + b) * dimension + c];
  }
};

struct LieAxiomReport {
  double normalization_error = 0;  // max |tr(T_a T_b) - delta_ab/2|
  double closure_error = 0;        // max ||[T_a,T_b] - i f^{abc} T_c||
  double antisymmetry_error = 0;   // max deviation of f from total antisymmetry
  bool ok(double tolerance = 1e-12) const {
    return normalization_error <= tolerance && closure_error <= tolerance && antisymmetry_error <= tolerance;
  }
};

/// su(2) in the fundamental representation: T_a = sigma_a / 2, f = epsilon.
LieAlgebraData su2_fundamental();

/// gl(N): N^2 Hermitian generators orthonormal for tr(T_a T_b) = delta_ab/2.
LieAlgebraData gl_fundamental(int n);

/// Structure constants f^{abc} = -2i tr([T_a, T_b] T_c) of the given generators.
std::vector<double> structure_constants_of(const std::vector<CMatrix>& generators);

LieAxiomReport check_axioms(const LieAlgebraData& lie);

/// Checks [T_a,T_b] = i f^{abc} T_c and the resulting invariance of the
/// quadratic Casimir tensor, [T_b (x) 1 + 1 (x) T_b, sum_a T_a (x) T_a] = 0,
/// which is the algebraic form of the four-term relation.
bool commutator_4T_witness(const LieAlgebraData& lie, double tolerance = 1e-12);

/// Sum over one generator index per chord of the trace of the product of
/// generators read around the circle. On several circles the traces of the
/// circles are multiplied.
Complex weight(const LieAlgebraData& lie, const ChordDiagram& diagram);

struct WeightSystem {
  std::string algebra;
  int degree = 0;
  std::map<ChordDiagram, Complex> table;
};

WeightSystem weight_system(const LieAlgebraData& lie, int degree, int max_degree = 4);

/// Algebra by name: "su2" or "glN" (e.g. "gl3").
LieAlgebraData lie_algebra_by_name(const std::string& name);

}  // namespace vassiliev
