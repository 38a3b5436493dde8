#pragma once

#include <map>
#include <string>
#include <vector>

#include "blob/alcove.hpp"
#include "blob/laurent.hpp"
#include "blob/params.hpp"

namespace blob {

// Graded dimensions of the cell and simple modules of the weight-lambda
// subalgebra, one entry per element of M_n(lambda) in indexed order.
struct GradedCellDims {
  OrbitIndex index;
  std::vector<LaurentPoly> cell;
  std::vector<LaurentPoly> simple;
};

GradedCellDims cell_dims_subalgebra(int lambda, const BlobParams& p);
std::vector<LaurentPoly> simple_dims_subalgebra(int lambda,
                                                const BlobParams& p);

// One column of graded decomposition numbers: entries[k] is the
// multiplicity polynomial at the k-th indexed element of M_n(lambda).
struct DecompColumn {
  OrbitIndex index;
  std::vector<LaurentPoly> entries;

  // Zero when mu lies outside M_n(lambda).
  LaurentPoly entry(int mu) const;
};

DecompColumn decomposition_column(int lambda, const BlobParams& p);

// The full table of multiplicity polynomials at level n, one column per
// weight, columns and the weight list ascending by weight.
struct DecompMatrix {
  BlobParams params;
  std::vector<int> weights;
  std::vector<DecompColumn> columns;

  const DecompColumn& column(int lambda) const;
  LaurentPoly entry(int mu, int lambda) const;
};

DecompMatrix decomposition_matrix(const BlobParams& p, int threads = 1);

// Graded dimension of the full cell module at mu, by exhaustive
// enumeration of its C(n, a) standard bitableaux. Throws TooLarge beyond
// the sweep bound.
LaurentPoly cell_dim_full(int mu, const BlobParams& p, int max_n = 24);

// Graded dimensions of all simple modules of the full algebra, obtained by
// peeling decomposition columns off the cell dimensions from the minimal
// weight upward. Throws InconsistentData if a negative coefficient ever
// appears, which would mean the closed forms and the enumeration disagree.
std::map<int, LaurentPoly> simple_dims_full(const BlobParams& p);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct ConsistencyReport {
  BlobParams params;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  bool all_passed() const;
};

// Structured pass/fail sweep: the cell/simple dimension identity at every
// weight, nonnegativity of simple dimensions, 0/1 specialization at t=1,
// triangularity with unit diagonal, and closed-form subalgebra dimensions
// against the enumeration oracle. Bar-symmetry of the full simple
// dimensions is reported as a warning only.
ConsistencyReport verify_consistency(const BlobParams& p, int threads = 1);

}  // namespace blob
