#pragma once

#include <map>
#include <vector>

#include "blob/laurent.hpp"
#include "blob/params.hpp"
#include "blob/tableaux.hpp"

namespace blob {

struct ClassMember {
  Bitableau tableau;
  int shape_weight;
  int degree;
};

// All standard bitableaux sharing the residue sequence of t^lambda,
// produced by depth-first walk extension in lexicographic sign order
// ('+' before '-').
struct ResidueClass {
  int lambda;
  ResidueSequence target;
  std::vector<ClassMember> members;
};

// Guard rails for the exhaustive engines; exceeding a bound raises
// TooLarge rather than silently grinding.
struct EnumerationLimits {
  int class_max_n = 18;
  int sweep_max_n = 24;
};

ResidueClass enumerate_residue_class(int lambda, const BlobParams& p,
                                     const EnumerationLimits& limits = {});

// Sum of t^deg(s) over class members of shape mu; the zero polynomial when
// the shape never occurs.
LaurentPoly cell_dim_from_class(const ResidueClass& cls, int mu);
LaurentPoly oracle_cell_dim_subalgebra(int lambda, int mu,
                                       const BlobParams& p,
                                       const EnumerationLimits& limits = {});

// Standard fillings of the two-row shape (p, q), counted one by one.
// Throws NotAPartition, and TooLarge when p + q > 20.
Int oracle_count_std(int p_row, int q_row);

// Recovers the decomposition column of lambda from enumerated cell
// dimensions alone, assuming only that simple dimensions are concentrated
// in degree 0 and that off-diagonal entries have zero constant term.
// Throws NotSolvable when those assumptions fail to pin a unique answer.
std::map<int, LaurentPoly> oracle_decomposition_column(
    int lambda, const BlobParams& p, const EnumerationLimits& limits = {});

}  // namespace blob
