#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blob/params.hpp"

namespace blob {

// A standard one-line bitableau, stored as its sign sequence: position j
// carries '+' when entry j sits in the first component. Every sign string
// is a valid standard bitableau since entries are placed left to right.
struct Bitableau {
  std::string signs;

  int size() const { return static_cast<int>(signs.size()); }
  bool operator==(const Bitableau&) const = default;
};

// Vertex weights w_0..w_n of the lattice walk of a bitableau; w_0 = 0 and
// consecutive weights differ by exactly 1.
using Walk = std::vector<int>;

// Residues mod l, one per entry 1..n.
using ResidueSequence = std::vector<int>;

// A pair of one-row partitions ((a),(b)); its weight is a - b.
struct OneLineBipartition {
  int a;
  int b;

  int n() const { return a + b; }
  int weight() const { return a - b; }
};

enum class Ordering { Less, Equal, Greater, Incomparable };

// Positions contributing to the walk-based degree: A positions are steps
// leaving a wall toward the central axis, R positions are steps arriving at
// a wall from the axis side.
struct DegreeBreakdown {
  std::vector<int> a_positions;
  std::vector<int> r_positions;
  int degree;
};

// Validates a sign string over {+,-}. Throws MalformedWalk.
Bitableau parse_bitableau(const std::string& text);

// Shape of a bitableau: (#plus, #minus).
OneLineBipartition shape_of(const Bitableau& t);

// The bipartition of the given weight at level n. Throws SizeMismatch when
// |weight| > n or weight and n have different parity.
OneLineBipartition bipartition_of_weight(int weight, int n);

// Mutually inverse bijections between sign sequences and walks.
Walk walk_of(const Bitableau& t);
Bitableau tableau_of(const Walk& w);  // throws MalformedWalk

// The maximal bitableau t^lambda: with c = min(a,b), even entries <= 2c get
// '+', odd entries < 2c get '-', and entries > 2c all get the sign of the
// larger component.
Bitableau t_lambda(const OneLineBipartition& lambda);
Bitableau t_lambda(int weight, int n);

// Residue of entry j from the node it occupies: column c in component d
// has residue c-1+k (d=1) or c-1-k (d=2), mod l.
ResidueSequence residue_of_tableau(const Bitableau& t, const BlobParams& p);

// Residue of entry j from the walk alone: the unique r with
// 2r = j-2+(w_j-w_{j-1})(w_j+m) (mod l).
ResidueSequence residue_via_walk(const Walk& w, const BlobParams& p);

// Total order on same-parity weights: closer to the axis is greater, ties
// between w and -w are broken toward the negative weight. Throws
// SizeMismatch on parity mismatch.
Ordering weight_order(int a, int b);

// The same order on bipartitions of a common n. Throws SizeMismatch.
Ordering bipartition_order(const OneLineBipartition& lhs,
                           const OneLineBipartition& rhs);

// Dominance of truncated shapes at every level 1..n; four-valued since the
// order on bitableaux is not total. Throws SizeMismatch.
Ordering tableau_order(const Bitableau& s, const Bitableau& t);

// Swaps entries r and r+1. Returns nullopt when the signs at r, r+1 are
// equal, i.e. the transposition fixes the bitableau. Throws BadPosition.
std::optional<Bitableau> apply_transposition(const Bitableau& t, int r);

// Degree via addable/removable nodes: at each level, counts the addable
// (+1) and removable (-1) nodes of the truncated shape lying below the node
// just placed and carrying its residue.
int degree_g(const Bitableau& t, const BlobParams& p);

// Degree via the wall-crossing positions of the walk.
DegreeBreakdown degree_walk(const Bitableau& t, const BlobParams& p);

}  // namespace blob
