#pragma once

#include <map>
#include <string>
#include <vector>

#include "blob/laurent.hpp"
#include "blob/params.hpp"
#include "blob/tableaux.hpp"

namespace blob {

// Wall layout and infinite dihedral reflection action for fixed (l, m):
// walls sit at x = -m (mod l) and the fundamental alcove is the open
// interval (-m, l-m), which always contains 0.
struct AlcoveSystem {
  int l;
  int m;

  bool on_wall(int x) const { return mod_residue(x + m, l) == 0; }
  int reflect_left(int x) const { return -2 * m - x; }
  int reflect_right(int x) const { return 2 * (l - m) - x; }
  // All wall positions in [lo, hi], ascending.
  std::vector<int> walls_in_range(int lo, int hi) const;
};

AlcoveSystem alcove_system(const BlobParams& p);

enum class Region {
  InFundamentalAlcove,
  OnFundamentalWall,
  InOuterAlcove,
  OnOuterWall,
};

const char* region_name(Region region);

struct WeightPosition {
  Region region;
  int side;   // -1 negative, +1 positive, 0 inside the fundamental alcove
  int kappa;  // alcoves strictly between the weight and the fundamental one

  bool on_wall() const {
    return region == Region::OnFundamentalWall ||
           region == Region::OnOuterWall;
  }
};

WeightPosition classify_weight(int w, const AlcoveSystem& sys);

// The reflection orbit of w restricted to [-n, n], ascending.
std::vector<int> orbit(int w, const AlcoveSystem& sys, int n);

// The set M_n(lambda) of shapes reachable by walks sharing the residue
// sequence of t^lambda, listed in its alternating indexed order with
// entries[0] = lambda.
struct OrbitIndex {
  int lambda;
  WeightPosition position;
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

OrbitIndex m_set(int lambda, const BlobParams& p);

enum class FinalDirection { TowardAxis, AwayFromAxis, Absent };

// Decomposition of a class member's walk: the shared prefix up to the first
// fundamental-wall contact, then one letter per wall-to-wall step (F crosses
// the fundamental alcove, I moves toward the axis, O away from it), then an
// optional straight final segment.
struct WallWord {
  std::string letters;
  FinalDirection final_direction;

  int n_f() const;
  int n_i() const;
  int n_o() const;
};

// Throws NotInResidueClass when s does not share t^lambda's residues.
WallWord wall_word_of(const Bitableau& s, int lambda, const BlobParams& p);

// n_F, plus 1 when the final segment points toward the axis.
int degree_word(const WallWord& word);

// The two-column partition (p, q)', stored as its conjugate two-row pair.
struct TwoColumnPartition {
  int p;
  int q;

  bool operator==(const TwoColumnPartition&) const = default;
};

// mu_i^j = (kappa-j+i, j-i)'. Throws NotAPartition when the pair does not
// weakly decrease.
TwoColumnPartition mu_partition(int kappa, int i, int j);

// Number of standard tableaux of the two-row shape (p, q): the ballot
// number C(p+q, q) - C(p+q, q-1).
Int count_std_two_column(const TwoColumnPartition& mu);

// Histogram degree -> count over the residue-class members of the target
// shape. The target must sit at index 4j+1 of m_set(lambda) (2j+1 when
// lambda is on a wall); throws IndexMismatch otherwise.
std::map<int, Int> count_degree_classes(int lambda, int target,
                                        const BlobParams& p);

}  // namespace blob
