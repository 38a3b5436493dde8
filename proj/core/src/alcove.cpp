#include "blob/alcove.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>

#include "blob/errors.hpp"
#include "blob/oracle.hpp"

namespace blob {

std::vector<int> AlcoveSystem::walls_in_range(int lo, int hi) const {
  std::vector<int> out;
  if (lo > hi) return out;
  int first = lo + mod_residue(-static_cast<long long>(m) - lo, l);
  for (int x = first; x <= hi; x += l) out.push_back(x);
  return out;
}

AlcoveSystem alcove_system(const BlobParams& p) {
  return AlcoveSystem{p.l, p.m};
}

const char* region_name(Region region) {
  switch (region) {
    case Region::InFundamentalAlcove: return "fundamental_alcove";
    case Region::OnFundamentalWall: return "fundamental_wall";
    case Region::InOuterAlcove: return "outer_alcove";
    case Region::OnOuterWall: return "outer_wall";
  }
  return "unknown";
}

WeightPosition classify_weight(int w, const AlcoveSystem& sys) {
  int lo = std::min(w, 0);
  int hi = std::max(w, 0);
  int between = static_cast<int>(sys.walls_in_range(lo + 1, hi - 1).size());
  int side = w < 0 ? -1 : (w > 0 ? 1 : 0);
  if (sys.on_wall(w)) {
    Region region = between == 0 ? Region::OnFundamentalWall
                                 : Region::OnOuterWall;
    return WeightPosition{region, side, between};
  }
  if (between == 0) {
    return WeightPosition{Region::InFundamentalAlcove, 0, 0};
  }
  return WeightPosition{Region::InOuterAlcove, side, between - 1};
}

std::vector<int> orbit(int w, const AlcoveSystem& sys, int n) {
  // The orbit is the union of two congruence classes mod 2l: that of w and
  // that of its left reflection.
  const int period = 2 * sys.l;
  int r1 = mod_residue(w, period);
  int r2 = mod_residue(sys.reflect_left(w), period);
  std::set<int> out;
  for (int x = -n; x <= n; ++x) {
    int r = mod_residue(x, period);
    if (r == r1 || r == r2) out.insert(x);
  }
  return std::vector<int>(out.begin(), out.end());
}

namespace {

// Levels and wall vertices of the shared walk skeleton of a residue class:
// part (a) runs to the first fundamental-wall contact of w(t^lambda), then
// kappa wall-to-wall steps of length l, then a straight tail of length
// tail_length (zero exactly when lambda is on a wall).
struct WalkSkeleton {
  int contact_level;
  int contact_wall;
  int kappa;
  int tail_length;
};

WalkSkeleton skeleton_of(int lambda, const BlobParams& p,
                         const WeightPosition& pos) {
  const AlcoveSystem sys = alcove_system(p);
  const Walk w = walk_of(t_lambda(lambda, p.n));
  int contact_level = -1;
  int contact_wall = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == -sys.m || w[j] == sys.l - sys.m) {
      contact_level = static_cast<int>(j);
      contact_wall = w[j];
      break;
    }
  }
  assert(contact_level >= 0);
  int tail = p.n - contact_level - pos.kappa * p.l;
  assert(pos.on_wall() ? tail == 0 : (tail >= 1 && tail < p.l));
  return WalkSkeleton{contact_level, contact_wall, pos.kappa, tail};
}

std::vector<int> index_alternating(int lambda, std::set<int> remaining) {
  std::vector<int> entries{lambda};
  bool negative_side = lambda < 0;
  for (int i = 1; !remaining.empty(); ++i) {
    bool rightmost = i % 2 == 1;
    if (!negative_side) rightmost = !rightmost;
    auto it = rightmost ? std::prev(remaining.end()) : remaining.begin();
    entries.push_back(*it);
    remaining.erase(it);
  }
  return entries;
}

}  // namespace

OrbitIndex m_set(int lambda, const BlobParams& p) {
  bipartition_of_weight(lambda, p.n);
  const AlcoveSystem sys = alcove_system(p);
  const WeightPosition pos = classify_weight(lambda, sys);
  if (pos.region == Region::InFundamentalAlcove ||
      pos.region == Region::OnFundamentalWall) {
    return OrbitIndex{lambda, pos, {lambda}};
  }
  const WalkSkeleton sk = skeleton_of(lambda, p, pos);
  // After kappa +-l wall-to-wall steps the reachable walls are
  // contact_wall + s*l for s = -kappa, -kappa+2, ..., kappa; each endpoint
  // then extends by the straight tail in either direction.
  std::set<int> endpoints;
  for (int i = 0; i <= sk.kappa; ++i) {
    int wall_pos = sk.contact_wall + (2 * i - sk.kappa) * p.l;
    if (sk.tail_length == 0) {
      endpoints.insert(wall_pos);
    } else {
      endpoints.insert(wall_pos - sk.tail_length);
      endpoints.insert(wall_pos + sk.tail_length);
    }
  }
  assert(endpoints.count(lambda) == 1);
  std::set<int> remaining = endpoints;
  remaining.erase(lambda);
  return OrbitIndex{lambda, pos, index_alternating(lambda, remaining)};
}

int WallWord::n_f() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), 'F'));
}

int WallWord::n_i() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), 'I'));
}

int WallWord::n_o() const {
  return static_cast<int>(std::count(letters.begin(), letters.end(), 'O'));
}

WallWord wall_word_of(const Bitableau& s, int lambda, const BlobParams& p) {
  if (s.size() != p.n) {
    fail(ErrorCode::SizeMismatch,
         "bitableau has size " + std::to_string(s.size()) + ", expected n=" +
             std::to_string(p.n));
  }
  const ResidueSequence target = residue_of_tableau(t_lambda(lambda, p.n), p);
  if (residue_of_tableau(s, p) != target) {
    fail(ErrorCode::NotInResidueClass,
         "'" + s.signs + "' does not share the residue sequence of weight " +
             std::to_string(lambda));
  }
  const AlcoveSystem sys = alcove_system(p);
  const WeightPosition pos = classify_weight(lambda, sys);
  if (pos.region == Region::InFundamentalAlcove ||
      pos.region == Region::OnFundamentalWall) {
    return WallWord{"", FinalDirection::Absent};
  }
  const WalkSkeleton sk = skeleton_of(lambda, p, pos);
  const Walk w = walk_of(s);
  std::string letters;
  letters.reserve(sk.kappa);
  for (int j = 1; j <= sk.kappa; ++j) {
    int from = w[sk.contact_level + (j - 1) * p.l];
    int to = w[sk.contact_level + j * p.l];
    assert(sys.on_wall(from) && sys.on_wall(to));
    if ((from == -sys.m && to == sys.l - sys.m) ||
        (from == sys.l - sys.m && to == -sys.m)) {
      letters.push_back('F');
    } else if (std::abs(to) < std::abs(from)) {
      letters.push_back('I');
    } else {
      letters.push_back('O');
    }
  }
  FinalDirection direction = FinalDirection::Absent;
  if (sk.tail_length > 0) {
    int last_wall = w[sk.contact_level + sk.kappa * p.l];
    int step = w[sk.contact_level + sk.kappa * p.l + 1] - last_wall;
    bool toward = (last_wall < 0 && step > 0) || (last_wall > 0 && step < 0);
    direction =
        toward ? FinalDirection::TowardAxis : FinalDirection::AwayFromAxis;
  }
  return WallWord{std::move(letters), direction};
}

int degree_word(const WallWord& word) {
  return word.n_f() +
         (word.final_direction == FinalDirection::TowardAxis ? 1 : 0);
}

TwoColumnPartition mu_partition(int kappa, int i, int j) {
  int p = kappa - j + i;
  int q = j - i;
  if (q < 0 || p < q) {
    fail(ErrorCode::NotAPartition,
         "mu(kappa=" + std::to_string(kappa) + ", i=" + std::to_string(i) +
             ", j=" + std::to_string(j) + ") gives the non-partition (" +
             std::to_string(p) + "," + std::to_string(q) + ")");
  }
  return TwoColumnPartition{p, q};
}

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace

Int count_std_two_column(const TwoColumnPartition& mu) {
  if (mu.q < 0 || mu.p < mu.q) {
    fail(ErrorCode::NotAPartition,
         "(" + std::to_string(mu.p) + "," + std::to_string(mu.q) +
             ") is not a partition");
  }
  return binomial(mu.p + mu.q, mu.q) - binomial(mu.p + mu.q, mu.q - 1);
}

std::map<int, Int> count_degree_classes(int lambda, int target,
                                        const BlobParams& p) {
  const OrbitIndex idx = m_set(lambda, p);
  auto it = std::find(idx.entries.begin(), idx.entries.end(), target);
  if (it == idx.entries.end()) {
    fail(ErrorCode::IndexMismatch,
         "weight " + std::to_string(target) + " is not in M_n(" +
             std::to_string(lambda) + ")");
  }
  int k = static_cast<int>(it - idx.entries.begin()) + 1;
  int stride = idx.position.on_wall() ? 2 : 4;
  if (k % stride != 1 % stride) {
    fail(ErrorCode::IndexMismatch,
         "index " + std::to_string(k) + " of weight " +
             std::to_string(target) + " is not of the form " +
             (idx.position.on_wall() ? "2j+1" : "4j+1"));
  }
  const ResidueClass cls = enumerate_residue_class(lambda, p);
  std::map<int, Int> histogram;
  for (const ClassMember& member : cls.members) {
    if (member.shape_weight == target) ++histogram[member.degree];
  }
  return histogram;
}

}  // namespace blob
