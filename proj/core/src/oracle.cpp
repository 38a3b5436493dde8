#include "blob/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "blob/errors.hpp"

namespace blob {

namespace {

void extend_walk(Walk& walk, const ResidueSequence& target,
                 const BlobParams& p, std::vector<ClassMember>& members) {
  const int j = static_cast<int>(walk.size());
  if (j == p.n + 1) {
    Bitableau t = tableau_of(walk);
    members.push_back(ClassMember{t, walk.back(), degree_g(t, p)});
    return;
  }
  const int inv2 = (p.l + 1) / 2;
  for (int step : {1, -1}) {
    int next = walk.back() + step;
    long long doubled = static_cast<long long>(j) - 2 +
                        static_cast<long long>(step) * (next + p.m);
    int r = mod_residue(mod_residue(doubled, p.l) *
                            static_cast<long long>(inv2),
                        p.l);
    if (r != target[j - 1]) continue;
    walk.push_back(next);
    extend_walk(walk, target, p, members);
    walk.pop_back();
  }
}

}  // namespace

ResidueClass enumerate_residue_class(int lambda, const BlobParams& p,
                                     const EnumerationLimits& limits) {
  if (p.n > limits.class_max_n) {
    fail(ErrorCode::TooLarge,
         "residue-class enumeration is bounded at n=" +
             std::to_string(limits.class_max_n) + ", got n=" +
             std::to_string(p.n));
  }
  ResidueClass cls;
  cls.lambda = lambda;
  cls.target = residue_of_tableau(t_lambda(lambda, p.n), p);
  Walk walk{0};
  extend_walk(walk, cls.target, p, cls.members);
  return cls;
}

LaurentPoly cell_dim_from_class(const ResidueClass& cls, int mu) {
  LaurentPoly dim;
  for (const ClassMember& member : cls.members) {
    if (member.shape_weight == mu) dim += LaurentPoly::monomial(member.degree);
  }
  return dim;
}

LaurentPoly oracle_cell_dim_subalgebra(int lambda, int mu,
                                       const BlobParams& p,
                                       const EnumerationLimits& limits) {
  return cell_dim_from_class(enumerate_residue_class(lambda, p, limits), mu);
}

namespace {

long long count_two_row_fillings(int p_row, int q_row, int r1, int r2) {
  if (r1 == p_row && r2 == q_row) return 1;
  long long total = 0;
  if (r1 < p_row) total += count_two_row_fillings(p_row, q_row, r1 + 1, r2);
  if (r2 < q_row && r2 < r1) {
    total += count_two_row_fillings(p_row, q_row, r1, r2 + 1);
  }
  return total;
}

}  // namespace

Int oracle_count_std(int p_row, int q_row) {
  if (q_row < 0 || p_row < q_row) {
    fail(ErrorCode::NotAPartition,
         "(" + std::to_string(p_row) + "," + std::to_string(q_row) +
             ") is not a partition");
  }
  if (p_row + q_row > 20) {
    fail(ErrorCode::TooLarge,
         "standard-filling enumeration is bounded at p+q=20, got " +
             std::to_string(p_row + q_row));
  }
  return Int(count_two_row_fillings(p_row, q_row, 0, 0));
}

namespace {

// Solves the triangular system of enumerated cell dimensions, one base
// weight at a time. Columns of intermediate weights are resolved
// recursively and cached; decomposition numbers restrict unchanged to the
// subalgebra, so entries already solved for a larger base weight can be
// reused as known quantities.
class ColumnSolver {
 public:
  ColumnSolver(const BlobParams& p, const EnumerationLimits& limits)
      : _p(p), _limits(limits) {}

  const std::map<int, LaurentPoly>& solve(int lambda) {
    auto cached = _columns.find(lambda);
    if (cached != _columns.end()) return cached->second;

    const ResidueClass cls = enumerate_residue_class(lambda, _p, _limits);
    std::map<int, LaurentPoly> dims;
    for (const ClassMember& member : cls.members) {
      dims[member.shape_weight] += LaurentPoly::monomial(member.degree);
    }
    std::vector<int> shapes;
    shapes.reserve(dims.size());
    for (const auto& [shape, dim] : dims) shapes.push_back(shape);
    std::sort(shapes.begin(), shapes.end(), [](int a, int b) {
      return weight_order(a, b) == Ordering::Less;
    });
    if (shapes.empty() || shapes.front() != lambda) {
      fail(ErrorCode::NotSolvable,
           "residue class of weight " + std::to_string(lambda) +
               " does not have lambda as its minimal shape");
    }

    std::map<int, Int> simple;
    std::map<int, LaurentPoly> column;
    for (int nu : shapes) {
      LaurentPoly residual = dims[nu];
      for (int mu : shapes) {
        if (mu == nu) break;
        if (mu == lambda || simple[mu] == 0) continue;
        const std::map<int, LaurentPoly>& mu_column = solve(mu);
        auto entry = mu_column.find(nu);
        if (entry == mu_column.end()) continue;
        residual -= entry->second * LaurentPoly(simple[mu]);
      }
      if (nu == lambda && residual != LaurentPoly(Int(1))) {
        fail(ErrorCode::NotSolvable,
             "cell dimension at the minimal shape of weight " +
                 std::to_string(lambda) + " is " + residual.to_string() +
                 ", expected 1");
      }
      if (residual.has_negative_coefficient() ||
          (!residual.is_zero() && residual.min_exponent() < 0)) {
        fail(ErrorCode::NotSolvable,
             "residual " + residual.to_string() + " at shape " +
                 std::to_string(nu) + " for base weight " +
                 std::to_string(lambda) +
                 " violates the solvability assumptions");
      }
      simple[nu] = residual.coefficient(0);
      column[nu] = residual - LaurentPoly(simple[nu]);
    }
    column[lambda] = LaurentPoly(Int(1));
    return _columns.emplace(lambda, std::move(column)).first->second;
  }

 private:
  BlobParams _p;
  EnumerationLimits _limits;
  std::map<int, std::map<int, LaurentPoly>> _columns;
};

}  // namespace

std::map<int, LaurentPoly> oracle_decomposition_column(
    int lambda, const BlobParams& p, const EnumerationLimits& limits) {
  ColumnSolver solver(p, limits);
  return solver.solve(lambda);
}

}  // namespace blob
