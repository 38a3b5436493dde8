#include "blob/repdims.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <thread>

#include "blob/errors.hpp"
#include "blob/oracle.hpp"

namespace blob {

namespace {

// Base polynomial sum_{i=0..j} |Std(mu_i^j)| t^{2i} shared by the closed
// cell-dimension forms.
LaurentPoly closed_base(int kappa, int j) {
  LaurentPoly base;
  for (int i = 0; i <= j; ++i) {
    base += LaurentPoly::monomial(2 * i,
                                  count_std_two_column(mu_partition(kappa, i, j)));
  }
  return base;
}

LaurentPoly closed_cell_dim(int kappa, bool wall, int k) {
  if (wall) {
    int j = (k - 1) / 2;
    return closed_base(kappa, j).shifted((k - 1) % 2);
  }
  int j = (k - 1) / 4;
  int r = (k - 1) % 4;
  int shift = r == 0 ? 0 : (r == 3 ? 2 : 1);
  return closed_base(kappa, j).shifted(shift);
}

LaurentPoly closed_simple_dim(int kappa, bool wall, int k) {
  int stride = wall ? 2 : 4;
  if (k % stride != 1 % stride) return LaurentPoly();
  int j = (k - 1) / stride;
  return LaurentPoly(count_std_two_column(mu_partition(kappa, 0, j)));
}

int closed_entry_exponent(bool wall, int k) {
  if (wall) return k - 1;
  int j = (k - 1) / 4;
  switch ((k - 1) % 4) {
    case 0: return 2 * j;
    case 1: return 2 * j + 1;
    case 2: return 2 * j + 1;
    default: return 2 * j + 2;
  }
}

std::vector<int> weights_ascending(const BlobParams& p) {
  std::vector<int> weights;
  for (int w = -p.n; w <= p.n; w += 2) weights.push_back(w);
  return weights;
}

}  // namespace

GradedCellDims cell_dims_subalgebra(int lambda, const BlobParams& p) {
  GradedCellDims dims;
  dims.index = m_set(lambda, p);
  const int count = dims.index.size();
  dims.cell.reserve(count);
  dims.simple.reserve(count);
  if (count == 1) {
    dims.cell.push_back(LaurentPoly(Int(1)));
    dims.simple.push_back(LaurentPoly(Int(1)));
    return dims;
  }
  const int kappa = dims.index.position.kappa;
  const bool wall = dims.index.position.on_wall();
  for (int k = 1; k <= count; ++k) {
    dims.cell.push_back(closed_cell_dim(kappa, wall, k));
    dims.simple.push_back(closed_simple_dim(kappa, wall, k));
  }
  return dims;
}

std::vector<LaurentPoly> simple_dims_subalgebra(int lambda,
                                                const BlobParams& p) {
  return cell_dims_subalgebra(lambda, p).simple;
}

LaurentPoly DecompColumn::entry(int mu) const {
  for (int k = 0; k < index.size(); ++k) {
    if (index.entries[k] == mu) return entries[k];
  }
  return LaurentPoly();
}

DecompColumn decomposition_column(int lambda, const BlobParams& p) {
  DecompColumn column;
  column.index = m_set(lambda, p);
  const int count = column.index.size();
  column.entries.reserve(count);
  if (count == 1) {
    column.entries.push_back(LaurentPoly(Int(1)));
    return column;
  }
  const bool wall = column.index.position.on_wall();
  for (int k = 1; k <= count; ++k) {
    column.entries.push_back(
        LaurentPoly::monomial(closed_entry_exponent(wall, k)));
  }
  return column;
}

const DecompColumn& DecompMatrix::column(int lambda) const {
  auto it = std::lower_bound(weights.begin(), weights.end(), lambda);
  if (it == weights.end() || *it != lambda) {
    fail(ErrorCode::SizeMismatch,
         "weight " + std::to_string(lambda) + " is not in Lambda_" +
             std::to_string(params.n));
  }
  return columns[it - weights.begin()];
}

LaurentPoly DecompMatrix::entry(int mu, int lambda) const {
  return column(lambda).entry(mu);
}

DecompMatrix decomposition_matrix(const BlobParams& p, int threads) {
  DecompMatrix matrix;
  matrix.params = p;
  matrix.weights = weights_ascending(p);
  matrix.columns.resize(matrix.weights.size());
  const int count = static_cast<int>(matrix.weights.size());
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) {
      matrix.columns[i] = decomposition_column(matrix.weights[i], p);
    }
    return matrix;
  }
  std::vector<std::thread> workers;
  const int worker_count = std::min(threads, count);
  for (int w = 0; w < worker_count; ++w) {
    workers.emplace_back([&, w]() {
      for (int i = w; i < count; i += worker_count) {
        matrix.columns[i] = decomposition_column(matrix.weights[i], p);
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  return matrix;
}

LaurentPoly cell_dim_full(int mu, const BlobParams& p, int max_n) {
  if (p.n > max_n) {
    fail(ErrorCode::TooLarge,
         "full cell-module sweeps are bounded at n=" + std::to_string(max_n) +
             ", got n=" + std::to_string(p.n));
  }
  const OneLineBipartition shape = bipartition_of_weight(mu, p.n);
  std::string signs(shape.a, '+');
  signs.append(shape.b, '-');
  LaurentPoly dim;
  do {
    dim += LaurentPoly::monomial(degree_g(Bitableau{signs}, p));
  } while (std::next_permutation(signs.begin(), signs.end()));
  return dim;
}

std::map<int, LaurentPoly> simple_dims_full(const BlobParams& p) {
  const DecompMatrix matrix = decomposition_matrix(p);
  std::vector<int> order = weights_ascending(p);
  std::sort(order.begin(), order.end(), [](int a, int b) {
    return weight_order(a, b) == Ordering::Less;
  });
  std::map<int, LaurentPoly> simple;
  for (int mu : order) {
    LaurentPoly dim = cell_dim_full(mu, p);
    for (const auto& [lambda, known] : simple) {
      LaurentPoly multiplicity = matrix.entry(mu, lambda);
      if (multiplicity.is_zero()) continue;
      dim -= multiplicity * known;
    }
    if (dim.has_negative_coefficient()) {
      fail(ErrorCode::InconsistentData,
           "simple dimension at weight " + std::to_string(mu) +
               " came out as " + dim.to_string());
    }
    simple[mu] = dim;
  }
  return simple;
}

bool ConsistencyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

ConsistencyReport verify_consistency(const BlobParams& p, int threads) {
  ConsistencyReport report;
  report.params = p;
  const std::vector<int> weights = weights_ascending(p);
  const DecompMatrix matrix = decomposition_matrix(p, threads);

  std::map<int, LaurentPoly> simple;
  bool recursion_ok = true;
  std::string recursion_detail;
  try {
    simple = simple_dims_full(p);
  } catch (const BlobError& e) {
    recursion_ok = false;
    recursion_detail = e.what();
  }

  {
    bool pass = recursion_ok;
    std::string detail = recursion_detail;
    if (recursion_ok) {
      for (int mu : weights) {
        LaurentPoly total;
        for (int lambda : weights) {
          LaurentPoly multiplicity = matrix.entry(mu, lambda);
          if (multiplicity.is_zero()) continue;
          total += multiplicity * simple.at(lambda);
        }
        if (total != cell_dim_full(mu, p)) {
          pass = false;
          detail = "identity fails at weight " + std::to_string(mu);
          break;
        }
      }
    }
    if (pass) {
      detail = "cell dimensions match the simple expansion at all " +
               std::to_string(weights.size()) + " weights";
    }
    report.checks.push_back({"graded dimension identity", pass, detail});
  }

  {
    bool pass = recursion_ok;
    std::string detail = recursion_detail;
    if (recursion_ok) {
      for (const auto& [lambda, dim] : simple) {
        if (dim.is_zero() || dim.has_negative_coefficient()) {
          pass = false;
          detail = "simple dimension at weight " + std::to_string(lambda) +
                   " is " + dim.to_string();
          break;
        }
      }
    }
    if (pass) detail = "all simple dimensions are nonzero and nonnegative";
    report.checks.push_back({"simple dimension positivity", pass, detail});
  }

  {
    bool pass = true;
    std::string detail;
    for (const DecompColumn& column : matrix.columns) {
      for (const LaurentPoly& entry : column.entries) {
        Int value = entry.eval_at_one();
        if (value != 0 && value != 1) {
          pass = false;
          detail = "entry " + entry.to_string() + " in column " +
                   std::to_string(column.index.lambda) +
                   " specializes to " + value.str();
        }
      }
    }
    if (pass) detail = "every entry specializes to 0 or 1 at t=1";
    report.checks.push_back({"ungraded entries are 0 or 1", pass, detail});
  }

  {
    bool pass = true;
    std::string detail;
    for (int lambda : weights) {
      const DecompColumn& column = matrix.column(lambda);
      for (int mu : weights) {
        LaurentPoly entry = column.entry(mu);
        if (mu == lambda) {
          if (entry != LaurentPoly(Int(1))) {
            pass = false;
            detail = "diagonal entry at weight " + std::to_string(lambda) +
                     " is " + entry.to_string();
          }
        } else if (!entry.is_zero() &&
                   weight_order(mu, lambda) != Ordering::Greater) {
          pass = false;
          detail = "nonzero entry below the diagonal at (mu=" +
                   std::to_string(mu) + ", lambda=" + std::to_string(lambda) +
                   ")";
        }
      }
    }
    if (pass) detail = "unit diagonal and support strictly above each weight";
    report.checks.push_back({"triangularity", pass, detail});
  }

  {
    bool pass = true;
    std::string detail;
    int verified = 0;
    std::vector<std::string> failures(weights.size());
    std::vector<int> counts(weights.size(), 0);
    auto sweep = [&](int begin, int step) {
      for (std::size_t i = begin; i < weights.size(); i += step) {
        int lambda = weights[i];
        const GradedCellDims dims = cell_dims_subalgebra(lambda, p);
        const ResidueClass cls = enumerate_residue_class(lambda, p);
        for (int k = 0; k < dims.index.size(); ++k) {
          LaurentPoly oracle =
              cell_dim_from_class(cls, dims.index.entries[k]);
          if (oracle != dims.cell[k]) {
            failures[i] = "closed form " + dims.cell[k].to_string() +
                          " vs oracle " + oracle.to_string() +
                          " at (lambda=" + std::to_string(lambda) +
                          ", index " + std::to_string(k + 1) + ")";
            return;
          }
          ++counts[i];
        }
      }
    };
    if (threads <= 1) {
      sweep(0, 1);
    } else {
      std::vector<std::thread> workers;
      int worker_count =
          std::min<int>(threads, static_cast<int>(weights.size()));
      for (int w = 0; w < worker_count; ++w) {
        workers.emplace_back(sweep, w, worker_count);
      }
      for (std::thread& worker : workers) worker.join();
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!failures[i].empty()) {
        pass = false;
        detail = failures[i];
        break;
      }
      verified += counts[i];
    }
    if (pass) {
      detail = "closed subalgebra dimensions match the oracle at " +
               std::to_string(verified) + " (weight, index) pairs";
    }
    report.checks.push_back(
        {"closed forms vs enumeration oracle", pass, detail});
  }

  if (recursion_ok) {
    for (const auto& [lambda, dim] : simple) {
      if (!dim.is_bar_symmetric()) {
        report.warnings.push_back(
            "simple dimension at weight " + std::to_string(lambda) +
            " is not bar-symmetric: " + dim.to_string());
      }
    }
  }

  return report;
}

}  // namespace blob
