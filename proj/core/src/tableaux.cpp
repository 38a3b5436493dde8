#include "blob/tableaux.hpp"

#include <cstdlib>
#include <string>

#include "blob/errors.hpp"

namespace blob {

Bitableau parse_bitableau(const std::string& text) {
  for (char ch : text) {
    if (ch != '+' && ch != '-') {
      fail(ErrorCode::MalformedWalk,
           "sign string may contain only '+' and '-', got '" + text + "'");
    }
  }
  return Bitableau{text};
}

OneLineBipartition shape_of(const Bitableau& t) {
  int a = 0;
  for (char ch : t.signs) {
    if (ch == '+') ++a;
  }
  return OneLineBipartition{a, t.size() - a};
}

OneLineBipartition bipartition_of_weight(int weight, int n) {
  if (std::abs(weight) > n || (n - std::abs(weight)) % 2 != 0) {
    fail(ErrorCode::SizeMismatch,
         "weight " + std::to_string(weight) + " is not in Lambda_" +
             std::to_string(n));
  }
  return OneLineBipartition{(n + weight) / 2, (n - weight) / 2};
}

Walk walk_of(const Bitableau& t) {
  Walk w;
  w.reserve(t.size() + 1);
  w.push_back(0);
  for (char ch : t.signs) w.push_back(w.back() + (ch == '+' ? 1 : -1));
  return w;
}

Bitableau tableau_of(const Walk& w) {
  if (w.empty() || w[0] != 0) {
    fail(ErrorCode::MalformedWalk, "walk must start at weight 0");
  }
  std::string signs;
  signs.reserve(w.size() - 1);
  for (std::size_t j = 1; j < w.size(); ++j) {
    int step = w[j] - w[j - 1];
    if (step == 1) {
      signs.push_back('+');
    } else if (step == -1) {
      signs.push_back('-');
    } else {
      fail(ErrorCode::MalformedWalk,
           "walk steps must be +-1, got " + std::to_string(step) +
               " at level " + std::to_string(j));
    }
  }
  return Bitableau{std::move(signs)};
}

Bitableau t_lambda(const OneLineBipartition& lambda) {
  int c = std::min(lambda.a, lambda.b);
  char tail = lambda.a >= lambda.b ? '+' : '-';
  std::string signs;
  signs.reserve(lambda.n());
  for (int j = 1; j <= lambda.n(); ++j) {
    if (j <= 2 * c) {
      signs.push_back(j % 2 == 0 ? '+' : '-');
    } else {
      signs.push_back(tail);
    }
  }
  return Bitableau{std::move(signs)};
}

Bitableau t_lambda(int weight, int n) {
  return t_lambda(bipartition_of_weight(weight, n));
}

ResidueSequence residue_of_tableau(const Bitableau& t, const BlobParams& p) {
  ResidueSequence out;
  out.reserve(t.size());
  int a = 0;
  int b = 0;
  for (char ch : t.signs) {
    if (ch == '+') {
      ++a;
      out.push_back(mod_residue(a - 1 + p.k, p.l));
    } else {
      ++b;
      out.push_back(mod_residue(b - 1 - p.k, p.l));
    }
  }
  return out;
}

ResidueSequence residue_via_walk(const Walk& w, const BlobParams& p) {
  if (w.empty() || w[0] != 0) {
    fail(ErrorCode::MalformedWalk, "walk must start at weight 0");
  }
  const int inv2 = (p.l + 1) / 2;
  ResidueSequence out;
  out.reserve(w.size() - 1);
  for (std::size_t j = 1; j < w.size(); ++j) {
    int step = w[j] - w[j - 1];
    if (step != 1 && step != -1) {
      fail(ErrorCode::MalformedWalk,
           "walk steps must be +-1, got " + std::to_string(step) +
               " at level " + std::to_string(j));
    }
    long long doubled = static_cast<long long>(j) - 2 +
                        static_cast<long long>(step) * (w[j] + p.m);
    out.push_back(mod_residue(mod_residue(doubled, p.l) *
                                  static_cast<long long>(inv2),
                              p.l));
  }
  return out;
}

Ordering weight_order(int a, int b) {
  if ((a - b) % 2 != 0) {
    fail(ErrorCode::SizeMismatch,
         "weights " + std::to_string(a) + " and " + std::to_string(b) +
             " have different parity");
  }
  if (a == b) return Ordering::Equal;
  if (std::abs(a) != std::abs(b)) {
    return std::abs(a) < std::abs(b) ? Ordering::Greater : Ordering::Less;
  }
  return a < b ? Ordering::Greater : Ordering::Less;
}

Ordering bipartition_order(const OneLineBipartition& lhs,
                           const OneLineBipartition& rhs) {
  if (lhs.n() != rhs.n()) {
    fail(ErrorCode::SizeMismatch,
         "bipartitions of sizes " + std::to_string(lhs.n()) + " and " +
             std::to_string(rhs.n()) + " are not comparable");
  }
  return weight_order(lhs.weight(), rhs.weight());
}

Ordering tableau_order(const Bitableau& s, const Bitableau& t) {
  if (s.size() != t.size()) {
    fail(ErrorCode::SizeMismatch,
         "bitableaux of sizes " + std::to_string(s.size()) + " and " +
             std::to_string(t.size()) + " are not comparable");
  }
  bool ge = true;
  bool le = true;
  int ws = 0;
  int wt = 0;
  for (int j = 0; j < s.size(); ++j) {
    ws += s.signs[j] == '+' ? 1 : -1;
    wt += t.signs[j] == '+' ? 1 : -1;
    switch (weight_order(ws, wt)) {
      case Ordering::Greater:
        le = false;
        break;
      case Ordering::Less:
        ge = false;
        break;
      default:
        break;
    }
  }
  if (ge && le) return Ordering::Equal;
  if (ge) return Ordering::Greater;
  if (le) return Ordering::Less;
  return Ordering::Incomparable;
}

std::optional<Bitableau> apply_transposition(const Bitableau& t, int r) {
  if (r < 1 || r >= t.size()) {
    fail(ErrorCode::BadPosition,
         "transposition position must satisfy 1 <= r <= n-1, got r=" +
             std::to_string(r) + " with n=" + std::to_string(t.size()));
  }
  if (t.signs[r - 1] == t.signs[r]) return std::nullopt;
  Bitableau swapped = t;
  std::swap(swapped.signs[r - 1], swapped.signs[r]);
  return swapped;
}

int degree_g(const Bitableau& t, const BlobParams& p) {
  const int l = p.l;
  const int k = p.k;
  int a = 0;
  int b = 0;
  int degree = 0;
  for (char ch : t.signs) {
    int node_col;
    int node_comp;
    int node_res;
    if (ch == '+') {
      ++a;
      node_col = a;
      node_comp = 1;
      node_res = mod_residue(a - 1 + k, l);
    } else {
      ++b;
      node_col = b;
      node_comp = 2;
      node_res = mod_residue(b - 1 - k, l);
    }
    // A node at column c in component d lies below the placed node when
    // c > node_col, or c = node_col with d = 1 and the placed node in
    // component 2.
    auto below = [&](int col, int comp) {
      return col > node_col ||
             (col == node_col && comp == 1 && node_comp == 2);
    };
    // Addable nodes of the truncated shape: (a+1, comp 1), (b+1, comp 2).
    if (below(a + 1, 1) && mod_residue(a + k, l) == node_res) ++degree;
    if (below(b + 1, 2) && mod_residue(b - k, l) == node_res) ++degree;
    // Removable nodes: (a, comp 1) and (b, comp 2) when nonempty; the
    // placed node itself is never below itself.
    if (a > 0 && below(a, 1) && mod_residue(a - 1 + k, l) == node_res) {
      --degree;
    }
    if (b > 0 && below(b, 2) && mod_residue(b - 1 - k, l) == node_res) {
      --degree;
    }
  }
  return degree;
}

DegreeBreakdown degree_walk(const Bitableau& t, const BlobParams& p) {
  const Walk w = walk_of(t);
  const int l = p.l;
  const int wall = mod_residue(-p.m, l);
  const int above = mod_residue(-p.m + 1, l);
  const int below = mod_residue(-p.m - 1, l);
  DegreeBreakdown out;
  for (int j = 1; j <= t.size(); ++j) {
    int prev = mod_residue(w[j - 1], l);
    int cur = mod_residue(w[j], l);
    if (w[j] < 0 && prev == wall && cur == above) out.a_positions.push_back(j);
    if (w[j] > 0 && prev == wall && cur == below) out.a_positions.push_back(j);
    if (w[j] < 0 && prev == below && cur == wall) out.r_positions.push_back(j);
    if (w[j] > 0 && prev == above && cur == wall) out.r_positions.push_back(j);
  }
  out.degree = static_cast<int>(out.a_positions.size()) -
               static_cast<int>(out.r_positions.size());
  return out;
}

}  // namespace blob
