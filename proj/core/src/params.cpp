#include "blob/params.hpp"

#include <string>

#include "blob/errors.hpp"

namespace blob {

int mod_residue(long long x, int l) {
  long long r = x % l;
  if (r < 0) r += l;
  return static_cast<int>(r);
}

int solve_k(int l, int m) {
  return mod_residue(static_cast<long long>(m) * ((l + 1) / 2), l);
}

BlobParams validate_params(int l, int m, int n) {
  if (l < 3 || l % 2 == 0) {
    fail(ErrorCode::EvenOrSmallL,
         "l must be an odd integer >= 3, got l=" + std::to_string(l));
  }
  if (m <= 1 || m >= l - 1) {
    fail(ErrorCode::MOutOfRange,
         "m must satisfy 2 <= m <= l-2, got m=" + std::to_string(m) +
             " with l=" + std::to_string(l));
  }
  if (n < 1) {
    fail(ErrorCode::BadN, "n must be positive, got n=" + std::to_string(n));
  }
  return BlobParams{l, m, solve_k(l, m), n};
}

int cartan_entry(int i, int j, int l) {
  int a = mod_residue(i, l);
  int b = mod_residue(j, l);
  if (a == b) return 2;
  if ((a + 1) % l == b || (b + 1) % l == a) return -1;
  return 0;
}

}  // namespace blob
