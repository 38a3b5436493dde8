#pragma once

namespace blob {

/**
 * Validated parameter bundle for the algebra at a root of unity.
 *
 * l is the quantum characteristic (odd; l = 3 admits no valid m, so l >= 5
 * in practice), m the blob weight with 2 <= m <= l-2, k the unique residue
 * in {0,...,l-1} with 2k = m (mod l), and n the number of strands.
 */
struct BlobParams {
  int l;
  int m;
  int k;
  int n;
};

// x reduced to {0,...,l-1}.
int mod_residue(long long x, int l);

// Unique residue k with 2k = m (mod l); closed form m*(l+1)/2 mod l.
// Requires l odd >= 3 and 0 < m < l.
int solve_k(int l, int m);

// Checks l odd >= 3, 2 <= m <= l-2 and n >= 1, then fills in k.
// Throws EvenOrSmallL, MOutOfRange or BadN.
BlobParams validate_params(int l, int m, int n);

// Entry a_ij of the cyclic Cartan matrix on residues mod l: 2 on the
// diagonal, -1 when i = j +- 1 (mod l), 0 otherwise. Requires l >= 3.
int cartan_entry(int i, int j, int l);

}  // namespace blob
