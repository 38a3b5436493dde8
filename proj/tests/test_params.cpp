#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <blob/errors.hpp>
#include <blob/params.hpp>

using blob::BlobError;
using blob::ErrorCode;

TEST_CASE("valid parameter triples") {
  auto p = blob::validate_params(5, 2, 6);
  CHECK(p.l == 5);
  CHECK(p.m == 2);
  CHECK(p.n == 6);
  CHECK(p.k == 1);

  CHECK(blob::validate_params(7, 3, 10).k == 5);
  CHECK(blob::validate_params(9, 4, 12).k == 2);
  CHECK(blob::validate_params(7, 5, 16).k == 6);
  CHECK(blob::validate_params(5, 3, 1).k == 4);
}

TEST_CASE("k solves 2k = m mod l") {
  for (int l = 5; l <= 21; l += 2) {
    for (int m = 2; m <= l - 2; ++m) {
      int k = blob::solve_k(l, m);
      CHECK(k >= 0);
      CHECK(k < l);
      CHECK((2 * k) % l == m % l);
    }
  }
}

TEST_CASE("even or too small l is rejected") {
  CHECK_THROWS_WITH_AS(blob::validate_params(4, 2, 6), doctest::Contains("EvenOrSmallL"),
                       BlobError);
  CHECK_THROWS_AS(blob::validate_params(2, 1, 3), BlobError);
  CHECK_THROWS_AS(blob::validate_params(1, 0, 3), BlobError);
  CHECK_THROWS_AS(blob::validate_params(6, 3, 4), BlobError);
  CHECK_THROWS_AS(blob::validate_params(-5, 2, 3), BlobError);
  try {
    blob::validate_params(4, 2, 6);
    CHECK(false);
  } catch (const BlobError& e) {
    CHECK(e.code() == ErrorCode::EvenOrSmallL);
  }
}

TEST_CASE("m out of range is rejected") {
  CHECK_THROWS_WITH_AS(blob::validate_params(5, 1, 4), doctest::Contains("MOutOfRange"),
                       BlobError);
  CHECK_THROWS_AS(blob::validate_params(5, 4, 4), BlobError);
  CHECK_THROWS_AS(blob::validate_params(5, 0, 4), BlobError);
  CHECK_THROWS_AS(blob::validate_params(7, 6, 4), BlobError);
  // l = 3 leaves no admissible m at all.
  CHECK_THROWS_AS(blob::validate_params(3, 1, 4), BlobError);
  CHECK_THROWS_AS(blob::validate_params(3, 2, 4), BlobError);
  try {
    blob::validate_params(5, 1, 4);
    CHECK(false);
  } catch (const BlobError& e) {
    CHECK(e.code() == ErrorCode::MOutOfRange);
    CHECK(blob::is_user_error(e.code()));
  }
}

TEST_CASE("nonpositive n is rejected") {
  CHECK_THROWS_WITH_AS(blob::validate_params(5, 2, 0), doctest::Contains("BadN"), BlobError);
  CHECK_THROWS_AS(blob::validate_params(5, 2, -3), BlobError);
}

TEST_CASE("mod_residue normalizes into [0, l)") {
  CHECK(blob::mod_residue(7, 5) == 2);
  CHECK(blob::mod_residue(-1, 5) == 4);
  CHECK(blob::mod_residue(-13, 5) == 2);
  CHECK(blob::mod_residue(0, 7) == 0);
  CHECK(blob::mod_residue(-21, 7) == 0);
}

TEST_CASE("cyclic cartan matrix entries") {
  int l = 5;
  for (int i = 0; i < l; ++i) {
    CHECK(blob::cartan_entry(i, i, l) == 2);
    CHECK(blob::cartan_entry(i, (i + 1) % l, l) == -1);
    CHECK(blob::cartan_entry((i + 1) % l, i, l) == -1);
    CHECK(blob::cartan_entry(i, (i + 2) % l, l) == 0);
    for (int j = 0; j < l; ++j) {
      CHECK(blob::cartan_entry(i, j, l) == blob::cartan_entry(j, i, l));
    }
  }
  // Adjacency wraps around the cycle.
  CHECK(blob::cartan_entry(0, 4, 5) == -1);
  CHECK(blob::cartan_entry(0, 6, 7) == -1);
}
