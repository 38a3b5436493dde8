#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <blob/errors.hpp>
#include <blob/params.hpp>
#include <blob/tableaux.hpp>

#include <algorithm>
#include <string>
#include <vector>

using blob::Bitableau;
using blob::BlobError;
using blob::BlobParams;
using blob::ErrorCode;
using blob::Ordering;

namespace {

// Enumerates every sign string of a given length.
std::vector<std::string> all_sign_strings(int n) {
  std::vector<std::string> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::string s(n, '-');
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) s[j] = '+';
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("parsing accepts sign strings and rejects anything else") {
  auto t = blob::parse_bitableau("-+-+++");
  CHECK(t.size() == 6);
  CHECK_THROWS_WITH_AS(blob::parse_bitableau("+-x"), doctest::Contains("MalformedWalk"),
                       BlobError);
  CHECK_THROWS_AS(blob::parse_bitableau("+ -"), BlobError);
  CHECK(blob::parse_bitableau("").size() == 0);
}

TEST_CASE("shape and weight bookkeeping") {
  auto t = blob::parse_bitableau("-+-+++");
  auto shape = blob::shape_of(t);
  CHECK(shape.a == 4);
  CHECK(shape.b == 2);
  CHECK(shape.n() == 6);
  CHECK(shape.weight() == 2);

  CHECK(blob::bipartition_of_weight(2, 6).a == 4);
  CHECK(blob::bipartition_of_weight(-13, 13).b == 13);
  CHECK(blob::bipartition_of_weight(0, 8).a == 4);
  CHECK_THROWS_WITH_AS(blob::bipartition_of_weight(5, 6), doctest::Contains("SizeMismatch"),
                       BlobError);
  CHECK_THROWS_AS(blob::bipartition_of_weight(8, 6), BlobError);
}

TEST_CASE("weights in Lambda_n biject with one-line bipartitions") {
  for (int n = 1; n <= 12; ++n) {
    for (int w = -n; w <= n; w += 2) {
      auto shape = blob::bipartition_of_weight(w, n);
      CHECK(shape.n() == n);
      CHECK(shape.weight() == w);
    }
  }
}

TEST_CASE("sign strings and walks are inverse encodings") {
  for (const auto& signs : all_sign_strings(10)) {
    auto t = blob::parse_bitableau(signs);
    auto w = blob::walk_of(t);
    REQUIRE(w.size() == 11);
    CHECK(w[0] == 0);
    CHECK(w.back() == blob::shape_of(t).weight());
    CHECK(blob::tableau_of(w).signs == signs);
  }
  CHECK_THROWS_AS(blob::tableau_of(blob::Walk{1, 2}), BlobError);
  CHECK_THROWS_AS(blob::tableau_of(blob::Walk{0, 2}), BlobError);
  CHECK_THROWS_AS(blob::tableau_of(blob::Walk{}), BlobError);
}

TEST_CASE("initial tableau zigzags then goes straight") {
  CHECK(blob::t_lambda({4, 2}).signs == "-+-+++");
  CHECK(blob::t_lambda({0, 3}).signs == "---");
  CHECK(blob::t_lambda({1, 1}).signs == "-+");
  CHECK(blob::t_lambda({5, 1}).signs == "-+++++");
  CHECK(blob::t_lambda({3, 3}).signs == "-+-+-+");
  CHECK(blob::t_lambda(-13, 13).signs == std::string(13, '-'));
  CHECK(blob::t_lambda(2, 6).signs == "-+-+++");

  auto w = blob::walk_of(blob::t_lambda({4, 2}));
  CHECK(w == blob::Walk{0, -1, 0, -1, 0, 1, 2});
}

TEST_CASE("residue sequences from nodes and from walks agree on examples") {
  auto p = blob::validate_params(5, 2, 6);
  auto s = blob::parse_bitableau("++++-+");
  CHECK(blob::residue_of_tableau(s, p) == blob::ResidueSequence{1, 2, 3, 4, 4, 0});
  CHECK(blob::residue_via_walk(blob::walk_of(s), p) ==
        blob::ResidueSequence{1, 2, 3, 4, 4, 0});

  auto t = blob::parse_bitableau("+++++-");
  CHECK(blob::residue_of_tableau(t, p) == blob::ResidueSequence{1, 2, 3, 4, 0, 4});

  // Swapping two entries with equal residues fixes the residue sequence.
  auto u = blob::parse_bitableau("+++-++");
  CHECK(blob::residue_of_tableau(u, p) == blob::ResidueSequence{1, 2, 3, 4, 4, 0});
}

TEST_CASE("residue sequences from nodes and from walks agree everywhere") {
  const std::vector<std::pair<int, int>> families = {{5, 2}, {7, 3}, {9, 4}};
  for (auto [l, m] : families) {
    auto p = blob::validate_params(l, m, 12);
    for (int n = 1; n <= 12; ++n) {
      for (const auto& signs : all_sign_strings(n)) {
        auto t = blob::parse_bitableau(signs);
        CHECK(blob::residue_of_tableau(t, p) ==
              blob::residue_via_walk(blob::walk_of(t), p));
      }
    }
  }
}

TEST_CASE("weight order prefers weights close to the axis and negatives on ties") {
  CHECK(blob::weight_order(0, 0) == Ordering::Equal);
  CHECK(blob::weight_order(-3, 3) == Ordering::Greater);
  CHECK(blob::weight_order(3, -3) == Ordering::Less);
  CHECK(blob::weight_order(0, 2) == Ordering::Greater);
  CHECK(blob::weight_order(4, -2) == Ordering::Less);
  CHECK(blob::weight_order(-1, 5) == Ordering::Greater);
  CHECK_THROWS_WITH_AS(blob::weight_order(0, 3), doctest::Contains("SizeMismatch"), BlobError);

  CHECK(blob::bipartition_order({2, 2}, {4, 0}) == Ordering::Greater);
  CHECK(blob::bipartition_order({1, 3}, {3, 1}) == Ordering::Greater);
  CHECK_THROWS_AS(blob::bipartition_order({1, 1}, {2, 1}), BlobError);
}

TEST_CASE("tableau order compares all prefixes") {
  auto s = blob::parse_bitableau("++++-+");
  auto t = blob::parse_bitableau("+++++-");
  CHECK(blob::tableau_order(s, t) == Ordering::Greater);
  CHECK(blob::tableau_order(t, s) == Ordering::Less);
  CHECK(blob::tableau_order(s, s) == Ordering::Equal);

  auto u = blob::parse_bitableau("+--+");
  auto v = blob::parse_bitableau("-++-");
  CHECK(blob::tableau_order(u, v) == Ordering::Incomparable);
  CHECK(blob::tableau_order(v, u) == Ordering::Incomparable);

  CHECK_THROWS_AS(blob::tableau_order(u, s), BlobError);
}

TEST_CASE("transpositions swap adjacent distinct signs") {
  auto s = blob::parse_bitableau("++++-+");
  CHECK(!blob::apply_transposition(s, 1).has_value());
  auto swapped = blob::apply_transposition(s, 5);
  REQUIRE(swapped.has_value());
  CHECK(swapped->signs == "+++++-");
  auto back = blob::apply_transposition(*swapped, 5);
  REQUIRE(back.has_value());
  CHECK(back->signs == s.signs);

  CHECK_THROWS_WITH_AS(blob::apply_transposition(s, 0), doctest::Contains("BadPosition"),
                       BlobError);
  CHECK_THROWS_AS(blob::apply_transposition(s, 6), BlobError);
}

TEST_CASE("degree of hand-checked tableaux") {
  auto p = blob::validate_params(5, 2, 6);
  CHECK(blob::degree_g(blob::parse_bitableau("++++-+"), p) == -1);
  CHECK(blob::degree_g(blob::parse_bitableau("+++++-"), p) == 0);
  CHECK(blob::degree_g(blob::parse_bitableau("+++-++"), p) == 1);

  auto bd = blob::degree_walk(blob::parse_bitableau("++++-+"), p);
  CHECK(bd.a_positions.empty());
  CHECK(bd.r_positions == std::vector<int>{5});
  CHECK(bd.degree == -1);

  auto bd2 = blob::degree_walk(blob::parse_bitableau("+++++-"), p);
  CHECK(bd2.a_positions.empty());
  CHECK(bd2.r_positions.empty());
  CHECK(bd2.degree == 0);

  auto bd3 = blob::degree_walk(blob::parse_bitableau("+++-++"), p);
  CHECK(bd3.a_positions == std::vector<int>{4});
  CHECK(bd3.r_positions.empty());
  CHECK(bd3.degree == 1);
}

TEST_CASE("node-combinatorial and walk degrees agree everywhere") {
  const std::vector<std::pair<int, int>> families = {{5, 2}, {7, 3}};
  for (auto [l, m] : families) {
    auto p = blob::validate_params(l, m, 12);
    for (int n = 1; n <= 12; ++n) {
      for (const auto& signs : all_sign_strings(n)) {
        auto t = blob::parse_bitableau(signs);
        CHECK(blob::degree_g(t, p) == blob::degree_walk(t, p).degree);
      }
    }
  }
}

TEST_CASE("degree changes under a transposition by a cyclic cartan pairing") {
  const std::vector<std::pair<int, int>> families = {{5, 2}, {7, 3}};
  for (auto [l, m] : families) {
    auto p = blob::validate_params(l, m, 10);
    for (int n = 2; n <= 10; ++n) {
      for (const auto& signs : all_sign_strings(n)) {
        auto v = blob::parse_bitableau(signs);
        auto rv = blob::residue_of_tableau(v, p);
        int gv = blob::degree_g(v, p);
        for (int r = 1; r < n; ++r) {
          auto u = blob::apply_transposition(v, r);
          if (!u) continue;
          auto ru = blob::residue_of_tableau(*u, p);
          // The swapped positions carry the same residues in either order.
          CHECK(std::minmax(rv[r - 1], rv[r]) == std::minmax(ru[r - 1], ru[r]));
          auto ord = blob::tableau_order(*u, v);
          REQUIRE(ord != Ordering::Incomparable);
          REQUIRE(ord != Ordering::Equal);
          int gu = blob::degree_g(*u, p);
          int pairing = blob::cartan_entry(rv[r - 1], rv[r], p.l);
          if (ord == Ordering::Greater) {
            CHECK(gu == gv + pairing);
          } else {
            CHECK(gv == gu + pairing);
          }
        }
      }
    }
  }
}

TEST_CASE("the initial tableau is the unique class member at its own shape") {
  auto p = blob::validate_params(5, 2, 10);
  const int n = 10;
  auto all = all_sign_strings(n);
  for (int w = -n; w <= n; w += 2) {
    auto tl = blob::t_lambda(w, n);
    auto target = blob::residue_of_tableau(tl, p);
    CHECK(blob::degree_g(tl, p) == 0);
    auto bd = blob::degree_walk(tl, p);
    CHECK(bd.a_positions.empty());
    CHECK(bd.r_positions.empty());
    for (const auto& signs : all) {
      auto s = blob::parse_bitableau(signs);
      if (blob::residue_of_tableau(s, p) != target) continue;
      if (signs == tl.signs) continue;
      // Any other member of the class lands strictly closer to the axis.
      CHECK(blob::weight_order(blob::shape_of(s).weight(), w) == Ordering::Greater);
    }
  }
}

TEST_CASE("the initial tableau is the unique maximum of its shape") {
  const int n = 10;
  for (int w = -n; w <= n; w += 2) {
    auto tl = blob::t_lambda(w, n);
    for (const auto& signs : all_sign_strings(n)) {
      auto s = blob::parse_bitableau(signs);
      if (blob::shape_of(s).weight() != w) continue;
      auto ord = blob::tableau_order(tl, s);
      if (signs == tl.signs) {
        CHECK(ord == Ordering::Equal);
      } else {
        CHECK(ord == Ordering::Greater);
      }
    }
  }
}

TEST_CASE("initial tableaux have degree zero for every shape") {
  const std::vector<std::pair<int, int>> families = {{5, 2}, {7, 3}, {9, 4}, {7, 5}};
  for (auto [l, m] : families) {
    auto p = blob::validate_params(l, m, 12);
    for (int n = 1; n <= 12; ++n) {
      for (int w = -n; w <= n; w += 2) {
        auto tl = blob::t_lambda(w, n);
        CHECK(blob::degree_g(tl, p) == 0);
        CHECK(blob::degree_walk(tl, p).degree == 0);
      }
    }
  }
}
