#include <doctest.h>

#include <algorithm>

#include "forklat/congruence.hpp"
#include "forklat/fork.hpp"
#include "forklat/generator.hpp"
#include "oracle.hpp"

using namespace forklat;

namespace {

// S7 whose lower cell {o, z_l, z_r, t} received a second fork
Lattice forked_s7() {
  History h;
  h.p = 2;
  h.q = 2;
  h.steps = {{0, 1, 2, 3}, {0, 1, 3, 5}};
  return replay(h);
}

void check_trace(Lattice const& L, ForkResult const& r) {
  auto const& K = r.lattice;
  auto const& tr = r.trace;
  REQUIRE(K.size() == L.size() + 1 + tr.n() + tr.m());
  CHECK(is_sps(K));
  auto const& e = tr.old_to_new;
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      REQUIRE(K.meet(e[a], e[b]) == e[L.meet(a, b)]);
      REQUIRE(K.join(e[a], e[b]) == e[L.join(a, b)]);
    }
  auto side = [&](auto const& x, auto const& y, auto const& z) {
    REQUIRE(x.size() == z.size());
    REQUIRE(y.size() == z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
      CHECK(K.covers(z[k], x[k]));
      CHECK(K.covers(y[k], z[k]));
      CHECK_FALSE(K.covers(y[k], x[k]));
      if (k > 0) {
        CHECK(K.covers(z[k], z[k - 1]));
        // the square {y_k, x_k, y_{k-1}, x_{k-1}} of L
        auto const xo = *tr.new_to_old(x[k]);
        auto const yo = *tr.new_to_old(y[k]);
        auto const xp = *tr.new_to_old(x[k - 1]);
        auto const yp = *tr.new_to_old(y[k - 1]);
        CHECK(L.meet(xo, yp) == yo);
        CHECK(L.join(xo, yp) == xp);
        CHECK(L.covers(yo, xo));
        CHECK(L.covers(yo, yp));
      }
    }
  };
  side(tr.x_l, tr.y_l, tr.z_l);
  side(tr.x_r, tr.y_r, tr.z_r);
  CHECK(tr.x_l.front() == tr.a_l());
  CHECK(tr.y_l.front() == tr.o());
  auto const a = associated_s7(tr);
  CHECK(isomorphic_to(K, a.elements(), s7()));
  auto const all = s7_sublattices(K);
  CHECK(std::any_of(all.begin(), all.end(), [&](auto const& s) {
    return s.elements() == a.elements();
  }));
}

}  // namespace

TEST_SUITE("fork") {

TEST_CASE("C2 x C2 becomes S7") {
  auto const g = grid(2, 2);
  auto const r = insert_fork(g, {0, 1, 2, 3});
  CHECK(r.lattice.size() == 7);
  CHECK(isomorphic(r.lattice, s7()));
  CHECK(r.trace.n() == 1);
  CHECK(r.trace.m() == 1);
  check_trace(g, r);
}

TEST_CASE("C3 x C3, top square") {
  auto const g = grid(3, 3);
  auto const r = insert_fork(g, {4, 5, 7, 8});
  CHECK(r.lattice.size() == 14);
  CHECK(r.trace.n() == 2);
  CHECK(r.trace.m() == 2);
  CHECK(r.trace.new_elements.size() == 5);
  check_trace(g, r);
  auto const kind = classify_square(g, {4, 5, 7, 8});
  CHECK(kind.tag == SquareTag::Tight);
  CHECK(kind.distributive);
}

TEST_CASE("a_l on the boundary stops the left track") {
  auto const g = grid(3, 3);
  // a_l = (0,1) only covers the bottom
  auto const r = insert_fork(g, {0, 1, 3, 4});
  CHECK(r.trace.n() == 1);
  CHECK(r.trace.m() == 1);
  auto const r2 = insert_fork(g, {1, 2, 4, 5});
  CHECK(r2.trace.n() == 1);
  CHECK(r2.trace.m() == 2);
}

TEST_CASE("not a covering square") {
  CHECK_THROWS_AS(insert_fork(grid(2, 2), {0, 2, 1, 3}), LatticeError);
  CHECK_THROWS_AS(insert_fork(grid(3, 3), {0, 1, 3, 8}), LatticeError);
}

TEST_CASE("square classification") {
  auto const s = s7();
  auto const top_left = classify_square(s, {1, 3, 4, 6});
  CHECK(top_left.tag == SquareTag::Wide);
  CHECK_FALSE(top_left.distributive);
  auto const bottom = classify_square(s, {0, 1, 2, 4});
  CHECK(bottom.tag == SquareTag::Tight);
  CHECK(bottom.distributive);
}

TEST_CASE("five prime groups miss the side and chain intervals") {
  auto const r = insert_fork(grid(3, 3), {4, 5, 7, 8});
  auto const& K = r.lattice;
  std::size_t in_groups = 0;
  for (auto const& l : fork_prime_lists(r.trace)) in_groups += l.size();
  auto const all = fork_new_primes(r.trace);
  // n = m = 2: [z_1, t] on both sides and one chain step on each track
  CHECK(all.size() == in_groups + 4);
  std::size_t fresh = 0;
  for (auto p : K.prime_intervals()) {
    auto const a = r.trace.new_to_old(p.bottom);
    auto const b = r.trace.new_to_old(p.top);
    if (!a || !b || !grid(3, 3).covers(*a, *b)) {
      ++fresh;
      CHECK(std::binary_search(all.begin(), all.end(), p));
    }
  }
  CHECK(fresh == all.size());
}

TEST_CASE("trace invariants on random forks") {
  oracle::Gen gen(31);
  for (int round = 0; round < 60; ++round) {
    auto const L = gen.lattice(40).lattice;
    auto const squares = covering_squares(L);
    if (squares.empty()) continue;
    auto const& s = squares[gen.below(squares.size())];
    check_trace(L, insert_fork(L, s));
  }
}

TEST_CASE("a track through an S7 unit loses a congruence") {
  // The right track of the fork at the upper left square of S7 runs
  // through the unit of the lower fork. Collapsing [o, a_l] then forces
  // z_r'' = z_r in L[S], which con_L(o, a_l) does not contain.
  auto const L = forked_s7();
  REQUIRE(L.size() == 10);
  REQUIRE(is_sps(L));
  CoveringSquare const S{2, 3, 8, 9};
  REQUIRE(is_covering_square(L, S));
  CHECK(classify_square(L, S).tag == SquareTag::Wide);
  auto const r = insert_fork(L, S);
  check_trace(L, r);
  CHECK(r.trace.n() == 1);
  CHECK(r.trace.m() == 3);

  oracle::Order big(r.lattice);
  auto const all = oracle::congruences(L);
  CHECK(all.size() == 7);
  std::size_t stuck = 0;
  for (auto const& alpha : all) {
    if (!oracle::extends(big, r.trace.old_to_new, alpha)) {
      ++stuck;
      CHECK(alpha == principal_congruence(L, 2, 3));
    }
  }
  CHECK(stuck == 1);
  auto const conK = ConLattice::compute(r.lattice);
  CHECK(conK.size() == 6);
}

}
