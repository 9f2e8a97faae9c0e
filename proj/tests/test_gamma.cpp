#include <doctest.h>

#include "forklat/congruence.hpp"
#include "forklat/gamma.hpp"
#include "forklat/generator.hpp"
#include "oracle.hpp"

using namespace forklat;

TEST_SUITE("gamma") {

TEST_CASE("C3 x C3 top square: doubletons along both tracks") {
  auto const g = grid(3, 3);
  auto const r = insert_fork(g, {4, 5, 7, 8});
  auto const& K = r.lattice;
  auto const& tr = r.trace;
  auto const gamma = principal_congruence(K, tr.t, tr.i());
  auto const expect = Partition::from_blocks(
      K.size(), {{tr.t, tr.i()},
                 {tr.z_l[0], tr.x_l[0]},
                 {tr.z_l[1], tr.x_l[1]},
                 {tr.z_r[0], tr.x_r[0]},
                 {tr.z_r[1], tr.x_r[1]}});
  CHECK(gamma == expect);
  CHECK(gamma_direct_distributive(K, tr) == gamma);
  auto const prot = find_protrusions(g, tr);
  CHECK(prot.empty());
  auto const pc = protrusion_congruence(g, K, tr, prot);
  CHECK(pc.pi.is_identity());
  CHECK(gamma_direct_tight(K, tr, prot, pc.pi) == gamma);
  CHECK(restrict(gamma, tr.old_to_new).is_identity());
  auto const G = gamma_prime_set(tr);
  CHECK(G.size() == 5);
  for (auto p : G) CHECK(principal_congruence(K, p.bottom, p.top) == gamma);
}

TEST_CASE("single fork into a grid has no protrusion") {
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t q = 2; q <= 4; ++q) {
      auto const g = grid(p, q);
      for (auto const& s : covering_squares(g)) {
        auto const r = insert_fork(g, s);
        CHECK(find_protrusions(g, r.trace).empty());
        CHECK(gamma_direct_distributive(r.lattice, r.trace)
              == principal_congruence(r.lattice, r.trace.t, r.trace.i()));
      }
    }
}

TEST_CASE("protrusion at x_2 with extensions x_4, x_5, x_6") {
  auto const g = random_sps(11, {3, 4, 40});
  auto const& L = g.lattice;
  CoveringSquare const S{11, 20, 12, 21};
  REQUIRE(is_covering_square(L, S));
  auto const r = insert_fork(L, S);
  auto const prot = find_protrusions(L, r.trace);
  REQUIRE(prot.left.size() == 1);
  CHECK(prot.right.empty());
  auto const& p = prot.left[0];
  CHECK(p.position == 2);
  CHECK(p.last_extension == 6);
  CHECK(p.companions.size() == 3);
  for (std::size_t j = 4; j <= 6; ++j) CHECK(p.is_extension(j));
  CHECK_FALSE(p.is_extension(3));

  auto const& K = r.lattice;
  auto const& tr = r.trace;
  auto const gamma = principal_congruence(K, tr.t, tr.i());
  auto const pc = protrusion_congruence(L, K, tr, prot);
  CHECK(pc.pi == principal_congruence(L, *tr.new_to_old(tr.y_l[2]),
                                      *tr.new_to_old(tr.y_l[1])));
  CHECK(restrict(gamma, tr.old_to_new) == pc.pi);
  CHECK(gamma_direct_tight_resolved(K, tr, prot, pc.pi_bar) == gamma);
  // each extension class {a_j, x_j, z_j}
  for (std::size_t j = 4; j <= 6; ++j) {
    CHECK(gamma.same(p.companion(j), tr.x_l[j - 1]));
    CHECK(gamma.same(tr.z_l[j - 1], tr.x_l[j - 1]));
  }
  // the protrusion class {x_2, x_3, z_2, z_3} and {y_2, y_3}
  CHECK(gamma.same(tr.x_l[1], tr.x_l[2]));
  CHECK(gamma.same(tr.z_l[1], tr.x_l[2]));
  CHECK(gamma.same(tr.y_l[1], tr.y_l[2]));
}

TEST_CASE("protrusions on both tracks") {
  auto const g = random_sps(0, {3, 4, 40});
  auto const& L = g.lattice;
  CoveringSquare const S{16, 20, 17, 22};
  REQUIRE(is_covering_square(L, S));
  auto const r = insert_fork(L, S);
  auto const& K = r.lattice;
  auto const& tr = r.trace;
  auto const prot = find_protrusions(L, tr);
  CHECK(prot.left.size() == 1);
  CHECK(prot.right.size() == 1);
  auto const pc = protrusion_congruence(L, K, tr, prot);
  auto const gamma = principal_congruence(K, tr.t, tr.i());
  CHECK(pc.pi == partition_join(pc.parts[0], pc.parts[1]));
  CHECK(pc.pi_bar.refines(gamma));
  CHECK(restrict(gamma, tr.old_to_new) == pc.pi);
  CHECK(gamma_direct_tight_resolved(K, tr, prot, pc.pi_bar) == gamma);
  CHECK(lift_by_tracks(tr, K.size(), pc.pi) == pc.pi_bar);
}

TEST_CASE("direct gamma equals the oracle on random tight squares") {
  oracle::Gen gen(44);
  int protruding = 0;
  for (int round = 0; round < 80; ++round) {
    auto const L = gen.lattice(45).lattice;
    for (auto const& s : covering_squares(L)) {
      auto const kind = classify_square(L, s);
      if (kind.tag != SquareTag::Tight) continue;
      auto const r = insert_fork(L, s);
      auto const& K = r.lattice;
      auto const gamma = principal_congruence(K, r.trace.t, r.trace.i());
      if (kind.distributive) {
        REQUIRE(gamma_direct_distributive(K, r.trace) == gamma);
        continue;
      }
      auto const prot = find_protrusions(L, r.trace);
      protruding += !prot.empty();
      auto const pc = protrusion_congruence(L, K, r.trace, prot);
      REQUIRE(gamma_direct_tight_resolved(K, r.trace, prot, pc.pi_bar) == gamma);
      try {
        auto const listed = gamma_direct_tight(K, r.trace, prot, pc.pi);
        CHECK(listed == gamma);
      } catch (LatticeError const& e) {
        CHECK(e.kind() == LatticeError::Kind::ClassClash);
      }
    }
  }
  CHECK(protruding > 0);
}

}
