#include <doctest.h>

#include <regex>

#include "forklat/generator.hpp"
#include "forklat/io.hpp"
#include "oracle.hpp"

using namespace forklat;

TEST_SUITE("generator") {

TEST_CASE("no forks gives the base grid") {
  GeneratorParams p;
  p.forks = 0;
  p.base_p = 3;
  p.base_q = 2;
  auto const g = random_sps(5, p);
  CHECK(g.lattice == grid(3, 2));
  CHECK(g.history.steps.empty());
}

TEST_CASE("seeded and replayable") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto const a = random_sps(seed);
    auto const b = random_sps(seed);
    CHECK(a.history == b.history);
    CHECK(a.lattice == b.lattice);
    CHECK(replay(a.history) == a.lattice);
    CHECK(is_sps(a.lattice));
    CHECK(a.lattice.size() <= 60);
  }
}

TEST_CASE("size cap is respected") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto const g = random_sps(seed, {4, 10, 20});
    CHECK(g.lattice.size() <= 20);
  }
}

TEST_CASE("a chain has nothing to fork") {
  GeneratorParams p;
  p.base_p = 1;
  p.base_q = 4;
  CHECK_THROWS_AS(random_sps(0, p), LatticeError);
}

TEST_CASE("replay rejects a bad step") {
  History h;
  h.p = 2;
  h.q = 2;
  h.steps = {{0, 2, 1, 3}};
  CHECK_THROWS_AS(replay(h), LatticeError);
}

}

TEST_SUITE("io") {

TEST_CASE("lattice JSON round trip is byte stable") {
  oracle::Gen gen(3);
  for (int round = 0; round < 30; ++round) {
    auto const L = gen.lattice(50).lattice;
    auto const text = canonical_dump(lattice_to_json(L));
    auto const back = lattice_from_json(json::parse(text));
    CHECK(back == L);
    CHECK(canonical_dump(lattice_to_json(back)) == text);
  }
}

TEST_CASE("C2 x C2 JSON") {
  CHECK(canonical_dump(lattice_to_json(grid(2, 2)))
        == "{\"covers\":[[0,1],[0,2],[1,3],[2,3]],\"left_order\":[[],[0],[1],[2,3]],\"n\":4}\n");
}

TEST_CASE("malformed lattices") {
  auto bad = [](char const* text) {
    CHECK_THROWS_AS(lattice_from_json(json::parse(text)), LatticeError);
  };
  bad("{}");
  bad("{\"n\": 0, \"covers\": []}");
  bad("{\"n\": 2, \"covers\": [[0, 5]]}");
  bad("{\"n\": 2, \"covers\": [[0]]}");
  bad("{\"n\": 3, \"covers\": [[0, 1], [0, 2]]}");
  bad("{\"n\": 2, \"covers\": [[0, 1]], \"left_order\": [[], [3]]}");
  bad("{\"n\": 2, \"covers\": [[0, 1]], \"left_order\": [[0], []]}");
  bad("{\"n\": \"two\", \"covers\": []}");
}

TEST_CASE("history and partition JSON") {
  auto const g = random_sps(9);
  auto const j = history_to_json(g.history);
  CHECK(history_from_json(j) == g.history);
  CHECK(j.at("base").size() == 2);
  auto const p = Partition::from_blocks(4, {{0, 3}, {1}, {2}});
  CHECK(partition_from_json(partition_to_json(p), 4) == p);
  CHECK_THROWS_AS(partition_from_json(json::parse("{\"blocks\": [[0, 1]]}"), 3),
                  LatticeError);
}

TEST_CASE("trace roles") {
  auto const r = insert_fork(grid(2, 2), {0, 1, 2, 3});
  auto const j = trace_to_json(r.trace);
  auto const roles = j.at("roles").get<std::vector<std::string>>();
  REQUIRE(roles.size() == 7);
  CHECK(roles[r.trace.t] == "t");
  CHECK(roles[r.trace.z_l[0]] == "z_l1");
  CHECK(roles[r.trace.i()] == "i");
}

TEST_CASE("DOT export of S7") {
  auto const r = insert_fork(grid(2, 2), {0, 1, 2, 3});
  auto const dot = to_dot(r.lattice, r.trace.new_elements);
  std::regex const node(R"(^\s*n\d+ \[label)");
  std::regex const edge(R"(^\s*n\d+ -- n\d+;)");
  std::size_t nodes = 0, edges = 0, black = 0;
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    nodes += std::regex_search(line, node);
    edges += std::regex_search(line, edge);
    black += line.find("fillcolor=black") != std::string::npos;
  }
  CHECK(nodes == 7);
  CHECK(edges == 9);
  CHECK(black == 3);
  CHECK(dot.rfind("graph lattice {", 0) == 0);
  auto const tikz = to_tikz(r.lattice, r.trace.new_elements);
  CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
}

TEST_CASE("layout is planar-ordered") {
  auto const L = random_sps(4).lattice;
  auto const pos = diagram_layout(L);
  for (Elem e = 0; e < L.size(); ++e) {
    auto const lc = L.lower_covers(e);
    for (std::size_t k = 0; k + 1 < lc.size(); ++k) CHECK(pos[lc[k]].x < pos[lc[k + 1]].x);
    for (Elem c : lc) CHECK(pos[c].y < pos[e].y);
  }
}

}
