#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "forklat/congruence.hpp"
#include "forklat/fork.hpp"
#include "forklat/generator.hpp"
#include "forklat/lattice.hpp"
#include "forklat/partition.hpp"
#include "forklat/verify.hpp"

namespace forklat {

using nlohmann::json;

inline constexpr int kReportVersion = 1;

/// {"n", "covers": [[lo, hi], ...], "left_order": [[...], ...]}.
/// covers are sorted by (lo, hi); left_order[e] lists, left to right, the
/// positions in `covers` of the pairs (c, e).
json lattice_to_json(Lattice const& lattice);
/// Throws LatticeError (InvalidInput or the validation error) on bad input.
Lattice lattice_from_json(json const& j);

/// One line, keys sorted, trailing newline. Equal values give equal bytes.
std::string canonical_dump(json const& j);

json partition_to_json(Partition const& p);
Partition partition_from_json(json const& j, std::size_t n);

/// Members (all of them with `full`, else the join-irreducibles only), the
/// join-irreducible indices and the covering pairs of the refinement order.
json con_to_json(ConLattice const& con, bool full);

/// Element roles of L[S]: "t", "z_l1", ..., "x_r2", ..., "old".
json trace_to_json(ForkTrace const& trace);

json history_to_json(History const& h);
History history_from_json(json const& j);

json report_to_json(SquareReport const& r);
json report_to_json(LatticeReport const& r);
json report_to_json(CorpusReport const& r);

json error_json(std::string const& kind, std::string const& message);

/// Hasse diagram. Elements listed in `fresh` are filled black.
std::string to_dot(Lattice const& lattice, std::span<Elem const> fresh = {});
std::string to_tikz(Lattice const& lattice, std::span<Elem const> fresh = {});

/// Planar coordinates: x from the two extremal linear extensions, y = height.
struct Point {
  long x;
  long y;
};
std::vector<Point> diagram_layout(Lattice const& lattice);

}  // namespace forklat
