#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "forklat/congruence.hpp"
#include "forklat/fork.hpp"
#include "forklat/generator.hpp"
#include "forklat/lattice.hpp"

namespace forklat {

// Pass and Fail are verdicts. Discrepancy marks a literal statement that does
// not hold where a documented reading is checked alongside it; it never
// fails a run. NotApplicable: the check's hypothesis does not hold.
enum class CheckStatus { Pass, Fail, NotApplicable, Discrepancy };

char const* to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

struct SquareReport {
  CoveringSquare square{};
  SquareKind kind{};
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t lattice_size = 0;
  std::size_t extension_size = 0;
  std::size_t con_size = 0;
  std::size_t con_extension_size = 0;
  std::size_t ji_count = 0;
  std::size_t ji_extension_count = 0;
  std::size_t protrusions = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] CheckResult const* find(std::string_view name) const;
};

/// Builds L[S] and runs every check on it.
SquareReport verify_paper(Lattice const& lattice, CoveringSquare const& square);
/// Same, reusing Con L.
SquareReport verify_paper(Lattice const& lattice, ConLattice const& con,
                          CoveringSquare const& square);

/// Associated S7 of the fork at `square` is minimal iff the square is
/// distributive. Two checks: the documented reading, then the literal one.
std::vector<CheckResult> check_minimal_s7(Lattice const& lattice,
                                          CoveringSquare const& square);

/// Lattice-level checks: at most two upper covers; every three lower covers
/// generate an S7, a cover-preserving one when adjacent.
std::vector<CheckResult> check_lattice(Lattice const& lattice);

struct LatticeReport {
  std::vector<CheckResult> checks;
  std::vector<SquareReport> squares;

  [[nodiscard]] bool passed() const;
};

/// check_lattice plus verify_paper on every covering square.
LatticeReport verify_lattice(Lattice const& lattice);

struct CorpusCase {
  History history;
  std::size_t size = 0;
  LatticeReport report;
  /// check_minimal_s7 on every step of the history.
  std::vector<CheckResult> step_checks;

  [[nodiscard]] bool passed() const;
};

struct StatusCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::size_t discrepancy = 0;
};

struct CorpusReport {
  std::vector<CorpusCase> cases;  // by seed
  std::map<std::string, StatusCounts> tally;
  std::size_t squares = 0;
  std::size_t wide = 0;
  std::size_t tight_distributive = 0;
  std::size_t tight_nondistributive = 0;
  std::size_t with_protrusions = 0;

  [[nodiscard]] bool passed() const;
  /// Each of the four branches occurs at least once.
  [[nodiscard]] bool diverse() const;
};

/// Seeds [first, first + count). With `parallel`, cases run on OpenMP
/// threads; the result does not depend on the schedule.
CorpusReport verify_corpus(std::uint64_t first, std::size_t count,
                           GeneratorParams const& params, bool parallel = true);

}  // namespace forklat
