#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "forklat/io.hpp"

using namespace forklat;

namespace {

// bad input; exit code 2 (a failed check exits with 1)
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open " + path);
  }
  try {
    return json::parse(in);
  } catch (json::parse_error const& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(std::string const& path, std::string const& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw UsageError("cannot write " + path);
  }
  out << text;
}

Lattice read_lattice(std::string const& path) {
  return lattice_from_json(read_json(path));
}

template <class T>
std::vector<T> numbers(std::string const& s, std::size_t count, char const* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      auto const v = std::stoull(part, &used);
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
      out.push_back(static_cast<T>(v));
    } catch (std::exception const&) {
      throw UsageError(std::string(what) + ": not a number list: " + s);
    }
  }
  if (out.size() != count) {
    throw UsageError(std::string(what) + ": expected " + std::to_string(count)
                     + " comma separated numbers");
  }
  return out;
}

CoveringSquare parse_square(Lattice const& L, std::string const& s) {
  auto const v = numbers<Elem>(s, 4, "--square");
  for (Elem e : v) {
    if (e >= L.size()) {
      throw UsageError("--square: element " + std::to_string(e) + " out of range");
    }
  }
  CoveringSquare const sq{v[0], v[1], v[2], v[3]};
  if (!is_covering_square(L, sq)) {
    throw LatticeError(LatticeError::Kind::NotACoveringSquare,
                       "--square " + s + " is not a covering square with a_l left of a_r");
  }
  return sq;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(std::string const& s) {
  auto const dots = s.find("..");
  if (dots == std::string::npos) {
    throw UsageError("--corpus expects first..last");
  }
  auto const a = numbers<std::uint64_t>(s.substr(0, dots), 1, "--corpus");
  auto const b = numbers<std::uint64_t>(s.substr(dots + 2), 1, "--corpus");
  if (b[0] < a[0]) {
    throw UsageError("--corpus: empty range");
  }
  return {a[0], b[0]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fork extensions of slim planar semimodular lattices"};
  app.require_subcommand(1);

  std::string in, out = "-", trace_out, square, principal, corpus_range,
                      format = "dot", trace_in, history_out, base;
  std::uint64_t seed = 0;
  GeneratorParams params = default_corpus_params();
  bool full = false, all_squares = false;

  auto* gen = app.add_subcommand("generate", "seeded random SPS lattice");
  gen->add_option("--seed", seed, "RNG seed")->required();
  gen->add_option("--base", base, "fixed grid p,q (default: random sides)");
  gen->add_option("--max-base", params.max_base, "largest random grid side");
  gen->add_option("--forks", params.forks, "fork insertions to attempt");
  gen->add_option("--cap", params.size_cap, "element bound");
  gen->add_option("-o,--output", out, "lattice JSON");
  gen->add_option("--history", history_out, "history JSON");

  auto* fork = app.add_subcommand("fork", "insert a fork at a covering square");
  fork->add_option("-i,--input", in)->required();
  fork->add_option("--square", square, "o,a_l,a_r,i")->required();
  fork->add_option("-o,--output", out, "L[S] as lattice JSON");
  fork->add_option("--trace", trace_out, "fork trace JSON");

  auto* con = app.add_subcommand("con", "congruences");
  con->add_option("-i,--input", in)->required();
  con->add_option("--principal", principal, "a,b: only con(a,b)");
  con->add_flag("--full", full, "every congruence, not just Ji(Con L)");
  con->add_option("-o,--output", out);

  auto* ver = app.add_subcommand("verify", "check the fork theorems");
  ver->add_option("-i,--input", in);
  auto* sq_opt = ver->add_option("--square", square, "o,a_l,a_r,i");
  ver->add_flag("--all-squares", all_squares, "every covering square (default)")
      ->excludes(sq_opt);
  ver->add_option("--corpus", corpus_range, "seed range first..last, default parameters");
  ver->add_option("-o,--output", out, "report JSON");

  auto* exp = app.add_subcommand("export", "Hasse diagram");
  exp->add_option("-i,--input", in)->required();
  exp->add_option("--format", format)->check(CLI::IsMember({"dot", "tikz"}));
  exp->add_option("--trace", trace_in, "fork trace: its new elements are filled black");
  exp->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cout << canonical_dump(error_json("usage", e.what()));
    return 2;
  }

  try {
    if (*gen) {
      if (!base.empty()) {
        auto const pq = numbers<std::size_t>(base, 2, "--base");
        if (pq[0] < 1 || pq[1] < 1) {
          throw UsageError("--base: sides must be positive");
        }
        params.base_p = pq[0];
        params.base_q = pq[1];
      }
      auto const g = random_sps(seed, params);
      write_text(out, canonical_dump(lattice_to_json(g.lattice)));
      if (!history_out.empty()) {
        write_text(history_out, canonical_dump(history_to_json(g.history)));
      }
      return 0;
    }
    if (*fork) {
      auto const L = read_lattice(in);
      auto const r = insert_fork(L, parse_square(L, square));
      write_text(out, canonical_dump(lattice_to_json(r.lattice)));
      if (!trace_out.empty()) {
        write_text(trace_out, canonical_dump(trace_to_json(r.trace)));
      }
      return 0;
    }
    if (*con) {
      auto const L = read_lattice(in);
      if (!principal.empty()) {
        auto const ab = numbers<Elem>(principal, 2, "--principal");
        if (ab[0] >= L.size() || ab[1] >= L.size()) {
          throw UsageError("--principal: element out of range");
        }
        auto j = partition_to_json(principal_congruence(L, ab[0], ab[1]));
        j["principal"] = ab;
        write_text(out, canonical_dump(j));
        return 0;
      }
      write_text(out, canonical_dump(con_to_json(ConLattice::compute(L), full)));
      return 0;
    }
    if (*ver) {
      if (!corpus_range.empty()) {
        if (!in.empty() || !square.empty()) {
          throw UsageError("--corpus does not take -i or --square");
        }
        auto const [a, b] = parse_range(corpus_range);
        auto const r = verify_corpus(a, b - a + 1, default_corpus_params());
        write_text(out, canonical_dump(report_to_json(r)));
        return r.passed() ? 0 : 1;
      }
      if (in.empty()) {
        throw UsageError("verify needs -i or --corpus");
      }
      auto const L = read_lattice(in);
      if (!square.empty()) {
        auto const r = verify_paper(L, parse_square(L, square));
        write_text(out, canonical_dump(report_to_json(r)));
        return r.passed() ? 0 : 1;
      }
      auto const r = verify_lattice(L);
      write_text(out, canonical_dump(report_to_json(r)));
      return r.passed() ? 0 : 1;
    }
    if (*exp) {
      auto const L = read_lattice(in);
      std::vector<Elem> fresh;
      if (!trace_in.empty()) {
        auto const t = read_json(trace_in);
        try {
          fresh = t.at("new_elements").get<std::vector<Elem>>();
        } catch (json::exception const& e) {
          throw UsageError(trace_in + ": " + e.what());
        }
        for (Elem e : fresh) {
          if (e >= L.size()) {
            throw UsageError("trace does not belong to this lattice");
          }
        }
      }
      write_text(out, format == "dot" ? to_dot(L, fresh) : to_tikz(L, fresh));
      return 0;
    }
  } catch (LatticeError const& e) {
    std::cout << canonical_dump(error_json(to_string(e.kind()), e.what()));
    return 2;
  } catch (UsageError const& e) {
    std::cout << canonical_dump(error_json("usage", e.what()));
    return 2;
  }
  return 2;
}
