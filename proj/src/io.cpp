#include "forklat/io.hpp"

#include <algorithm>
#include <sstream>

namespace forklat {

namespace {

  [[noreturn]] void bad(std::string const& what) {
    throw LatticeError(LatticeError::Kind::InvalidInput, what);
  }

  template <class T>
  T get(json const& j, char const* key) {
    if (!j.is_object() || !j.contains(key)) {
      bad(std::string("missing field \"") + key + "\"");
    }
    try {
      return j.at(key).get<T>();
    } catch (json::exception const& e) {
      bad(std::string("field \"") + key + "\": " + e.what());
    }
  }

  json square_json(CoveringSquare const& s) {
    return json::array({s.o, s.a_l, s.a_r, s.i});
  }

  json checks_json(std::vector<CheckResult> const& checks) {
    json a = json::array();
    for (auto const& c : checks) {
      a.push_back({{"name", c.name},
                   {"status", to_string(c.status)},
                   {"witness", c.witness}});
    }
    return a;
  }

  json square_body(SquareReport const& r) {
    return {{"square", square_json(r.square)},
            {"kind", to_string(r.kind.tag)},
            {"distributive", r.kind.distributive},
            {"n", r.n},
            {"m", r.m},
            {"lattice_size", r.lattice_size},
            {"extension_size", r.extension_size},
            {"con_size", r.con_size},
            {"con_extension_size", r.con_extension_size},
            {"ji_count", r.ji_count},
            {"ji_extension_count", r.ji_extension_count},
            {"protrusions", r.protrusions},
            {"passed", r.passed()},
            {"checks", checks_json(r.checks)}};
  }

  std::string node(Elem e) { return "n" + std::to_string(e); }

}  // namespace

json lattice_to_json(Lattice const& L) {
  std::vector<std::pair<Elem, Elem>> covers;
  for (Elem e = 0; e < L.size(); ++e) {
    for (Elem c : L.lower_covers(e)) {
      covers.emplace_back(c, e);
    }
  }
  std::sort(covers.begin(), covers.end());
  json cj = json::array();
  for (auto [lo, hi] : covers) {
    cj.push_back({lo, hi});
  }
  json order = json::array();
  for (Elem e = 0; e < L.size(); ++e) {
    json row = json::array();
    for (Elem c : L.lower_covers(e)) {
      auto const it = std::lower_bound(covers.begin(), covers.end(),
                                       std::pair<Elem, Elem>{c, e});
      row.push_back(it - covers.begin());
    }
    order.push_back(std::move(row));
  }
  return {{"n", L.size()}, {"covers", std::move(cj)}, {"left_order", std::move(order)}};
}

Lattice lattice_from_json(json const& j) {
  auto const n = get<std::int64_t>(j, "n");
  if (n < 1) {
    bad("n must be positive");
  }
  auto const raw = get<std::vector<std::vector<std::int64_t>>>(j, "covers");
  std::vector<std::pair<Elem, Elem>> covers;
  for (auto const& c : raw) {
    if (c.size() != 2 || c[0] < 0 || c[1] < 0 || c[0] >= n || c[1] >= n) {
      bad("cover pairs must be [lo, hi] with 0 <= lo, hi < n");
    }
    covers.emplace_back(static_cast<Elem>(c[0]), static_cast<Elem>(c[1]));
  }
  std::vector<std::vector<Elem>> left(static_cast<std::size_t>(n));
  if (j.contains("left_order")) {
    auto const order = get<std::vector<std::vector<std::int64_t>>>(j, "left_order");
    if (order.size() != static_cast<std::size_t>(n)) {
      bad("left_order needs one row per element");
    }
    for (std::size_t e = 0; e < order.size(); ++e) {
      for (auto k : order[e]) {
        if (k < 0 || static_cast<std::size_t>(k) >= covers.size()) {
          bad("left_order entry out of range");
        }
        auto [lo, hi] = covers[static_cast<std::size_t>(k)];
        if (hi != e) {
          bad("left_order row " + std::to_string(e) + " names cover ["
              + std::to_string(lo) + "," + std::to_string(hi) + "]");
        }
        left[e].push_back(lo);
      }
    }
  }
  return Lattice::build(static_cast<std::size_t>(n), covers,
                        j.contains("left_order")
                            ? left
                            : std::vector<std::vector<Elem>>{});
}

std::string canonical_dump(json const& j) { return j.dump() + "\n"; }

json partition_to_json(Partition const& p) {
  return {{"blocks", p.blocks()}};
}

Partition partition_from_json(json const& j, std::size_t n) {
  auto const blocks = get<std::vector<std::vector<Elem>>>(j, "blocks");
  std::vector<char> seen(n, 0);
  for (auto const& b : blocks) {
    for (Elem e : b) {
      if (e >= n || seen[e]) {
        bad("blocks do not partition 0..n-1");
      }
      seen[e] = 1;
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) {
    bad("blocks do not partition 0..n-1");
  }
  return Partition::from_blocks(n, blocks);
}

json con_to_json(ConLattice const& con, bool full) {
  json j;
  j["size"] = con.size();
  auto const jis = con.join_irreducibles();
  j["join_irreducibles"] = jis;
  json members = json::array();
  if (full) {
    for (std::size_t k = 0; k < con.size(); ++k) {
      members.push_back(partition_to_json(con.congruence(k)));
    }
    json edges = json::array();
    for (auto [a, b] : con.cover_edges()) {
      edges.push_back({a, b});
    }
    j["edges"] = std::move(edges);
  } else {
    // restricted to the join-irreducibles, renumbered 0..|Ji|-1
    for (auto k : jis) {
      members.push_back(partition_to_json(con.congruence(k)));
    }
    json edges = json::array();
    for (std::size_t a = 0; a < jis.size(); ++a) {
      for (std::size_t b = 0; b < jis.size(); ++b) {
        if (a == b || !con.leq(jis[a], jis[b])) {
          continue;
        }
        bool direct = true;
        for (std::size_t c = 0; c < jis.size() && direct; ++c) {
          direct = c == a || c == b || !con.leq(jis[a], jis[c])
                   || !con.leq(jis[c], jis[b]);
        }
        if (direct) {
          edges.push_back({a, b});
        }
      }
    }
    j["edges"] = std::move(edges);
  }
  j["members"] = std::move(members);
  return j;
}

json trace_to_json(ForkTrace const& tr) {
  std::size_t const size = tr.old_to_new.size() + tr.new_elements.size();
  std::vector<std::string> role(size, "old");
  auto name = [&role](std::vector<Elem> const& v, char const* prefix) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::string r = prefix + std::to_string(k + 1);
      role[v[k]] = role[v[k]] == "old" ? r : role[v[k]] + "," + r;
    }
  };
  name(tr.x_l, "x_l");
  name(tr.y_l, "y_l");
  name(tr.x_r, "x_r");
  name(tr.y_r, "y_r");
  name(tr.z_l, "z_l");
  name(tr.z_r, "z_r");
  role[tr.t] = "t";
  // the square's own names go first
  auto tag = [&role](Elem e, char const* r) {
    role[e] = role[e] == "old" ? std::string(r) : std::string(r) + "," + role[e];
  };
  tag(tr.i(), "i");
  tag(tr.o(), "o");
  tag(tr.a_l(), "a_l");
  tag(tr.a_r(), "a_r");
  return {{"square", square_json(tr.square)},
          {"t", tr.t},
          {"z_l", tr.z_l},
          {"z_r", tr.z_r},
          {"x_l", tr.x_l},
          {"y_l", tr.y_l},
          {"x_r", tr.x_r},
          {"y_r", tr.y_r},
          {"new_elements", tr.new_elements},
          {"old_to_new", tr.old_to_new},
          {"roles", role}};
}

json history_to_json(History const& h) {
  json steps = json::array();
  for (auto const& s : h.steps) {
    steps.push_back(square_json(s));
  }
  return {{"base", {h.p, h.q}}, {"seed", h.seed}, {"steps", std::move(steps)}};
}

History history_from_json(json const& j) {
  History h;
  auto const base = get<std::vector<std::size_t>>(j, "base");
  if (base.size() != 2 || base[0] < 1 || base[1] < 1) {
    bad("base must be [p, q] with p, q >= 1");
  }
  h.p = base[0];
  h.q = base[1];
  h.seed = get<std::uint64_t>(j, "seed");
  for (auto const& s : get<std::vector<std::vector<Elem>>>(j, "steps")) {
    if (s.size() != 4) {
      bad("a step is [o, a_l, a_r, i]");
    }
    h.steps.push_back({s[0], s[1], s[2], s[3]});
  }
  return h;
}

json report_to_json(SquareReport const& r) {
  json j = square_body(r);
  j["version"] = kReportVersion;
  j["scope"] = "square";
  return j;
}

json report_to_json(LatticeReport const& r) {
  json squares = json::array();
  for (auto const& s : r.squares) {
    squares.push_back(square_body(s));
  }
  return {{"version", kReportVersion},
          {"scope", "lattice"},
          {"passed", r.passed()},
          {"checks", checks_json(r.checks)},
          {"squares", std::move(squares)}};
}

json report_to_json(CorpusReport const& r) {
  json tally = json::object();
  for (auto const& [name, t] : r.tally) {
    tally[name] = {{"pass", t.pass},
                   {"fail", t.fail},
                   {"n/a", t.not_applicable},
                   {"discrepancy", t.discrepancy}};
  }
  // per case only what did not pass, to keep the file readable
  json cases = json::array();
  for (auto const& c : r.cases) {
    json notes = json::array();
    auto keep = [&notes](CheckResult const& x, json where) {
      if (x.status == CheckStatus::Fail || x.status == CheckStatus::Discrepancy) {
        notes.push_back({{"name", x.name},
                         {"status", to_string(x.status)},
                         {"witness", x.witness},
                         {"square", std::move(where)}});
      }
    };
    for (auto const& x : c.report.checks) {
      keep(x, nullptr);
    }
    for (auto const& x : c.step_checks) {
      keep(x, nullptr);
    }
    for (auto const& s : c.report.squares) {
      for (auto const& x : s.checks) {
        keep(x, square_json(s.square));
      }
    }
    cases.push_back({{"history", history_to_json(c.history)},
                     {"size", c.size},
                     {"passed", c.passed()},
                     {"notes", std::move(notes)}});
  }
  return {{"version", kReportVersion},
          {"scope", "corpus"},
          {"passed", r.passed()},
          {"diverse", r.diverse()},
          {"squares", r.squares},
          {"wide", r.wide},
          {"tight_distributive", r.tight_distributive},
          {"tight_nondistributive", r.tight_nondistributive},
          {"with_protrusions", r.with_protrusions},
          {"tally", std::move(tally)},
          {"cases", std::move(cases)}};
}

json error_json(std::string const& kind, std::string const& message) {
  return {{"version", kReportVersion},
          {"error", {{"kind", kind}, {"message", message}}}};
}

std::vector<Point> diagram_layout(Lattice const& L) {
  auto const mirror = L.reflected();
  std::vector<Point> out(L.size());
  for (Elem e = 0; e < L.size(); ++e) {
    long h = 0;
    for (Elem c : L.lower_covers(e)) {
      h = std::max(h, out[c].y + 1);
    }
    out[e] = {static_cast<long>(L.left_rank(e))
                  - static_cast<long>(mirror.left_rank(e)),
              h};
  }
  return out;
}

std::string to_dot(Lattice const& L, std::span<Elem const> fresh) {
  auto const pos = diagram_layout(L);
  auto is_new = [&](Elem e) {
    return std::find(fresh.begin(), fresh.end(), e) != fresh.end();
  };
  std::ostringstream os;
  os << "graph lattice {\n"
     << "  node [shape=circle, width=0.25, fixedsize=true, fontsize=9];\n";
  long top = 0;
  for (auto const& p : pos) {
    top = std::max(top, p.y);
  }
  // one rank per height, left to right
  for (long h = top; h >= 0; --h) {
    std::vector<Elem> row;
    for (Elem e = 0; e < L.size(); ++e) {
      if (pos[e].y == h) {
        row.push_back(e);
      }
    }
    std::sort(row.begin(), row.end(),
              [&](Elem a, Elem b) { return pos[a].x < pos[b].x; });
    os << "  { rank=same;";
    for (Elem e : row) {
      os << ' ' << node(e);
    }
    os << " }\n";
    for (Elem e : row) {
      os << "  " << node(e) << " [label=\"" << e << "\", pos=\"" << pos[e].x * 36
         << ',' << pos[e].y * 54 << "!\"";
      if (is_new(e)) {
        os << ", style=filled, fillcolor=black, fontcolor=white";
      }
      os << "];\n";
    }
  }
  for (Elem e = L.size(); e-- > 0;) {
    for (Elem c : L.lower_covers(e)) {
      os << "  " << node(e) << " -- " << node(c) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_tikz(Lattice const& L, std::span<Elem const> fresh) {
  auto const pos = diagram_layout(L);
  std::ostringstream os;
  os << "\\begin{tikzpicture}[x=0.5cm, y=0.8cm,\n"
     << "  old/.style={circle, draw, fill=white, inner sep=1.6pt},\n"
     << "  new/.style={circle, draw, fill=black, inner sep=1.6pt}]\n";
  for (Elem e = 0; e < L.size(); ++e) {
    for (Elem c : L.lower_covers(e)) {
      os << "  \\draw (" << pos[c].x << ',' << pos[c].y << ") -- (" << pos[e].x
         << ',' << pos[e].y << ");\n";
    }
  }
  for (Elem e = 0; e < L.size(); ++e) {
    bool const n = std::find(fresh.begin(), fresh.end(), e) != fresh.end();
    os << "  \\node[" << (n ? "new" : "old") << "] (" << node(e) << ") at ("
       << pos[e].x << ',' << pos[e].y << ") {};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace forklat
