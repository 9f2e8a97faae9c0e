#include "forklat/fork.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <string>

#include "forklat/congruence.hpp"

namespace forklat {

std::optional<Elem> ForkTrace::new_to_old(Elem e) const {
  auto it = std::find(old_to_new.begin(), old_to_new.end(), e);
  if (it == old_to_new.end()) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - old_to_new.begin());
}

char const* to_string(SquareTag tag) noexcept {
  return tag == SquareTag::Tight ? "tight" : "wide";
}

std::pair<Lattice, std::vector<Elem>>
lattice_from_unordered(std::vector<std::vector<Elem>> const& lower) {
  std::size_t const n = lower.size();
  std::vector<std::vector<Elem>> upper(n);
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    pending[e] = lower[e].size();
    for (Elem c : lower[e]) {
      upper[c].push_back(static_cast<Elem>(e));
    }
  }
  std::priority_queue<Elem, std::vector<Elem>, std::greater<>> ready;
  for (std::size_t e = 0; e < n; ++e) {
    if (pending[e] == 0) {
      ready.push(static_cast<Elem>(e));
    }
  }
  std::vector<Elem> index(n, 0);
  Elem next = 0;
  while (!ready.empty()) {
    Elem const e = ready.top();
    ready.pop();
    index[e] = next++;
    for (Elem u : upper[e]) {
      if (--pending[u] == 0) {
        ready.push(u);
      }
    }
  }
  if (next != n) {
    throw LatticeError(LatticeError::Kind::InvalidInput,
                       "cover relation has a cycle");
  }
  std::vector<std::vector<Elem>> relabelled(n);
  for (std::size_t e = 0; e < n; ++e) {
    auto& lc = relabelled[index[e]];
    for (Elem c : lower[e]) {
      lc.push_back(index[c]);
    }
  }
  return {Lattice::from_lower_covers(n, std::move(relabelled)),
          std::move(index)};
}

namespace {

  // Follows the track x_1 = a, y_1 = o downwards on one side. The next x is
  // the lower cover of x_k next to y_k (towards `left`), provided it spans a
  // covering square of L with y_k whose lower edge is still unsplit.
  void walk_track(Lattice const& L, bool left, std::vector<Elem>& xs,
                  std::vector<Elem>& ys,
                  std::set<std::pair<Elem, Elem>>& split) {
    while (true) {
      Elem const xk = xs.back();
      Elem const yk = ys.back();
      split.emplace(yk, xk);
      auto const lc = L.lower_covers(xk);
      auto const pos = static_cast<std::size_t>(
          std::find(lc.begin(), lc.end(), yk) - lc.begin());
      std::size_t next = 0;
      if (left) {
        if (pos == 0) {
          return;
        }
        next = pos - 1;
      } else {
        if (pos + 1 >= lc.size()) {
          return;
        }
        next = pos + 1;
      }
      Elem const cand = lc[next];
      Elem const bot = L.meet(cand, yk);
      if (!L.covers(bot, cand) || !L.covers(bot, yk)
          || split.contains({bot, cand})) {
        return;
      }
      xs.push_back(cand);
      ys.push_back(bot);
    }
  }

  void replace(std::vector<Elem>& v, Elem from, Elem to) {
    std::replace(v.begin(), v.end(), from, to);
  }

}  // namespace

ForkResult insert_fork(Lattice const& L, CoveringSquare const& S) {
  using K = LatticeError::Kind;
  if (!is_covering_square(L, S)) {
    throw LatticeError(K::NotACoveringSquare,
                       "{" + std::to_string(S.o) + "," + std::to_string(S.a_l)
                           + "," + std::to_string(S.a_r) + ","
                           + std::to_string(S.i)
                           + "} is not a covering square");
  }
  if (!is_sps(L)) {
    throw LatticeError(K::NotSPS, "lattice is not slim and semimodular");
  }

  std::vector<Elem> xl{S.a_l}, yl{S.o}, xr{S.a_r}, yr{S.o};
  std::set<std::pair<Elem, Elem>> split;
  walk_track(L, true, xl, yl, split);
  walk_track(L, false, xr, yr, split);

  auto const n = static_cast<Elem>(L.size());
  Elem const t = n;
  auto zl = [&](std::size_t k) { return static_cast<Elem>(n + 1 + k); };
  auto zr = [&](std::size_t k) {
    return static_cast<Elem>(n + 1 + xl.size() + k);
  };
  std::size_t const total = n + 1 + xl.size() + xr.size();

  std::vector<std::vector<Elem>> lower(total);
  for (Elem e = 0; e < n; ++e) {
    auto const lc = L.lower_covers(e);
    lower[e].assign(lc.begin(), lc.end());
  }
  auto& top = lower[S.i];
  top.insert(std::find(top.begin(), top.end(), S.a_r), t);
  lower[t] = {zl(0), zr(0)};
  for (std::size_t k = 0; k < xl.size(); ++k) {
    replace(lower[xl[k]], yl[k], zl(k));
    lower[zl(k)] = k + 1 < xl.size() ? std::vector<Elem>{zl(k + 1), yl[k]}
                                     : std::vector<Elem>{yl[k]};
  }
  for (std::size_t k = 0; k < xr.size(); ++k) {
    replace(lower[xr[k]], yr[k], zr(k));
    lower[zr(k)] = k + 1 < xr.size() ? std::vector<Elem>{yr[k], zr(k + 1)}
                                     : std::vector<Elem>{yr[k]};
  }

  auto [K_lattice, index] = lattice_from_unordered(lower);

  ForkResult res{std::move(K_lattice), {}};
  auto& tr = res.trace;
  tr.square = S;
  tr.t = index[t];
  tr.old_to_new.assign(index.begin(), index.begin() + n);
  for (std::size_t k = 0; k < xl.size(); ++k) {
    tr.z_l.push_back(index[zl(k)]);
    tr.x_l.push_back(index[xl[k]]);
    tr.y_l.push_back(index[yl[k]]);
  }
  for (std::size_t k = 0; k < xr.size(); ++k) {
    tr.z_r.push_back(index[zr(k)]);
    tr.x_r.push_back(index[xr[k]]);
    tr.y_r.push_back(index[yr[k]]);
  }
  tr.new_elements.push_back(tr.t);
  tr.new_elements.insert(tr.new_elements.end(), tr.z_l.begin(), tr.z_l.end());
  tr.new_elements.insert(tr.new_elements.end(), tr.z_r.begin(), tr.z_r.end());
  std::sort(tr.new_elements.begin(), tr.new_elements.end());
  return res;
}

SquareKind classify_square(Lattice const& lattice,
                           CoveringSquare const& square) {
  if (!is_covering_square(lattice, square)) {
    throw LatticeError(LatticeError::Kind::NotACoveringSquare,
                       "not a covering square");
  }
  SquareKind kind{};
  kind.tag = lattice.lower_covers(square.i).size() == 2 ? SquareTag::Tight
                                                        : SquareTag::Wide;
  kind.distributive =
      is_distributive_interval(lattice, {lattice.bottom(), square.i});
  return kind;
}

S7Sublattice associated_s7(ForkTrace const& trace) {
  S7Sublattice a{};
  a.o = trace.o();
  a.z_l = trace.z_l.front();
  a.z_r = trace.z_r.front();
  a.a_l = trace.a_l();
  a.a_r = trace.a_r();
  a.t = trace.t;
  a.i = trace.i();
  return a;
}

std::array<std::vector<Interval>, 5> fork_prime_lists(ForkTrace const& tr) {
  std::array<std::vector<Interval>, 5> lists;
  for (std::size_t k = 0; k < tr.n(); ++k) {
    lists[0].push_back({tr.z_l[k], tr.x_l[k]});
    lists[3].push_back({tr.y_l[k], tr.z_l[k]});
  }
  lists[1].push_back({tr.t, tr.i()});
  for (std::size_t k = 0; k < tr.m(); ++k) {
    lists[2].push_back({tr.z_r[k], tr.x_r[k]});
    lists[4].push_back({tr.y_r[k], tr.z_r[k]});
  }
  return lists;
}

std::vector<Interval> fork_new_primes(ForkTrace const& tr) {
  std::vector<Interval> out;
  for (auto const& l : fork_prime_lists(tr)) {
    out.insert(out.end(), l.begin(), l.end());
  }
  out.push_back({tr.z_l.front(), tr.t});
  out.push_back({tr.z_r.front(), tr.t});
  for (auto const* z : {&tr.z_l, &tr.z_r}) {
    for (std::size_t k = 0; k + 1 < z->size(); ++k) {
      out.push_back({(*z)[k + 1], (*z)[k]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NamedCongruences named_congruences(Lattice const& lattice,
                                   Lattice const& extension,
                                   ForkTrace const& trace) {
  auto const& S = trace.square;
  return {principal_congruence(lattice, S.a_l, S.i),
          principal_congruence(lattice, S.a_r, S.i),
          principal_congruence(extension, trace.a_l(), trace.i()),
          principal_congruence(extension, trace.a_r(), trace.i()),
          principal_congruence(extension, trace.t, trace.i())};
}

}  // namespace forklat
