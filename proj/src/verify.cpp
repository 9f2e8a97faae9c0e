#include "forklat/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "forklat/gamma.hpp"

namespace forklat {

char const* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "n/a";
    case CheckStatus::Discrepancy: return "discrepancy";
  }
  return "?";
}

namespace {

  bool any_failed(std::vector<CheckResult> const& checks) {
    return std::any_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.status == CheckStatus::Fail;
    });
  }

  std::string show(Interval iv) {
    return "[" + std::to_string(iv.bottom) + "," + std::to_string(iv.top) + "]";
  }

  std::string show(Partition const& p) {
    std::string s;
    for (auto const& b : p.nontrivial_blocks()) {
      s += "{";
      for (std::size_t k = 0; k < b.size(); ++k) {
        s += (k ? " " : "") + std::to_string(b[k]);
      }
      s += "}";
    }
    return s.empty() ? "identity" : s;
  }

  class Checks {
   public:
    void add(std::string name, bool ok, std::string witness = {}) {
      add(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
          ok ? std::string{} : std::move(witness));
    }
    // a literal statement checked next to the reading that is asserted
    void literal(std::string name, bool ok, std::string witness = {}) {
      add(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Discrepancy,
          ok ? std::string{} : std::move(witness));
    }
    void na(std::string name) {
      add(std::move(name), CheckStatus::NotApplicable, {});
    }
    void add(std::string name, CheckStatus s, std::string witness) {
      out.push_back({std::move(name), s, std::move(witness)});
    }
    std::vector<CheckResult> out;
  };

  std::optional<S7Sublattice> find_s7(std::vector<S7Sublattice> const& all,
                                      S7Sublattice const& a) {
    for (auto const& s : all) {
      if (s.o == a.o && s.z_l == a.z_l && s.z_r == a.z_r && s.a_l == a.a_l
          && s.a_r == a.a_r && s.t == a.t && s.i == a.i) {
        return s;
      }
    }
    return std::nullopt;
  }

  void s7_checks(Checks& c, Lattice const& K, ForkTrace const& tr,
                 SquareKind kind) {
    auto const a = associated_s7(tr);
    auto const el = a.elements();
    auto const found = find_s7(s7_sublattices(K), a);
    c.add("fork.associated_s7",
          found.has_value() && isomorphic_to(K, el, s7()),
          "associated S7 is not a cover-preserving S7 sublattice");
    if (!found) {
      c.add("s7.minimal_iff_distributive", false, "associated S7 not found");
      return;
    }
    auto why = [&](bool minimal) {
      return std::string("square is ") + (kind.distributive ? "" : "not ")
             + "distributive, associated S7 is " + (minimal ? "" : "not ")
             + "minimal";
    };
    c.add("s7.minimal_iff_distributive",
          found->unique_minimal == kind.distributive,
          why(found->unique_minimal));
    c.literal("s7.minimal_iff_distributive_literal",
              found->minimal == kind.distributive, why(found->minimal));
  }

  // Cover-preservation of a subset under the induced order.
  bool cover_preserving(Lattice const& L, std::vector<Elem> const& sub) {
    for (Elem x : sub) {
      for (Elem y : sub) {
        if (!L.less(x, y)) {
          continue;
        }
        bool between = std::any_of(sub.begin(), sub.end(), [&](Elem z) {
          return L.less(x, z) && L.less(z, y);
        });
        if (!between && !L.covers(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  // All the congruence data of one fork, shared by the checks below.
  struct Context {
    Lattice const& L;
    ConLattice const& conL;
    Lattice const& K;
    ConLattice const& conK;
    ForkTrace const& tr;
    std::vector<std::size_t> ext_ji;  // K member of the extension of J_L[j]
    std::vector<Elem> inverse;         // L[S] -> L, -1 on new elements

    Elem to_old(Elem k) const { return inverse[k]; }

    // member index of con_K(e(u), e(v)) for a prime interval [u, v] of L
    std::size_t ext_prime(Interval p) const {
      Elem const u = tr.old_to_new[p.bottom];
      Elem const v = tr.old_to_new[p.top];
      if (K.covers(u, v)) {
        return conK.principal_of({u, v});
      }
      for (Elem z : K.lower_covers(v)) {
        if (K.covers(u, z)) {
          auto const a = conK.principal_of({u, z});
          auto const b = conK.principal_of({z, v});
          return *conK.index_of_mask(conK.mask(a) | conK.mask(b));
        }
      }
      throw LatticeError(LatticeError::Kind::InvalidInput,
                         "prime interval of L is not short in L[S]");
    }

    // member index of the minimal extension of member k of Con L
    std::size_t ext_member(std::size_t k) const {
      std::uint64_t m = 0;
      auto const bits = conL.mask(k);
      for (std::size_t j = 0; j < conL.ji_count(); ++j) {
        if (bits >> j & 1U) {
          m |= conK.mask(ext_ji[j]);
        }
      }
      return *conK.index_of_mask(m);
    }
  };

}  // namespace

bool SquareReport::passed() const { return !any_failed(checks); }

CheckResult const* SquareReport::find(std::string_view name) const {
  for (auto const& c : checks) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

bool LatticeReport::passed() const {
  return !any_failed(checks)
         && std::all_of(squares.begin(), squares.end(),
                        [](auto const& s) { return s.passed(); });
}

bool CorpusCase::passed() const {
  return report.passed() && !any_failed(step_checks);
}

bool CorpusReport::passed() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](auto const& c) { return c.passed(); });
}

bool CorpusReport::diverse() const {
  return wide > 0 && tight_distributive > 0 && tight_nondistributive > 0
         && with_protrusions > 0;
}

std::vector<CheckResult> check_minimal_s7(Lattice const& lattice,
                                          CoveringSquare const& square) {
  auto const kind = classify_square(lattice, square);
  auto const r = insert_fork(lattice, square);
  Checks c;
  s7_checks(c, r.lattice, r.trace, kind);
  return c.out;
}

std::vector<CheckResult> check_lattice(Lattice const& L) {
  Checks c;
  c.add("lattice.sps", is_sps(L), "not slim and semimodular");

  std::string w;
  for (Elem e = 0; e < L.size() && w.empty(); ++e) {
    if (L.upper_covers(e).size() > 2) {
      w = "element " + std::to_string(e) + " has "
          + std::to_string(L.upper_covers(e).size()) + " upper covers";
    }
  }
  c.add("lattice.at_most_two_upper_covers", w.empty(), w);

  w.clear();
  std::string w_adj;
  auto const shape = s7();
  for (Elem e = 0; e < L.size() && w.empty(); ++e) {
    auto const lc = L.lower_covers(e);
    for (std::size_t a = 0; a < lc.size() && w.empty(); ++a) {
      for (std::size_t b = a + 1; b < lc.size() && w.empty(); ++b) {
        for (std::size_t d = b + 1; d < lc.size() && w.empty(); ++d) {
          std::vector<Elem> const gens{lc[a], lc[b], lc[d]};
          auto const sub = generated_sublattice(L, gens);
          std::string const triple = "{" + std::to_string(lc[a]) + ","
                                     + std::to_string(lc[b]) + ","
                                     + std::to_string(lc[d]) + "}";
          if (sub.size() != 7 || !isomorphic_to(L, sub, shape)) {
            w = triple + " does not generate an S7";
          } else if (d == a + 2 && w_adj.empty() && !cover_preserving(L, sub)) {
            w_adj = "adjacent " + triple + " generates an S7 that is not cover-preserving";
          }
        }
      }
    }
  }
  c.add("lattice.three_covers_generate_s7", w.empty(), w);
  // fails as soon as a fork sits in the cell below one of the outer pairs
  c.literal("lattice.adjacent_s7_cover_preserving", w_adj.empty(), w_adj);
  return c.out;
}

SquareReport verify_paper(Lattice const& lattice, CoveringSquare const& square) {
  return verify_paper(lattice, ConLattice::compute(lattice), square);
}

SquareReport verify_paper(Lattice const& L, ConLattice const& conL,
                          CoveringSquare const& S) {
  SquareReport rep;
  rep.square = S;
  rep.kind = classify_square(L, S);
  bool const wide = rep.kind.tag == SquareTag::Wide;
  auto const fork = insert_fork(L, S);
  Lattice const& K = fork.lattice;
  ForkTrace const& tr = fork.trace;
  auto const& e = tr.old_to_new;
  auto const conK = ConLattice::compute(K, {.parallel = false});

  rep.n = tr.n();
  rep.m = tr.m();
  rep.lattice_size = L.size();
  rep.extension_size = K.size();
  rep.con_size = conL.size();
  rep.con_extension_size = conK.size();
  rep.ji_count = conL.ji_count();
  rep.ji_extension_count = conK.ji_count();

  Checks c;

  // --- the fork itself -----------------------------------------------------
  c.add("fork.sps", is_sps(K), "L[S] is not slim and semimodular");
  c.add("fork.size", K.size() == L.size() + 1 + tr.n() + tr.m(),
        std::to_string(K.size()) + " elements");
  {
    std::string w;
    for (Elem a = 0; a < L.size() && w.empty(); ++a) {
      for (Elem b = 0; b < L.size() && w.empty(); ++b) {
        if (K.meet(e[a], e[b]) != e[L.meet(a, b)]
            || K.join(e[a], e[b]) != e[L.join(a, b)]) {
          w = "pair " + std::to_string(a) + "," + std::to_string(b);
        }
      }
    }
    c.add("fork.embedding", w.empty(), w);
  }
  {
    std::set<Interval> old;
    for (auto p : L.prime_intervals()) {
      old.insert({e[p.bottom], e[p.top]});
    }
    std::vector<Interval> fresh;
    for (auto p : K.prime_intervals()) {
      if (!old.contains(p)) {
        fresh.push_back(p);
      }
    }
    std::vector<Interval> listed;
    for (auto const& l : fork_prime_lists(tr)) {
      listed.insert(listed.end(), l.begin(), l.end());
    }
    std::sort(listed.begin(), listed.end());
    auto const all = fork_new_primes(tr);
    c.add("fork.new_primes", fresh == all,
          std::to_string(fresh.size()) + " new prime intervals, "
              + std::to_string(all.size()) + " expected");
    c.literal("fork.new_primes_literal", fresh == listed,
              std::to_string(fresh.size()) + " new prime intervals, "
                  + std::to_string(listed.size()) + " in the five groups");
  }

  // --- named congruences and extensions --------------------------------------
  Context ctx{L, conL, K, conK, tr, {},
              std::vector<Elem>(K.size(), static_cast<Elem>(-1))};
  for (Elem a = 0; a < L.size(); ++a) {
    ctx.inverse[e[a]] = a;
  }
  for (std::size_t j = 0; j < conL.ji_count(); ++j) {
    for (std::size_t k = 0; k < conL.primes().size(); ++k) {
      if (conL.prime_ji(k) == j) {
        ctx.ext_ji.push_back(ctx.ext_prime(conL.primes()[k]));
        break;
      }
    }
  }
  std::size_t const al = conL.principal_of({S.a_l, S.i});
  std::size_t const ar = conL.principal_of({S.a_r, S.i});
  std::size_t const al_bar = conK.principal_of({tr.a_l(), tr.i()});
  std::size_t const ar_bar = conK.principal_of({tr.a_r(), tr.i()});
  std::size_t const g = conK.principal_of({tr.t, tr.i()});
  Partition const& gamma = conK.congruence(g);
  auto const gamma_on_L = restrict(gamma, e);

  // (a) every congruence of L is the restriction of its minimal extension
  bool surjective = true;
  {
    std::string w;
    for (std::size_t k = 0; k < conL.size() && w.empty(); ++k) {
      if (!(restrict(conK.congruence(ctx.ext_member(k)), e)
            == conL.congruence(k))) {
        w = "congruence " + show(conL.congruence(k))
            + " is not a restriction";
      }
    }
    surjective = w.empty();
    c.add("extension.restriction_surjective", w.empty(), w);
  }
  c.add("extension.alpha_bar_restricts",
        restrict(conK.congruence(al_bar), e) == conL.congruence(al)
            && restrict(conK.congruence(ar_bar), e) == conL.congruence(ar),
        "restriction of a named congruence differs from its counterpart in L");

  // membership of a K member among the extensions of L members
  std::set<std::size_t> ext_members;
  for (std::size_t k = 0; k < conL.size(); ++k) {
    ext_members.insert(ctx.ext_member(k));
  }
  std::vector<std::size_t> old_prime_members;
  for (auto p : L.prime_intervals()) {
    old_prime_members.push_back(ctx.ext_prime(p));
  }
  std::sort(old_prime_members.begin(), old_prime_members.end());

  // condition (P) decides congruence preservation, provided every
  // congruence of L extends
  if (surjective) {
    std::vector<Interval> failures;
    for (auto p : fork_new_primes(tr)) {
      if (!std::binary_search(old_prime_members.begin(),
                              old_prime_members.end(), conK.principal_of(p))) {
        failures.push_back(p);
      }
    }
    bool const preserving = conK.size() == conL.size();
    c.add("extension.prime_condition", failures.empty() == preserving,
          std::to_string(failures.size()) + " new primes without a witness, "
              + "|Con L| = " + std::to_string(conL.size())
              + ", |Con L[S]| = " + std::to_string(conK.size()));
  } else {
    c.na("extension.prime_condition");
  }

  // --- wide squares ------------------------------------------------------------
  if (wide) {
    std::string w;
    if (conK.size() != conL.size()) {
      w = "|Con L| = " + std::to_string(conL.size())
          + ", |Con L[S]| = " + std::to_string(conK.size());
    }
    for (std::size_t k = 0; k < conK.size() && w.empty(); ++k) {
      auto const back = conL.index_of(restrict(conK.congruence(k), e));
      if (!back || ctx.ext_member(*back) != k) {
        w = "congruence " + show(conK.congruence(k))
            + " is not the extension of its restriction";
      }
    }
    c.add("wide.congruence_preserving", w.empty(), w);

    bool const is_l = g == al_bar;
    bool const is_r = g == ar_bar;
    c.add("wide.gamma_is_alpha_bar", is_l || is_r,
          "gamma = " + show(gamma));

    auto const lc = L.lower_covers(S.i);
    auto const pl = static_cast<std::size_t>(
        std::find(lc.begin(), lc.end(), S.a_l) - lc.begin());
    auto const pr = static_cast<std::size_t>(
        std::find(lc.begin(), lc.end(), S.a_r) - lc.begin());
    bool const extra_left = pl > 0;
    bool const extra_right = pr + 1 < lc.size();
    c.add("wide.gamma_side",
          (!extra_left || is_l) && (!extra_right || is_r),
          std::string("third lower cover of i on the ")
              + (extra_left ? "left" : "right") + " but gamma equals the "
              + (is_l ? "left" : "right") + " congruence");
    c.literal("wide.unit_lower_covers", lc.size() == 3,
          "i covers " + std::to_string(lc.size()) + " elements");

    // witnesses for (P): lists 1-3 generate gamma, list 4 the right and
    // list 5 the left congruence
    auto const lists = fork_prime_lists(tr);
    auto witness_failure = [&](std::array<std::size_t, 5> const& want) {
      for (std::size_t l = 0; l < 5; ++l) {
        for (auto p : lists[l]) {
          if (conK.principal_of(p) != want[l]) {
            return "list " + std::to_string(l + 1) + " interval " + show(p);
          }
        }
      }
      return std::string{};
    };
    std::size_t const side = is_l ? al_bar : ar_bar;
    w = witness_failure({side, side, side, ar_bar, al_bar});
    // the primes outside the five groups: [z_1, t] is perspective to
    // [a, i] on its side, a chain step [z_{k+1}, z_k] to [y_{k+1}, y_k]
    auto chain = [&](std::vector<Elem> const& z, std::vector<Elem> const& y) {
      for (std::size_t k = 0; k + 1 < z.size() && w.empty(); ++k) {
        Interval const p{z[k + 1], z[k]};
        Interval const q{ctx.to_old(y[k + 1]), ctx.to_old(y[k])};
        if (conK.principal_of(p) != ctx.ext_prime(q)) {
          w = "chain interval " + show(p);
        }
      }
    };
    if (w.empty() && conK.principal_of({tr.z_l.front(), tr.t}) != al_bar) {
      w = "interval " + show(Interval{tr.z_l.front(), tr.t});
    }
    if (w.empty() && conK.principal_of({tr.z_r.front(), tr.t}) != ar_bar) {
      w = "interval " + show(Interval{tr.z_r.front(), tr.t});
    }
    chain(tr.z_l, tr.y_l);
    chain(tr.z_r, tr.y_r);
    c.add("wide.prime_witnesses", w.empty(), w);
    w = witness_failure({al_bar, al_bar, al_bar, ar_bar, al_bar});
    c.literal("wide.prime_witnesses_literal", w.empty(), w);
  } else {
    for (auto const* n : {"wide.congruence_preserving", "wide.gamma_is_alpha_bar",
                          "wide.gamma_side", "wide.unit_lower_covers",
                          "wide.prime_witnesses", "wide.prime_witnesses_literal"}) {
      c.na(n);
    }
  }

  // --- the associated S7 -----------------------------------------------------
  s7_checks(c, K, tr, rep.kind);

  // --- gamma, distributive squares -------------------------------------------
  if (rep.kind.distributive) {
    auto const d = gamma_direct_distributive(K, tr);
    c.add("gamma.direct_distributive", is_congruence(K, d) && d == gamma,
          "listed " + show(d) + ", gamma " + show(gamma));
  } else {
    c.na("gamma.direct_distributive");
  }

  // --- tight squares -------------------------------------------------------------
  if (!wide) {
    // (c) one new join-irreducible, gamma
    {
      std::string w;
      auto const jis = conK.join_irreducibles();
      std::set<std::size_t> images;
      for (std::size_t j = 0; j < ctx.ext_ji.size() && w.empty(); ++j) {
        if (std::find(jis.begin(), jis.end(), ctx.ext_ji[j]) == jis.end()) {
          w = "extension of a join-irreducible is not join-irreducible";
        }
        images.insert(ctx.ext_ji[j]);
      }
      std::vector<std::size_t> fresh;
      for (auto k : jis) {
        if (!images.contains(k)) {
          fresh.push_back(k);
        }
      }
      if (w.empty() && images.size() != ctx.ext_ji.size()) {
        w = "two join-irreducibles have the same extension";
      }
      if (w.empty() && (fresh.size() != 1 || fresh.front() != g)) {
        w = std::to_string(fresh.size()) + " new join-irreducibles";
      }
      if (w.empty() && conK.ji_count() != conL.ji_count() + 1) {
        w = "|Ji Con L| = " + std::to_string(conL.ji_count())
            + ", |Ji Con L[S]| = " + std::to_string(conK.ji_count());
      }
      c.add("tight.new_join_irreducible", w.empty(), w);
    }

    // (g) exactly the listed primes generate gamma
    {
      std::vector<Interval> generating;
      for (auto p : conK.primes()) {
        if (conK.principal_of(p) == g) {
          generating.push_back(p);
        }
      }
      auto const listed = gamma_prime_set(tr);
      std::string w;
      if (generating != listed) {
        std::vector<Interval> diff;
        std::set_symmetric_difference(generating.begin(), generating.end(),
                                      listed.begin(), listed.end(),
                                      std::back_inserter(diff));
        w = "differ at " + show(diff.front());
      }
      c.add("tight.lemma_g", w.empty(), w);
    }

    // (h) above gamma means above a named congruence
    {
      std::string w;
      for (auto p : L.prime_intervals()) {
        auto const k = ctx.ext_prime(p);
        if (k != g && conK.leq(g, k)) {
          auto const cp = conL.principal_of(p);
          if (!conL.leq(al, cp) && !conL.leq(ar, cp)) {
            w = "prime " + show(p);
            break;
          }
        }
      }
      c.add("tight.alpha_bound", w.empty(), w);
      w.clear();
      for (auto p : conK.primes()) {
        auto const k = conK.principal_of(p);
        if (k != g && conK.leq(g, k) && !conK.leq(al_bar, k)
            && !conK.leq(ar_bar, k)) {
          w = "prime " + show(p);
          break;
        }
      }
      c.add("tight.alpha_bound_extension", w.empty(), w);
    }

    // (i) covers of gamma among the join-irreducibles
    {
      std::size_t gj = conK.ji_count();
      for (std::size_t j = 0; j < conK.ji_count(); ++j) {
        if (conK.ji(j) == gamma) {
          gj = j;
        }
      }
      std::string w;
      std::vector<Partition const*> covers;
      if (gj == conK.ji_count()) {
        w = "gamma is not join-irreducible";
      } else {
        auto above = [&](std::size_t hi, std::size_t lo) {
          return hi != lo && (conK.ji_below(hi) >> lo & 1U);
        };
        for (std::size_t j = 0; j < conK.ji_count(); ++j) {
          if (!above(j, gj)) {
            continue;
          }
          bool direct = true;
          for (std::size_t k = 0; k < conK.ji_count() && direct; ++k) {
            direct = !(above(j, k) && above(k, gj));
          }
          if (direct) {
            covers.push_back(&conK.ji(j));
          }
        }
        if (covers.empty() || covers.size() > 2) {
          w = std::to_string(covers.size()) + " covers";
        }
        for (auto const* p : covers) {
          if (!(*p == conK.congruence(al_bar)) && !(*p == conK.congruence(ar_bar))) {
            w = "cover " + show(*p) + " is neither named congruence";
          }
        }
      }
      c.add("tight.gamma_covers", w.empty(), w);
    }

    // protrusions
    auto const prot = find_protrusions(L, tr);
    auto const pc = protrusion_congruence(L, K, tr, prot);
    rep.protrusions = prot.left.size() + prot.right.size();

    try {
      auto const d = gamma_direct_tight(K, tr, prot, pc.pi);
      c.add("gamma.direct_tight", is_congruence(K, d) && d == gamma,
            "listed " + show(d) + ", gamma " + show(gamma));
    } catch (LatticeError const& err) {
      if (err.kind() != LatticeError::Kind::ClassClash) {
        throw;
      }
      c.add("gamma.direct_tight", CheckStatus::Discrepancy,
            std::string("class clash: ") + err.what() + "; gamma "
                + show(gamma));
    }
    {
      auto const d = gamma_direct_tight_resolved(K, tr, prot, pc.pi_bar);
      c.add("gamma.direct_tight_resolved", is_congruence(K, d) && d == gamma,
            "resolved " + show(d) + ", gamma " + show(gamma));
    }
    c.add("gamma.pi_below_gamma",
          pc.pi.refines(gamma_on_L) && pc.pi_bar.refines(gamma),
          "pi " + show(pc.pi));
    c.add("gamma.restriction_is_pi", gamma_on_L == pc.pi,
          "restriction " + show(gamma_on_L) + ", pi " + show(pc.pi));

    if (prot.empty()) {
      for (auto const* n :
           {"protrusion.has_extension", "protrusion.below_alpha_bar",
            "protrusion.below_gamma", "protrusion.class_structure",
            "protrusion.class_structure_literal",
            "protrusion.outside_filter_literal", "protrusion.filter"}) {
        c.na(n);
      }
    } else {
      struct Item {
        Protrusion const* p;
        bool left;
      };
      std::vector<Item> items;
      for (auto const& p : prot.left) {
        items.push_back({&p, true});
      }
      for (auto const& p : prot.right) {
        items.push_back({&p, false});
      }
      std::string w_ext, w_71, w_gam, w_cls, w_lit, w_up, w_61;
      bool const filter_defined = tr.n() >= 2 && tr.m() >= 2;
      Elem const f = filter_defined ? K.meet(tr.y_l[1], tr.y_r[1]) : 0;
      for (std::size_t k = 0; k < items.size(); ++k) {
        auto const& [p, left] = items[k];
        auto const& x = left ? tr.x_l : tr.x_r;
        auto const& y = left ? tr.y_l : tr.y_r;
        std::size_t const i = p->position;
        std::string const tag =
            std::string(left ? "left " : "right ") + std::to_string(i);
        if (p->companions.empty() && w_ext.empty()) {
          w_ext = tag;
        }
        if (i >= x.size()) {
          continue;  // protrusion at the end of its track
        }
        auto const& part = pc.parts[k];
        auto const& bar = pc.parts_bar[k];
        if (!bar.refines(conK.congruence(left ? ar_bar : al_bar)) && w_71.empty()) {
          w_71 = tag;
        }
        if ((!bar.refines(gamma) || bar == gamma) && w_gam.empty()) {
          w_gam = tag;
        }
        if (!(lift_by_tracks(tr, K.size(), part) == bar) && w_cls.empty()) {
          w_cls = tag + ": " + show(bar);
        }
        {
          UnionFind uf(K.size());
          for (auto const& b : part.blocks()) {
            for (Elem v : b) {
              uf.unite(e[b.front()], e[v]);
            }
          }
          uf.unite(x[i - 1], x[i]);
          if (!(uf.partition() == bar) && w_lit.empty()) {
            w_lit = tag + ": " + show(bar);
          }
        }
        for (auto const& b : bar.nontrivial_blocks()) {
          bool const in_up = std::all_of(b.begin(), b.end(), [&](Elem v) {
            return K.leq(tr.i(), v);
          });
          if (!in_up && w_up.empty()) {
            w_up = tag + ": class {" + std::to_string(b.front()) + " ...}";
          }
          std::vector<Elem> xs{x[i - 1], x[i]};
          std::vector<Elem> ys{y[i - 1], y[i]};
          std::sort(xs.begin(), xs.end());
          std::sort(ys.begin(), ys.end());
          if (filter_defined && b != xs && b != ys && w_61.empty()
              && !std::all_of(b.begin(), b.end(),
                              [&](Elem v) { return K.leq(f, v); })) {
            w_61 = tag + ": class {" + std::to_string(b.front()) + " ...}";
          }
        }
      }
      c.add("protrusion.has_extension", w_ext.empty(), w_ext);
      c.add("protrusion.below_alpha_bar", w_71.empty(), w_71);
      c.add("protrusion.below_gamma", w_gam.empty(), w_gam);
      c.add("protrusion.class_structure",
            w_cls.empty() && lift_by_tracks(tr, K.size(), pc.pi) == pc.pi_bar,
            w_cls.empty() ? "pi" : w_cls);
      c.literal("protrusion.class_structure_literal", w_lit.empty(), w_lit);
      c.literal("protrusion.outside_filter_literal", w_up.empty(), w_up);
      if (filter_defined) {
        c.literal("protrusion.filter", w_61.empty(), w_61);
      } else {
        c.na("protrusion.filter");
      }
    }
  } else {
    for (auto const* n :
         {"tight.new_join_irreducible", "tight.lemma_g", "tight.alpha_bound",
          "tight.alpha_bound_extension", "tight.gamma_covers",
          "gamma.direct_tight", "gamma.direct_tight_resolved",
          "gamma.pi_below_gamma", "gamma.restriction_is_pi",
          "protrusion.has_extension", "protrusion.below_alpha_bar",
          "protrusion.below_gamma", "protrusion.class_structure",
          "protrusion.class_structure_literal",
          "protrusion.outside_filter_literal", "protrusion.filter"}) {
      c.na(n);
    }
  }

  rep.checks = std::move(c.out);
  return rep;
}

LatticeReport verify_lattice(Lattice const& lattice) {
  LatticeReport r;
  r.checks = check_lattice(lattice);
  auto const con = ConLattice::compute(lattice, {.parallel = false});
  for (auto const& s : covering_squares(lattice)) {
    r.squares.push_back(verify_paper(lattice, con, s));
  }
  return r;
}

CorpusReport verify_corpus(std::uint64_t first, std::size_t count,
                           GeneratorParams const& params, bool parallel) {
  auto const lattices = corpus(first, count, params);
  CorpusReport out;
  out.cases.resize(count);
  auto run = [&](std::size_t k) {
    auto const& g = lattices[k];
    auto& cs = out.cases[k];
    cs.history = g.history;
    cs.size = g.lattice.size();
    cs.report = verify_lattice(g.lattice);
    auto const stages = replay_stages(g.history);
    cs.step_checks.push_back({"generator.replay",
                              stages.back() == g.lattice ? CheckStatus::Pass
                                                         : CheckStatus::Fail,
                              "replayed lattice differs"});
    if (cs.step_checks.back().status == CheckStatus::Pass) {
      cs.step_checks.back().witness.clear();
    }
    for (std::size_t s = 0; s < g.history.steps.size(); ++s) {
      for (auto& r : check_minimal_s7(stages[s], g.history.steps[s])) {
        r.name = "history." + r.name;
        cs.step_checks.push_back(std::move(r));
      }
    }
  };
  auto const n = static_cast<std::ptrdiff_t>(count);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      run(static_cast<std::size_t>(k));
    }
  } else {
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      run(static_cast<std::size_t>(k));
    }
  }

  auto tally = [&out](CheckResult const& r) {
    auto& t = out.tally[r.name];
    switch (r.status) {
      case CheckStatus::Pass: ++t.pass; break;
      case CheckStatus::Fail: ++t.fail; break;
      case CheckStatus::NotApplicable: ++t.not_applicable; break;
      case CheckStatus::Discrepancy: ++t.discrepancy; break;
    }
  };
  for (auto const& cs : out.cases) {
    for (auto const& r : cs.report.checks) {
      tally(r);
    }
    for (auto const& r : cs.step_checks) {
      tally(r);
    }
    for (auto const& sq : cs.report.squares) {
      ++out.squares;
      for (auto const& r : sq.checks) {
        tally(r);
      }
      if (sq.kind.tag == SquareTag::Wide) {
        ++out.wide;
      } else if (sq.kind.distributive) {
        ++out.tight_distributive;
      } else {
        ++out.tight_nondistributive;
      }
      if (sq.protrusions > 0) {
        ++out.with_protrusions;
      }
    }
  }
  return out;
}

}  // namespace forklat
