#include "forklat/gamma.hpp"

#include <algorithm>
#include <string>

#include "forklat/congruence.hpp"

namespace forklat {

namespace {

  std::vector<Elem> inverse_map(ForkTrace const& trace, std::size_t size) {
    std::vector<Elem> inv(size, static_cast<Elem>(-1));
    for (std::size_t e = 0; e < trace.old_to_new.size(); ++e) {
      inv[trace.old_to_new[e]] = static_cast<Elem>(e);
    }
    return inv;
  }

  std::vector<Protrusion> track_protrusions(Lattice const& L,
                                            std::vector<Elem> const& xs_new,
                                            std::vector<Elem> const& to_old,
                                            std::vector<Elem> const& old_to_new,
                                            bool left) {
    std::vector<Elem> xs;
    for (Elem x : xs_new) {
      xs.push_back(to_old[x]);
    }
    std::size_t const n = xs.size();
    std::vector<Protrusion> out;
    for (std::size_t i = 1; i <= n; ++i) {
      Elem const xi = xs[i - 1];
      auto const lc = L.lower_covers(xi);
      if (lc.size() < 3) {
        continue;
      }
      Protrusion p;
      p.position = i;
      p.last_extension = i + 1;
      if (i == n) {  // no x_{i+1}: nothing to extend
        p.last_extension = i;
        out.push_back(std::move(p));
        continue;
      }
      // the element covered by x_i next to x_{i+1}, away from the square
      auto const pos = static_cast<std::size_t>(
          std::find(lc.begin(), lc.end(), xs[i]) - lc.begin());
      bool const has_neighbour = left ? pos > 0 : pos + 1 < lc.size();
      if (has_neighbour) {
        Elem const a = lc[left ? pos - 1 : pos + 1];
        p.companions.push_back(old_to_new[a]);
        p.last_extension = i + 2;
        // further companions: the upper cover of x_j other than x_{j-1}
        for (std::size_t j = i + 3; j <= n; ++j) {
          auto const uc = L.upper_covers(xs[j - 1]);
          if (uc.size() != 2) {
            break;
          }
          Elem const other = uc[0] == xs[j - 2] ? uc[1] : uc[0];
          p.companions.push_back(old_to_new[other]);
          p.last_extension = j;
        }
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  class ClassAssembler {
   public:
    explicit ClassAssembler(std::size_t n) : label_(n, kUnset) {}

    void add(std::vector<Elem> cls, std::string const& rule) {
      std::sort(cls.begin(), cls.end());
      cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
      Elem const id = next_++;
      for (Elem e : cls) {
        if (label_[e] != kUnset) {
          auto const& prev = classes_[label_[e]];
          if (prev != cls) {
            throw LatticeError(LatticeError::Kind::ClassClash,
                               "element " + std::to_string(e) + " claimed by "
                                   + rule_[label_[e]] + " and " + rule);
          }
        }
      }
      classes_.push_back(cls);
      rule_.push_back(rule);
      for (Elem e : cls) {
        label_[e] = id;
      }
    }

    [[nodiscard]] bool assigned(Elem e) const { return label_[e] != kUnset; }

    Partition finish() {
      for (Elem e = 0; e < label_.size(); ++e) {
        if (label_[e] == kUnset) {
          label_[e] = next_++;
        }
      }
      return Partition::from_labels(label_);
    }

   private:
    static constexpr Elem kUnset = static_cast<Elem>(-1);
    std::vector<Elem> label_;
    std::vector<std::vector<Elem>> classes_;
    std::vector<std::string> rule_;
    Elem next_ = 0;
  };

  void add_track_classes(ClassAssembler& acc, std::vector<Elem> const& x,
                         std::vector<Elem> const& y, std::vector<Elem> const& z,
                         std::vector<Protrusion> const& prot,
                         char const* side) {
    std::size_t const n = x.size();
    auto is_protrusion = [&](std::size_t pos) {
      return std::any_of(prot.begin(), prot.end(), [pos, n](auto const& p) {
        return p.position == pos && pos < n;
      });
    };
    auto tag = [side](char const* rule, std::size_t pos) {
      return std::string(rule) + "(" + side + "," + std::to_string(pos) + ")";
    };
    for (auto const& p : prot) {
      std::size_t const i = p.position;
      if (i >= n) {
        continue;
      }
      acc.add({x[i - 1], x[i], z[i - 1], z[i]}, tag("protrusion", i));
      acc.add({y[i - 1], y[i]}, tag("protrusion-y", i));
      for (std::size_t j = i + 2; j <= p.last_extension; ++j) {
        acc.add({p.companion(j), x[j - 1], z[j - 1]}, tag("extension", j));
      }
    }
    for (std::size_t k = 1; k <= n; ++k) {
      bool const extension = std::any_of(
          prot.begin(), prot.end(),
          [k](auto const& p) { return p.is_extension(k); });
      if (!is_protrusion(k) && !(k > 1 && is_protrusion(k - 1)) && !extension) {
        acc.add({x[k - 1], z[k - 1]}, tag("track", k));
      }
    }
  }

}  // namespace

ProtrusionReport find_protrusions(Lattice const& lattice,
                                  ForkTrace const& trace) {
  std::size_t const k_size = trace.old_to_new.size() + trace.new_elements.size();
  auto const to_old = inverse_map(trace, k_size);
  ProtrusionReport r;
  r.left = track_protrusions(lattice, trace.x_l, to_old, trace.old_to_new, true);
  r.right =
      track_protrusions(lattice, trace.x_r, to_old, trace.old_to_new, false);
  return r;
}

ProtrusionCongruences protrusion_congruence(Lattice const& lattice,
                                            Lattice const& extension,
                                            ForkTrace const& trace,
                                            ProtrusionReport const& report) {
  auto const to_old = inverse_map(trace, extension.size());
  ProtrusionCongruences out;
  out.pi = Partition::identity(lattice.size());
  auto add = [&](std::vector<Elem> const& y, Protrusion const& p) {
    if (p.position >= y.size()) {
      out.parts.push_back(Partition::identity(lattice.size()));
      out.parts_bar.push_back(Partition::identity(extension.size()));
      return;
    }
    Elem const hi = y[p.position - 1];
    Elem const lo = y[p.position];
    auto part = principal_congruence(lattice, to_old[lo], to_old[hi]);
    out.pi = partition_join(out.pi, part);
    out.parts.push_back(std::move(part));
    out.parts_bar.push_back(principal_congruence(extension, lo, hi));
  };
  for (auto const& p : report.left) {
    add(trace.y_l, p);
  }
  for (auto const& p : report.right) {
    add(trace.y_r, p);
  }
  out.pi_bar = minimal_extension(trace.old_to_new, extension, out.pi);
  return out;
}

Partition gamma_direct_tight(Lattice const& extension, ForkTrace const& trace,
                             ProtrusionReport const& report,
                             Partition const& pi) {
  ClassAssembler acc(extension.size());
  acc.add({trace.i(), trace.t}, "unit");
  add_track_classes(acc, trace.x_l, trace.y_l, trace.z_l, report.left, "l");
  add_track_classes(acc, trace.x_r, trace.y_r, trace.z_r, report.right, "r");
  for (auto const& block : pi.blocks()) {
    std::vector<Elem> cls;
    bool any_assigned = false;
    bool all_assigned = true;
    for (Elem e : block) {
      Elem const k = trace.old_to_new[e];
      cls.push_back(k);
      any_assigned |= acc.assigned(k);
      all_assigned &= acc.assigned(k);
    }
    if (all_assigned) {
      continue;
    }
    if (any_assigned) {
      throw LatticeError(LatticeError::Kind::ClassClash,
                         "a protrusion class meets an explicitly listed class "
                         "at element "
                             + std::to_string(cls.front()));
    }
    acc.add(cls, "pi");
  }
  return acc.finish();
}

Partition gamma_direct_tight_resolved(Lattice const& extension,
                                      ForkTrace const& trace,
                                      ProtrusionReport const& report,
                                      Partition const& pi_bar) {
  UnionFind uf(extension.size());
  uf.unite(trace.t, trace.i());
  auto side = [&uf](std::vector<Elem> const& x, std::vector<Elem> const& y,
                    std::vector<Elem> const& z,
                    std::vector<Protrusion> const& prot) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      uf.unite(x[k], z[k]);
    }
    auto owned = [&prot, &x](std::size_t pos) {
      return std::any_of(prot.begin(), prot.end(), [&](auto const& q) {
        return q.position < x.size()
               && (q.position == pos || q.position + 1 == pos);
      });
    };
    for (auto const& p : prot) {
      std::size_t const i = p.position;
      if (i >= x.size()) {
        continue;
      }
      uf.unite(x[i - 1], x[i]);
      uf.unite(y[i - 1], y[i]);
      for (std::size_t j = i + 2; j <= p.last_extension; ++j) {
        if (!owned(j)) {
          uf.unite(p.companion(j), x[j - 1]);
        }
      }
    }
  };
  side(trace.x_l, trace.y_l, trace.z_l, report.left);
  side(trace.x_r, trace.y_r, trace.z_r, report.right);
  return partition_join(uf.partition(), pi_bar);
}

Partition lift_by_tracks(ForkTrace const& trace, std::size_t extension_size,
                         Partition const& pi) {
  UnionFind uf(extension_size);
  for (auto const& b : pi.blocks()) {
    for (Elem e : b) {
      uf.unite(trace.old_to_new[b.front()], trace.old_to_new[e]);
    }
  }
  auto const to_old = inverse_map(trace, extension_size);
  auto side = [&](std::vector<Elem> const& x, std::vector<Elem> const& z) {
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t b = a + 1; b < x.size(); ++b) {
        if (pi.same(to_old[x[a]], to_old[x[b]])) {
          uf.unite(z[a], z[b]);
        }
      }
    }
  };
  side(trace.x_l, trace.z_l);
  side(trace.x_r, trace.z_r);
  return uf.partition();
}

Partition gamma_direct_distributive(Lattice const& extension,
                                    ForkTrace const& trace) {
  UnionFind uf(extension.size());
  uf.unite(trace.t, trace.i());
  for (std::size_t k = 0; k < trace.n(); ++k) {
    uf.unite(trace.z_l[k], trace.x_l[k]);
  }
  for (std::size_t k = 0; k < trace.m(); ++k) {
    uf.unite(trace.z_r[k], trace.x_r[k]);
  }
  return uf.partition();
}

std::vector<Interval> gamma_prime_set(ForkTrace const& trace) {
  auto lists = fork_prime_lists(trace);
  std::vector<Interval> g;
  for (int k : {0, 1, 2}) {
    g.insert(g.end(), lists[static_cast<std::size_t>(k)].begin(),
             lists[static_cast<std::size_t>(k)].end());
  }
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace forklat
