#include "gpretzel/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <thread>

#include "gpretzel/construct.hpp"
#include "gpretzel/errors.hpp"

namespace gpretzel {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

LaurentPoly loop_power(int k) {
  LaurentPoly p = LaurentPoly::constant(Var::A, 1);
  const LaurentPoly delta = LaurentPoly::loop_value();
  for (int i = 0; i < k; ++i) p *= delta;
  return p;
}

LaurentPoly crossing_free_bracket(const Diagram& d) {
  if (d.free_loops() == 0) throw InputError("the empty diagram has no bracket");
  return loop_power(d.free_loops() - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// State sum

LaurentPoly bracket_statesum(const Diagram& d, int crossing_limit, int workers) {
  const int c = d.crossing_count();
  if (c == 0) return crossing_free_bracket(d);
  if (c > crossing_limit || c > 30) {
    throw InputError("state sum refuses " + std::to_string(c) + " crossings (limit " +
                     std::to_string(crossing_limit) + ")");
  }
  using Counts = std::map<std::pair<int, int>, std::int64_t>;  // (a - b, loops) -> states
  const std::uint64_t total = std::uint64_t{1} << c;
  auto run = [&](std::uint64_t lo, std::uint64_t hi, Counts& out) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      UnionFind uf(d.arc_count() + 1);
      int loops = d.arc_count();
      for (int x = 0; x < c; ++x) {
        const auto& s = d.crossings()[x].slots;
        if (mask >> x & 1) {
          loops -= uf.unite(s[0], s[3]);
          loops -= uf.unite(s[1], s[2]);
        } else {
          loops -= uf.unite(s[0], s[1]);
          loops -= uf.unite(s[2], s[3]);
        }
      }
      int b = std::popcount(mask);
      ++out[{c - 2 * b, loops + d.free_loops()}];
    }
  };
  workers = std::clamp(workers, 1, 64);
  std::vector<Counts> parts(workers);
  if (workers == 1) {
    run(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(run, total * w / workers, total * (w + 1) / workers, std::ref(parts[w]));
    }
    for (auto& t : pool) t.join();
  }
  Counts merged;
  for (const auto& part : parts) {
    for (const auto& [k, n] : part) merged[k] += n;
  }
  LaurentPoly result(Var::A);
  for (const auto& [k, n] : merged) {
    result += loop_power(k.second - 1).shifted(k.first).scaled_by(Integer(static_cast<long>(n)));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Frontier contraction

namespace {

struct Sweep {
  std::vector<int> order;
  int width = 0;
};

Sweep plan_sweep(const Diagram& d) {
  const int c = d.crossing_count();
  std::vector<int> ends_done(d.arc_count() + 1, 0);
  std::vector<bool> done(c, false);
  int open = 0;
  Sweep s;
  for (int step = 0; step < c; ++step) {
    int best = -1;
    int best_size = 0;
    bool best_adjacent = false;
    for (int x = 0; x < c; ++x) {
      if (done[x]) continue;
      int size = open;
      bool adjacent = false;
      std::map<int, int> seen;
      for (int l : d.crossings()[x].slots) ++seen[l];
      for (auto [l, k] : seen) {
        if (ends_done[l] == 1) {
          adjacent = true;
          --size;
        } else if (k == 1) {
          ++size;
        }
      }
      bool better = best < 0 || size < best_size || (size == best_size && adjacent && !best_adjacent);
      if (better) {
        best = x;
        best_size = size;
        best_adjacent = adjacent;
      }
    }
    done[best] = true;
    for (int l : d.crossings()[best].slots) ++ends_done[l];
    open = best_size;
    s.width = std::max(s.width, open);
    s.order.push_back(best);
  }
  return s;
}

}  // namespace

std::vector<int> frontier_order(const Diagram& d) { return plan_sweep(d).order; }

int frontier_width(const Diagram& d) { return plan_sweep(d).width; }

LaurentPoly bracket_fast(const Diagram& d) {
  const int c = d.crossing_count();
  if (c == 0) return crossing_free_bracket(d);
  const std::vector<int> order = frontier_order(d);
  const LaurentPoly delta = LaurentPoly::loop_value();

  std::vector<int> frontier;  // open arc labels
  std::map<std::vector<int>, LaurentPoly> states;
  states.emplace(std::vector<int>{}, LaurentPoly::constant(Var::A, 1));
  std::vector<int> slot_of(d.arc_count() + 1, -1);  // label -> frontier index

  for (int x : order) {
    const auto& s = d.crossings()[x].slots;
    for (int i = 0; i < static_cast<int>(frontier.size()); ++i) slot_of[frontier[i]] = i;

    // Local nodes: old frontier arcs first, then arcs first met here.
    std::vector<int> local = frontier;
    std::array<int, 4> node{};
    for (int k = 0; k < 4; ++k) {
      if (slot_of[s[k]] >= 0) {
        node[k] = slot_of[s[k]];
      } else {
        auto it = std::find(local.begin() + frontier.size(), local.end(), s[k]);
        node[k] = static_cast<int>(it - local.begin());
        if (it == local.end()) local.push_back(s[k]);
      }
    }
    const int n = static_cast<int>(local.size());
    std::vector<int> degree(n, 0);
    for (int i = 0; i < static_cast<int>(frontier.size()); ++i) degree[i] = 1;
    for (int k = 0; k < 4; ++k) ++degree[node[k]];
    std::vector<int> next;
    std::vector<int> next_index(n, -1);
    for (int i = 0; i < n; ++i) {
      if (degree[i] == 1) {
        next_index[i] = static_cast<int>(next.size());
        next.push_back(local[i]);
      }
    }

    std::map<std::vector<int>, LaurentPoly> out;
    for (const auto& [pairing, weight] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        UnionFind uf(n);
        std::vector<int> edges(n, 0);
        std::vector<std::pair<int, int>> links;
        for (int i = 0; i < static_cast<int>(pairing.size()); ++i) {
          if (i < pairing[i]) links.emplace_back(i, pairing[i]);
        }
        if (smoothing == 0) {
          links.emplace_back(node[0], node[1]);
          links.emplace_back(node[2], node[3]);
        } else {
          links.emplace_back(node[0], node[3]);
          links.emplace_back(node[1], node[2]);
        }
        for (auto [a, b] : links) uf.unite(a, b);
        std::vector<int> nodes_in(n, 0);
        for (int i = 0; i < n; ++i) ++nodes_in[uf.find(i)];
        for (auto [a, b] : links) ++edges[uf.find(a)];
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
          if (uf.find(i) == i && edges[i] == nodes_in[i]) ++cycles;
        }
        std::vector<int> new_pairing(next.size(), -1);
        std::vector<int> first_end(n, -1);
        for (int i = 0; i < n; ++i) {
          if (next_index[i] < 0) continue;
          int r = uf.find(i);
          if (first_end[r] < 0) {
            first_end[r] = i;
          } else {
            new_pairing[next_index[i]] = next_index[first_end[r]];
            new_pairing[next_index[first_end[r]]] = next_index[i];
          }
        }
        LaurentPoly w = weight.shifted(smoothing == 0 ? 1 : -1);
        for (int k = 0; k < cycles; ++k) w *= delta;
        auto [it, fresh] = out.try_emplace(std::move(new_pairing), Var::A);
        it->second += w;
      }
    }
    for (int l : frontier) slot_of[l] = -1;
    frontier = std::move(next);
    states = std::move(out);
  }
  if (!frontier.empty() || states.size() != 1) throw InternalError("frontier sweep did not close");
  LaurentPoly total = states.begin()->second;
  for (int k = 0; k < d.free_loops(); ++k) total *= delta;
  return divide_exact(total, delta);
}

// ---------------------------------------------------------------------------
// Jones

LaurentPoly writhe_factor(int w) {
  // (-A^3)^{-w} = (-1)^w A^{-3w}
  return LaurentPoly::monomial(Var::A, (w % 2 == 0) ? 1 : -1, -3 * static_cast<std::int64_t>(w));
}

LaurentPoly jones(const Diagram& d) {
  return substitute_A_to_q(writhe_factor(writhe(d)) * bracket_fast(d));
}

LaurentPoly closed_form_jones(int n) {
  auto q = [](std::int64_t k, long c) { return LaurentPoly::monomial(Var::q, c, 4 * k); };
  LaurentPoly front = q(3 * static_cast<std::int64_t>(n) + 2, 1) - q(2, 1);
  LaurentPoly tail = q(0, 1) - q(-1, 1) + q(-3, 1) - q(-4, 2) + q(-5, 1) - q(-7, 1) + q(-8, 1);
  return front * tail + q(0, 1);
}

// ---------------------------------------------------------------------------
// Alexander and Conway

namespace {

LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly::constant(Var::t, 1);
  bool negate = false;
  LaurentPoly prev = LaurentPoly::constant(Var::t, 1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly(Var::t);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = LaurentPoly(Var::t);
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

LaurentPoly alexander(const Diagram& d) {
  if (!d.is_oriented()) throw InputError("the Alexander polynomial needs an oriented diagram");
  if (components(d) != 1) throw InputError("the Alexander polynomial is only computed for knots");
  const int c = d.crossing_count();
  if (c == 0) return LaurentPoly::constant(Var::t, 1);

  UnionFind uf(d.arc_count() + 1);
  for (const auto& x : d.crossings()) uf.unite(x.slots[1], x.slots[3]);
  std::map<int, int> generator;
  for (int l = 1; l <= d.arc_count(); ++l) generator.try_emplace(uf.find(l), static_cast<int>(generator.size()));
  if (static_cast<int>(generator.size()) != c) {
    throw InternalError("Wirtinger presentation has " + std::to_string(generator.size()) + " generators for " +
                        std::to_string(c) + " crossings");
  }

  auto tp = [](long coeff, int power) { return LaurentPoly::monomial(Var::t, coeff, 2 * power); };
  std::vector<std::vector<LaurentPoly>> m(c, std::vector<LaurentPoly>(c, LaurentPoly(Var::t)));
  for (int r = 0; r < c; ++r) {
    const auto& s = d.crossings()[r].slots;
    int k = generator[uf.find(s[1])];
    int i = generator[uf.find(s[0])];
    int j = generator[uf.find(s[2])];
    if (d.signs()[r] > 0) {
      m[r][k] += tp(1, 0) - tp(1, 1);
      m[r][i] += tp(1, 1);
      m[r][j] += tp(-1, 0);
    } else {
      m[r][k] += tp(1, 1) - tp(1, 0);
      m[r][i] += tp(1, 0);
      m[r][j] += tp(-1, 1);
    }
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  LaurentPoly det = bareiss_det(std::move(m));
  if (det.is_zero()) {
    throw InternalError("singular Alexander minor (" + std::to_string(c - 1) + "x" + std::to_string(c - 1) +
                        ") for a " + std::to_string(c) + "-crossing knot diagram");
  }
  det = det.shifted(-(det.min_exponent() + det.max_exponent()) / 2);
  Integer at_one = det.value_at_one();
  if (at_one < 0 || (at_one == 0 && det.coefficient(det.max_exponent()) < 0)) det = -det;
  return det;
}

LaurentPoly conway_from_alexander(const LaurentPoly& delta) {
  if (delta.var() != Var::t) throw InputError("expected a polynomial in t");
  const LaurentPoly step = LaurentPoly::monomial(Var::t, 1, 1) - LaurentPoly::monomial(Var::t, 1, -1);
  LaurentPoly rest = delta;
  LaurentPoly z(Var::z);
  while (!rest.is_zero()) {
    std::int64_t m = rest.max_exponent();
    if (m < 0) throw InputError("Alexander polynomial is not symmetric: " + delta.to_string());
    Integer c = rest.coefficient(m);
    z.add_term(m, c);
    rest -= step.pow(static_cast<unsigned>(m)).scaled_by(c);
  }
  return z;
}

// ---------------------------------------------------------------------------
// Family recurrences

LaurentPoly family_bracket(int n) {
  Diagram d = build_kn(n);
  LaurentPoly j = writhe_factor(writhe(d)) * bracket_fast(d);
  return j * writhe_factor(-(2 * n - 2));
}

bool bracket_recurrence_holds(const LaurentPoly& bn, const LaurentPoly& bn1, const LaurentPoly& bn2) {
  LaurentPoly k = LaurentPoly::monomial(Var::A, 1, 6) + LaurentPoly::monomial(Var::A, 1, -6);
  return (bn - k * bn1 + bn2).is_zero();
}

bool bracket_recurrence_check(int n) {
  if (n < 2) throw InputError("bracket recurrence needs n >= 2");
  return bracket_recurrence_holds(family_bracket(n), family_bracket(n - 1), family_bracket(n - 2));
}

bool conway_recurrence_holds(const LaurentPoly& cn, const LaurentPoly& cn1, const LaurentPoly& cn2,
                             const LaurentPoly& cn3) {
  LaurentPoly k = LaurentPoly::constant(Var::z, 3) + LaurentPoly::monomial(Var::z, 1, 2);
  return (cn - k * cn1 + k * cn2 - cn3).is_zero();
}

bool conway_recurrence_check(int n) {
  if (n < 3) throw InputError("Conway recurrence needs n >= 3");
  auto c = [](int k) { return conway_from_alexander(alexander(build_kn(k))); };
  return conway_recurrence_holds(c(n), c(n - 1), c(n - 2), c(n - 3));
}

}  // namespace gpretzel
