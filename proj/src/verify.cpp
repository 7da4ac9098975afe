#include "gpretzel/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpretzel/construct.hpp"
#include "gpretzel/errors.hpp"
#include "gpretzel/invariants.hpp"

namespace gpretzel {

int Sampler::below(int bound) {
  if (bound <= 0) throw InputError("sampling bound must be positive");
  return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound));
}

Diagram random_braid_diagram(Sampler& s, int max_crossings) {
  int strands = s.between(1, 4);
  int letters = strands == 1 ? 0 : s.between(0, max_crossings);
  std::vector<BraidLetter> w;
  for (int k = 0; k < letters; ++k) w.push_back({s.below(strands - 1), s.coin()});
  return build_braid_closure(Tangle(strands, std::move(w)));
}

MoveRecord random_move(const Diagram& d, Sampler& s, int soft_limit) {
  std::vector<Move> kinds = {Move::R1Plus, Move::R1Minus, Move::R2, Move::R3};
  if (d.crossing_count() > soft_limit) kinds = {Move::R3, Move::R1Undo, Move::R2Undo};
  std::vector<ReidemeisterSite> sites;
  for (int attempt = 0; attempt < 16 && sites.empty(); ++attempt) {
    Move m = kinds[s.below(static_cast<int>(kinds.size()))];
    sites = reidemeister_sites(d, m);
  }
  if (sites.empty()) sites = reidemeister_sites(d, Move::R1Plus);
  const auto& site = sites[s.below(static_cast<int>(sites.size()))];
  return {site.move, d, apply_reidemeister(d, site)};
}

std::vector<NamedDiagram> load_corpus(const std::string& directory) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) throw InputError("corpus directory not found: " + directory);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(directory)) {
    if (e.is_regular_file() && e.path().extension() == ".pd") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedDiagram> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream text;
    text << in.rdbuf();
    try {
      out.push_back({f.stem().string(), parse_pd(text.str())});
    } catch (const InputError& e) {
      throw InputError(f.filename().string() + ": " + e.what());
    }
  }
  return out;
}

namespace {

LaurentPoly A(long c, int e) { return LaurentPoly::monomial(Var::A, c, e); }

LaurentPoly k1_bracket_reference() {
  return A(-1, 24) + A(1, 20) + A(1, 8) - A(1, 4) + A(2, 0) - A(1, -4) - A(1, -16) + A(1, -20);
}

std::string range(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

CheckResult check_jones_family(const VerifyOptions& o) {
  for (int n = 0; n <= o.n_max; ++n) {
    LaurentPoly j = jones(build_kn(n));
    if (!(j == closed_form_jones(n))) return {"jones-closed-form", false, "n=" + std::to_string(n) + " gives " + j.to_string()};
  }
  return {"jones-closed-form", true, range(0, o.n_max)};
}

CheckResult check_alexander_family(const VerifyOptions& o) {
  for (int n = 0; n <= o.n_max; ++n) {
    LaurentPoly a = alexander(build_kn(n));
    if (!a.is_one()) return {"alexander-trivial", false, "n=" + std::to_string(n) + " gives " + a.to_string()};
  }
  return {"alexander-trivial", true, range(0, o.n_max)};
}

CheckResult check_distinct(const VerifyOptions& o) {
  std::vector<LaurentPoly> closed;
  for (int n = 0; n <= 10; ++n) closed.push_back(closed_form_jones(n));
  std::vector<LaurentPoly> computed;
  for (int n = 0; n <= o.n_max; ++n) computed.push_back(jones(build_kn(n)));
  for (const auto* v : {&closed, &computed}) {
    for (std::size_t a = 0; a < v->size(); ++a) {
      for (std::size_t b = a + 1; b < v->size(); ++b) {
        if ((*v)[a] == (*v)[b]) {
          return {"jones-distinct", false, "n=" + std::to_string(a) + " and n=" + std::to_string(b) + " agree"};
        }
      }
    }
  }
  return {"jones-distinct", true, "closed form n=0..10, computed " + range(0, o.n_max)};
}

CheckResult check_k1_bracket() {
  LaurentPoly b = family_bracket(1);
  if (!(b == k1_bracket_reference())) return {"k1-bracket", false, "got " + b.to_string()};
  Diagram d = build_kn(1);
  std::string raw = bracket_fast(d) == b ? "raw bracket equal" : "raw bracket differs by writhe";
  return {"k1-bracket", true, "writhe " + std::to_string(writhe(d)) + ", " + raw};
}

CheckResult check_bracket_recurrence(const VerifyOptions& o) {
  int top = std::max(4, o.n_max);
  std::vector<LaurentPoly> b;
  for (int n = 0; n <= top; ++n) b.push_back(family_bracket(n));
  for (int n = 2; n <= top; ++n) {
    if (!bracket_recurrence_holds(b[n], b[n - 1], b[n - 2])) {
      return {"bracket-recurrence", false, "fails at n=" + std::to_string(n)};
    }
  }
  LaurentPoly corrupted = b[2] + A(1, 0);
  if (bracket_recurrence_holds(corrupted, b[1], b[0])) {
    return {"bracket-recurrence", false, "perturbed bracket still satisfies the recurrence"};
  }
  return {"bracket-recurrence", true, range(2, top) + ", perturbed control rejected"};
}

CheckResult check_conway_recurrence(const VerifyOptions& o) {
  int top = std::max(4, o.n_max);
  std::vector<LaurentPoly> c;
  for (int n = 0; n <= top; ++n) c.push_back(conway_from_alexander(alexander(build_kn(n))));
  for (int n = 3; n <= top; ++n) {
    if (!conway_recurrence_holds(c[n], c[n - 1], c[n - 2], c[n - 3])) {
      return {"conway-recurrence", false, "fails at n=" + std::to_string(n)};
    }
  }
  LaurentPoly z = LaurentPoly::monomial(Var::z, 1, 1);
  if (conway_recurrence_holds(c[3], z, c[1], c[0])) {
    return {"conway-recurrence", false, "perturbed value still satisfies the recurrence"};
  }
  return {"conway-recurrence", true, range(3, top) + ", perturbed control rejected"};
}

// Two-component cases are compared for some orientation of the pretzel build.
CheckResult check_torus() {
  GraphProjection g = preset_theta(2);
  int cases = 0;
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      Diagram d = build_graph_pretzel(g, {{a, b}});
      LaurentPoly lhs = jones(d);
      LaurentPoly rhs = jones(build_torus_braid_closure(2, a + b));
      for (int c = 0; !(lhs == rhs) && c < static_cast<int>(component_arcs(d).size()); ++c) {
        if (jones(reverse_component(d, c)) == rhs) lhs = rhs;
      }
      if (!(lhs == rhs)) {
        return {"torus-subclass", false, "a=" + std::to_string(a) + " b=" + std::to_string(b) + ": " +
                                             lhs.to_string() + " vs " + rhs.to_string()};
      }
      ++cases;
    }
  }
  return {"torus-subclass", true, std::to_string(cases) + " cases"};
}

CheckResult check_pretzel() {
  int cases = 0;
  for (int i = 2; i <= 4; ++i) {
    GraphProjection g = preset_ngon(i);
    std::vector<int> p(i, -2);
    while (true) {
      LaurentPoly lhs = bracket_fast(build_graph_pretzel(g, {p}));
      LaurentPoly rhs = bracket_fast(build_classical_pretzel(p));
      if (!(lhs == rhs)) {
        std::string ps;
        for (int x : p) ps += (ps.empty() ? "" : ",") + std::to_string(x);
        return {"pretzel-subclass", false, "ngon:" + std::to_string(i) + " [" + ps + "]"};
      }
      ++cases;
      int k = 0;
      while (k < i && p[k] == 2) p[k++] = -2;
      if (k == i) break;
      ++p[k];
    }
  }
  return {"pretzel-subclass", true, std::to_string(cases) + " cases"};
}

GraphProjection random_projection(Sampler& s, std::string& name) {
  switch (s.below(3)) {
    case 0: {
      int i = s.between(2, 4);
      name = "theta:" + std::to_string(i);
      return preset_theta(i);
    }
    case 1: {
      int i = s.between(2, 4);
      name = "ngon:" + std::to_string(i);
      return preset_ngon(i);
    }
    default:
      name = "k4";
      return *projection_preset("k4");
  }
}

CheckResult check_mirror(const VerifyOptions& o) {
  Sampler s(o.seed);
  for (int k = 0; k < o.mirror_cases; ++k) {
    std::string name;
    GraphProjection g = random_projection(s, name);
    std::vector<int> p, neg;
    for (int v = 0; v < g.vertex_count(); ++v) {
      p.push_back(s.between(-3, 3));
      neg.push_back(-p.back());
    }
    GraphProjection m = mirror_projection(g);
    LaurentPoly lhs = bracket_fast(build_graph_pretzel(g, twists_by_id(g, p)));
    LaurentPoly rhs = invert_variable(bracket_fast(build_graph_pretzel(m, twists_by_id(m, neg))));
    if (!(lhs == rhs)) return {"mirror", false, "case " + std::to_string(k) + " (" + name + ")"};
  }
  return {"mirror", true, std::to_string(o.mirror_cases) + " cases"};
}

CheckResult check_s4(const VerifyOptions& o) {
  Sampler s(o.seed + 1);
  std::vector<std::vector<int>> quads = {{-2, 2, -4, 3}};
  while (quads.size() < 5) quads.push_back({s.between(-3, 3), s.between(-3, 3), s.between(-3, 3), s.between(-3, 3)});
  for (const auto& q : quads) {
    std::array<int, 4> sigma = {0, 1, 2, 3};
    std::optional<LaurentPoly> first;
    do {
      LaurentPoly j = jones(permute_params({q}, sigma));
      if (!first) {
        first = j;
      } else if (!(j == *first)) {
        return {"s4-symmetry", false,
                "params " + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
                    std::to_string(q[3])};
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return {"s4-symmetry", true, "5 quadruples x 24 orders"};
}

CheckResult check_oracle(const VerifyOptions& o) {
  int corpus_checked = 0;
  for (const auto& nd : o.corpus) {
    if (nd.diagram.crossing_count() > o.oracle_limit) continue;
    if (!(bracket_fast(nd.diagram) == bracket_statesum(nd.diagram, o.oracle_limit, o.workers))) {
      return {"oracle-equivalence", false, "corpus diagram " + nd.name};
    }
    ++corpus_checked;
  }
  Sampler s(o.seed + 2);
  for (int k = 0; k < o.random_diagrams; ++k) {
    Diagram d = random_braid_diagram(s, 12);
    if (!(bracket_fast(d) == bracket_statesum(d, o.oracle_limit, o.workers))) {
      return {"oracle-equivalence", false, "random diagram " + std::to_string(k) + ": " + emit_pd(d)};
    }
  }
  return {"oracle-equivalence", true,
          std::to_string(corpus_checked) + " corpus + " + std::to_string(o.random_diagrams) + " random"};
}

CheckResult check_moves(const VerifyOptions& o) {
  Sampler s(o.seed + 3);
  const LaurentPoly kink = A(-1, 3);
  Diagram d = random_braid_diagram(s, 8);
  LaurentPoly j0 = jones(d);
  LaurentPoly b = bracket_fast(d);
  for (int k = 0; k < o.random_moves; ++k) {
    if (k % 20 == 0 && k > 0) {
      d = random_braid_diagram(s, 8);
      j0 = jones(d);
      b = bracket_fast(d);
    }
    MoveRecord r = random_move(d, s);
    LaurentPoly nb = bracket_fast(r.after);
    bool bracket_ok = false;
    switch (r.move) {
      case Move::R1Plus: bracket_ok = nb == b * kink; break;
      case Move::R1Minus: bracket_ok = nb == b * invert_variable(kink); break;
      case Move::R1Undo: bracket_ok = nb * kink == b || nb * invert_variable(kink) == b; break;
      default: bracket_ok = nb == b; break;
    }
    std::string at = "move " + std::to_string(k) + " on " + emit_pd(r.before);
    if (!bracket_ok) return {"reidemeister", false, "bracket, " + at};
    if (!(jones(r.after) == j0)) return {"reidemeister", false, "jones, " + at};
    d = r.after;
    b = nb;
  }
  return {"reidemeister", true, std::to_string(o.random_moves) + " moves"};
}

}  // namespace

std::vector<CheckResult> verify_paper(const VerifyOptions& o) {
  if (o.n_max < 0) throw InputError("n-max must be nonnegative");
  std::vector<CheckResult> out;
  auto guarded = [&](const char* name, auto&& f) {
    try {
      out.push_back(f());
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  };
  guarded("jones-closed-form", [&] { return check_jones_family(o); });
  guarded("alexander-trivial", [&] { return check_alexander_family(o); });
  guarded("jones-distinct", [&] { return check_distinct(o); });
  guarded("k1-bracket", [&] { return check_k1_bracket(); });
  guarded("bracket-recurrence", [&] { return check_bracket_recurrence(o); });
  guarded("conway-recurrence", [&] { return check_conway_recurrence(o); });
  guarded("torus-subclass", [&] { return check_torus(); });
  guarded("pretzel-subclass", [&] { return check_pretzel(); });
  guarded("mirror", [&] { return check_mirror(o); });
  guarded("s4-symmetry", [&] { return check_s4(o); });
  guarded("oracle-equivalence", [&] { return check_oracle(o); });
  guarded("reidemeister", [&] { return check_moves(o); });
  return out;
}

}  // namespace gpretzel
