#pragma once

#include <vector>

#include "gpretzel/diagram.hpp"
#include "gpretzel/laurent.hpp"

namespace gpretzel {

/// Kauffman bracket as a sum over all 2^c smoothings. The crossing-free
/// unknot has bracket 1. Refuses diagrams with more than `crossing_limit`
/// crossings; `workers` > 1 splits the state space across threads with a
/// result identical to the sequential sum.
LaurentPoly bracket_statesum(const Diagram& d, int crossing_limit = 16, int workers = 1);

/// Partial state of the frontier evaluator: how the processed part of the
/// diagram joins the open arcs crossing the frontier, and the accumulated
/// weight of all smoothings that produce this joining.
struct FrontierState {
  std::vector<int> pairing;  // pairing[i] = partner index among frontier arcs
  LaurentPoly weight{Var::A};
};

/// Crossing order used by bracket_fast: greedy, each step taking the crossing
/// that leaves the fewest open arcs, ties broken towards crossings adjacent
/// to the processed region and then by index.
std::vector<int> frontier_order(const Diagram& d);
/// Largest number of open arcs met while sweeping in frontier_order().
int frontier_width(const Diagram& d);

/// Kauffman bracket by frontier contraction; same value as bracket_statesum.
LaurentPoly bracket_fast(const Diagram& d);

/// (-A^3)^{-w}.
LaurentPoly writhe_factor(int w);

/// Jones polynomial in q: (-A^3)^{-w(D)} <D> with A = q^{-1/4}.
LaurentPoly jones(const Diagram& d);

/// (q^{3n+2} - q^2)(1 - q^-1 + q^-3 - 2q^-4 + q^-5 - q^-7 + q^-8) + 1.
LaurentPoly closed_form_jones(int n);

/// Alexander polynomial of an oriented knot diagram from the Wirtinger
/// presentation, normalised so that D(t) = D(1/t) and D(1) = 1.
LaurentPoly alexander(const Diagram& d);

/// Conway polynomial z-form of a normalised Alexander polynomial, using
/// z = t^{1/2} - t^{-1/2}.
LaurentPoly conway_from_alexander(const LaurentPoly& delta);

/// (-A^3)^{2n-2} J_{K_n} in the variable A: the bracket of K_n on a diagram
/// of writhe 2n - 2, whatever the writhe of the constructed diagram.
LaurentPoly family_bracket(int n);

/// b_n - (A^6 + A^-6) b_{n-1} + b_{n-2} == 0.
bool bracket_recurrence_holds(const LaurentPoly& bn, const LaurentPoly& bn1,
                              const LaurentPoly& bn2);
bool bracket_recurrence_check(int n);

/// c_n - (3+z^2) c_{n-1} + (3+z^2) c_{n-2} - c_{n-3} == 0.
bool conway_recurrence_holds(const LaurentPoly& cn, const LaurentPoly& cn1,
                             const LaurentPoly& cn2, const LaurentPoly& cn3);
bool conway_recurrence_check(int n);

}  // namespace gpretzel
