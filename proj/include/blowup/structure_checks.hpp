#pragma once

// Theorem-level decision procedures for perfection, TDI-ness, balancedness and
// the max-flow min-cut property, each paired with a definitional oracle.

#include "blowup/combinatorics.hpp"
#include "blowup/limits.hpp"
#include "blowup/report.hpp"

#include <optional>
#include <vector>

namespace blowup::checks {

// Primitive normals of sum_{i in K} a_i >= (|K| - 1) a_{n+1} over every clique K
// of G, the empty clique included. Sorted canonically.
std::vector<IntVector> clique_inequalities(const comb::Graph& g);

// Perfect iff the facets of the Rees cone of I_c(G) are exactly the clique
// inequalities. Requires no isolated vertices and n + 1 <= hb_dim_cap.
CheckReport perfect_via_rees_cone(const comb::Graph& g, const Limits& limits = {});

// Integrality of {x >= 0, xA <= 1}.
CheckReport perfect_matrix_check(const comb::IncidenceMatrix& a);

// (i) {x >= 0, xA <= 1} integral and (ii) R_+B ∩ Z^{n+1} = N B for
// B = {(v_i, 1)} ∪ {-e_j}. With negative entries only (i) ∧ (ii) => TDI is
// claimed; the verdict is Inconclusive otherwise.
CheckReport tdi_check(const comb::IncidenceMatrix& a, const Limits& limits = {});

// Compares the covering LP min{<y,1> : y >= 0, Ay >= alpha} with its integer
// optimum for every integral alpha in the box [alpha_box_low, alpha_box_high]^n.
CheckReport tdi_oracle(const comb::IncidenceMatrix& a, const Limits& limits = {});

// Odd holes: odd-order square submatrices with exactly two ones per row and
// column. The fast path searches chordless cycles of length 2 mod 4 in the
// row-column graph; the oracle enumerates submatrices. Throws InputError on
// entries outside {0, 1}.
CheckReport balanced_check(const comb::IncidenceMatrix& a, const Limits& limits = {});
CheckReport balanced_oracle(const comb::IncidenceMatrix& a, const Limits& limits = {});

// Requires uniform edge sizes; NotApplicable otherwise.
CheckReport mfmc_check(const comb::Clutter& c);

// Shortest-first search for an induced cycle of length >= 4; vertices in cycle order.
std::optional<comb::VertexSet> chordless_cycle(const comb::Graph& g);

// The graph on the given pairs must have a chordal complement; if so, I_c(G)
// is checked for normality, otherwise the report is NotApplicable.
CheckReport cm_height_two_normal(int n, const std::vector<std::pair<int, int>>& pairs,
                                 const Limits& limits = {});

}  // namespace blowup::checks
