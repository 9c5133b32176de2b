#pragma once

// Rees and Simis cones of square-free monomial ideals and the decisions built on
// them: normality, Ehrhart-ring equality, Gorensteinness, symbolic generators.

#include "blowup/combinatorics.hpp"
#include "blowup/limits.hpp"
#include "blowup/polyhedra.hpp"
#include "blowup/report.hpp"

#include <string>
#include <vector>

namespace blowup::alg {

/// x^a t^b.
struct MonomialGenerator {
  comb::ExponentVector exponents;
  int t_degree = 0;

  IntVector to_vector() const;  // (a, b)
  // Requires a non-negative vector of length >= 1; the last entry is b.
  static MonomialGenerator from_vector(const IntVector& v);
  auto operator<=>(const MonomialGenerator&) const = default;
};

// Variables in index order, t last: "x1x2^2 t^3". Custom labels are joined with
// '*' ("a*b^2 t"). b = 0 omits t; the unit monomial renders as "1".
std::string render(const MonomialGenerator& m, const std::vector<std::string>& labels = {});

/// Cone over A' = {e_1, ..., e_n, (v_1, 1), ..., (v_q, 1)} in R^{n+1}.
struct ReesConeModel {
  int n = 0;
  std::vector<comb::ExponentVector> generators;
  std::vector<IntVector> a_prime;
  poly::IntegerCone cone;

  const std::vector<IntVector>& facets() const { return cone.facets(); }
};

// Throws InputError on zero generators or mismatched lengths.
ReesConeModel rees_cone(const std::vector<comb::ExponentVector>& generators);

struct NormalityResult {
  CheckReport report;
  poly::HilbertBasis basis;
  // One membership certificate over A' per Hilbert basis element, same order.
  std::vector<poly::Membership> certificates;
  std::vector<IntVector> a_prime;
};

// Normal iff every Hilbert basis element of the Rees cone lies in N A'.
NormalityResult rees_normality(const std::vector<comb::ExponentVector>& generators,
                               const Limits& limits = {});
CheckReport is_rees_normal(const std::vector<comb::ExponentVector>& generators,
                           const Limits& limits = {});

/// Cn(I) = H_{e_1}^+ ∩ ... ∩ H_{e_{n+1}}^+ ∩ H_{(u_1,-1)}^+ ∩ ... ∩ H_{(u_s,-1)}^+
/// for the minimal vertex covers u_k of the clutter.
struct SimisConeModel {
  int n = 0;
  std::vector<comb::VertexSet> covers;
  std::vector<IntVector> definition;  // halfspaces exactly as listed above
  std::vector<bool> redundant;        // per entry of `definition`
  poly::IntegerCone cone;

  const std::vector<IntVector>& irredundant() const { return cone.facets(); }
};

SimisConeModel simis_cone(const comb::Clutter& c);
poly::HilbertBasis simis_hilbert_basis(const comb::Clutter& c, const Limits& limits = {});

struct SymbolicGenerators {
  std::vector<MonomialGenerator> generators;  // by t-degree, then clique order
  CheckReport perfection;                     // oracle verdict, or the caller's assertion
};

// {x^w t^{|w|-1} : w a non-empty clique}. Perfection is verified by the
// definitional oracle when n is within the chromatic cap; above it the caller
// must pass assume_perfect. Throws PreconditionError for imperfect graphs.
SymbolicGenerators symbolic_generators_perfect(const comb::Graph& g, const Limits& limits = {},
                                               bool assume_perfect = false);

// True iff the lifted vectors (v_i, 1) form the Hilbert basis of their cone,
// cross-checked by decomposing every lattice point of bP up to the largest
// t-degree in that basis. Throws PreconditionError when no positive x_0 with
// <v_i, x_0> = 1 exists.
CheckReport ehrhart_equality(const std::vector<comb::ExponentVector>& f, const Limits& limits = {});

// Requires a graph without isolated vertices. Returns NotApplicable when I_c(G)
// is not normal or G is not unmixed.
CheckReport gorenstein_check(const comb::Graph& g, const Limits& limits = {});

// Normality of the dual ideal I* of the column ideal of a balanced matrix.
// NotApplicable when A is not balanced; dual_ideal errors propagate.
CheckReport dual_balanced_normal(const comb::IncidenceMatrix& a, const Limits& limits = {});

// "(1, 0, 1) = 1*(1, 0, 0) + 1*(0, 0, 1)"
std::string render_decomposition(const IntVector& point, const poly::Membership& m,
                                 const std::vector<IntVector>& generators);

}  // namespace blowup::alg
