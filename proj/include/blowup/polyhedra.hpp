#pragma once

// Exact rational cones and polyhedra.
//
// Cones are kept in both forms: generators and an irredundant list of primitive
// facet normals (plus equations when the cone is not full-dimensional). Either
// form is derived from the other on first use by the double description method;
// derived data is computed once and shared between copies.

#include "blowup/arith.hpp"
#include "blowup/combinatorics.hpp"
#include "blowup/limits.hpp"
#include "blowup/report.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace blowup::poly {

/// The closed halfspace <normal, x> >= offset.
struct Halfspace {
  IntVector normal;
  Integer offset = 0;

  bool contains(const IntVector& x) const { return dot(normal, x) >= offset; }
  bool operator==(const Halfspace&) const = default;
};

/// Generators of {x : <a, x> >= 0 for every inequality a}: extreme rays modulo
/// the lineality space, and a basis of the lineality space.
struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

ConeGenerators double_description(const std::vector<IntVector>& inequalities, std::size_t dim);

class IntegerCone {
 public:
  // Throws InputError on zero generators or dimension mismatch. Duplicates are dropped.
  static IntegerCone from_generators(std::size_t dim, std::vector<IntVector> generators);
  // {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}.
  static IntegerCone from_inequalities(std::size_t dim, std::vector<IntVector> inequalities,
                                       std::vector<IntVector> equations = {});

  std::size_t dim() const { return dim_; }
  // The generators supplied at construction; for H-constructed cones, the
  // extreme rays together with a lineality basis taken with both signs.
  const std::vector<IntVector>& generators() const;
  // Irredundant primitive facet normals, canonically sorted. For cones that are
  // not full-dimensional each normal is the unique one lying in the linear span.
  const std::vector<IntVector>& facets() const;
  // Basis (reduced echelon, primitive rows) of the orthogonal complement of the span.
  const std::vector<IntVector>& equations() const;
  // Primitive extreme rays; throws NotPointedError if the cone has a lineality space.
  const std::vector<IntVector>& extreme_rays() const;

  bool is_pointed() const;
  bool is_full_dimensional() const { return equations().empty(); }
  std::size_t dimension_of_span() const { return dim_ - equations().size(); }

  bool contains(const IntVector& x) const;
  // Topological interior in R^dim; empty unless the cone is full-dimensional.
  bool in_interior(const IntVector& x) const;

 private:
  struct State;
  IntegerCone(std::size_t dim, std::shared_ptr<State> state);

  std::size_t dim_ = 0;
  std::shared_ptr<State> state_;
};

// Irredundant facets of cone(generators) as homogeneous halfspaces.
std::vector<Halfspace> facets(const std::vector<IntVector>& generators);
// Extreme rays of {x : <f, x> >= 0}; throws NotPointedError when not pointed.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& facet_normals, std::size_t dim);

/// Saturated sublattice Z^d ∩ V of a rational subspace V, with coordinates.
class SublatticeBasis {
 public:
  // V is the common kernel of `equations` (rows); empty means V = R^dim.
  SublatticeBasis(std::size_t dim, const std::vector<IntVector>& equations);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  IntVector coordinates(const IntVector& x) const;  // requires x in the lattice
  IntVector embed(const IntVector& coords) const;

 private:
  std::size_t dim_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<RationalVector> pivot_inverse_;
};

// Integer kernel {x in Z^dim : M x = 0} as a lattice basis (unimodular column reduction).
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t dim);

struct HilbertBasis {
  std::vector<IntVector> elements;  // canonical order
  std::size_t simplices = 0;        // size of the triangulation used
  std::size_t candidates = 0;       // lattice points examined before reduction
};

// Unique minimal generating set of cone ∩ Z^d for a pointed cone. Throws
// NotPointedError, and CapExceeded when dim > limits.hb_dim_cap or the
// parallelepiped enumeration exceeds limits.enumeration_budget.
HilbertBasis hilbert_basis(const IntegerCone& cone, const Limits& limits = {});

struct Membership {
  bool member = false;
  std::vector<Integer> coefficients;  // one per generator when member
  IntVector grading;                  // positive functional bounding the search
  Integer degree_bound = 0;           // <grading, point>
  std::size_t nodes = 0;
};

/// Decides membership in the affine semigroup N·generators by exhaustive search
/// bounded by a grading that is positive on every generator.
class SemigroupOracle {
 public:
  // Throws PreconditionError when no positive grading exists.
  explicit SemigroupOracle(std::vector<IntVector> generators);

  const std::vector<IntVector>& generators() const { return generators_; }
  const IntVector& grading() const { return grading_; }
  Membership decompose(const IntVector& point, std::size_t budget = 5'000'000) const;

 private:
  std::vector<IntVector> generators_;
  IntVector grading_;
  IntegerCone cone_;
};

Membership semigroup_member(const IntVector& point, const std::vector<IntVector>& generators,
                            std::size_t budget = 5'000'000);

/// {x : <a_i, x> >= c_i}.
struct HRepPolyhedron {
  std::size_t dim = 0;
  std::vector<Halfspace> inequalities;

  // {x >= 0, xA <= 1} for the columns of A.
  static HRepPolyhedron packing(const comb::IncidenceMatrix& a);
  // Q(A) = {x >= 0, xA >= 1}.
  static HRepPolyhedron covering(const comb::IncidenceMatrix& a);
};

struct VertexEnumeration {
  std::vector<RationalVector> vertices;  // canonical order
  std::vector<IntVector> rays;           // primitive recession rays
};

// Throws InfeasibleError for empty polyhedra and NotPointedError when a line fits.
VertexEnumeration vertices(const HRepPolyhedron& p);
CheckReport is_integral(const HRepPolyhedron& p);

// bP ∩ Z^n for P = conv(points).
std::vector<IntVector> lattice_points_dilation(const std::vector<IntVector>& points, int b,
                                               const Limits& limits = {});

// One vector per line, whitespace-separated integers, '#' starts a comment.
std::vector<IntVector> read_vectors(std::istream& in);
void write_vectors(std::ostream& out, const std::vector<IntVector>& vectors);

// "a1 + a2 >= a3" with primitive coefficients; variables named a1..ad.
std::string render_inequality(const IntVector& normal, const Integer& offset = 0);

}  // namespace blowup::poly
