#include "blowup/errors.hpp"
#include "blowup/polyhedra.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace blowup::poly {

namespace {

HRepPolyhedron nonnegative_orthant(int dim) {
  HRepPolyhedron p;
  p.dim = static_cast<std::size_t>(dim);
  for (int i = 0; i < dim; ++i) p.inequalities.push_back(Halfspace{unit_vector(p.dim, i), 0});
  return p;
}

IntVector column_vector(const comb::IncidenceMatrix& a, int c) {
  IntVector v(static_cast<std::size_t>(a.rows));
  for (int r = 0; r < a.rows; ++r) v[r] = a.at(r, c);
  return v;
}

}  // namespace

HRepPolyhedron HRepPolyhedron::packing(const comb::IncidenceMatrix& a) {
  HRepPolyhedron p = nonnegative_orthant(a.rows);
  for (int c = 0; c < a.cols(); ++c) {
    p.inequalities.push_back(Halfspace{scale(column_vector(a, c), -1), -1});
  }
  return p;
}

HRepPolyhedron HRepPolyhedron::covering(const comb::IncidenceMatrix& a) {
  HRepPolyhedron p = nonnegative_orthant(a.rows);
  for (int c = 0; c < a.cols(); ++c) p.inequalities.push_back(Halfspace{column_vector(a, c), 1});
  return p;
}

VertexEnumeration vertices(const HRepPolyhedron& p) {
  const std::size_t d = p.dim;
  // Homogenize: P = {x : (x, 1) in C} for C = {(x, t) : t >= 0, <a, x> - c t >= 0}.
  std::vector<IntVector> cone_rows;
  for (const auto& h : p.inequalities) {
    if (h.normal.size() != d) throw InputError("inequality has the wrong dimension");
    IntVector row = h.normal;
    row.push_back(-h.offset);
    cone_rows.push_back(std::move(row));
  }
  cone_rows.push_back(unit_vector(d + 1, d));
  const auto dd = double_description(cone_rows, d + 1);
  if (!dd.lineality.empty()) throw NotPointedError("polyhedron contains a line");

  VertexEnumeration out;
  for (const auto& r : dd.rays) {
    const Integer& t = r[d];
    if (t == 0) {
      out.rays.push_back(IntVector(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d)));
      continue;
    }
    RationalVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = Rational(r[i], t);
    out.vertices.push_back(std::move(v));
  }
  if (out.vertices.empty()) throw InfeasibleError("polyhedron is empty");
  std::sort(out.vertices.begin(), out.vertices.end(), LexLess{});
  sort_unique(out.rays);
  return out;
}

CheckReport is_integral(const HRepPolyhedron& p) {
  CheckReport rep;
  rep.check = "polyhedron_integral";
  rep.method = Method::Oracle;
  const auto ve = vertices(p);
  rep.add_bound("vertices", std::to_string(ve.vertices.size()));
  rep.add_bound("recession_rays", std::to_string(ve.rays.size()));
  for (const auto& v : ve.vertices) {
    if (!blowup::is_integral(v)) {
      rep.verdict = Verdict::False;
      rep.witness = to_string(v);
      return rep;
    }
  }
  rep.verdict = Verdict::True;
  for (const auto& v : ve.vertices) rep.certificate.push_back("vertex " + to_string(v));
  return rep;
}

std::vector<IntVector> lattice_points_dilation(const std::vector<IntVector>& points, int b,
                                               const Limits& limits) {
  if (b < 1) throw InputError("dilation factor must be positive");
  if (points.empty()) throw InputError("polytope needs at least one point");
  const std::size_t n = points.front().size();
  std::vector<IntVector> lifted;
  for (const auto& p : points) {
    if (p.size() != n) throw InputError("polytope points differ in dimension");
    IntVector q = p;
    q.push_back(1);
    lifted.push_back(std::move(q));
  }
  const auto cone = IntegerCone::from_generators(n + 1, lifted);

  IntVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = points.front()[i] * b;
    for (const auto& p : points) {
      lo[i] = std::min<Integer>(lo[i], p[i] * b);
      hi[i] = std::max<Integer>(hi[i], p[i] * b);
    }
  }
  Integer box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= hi[i] - lo[i] + 1;
  if (box > limits.enumeration_budget) {
    throw CapExceeded("dilation bounding box holds " + box.str() + " points");
  }

  std::vector<IntVector> out;
  IntVector x = lo;
  x.push_back(b);
  while (true) {
    if (cone.contains(x)) out.emplace_back(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  sort_unique(out);
  return out;
}

std::vector<IntVector> read_vectors(std::istream& in) {
  std::vector<IntVector> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    IntVector v;
    std::string tok;
    while (ss >> tok) {
      try {
        v.emplace_back(tok);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
      }
    }
    if (v.empty()) continue;
    if (!out.empty() && v.size() != out.front().size()) {
      throw InputError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(out.front().size()) + " entries, found " +
                       std::to_string(v.size()));
    }
    out.push_back(std::move(v));
  }
  return out;
}

void write_vectors(std::ostream& out, const std::vector<IntVector>& vectors) {
  for (const auto& v : vectors) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
}

std::string render_inequality(const IntVector& normal, const Integer& offset) {
  auto side = [](const std::vector<std::pair<Integer, std::size_t>>& terms, const Integer& constant) {
    std::string s;
    for (const auto& [c, i] : terms) {
      if (!s.empty()) s += " + ";
      if (c != 1) s += c.str();
      s += "a" + std::to_string(i + 1);
    }
    if (constant > 0) {
      s += s.empty() ? constant.str() : " + " + constant.str();
    } else if (constant < 0) {
      s += s.empty() ? constant.str() : " - " + Integer(-constant).str();
    }
    return s.empty() ? std::string("0") : s;
  };
  std::vector<std::pair<Integer, std::size_t>> pos, neg;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] > 0) pos.emplace_back(normal[i], i);
    if (normal[i] < 0) neg.emplace_back(-normal[i], i);
  }
  // <n, x> >= c reads as pos >= neg + c; with nothing on the left, flip to neg <= -c.
  if (pos.empty() && !neg.empty()) return side(neg, 0) + " <= " + side({}, -offset);
  return side(pos, 0) + " >= " + side(neg, offset);
}

}  // namespace blowup::poly
