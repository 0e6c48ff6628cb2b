#pragma once

#include "stackychow/laurent.hpp"
#include "stackychow/lattice.hpp"
#include "stackychow/unipoly.hpp"

#include <vector>

namespace stackychow {

/// Lattice polygon given by its extreme points in counterclockwise order,
/// starting from the lexicographically least vertex. One vertex for a point,
/// two for a segment.
struct Polygon2
{
	std::vector<Vec2> vertices;

	bool is_point() const { return vertices.size() == 1; }
	bool is_segment() const { return vertices.size() == 2; }
	friend bool operator==(Polygon2 const &, Polygon2 const &) = default;
};

/**
 * One edge of a Newton polygon, oriented so that q follows p.
 *
 * rho is the primitive inward normal, lambda = min over the polygon of
 * <., rho>, attained exactly along the segment [p, q]. `direction` is the
 * primitive step (rho.y, -rho.x) from p toward q and `steps` the lattice
 * length of the edge, so q = p + steps * direction.
 */
struct EdgeDatum
{
	Vec2 rho;
	std::int64_t lambda = 0;
	Vec2 p;
	Vec2 q;
	Vec2 direction;
	std::int64_t steps = 0;

	friend bool operator==(EdgeDatum const &, EdgeDatum const &) = default;
};

/// Rays of a complete 2-D fan, primitive, in strict counterclockwise order
/// starting from the first ray at angle >= 0.
struct Fan2D
{
	std::vector<Vec2> rays;

	friend bool operator==(Fan2D const &, Fan2D const &) = default;
};

/// Convex hull of the exponent set; throws DomainError for f = 0.
Polygon2 newton_polygon(LaurentPoly2 const &f);

/// Edges in counterclockwise traversal starting at vertices[0]. A segment
/// yields its two opposite edges; a point throws DomainError.
std::vector<EdgeDatum> edge_data(Polygon2 const &gamma);

/// Smallest-effort smooth complete fan containing every required ray.
/// Throws DomainError on non-primitive or repeated rays.
Fan2D smooth_complete_fan(std::vector<Vec2> const &required_rays);

/// Adjacent rays (including the wrap-around pair) all at positive angle
/// less than pi.
bool is_complete(Fan2D const &fan);
/// Every adjacent pair, including the wrap-around pair, has determinant 1.
bool is_smooth(Fan2D const &fan);

/// g(s) = sum_m a_{p + m*direction} s^m, m = 0..steps, so g(0) = a_p and
/// the leading coefficient is a_q. Throws DomainError if `e` is not an edge
/// of the Newton polygon of f.
UniPoly edge_polynomial(LaurentPoly2 const &f, EdgeDatum const &e);

} // namespace stackychow
