#include "stackychow/toric.hpp"

#include "stackychow/errors.hpp"

#include <algorithm>
#include <set>

namespace stackychow {

Polygon2 newton_polygon(LaurentPoly2 const &f)
{
	if (f.is_zero())
		throw DomainError("Newton polygon of the zero polynomial");
	std::vector<Vec2> pts = f.support(); // sorted lexicographically
	if (pts.size() == 1)
		return {pts};

	// Andrew's monotone chain; strict turns only, so collinear points drop.
	std::vector<Vec2> hull;
	auto build = [&](auto first, auto last) {
		std::size_t base = hull.size();
		for (auto it = first; it != last; ++it) {
			while (hull.size() >= base + 2 &&
			       det(hull[hull.size() - 1] - hull[hull.size() - 2],
			           *it - hull[hull.size() - 2]) <= 0)
				hull.pop_back();
			hull.push_back(*it);
		}
		hull.pop_back();
	};
	build(pts.begin(), pts.end());
	build(pts.rbegin(), pts.rend());

	if (hull.size() == 2 && hull[0] == hull[1])
		hull.pop_back();
	return {hull};
}

std::vector<EdgeDatum> edge_data(Polygon2 const &gamma)
{
	auto const &v = gamma.vertices;
	if (v.size() < 2)
		throw DomainError("a point polygon has no edges");
	std::vector<EdgeDatum> out;
	for (std::size_t i = 0; i < v.size(); ++i) {
		Vec2 p = v[i], q = v[(i + 1) % v.size()];
		Vec2 d = q - p;
		std::int64_t steps = content(d);
		Vec2 dir = primitive(d);
		Vec2 rho{-dir.y, dir.x}; // interior lies to the left of p -> q
		out.push_back({rho, dot(p, rho), p, q, dir, steps});
	}
	return out;
}

bool is_complete(Fan2D const &fan)
{
	auto const &r = fan.rays;
	if (r.size() < 3)
		return false;
	for (std::size_t i = 0; i < r.size(); ++i)
		if (det(r[i], r[(i + 1) % r.size()]) <= 0)
			return false;
	// adjacent turns each in (0, pi); they must wind exactly once
	for (std::size_t i = 0; i + 1 < r.size(); ++i)
		if (!angle_less(r[i], r[i + 1]))
			return false;
	return true;
}

bool is_smooth(Fan2D const &fan)
{
	auto const &r = fan.rays;
	if (r.size() < 3)
		return false;
	for (std::size_t i = 0; i < r.size(); ++i)
		if (det(r[i], r[(i + 1) % r.size()]) != 1)
			return false;
	return true;
}

namespace {

// Extended Euclid: returns (g, s, t) with s*a + t*b = g >= 0.
std::array<std::int64_t, 3> ext_gcd(std::int64_t a, std::int64_t b)
{
	std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
	while (b != 0) {
		std::int64_t q = a / b;
		std::tie(a, b) = std::make_pair(b, a - q * b);
		std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
		std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
	}
	if (a < 0)
		return {-a, -s0, -t0};
	return {a, s0, t0};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
	std::int64_t q = a / b;
	if ((a % b != 0) && ((a < 0) != (b < 0)))
		--q;
	return q;
}

// Lattice vector u strictly inside cone(v, w), det(v, w) = d > 1, with
// det(v, u) = 1 and 0 < det(u, w) < d (one Hirzebruch-Jung step).
Vec2 resolving_ray(Vec2 v, Vec2 w)
{
	auto [g, s, t] = ext_gcd(v.x, v.y);
	Vec2 vp{-t, s}; // det(v, vp) = s*v.x + t*v.y = 1
	std::int64_t d = det(v, w);
	std::int64_t a = det(w, vp); // w = a*v + d*vp
	std::int64_t c = floor_div(a, d) + 1;
	return c * v + vp;
}

} // namespace

Fan2D smooth_complete_fan(std::vector<Vec2> const &required_rays)
{
	std::vector<Vec2> rays;
	{
		std::set<Vec2> seen;
		for (Vec2 r : required_rays) {
			if (!is_primitive(r))
				throw DomainError("fan ray " + to_string(r) + " is not primitive");
			if (!seen.insert(r).second)
				throw DomainError("fan ray " + to_string(r) + " repeated");
			rays.push_back(r);
		}
	}
	if (rays.empty())
		rays = {{1, 0}, {0, 1}, {-1, -1}};
	if (rays.size() == 1)
		rays.push_back(-rays[0]);
	std::sort(rays.begin(), rays.end(), angle_less);

	// Complete: close every gap of angle >= pi.
	for (bool changed = true; changed;) {
		changed = false;
		for (std::size_t i = 0; i < rays.size(); ++i) {
			Vec2 v = rays[i], w = rays[(i + 1) % rays.size()];
			std::int64_t dt = det(v, w);
			if (dt > 0)
				continue;
			Vec2 fill = (dt == 0) ? Vec2{-v.y, v.x} : -v;
			rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i + 1), fill);
			changed = true;
			break;
		}
	}

	// Resolve: each insertion strictly lowers the determinant of the cone it
	// splits, so the loop terminates.
	for (std::size_t i = 0; i < rays.size();) {
		Vec2 v = rays[i], w = rays[(i + 1) % rays.size()];
		if (det(v, w) > 1)
			rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i + 1), resolving_ray(v, w));
		else
			++i;
	}

	std::rotate(rays.begin(), std::min_element(rays.begin(), rays.end(), angle_less), rays.end());
	return {rays};
}

UniPoly edge_polynomial(LaurentPoly2 const &f, EdgeDatum const &e)
{
	auto mismatch = [&] {
		return DomainError("edge with normal " + to_string(e.rho) +
		                   " is not an edge of the Newton polygon of " + f.to_string());
	};
	if (f.coeff(e.p).is_zero() || f.coeff(e.q).is_zero() || e.steps < 1 ||
	    e.p + e.steps * e.direction != e.q || e.direction != Vec2{e.rho.y, -e.rho.x})
		throw mismatch();
	for (auto const &[m, c] : f.terms())
		if (dot(m, e.rho) < e.lambda)
			throw mismatch();
	std::vector<Rat> coeffs;
	for (std::int64_t m = 0; m <= e.steps; ++m)
		coeffs.push_back(f.coeff(e.p + m * e.direction));
	return UniPoly(std::move(coeffs));
}

} // namespace stackychow
