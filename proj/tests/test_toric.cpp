#include "test_support.hpp"

#include "stackychow/errors.hpp"
#include "stackychow/toric.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace stackychow;
using testing::Rng;
using testing::uniform;

namespace {

// Brute-force extreme points: p is extreme unless it lies in a triangle or on
// a segment spanned by other points of the set.
std::set<Vec2> extreme_points(std::vector<Vec2> const &pts)
{
	auto in_triangle = [](Vec2 p, Vec2 a, Vec2 b, Vec2 c) {
		auto s1 = det(b - a, p - a), s2 = det(c - b, p - b), s3 = det(a - c, p - c);
		bool neg = s1 < 0 || s2 < 0 || s3 < 0, pos = s1 > 0 || s2 > 0 || s3 > 0;
		return !(neg && pos);
	};
	auto on_segment = [](Vec2 p, Vec2 a, Vec2 b) {
		return det(b - a, p - a) == 0 && dot(p - a, p - b) <= 0;
	};
	std::set<Vec2> out;
	for (Vec2 p : pts) {
		bool extreme = true;
		for (Vec2 a : pts)
			for (Vec2 b : pts) {
				if (a == p || b == p || a == b)
					continue;
				if (on_segment(p, a, b))
					extreme = false;
				for (Vec2 c : pts)
					if (c != p && c != a && c != b && det(b - a, c - a) != 0 && in_triangle(p, a, b, c))
						extreme = false;
			}
		if (extreme)
			out.insert(p);
	}
	return out;
}

// Coefficients of f along the face minimizing <., rho>, read off from the
// support directly.
UniPoly face_polynomial(LaurentPoly2 const &f, Vec2 rho)
{
	auto supp = f.support();
	std::int64_t lambda = dot(supp[0], rho);
	for (Vec2 m : supp)
		lambda = std::min(lambda, dot(m, rho));
	Vec2 dir{rho.y, -rho.x};
	std::vector<Vec2> face;
	for (Vec2 m : supp)
		if (dot(m, rho) == lambda)
			face.push_back(m);
	Vec2 start = *std::min_element(face.begin(), face.end(),
	                               [&](Vec2 a, Vec2 b) { return dot(a, dir) < dot(b, dir); });
	std::vector<Rat> c;
	for (Vec2 m : face) {
		auto k = static_cast<std::size_t>((dot(m, dir) - dot(start, dir)) / dot(dir, dir));
		if (c.size() <= k)
			c.resize(k + 1, Rat(0));
		c[k] = f.coeff(m);
	}
	return UniPoly(c);
}

bool audit_fan(Fan2D const &fan, std::vector<Vec2> const &required)
{
	auto const &r = fan.rays;
	if (r.size() < 3)
		return false;
	for (std::size_t i = 0; i < r.size(); ++i) {
		if (!is_primitive(r[i]) || det(r[i], r[(i + 1) % r.size()]) != 1)
			return false;
		if (i + 1 < r.size() && !angle_less(r[i], r[i + 1]))
			return false;
	}
	for (Vec2 v : required)
		if (std::find(r.begin(), r.end(), v) == r.end())
			return false;
	return true;
}

Vec2 random_primitive(Rng &rng, int box)
{
	for (;;) {
		Vec2 v{uniform(rng, -box, box), uniform(rng, -box, box)};
		if (is_primitive(v))
			return v;
	}
}

} // namespace

TEST_CASE("Newton polygon examples")
{
	auto tri = newton_polygon(LaurentPoly2::parse("x^2 - 3*x + 2 + y"));
	CHECK(tri.vertices == std::vector<Vec2>{{0, 0}, {2, 0}, {0, 1}});
	auto pt = newton_polygon(LaurentPoly2::parse("5*x^2*y^3"));
	CHECK(pt.is_point());
	CHECK(pt.vertices == std::vector<Vec2>{{2, 3}});
	auto seg = newton_polygon(LaurentPoly2::parse("x + x^-1"));
	CHECK(seg.is_segment());
	CHECK(seg.vertices == std::vector<Vec2>{{-1, 0}, {1, 0}});
	CHECK_THROWS_AS(newton_polygon(LaurentPoly2()), DomainError);
}

TEST_CASE("Newton polygon matches brute-force hull")
{
	Rng rng(101);
	for (int trial = 0; trial < 150; ++trial) {
		auto f = testing::random_laurent(rng, 4, 9);
		auto gamma = newton_polygon(f);
		auto supp = f.support();
		auto expected = extreme_points(supp);
		CHECK(std::set<Vec2>(gamma.vertices.begin(), gamma.vertices.end()) == expected);
		CHECK(gamma.vertices.front() == *std::min_element(supp.begin(), supp.end()));
		if (gamma.vertices.size() >= 3)
			for (std::size_t i = 0; i < gamma.vertices.size(); ++i) {
				Vec2 a = gamma.vertices[i], b = gamma.vertices[(i + 1) % gamma.vertices.size()];
				for (Vec2 m : supp)
					CHECK(det(b - a, m - a) >= 0);
			}
	}
}

TEST_CASE("edge data examples")
{
	auto tri = edge_data(newton_polygon(LaurentPoly2::parse("x^2 - 3*x + 2 + y")));
	REQUIRE(tri.size() == 3);
	CHECK(tri[0].rho == Vec2{0, 1});
	CHECK(tri[1].rho == Vec2{-1, -2});
	CHECK(tri[2].rho == Vec2{1, 0});
	CHECK(tri[0].lambda == 0);
	CHECK(tri[1].lambda == -2);
	CHECK(tri[2].lambda == 0);
	CHECK(tri[0].steps == 2);

	auto sq = edge_data(newton_polygon(LaurentPoly2::parse("1 + x + y + x*y")));
	std::vector<Vec2> normals;
	for (auto const &e : sq)
		normals.push_back(e.rho);
	CHECK(normals == std::vector<Vec2>{{0, 1}, {-1, 0}, {0, -1}, {1, 0}});

	auto seg = edge_data(newton_polygon(LaurentPoly2::parse("1 + x^2")));
	REQUIRE(seg.size() == 2);
	CHECK(seg[0].rho == Vec2{0, 1});
	CHECK(seg[1].rho == Vec2{0, -1});
	CHECK(seg[0].lambda == 0);
	CHECK(seg[1].lambda == 0);

	CHECK_THROWS_AS(edge_data(newton_polygon(LaurentPoly2::parse("x"))), DomainError);
}

TEST_CASE("edge data agrees with brute-force minima")
{
	Rng rng(102);
	for (int trial = 0; trial < 150; ++trial) {
		auto f = testing::random_laurent(rng);
		auto edges = edge_data(newton_polygon(f));
		int wraps = 0;
		for (std::size_t i = 0; i < edges.size(); ++i) {
			auto const &e = edges[i];
			CHECK(is_primitive(e.rho));
			CHECK(e.q == e.p + e.steps * e.direction);
			std::int64_t lo = dot(f.support()[0], e.rho);
			for (Vec2 m : f.support())
				lo = std::min(lo, dot(m, e.rho));
			CHECK(e.lambda == lo);
			CHECK(dot(e.p, e.rho) == lo);
			CHECK(dot(e.q, e.rho) == lo);
			UniPoly g = edge_polynomial(f, e);
			CHECK(g == face_polynomial(f, e.rho));
			CHECK(g.degree() == e.steps);
			CHECK_FALSE(g.coeff(0).is_zero());
			CHECK_FALSE(g.leading().is_zero());
			if (!angle_less(e.rho, edges[(i + 1) % edges.size()].rho))
				++wraps;
		}
		if (edges.size() >= 3)
			CHECK(wraps == 1);
	}
}

TEST_CASE("edge polynomial examples")
{
	auto f = LaurentPoly2::parse("x^2 - 3*x + 2 + y");
	auto edges = edge_data(newton_polygon(f));
	CHECK(edge_polynomial(f, edges[0]) == UniPoly::parse("2 - 3*t + t^2"));
	CHECK(edge_polynomial(f, edges[1]) == UniPoly::parse("1 + t"));
	CHECK(edge_polynomial(f, edges[2]) == UniPoly::parse("1 + 2*t"));
	auto other = edge_data(newton_polygon(LaurentPoly2::parse("1 + x*y^3")))[0];
	CHECK_THROWS_AS(edge_polynomial(f, other), DomainError);
}

TEST_CASE("Minkowski sum and multiplicative edge polynomials")
{
	Rng rng(103);
	for (int trial = 0; trial < 80; ++trial) {
		auto f = testing::random_laurent(rng, 3, 5);
		auto g = testing::random_laurent(rng, 3, 5);
		auto fg = f * g;
		std::vector<Vec2> sums;
		for (Vec2 a : newton_polygon(f).vertices)
			for (Vec2 b : newton_polygon(g).vertices)
				sums.push_back(a + b);
		auto gamma = newton_polygon(fg);
		CHECK(std::set<Vec2>(gamma.vertices.begin(), gamma.vertices.end()) == extreme_points(sums));
		for (auto const &e : edge_data(gamma))
			CHECK(edge_polynomial(fg, e) == face_polynomial(f, e.rho) * face_polynomial(g, e.rho));
	}
}

TEST_CASE("fan examples")
{
	auto p2 = smooth_complete_fan({{1, 0}, {0, 1}, {-1, -1}});
	CHECK(p2.rays == std::vector<Vec2>{{1, 0}, {0, 1}, {-1, -1}});

	auto f = smooth_complete_fan({{1, 0}, {1, 2}});
	CHECK(std::find(f.rays.begin(), f.rays.end(), Vec2{1, 1}) != f.rays.end());
	CHECK(audit_fan(f, {{1, 0}, {1, 2}}));
	CHECK(is_smooth(f));
	CHECK(is_complete(f));

	std::vector<Vec2> tri{{0, 1}, {-1, -2}, {1, 0}};
	CHECK(audit_fan(smooth_complete_fan(tri), tri));

	CHECK(audit_fan(smooth_complete_fan({}), {}));
	CHECK(audit_fan(smooth_complete_fan({{3, 7}}), {{3, 7}}));
	CHECK(audit_fan(smooth_complete_fan({{1, 0}, {-1, 0}}), {{1, 0}, {-1, 0}}));
	CHECK(audit_fan(smooth_complete_fan({{1, 0}, {1, 3}}), {{1, 0}, {1, 3}}));

	CHECK_THROWS_AS(smooth_complete_fan({{2, 0}}), DomainError);
	CHECK_THROWS_AS(smooth_complete_fan({{1, 0}, {1, 0}}), DomainError);
	CHECK_THROWS_AS(smooth_complete_fan({{0, 0}}), DomainError);

	CHECK_FALSE(is_smooth(Fan2D{{{1, 0}, {1, 2}, {-1, 0}, {0, -1}}}));
	CHECK_FALSE(is_complete(Fan2D{{{1, 0}, {0, 1}}}));
}

TEST_CASE("random fans pass the determinant audit")
{
	Rng rng(104);
	for (int trial = 0; trial < 200; ++trial) {
		std::set<Vec2> req;
		int n = uniform(rng, 1, 8);
		while (static_cast<int>(req.size()) < n)
			req.insert(random_primitive(rng, 5));
		std::vector<Vec2> rays(req.begin(), req.end());
		auto fan = smooth_complete_fan(rays);
		CHECK(audit_fan(fan, rays));
		CHECK(is_smooth(fan));
		CHECK(is_complete(fan));
		// already smooth and complete: unchanged up to rotation
		CHECK(smooth_complete_fan(fan.rays) == fan);
	}
}
