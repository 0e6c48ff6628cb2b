#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace stackychow {

/// Point or vector of the lattice Z^2 (exponents, polygon vertices, fan rays).
struct Vec2
{
	std::int64_t x = 0;
	std::int64_t y = 0;

	friend constexpr auto operator<=>(Vec2 const &, Vec2 const &) = default;
	friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
	friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
	friend constexpr Vec2 operator*(std::int64_t k, Vec2 a) { return {k * a.x, k * a.y}; }
	constexpr Vec2 operator-() const { return {-x, -y}; }
};

constexpr std::int64_t dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr std::int64_t det(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline std::int64_t content(Vec2 v) { return std::gcd(v.x, v.y); }

/// Divides out the content; the zero vector is returned unchanged.
inline Vec2 primitive(Vec2 v)
{
	auto g = content(v);
	return g == 0 ? v : Vec2{v.x / g, v.y / g};
}

inline bool is_primitive(Vec2 v) { return content(v) == 1; }

/// Strict counterclockwise angular order of nonzero vectors, starting at the
/// positive x-axis (angle 0 inclusive) and sweeping to 2*pi exclusive.
inline bool angle_less(Vec2 a, Vec2 b)
{
	auto half = [](Vec2 v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
	int ha = half(a), hb = half(b);
	if (ha != hb)
		return ha < hb;
	return det(a, b) > 0;
}

inline std::string to_string(Vec2 v)
{
	return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

} // namespace stackychow
