#include "stackychow/laurent.hpp"

#include "stackychow/errors.hpp"
#include "stackychow/expr.hpp"
#include "stackychow/monomial_format.hpp"

#include <algorithm>

namespace stackychow {

LaurentPoly2::LaurentPoly2(Rat c)
{
	add_term({0, 0}, c);
}

LaurentPoly2 LaurentPoly2::monomial(Rat c, Vec2 exponent)
{
	LaurentPoly2 f;
	f.add_term(exponent, c);
	return f;
}

void LaurentPoly2::add_term(Vec2 e, Rat const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

Rat LaurentPoly2::coeff(Vec2 e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Vec2> LaurentPoly2::support() const
{
	std::vector<Vec2> s;
	s.reserve(terms_.size());
	for (auto const &[e, c] : terms_)
		s.push_back(e);
	return s;
}

LaurentPoly2 &LaurentPoly2::operator+=(LaurentPoly2 const &o)
{
	for (auto const &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

LaurentPoly2 &LaurentPoly2::operator-=(LaurentPoly2 const &o)
{
	for (auto const &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

LaurentPoly2 operator*(LaurentPoly2 const &a, LaurentPoly2 const &b)
{
	LaurentPoly2 r;
	for (auto const &[ea, ca] : a.terms_)
		for (auto const &[eb, cb] : b.terms_)
			r.add_term(ea + eb, ca * cb);
	return r;
}

LaurentPoly2 LaurentPoly2::operator-() const
{
	LaurentPoly2 r = *this;
	for (auto &[e, c] : r.terms_)
		c = -c;
	return r;
}

LaurentPoly2 LaurentPoly2::pow(std::int64_t e) const
{
	if (e < 0) {
		if (!is_monomial())
			throw DomainError("negative power of a non-monomial Laurent polynomial");
		auto const &[ex, c] = *terms_.begin();
		return monomial(c.pow(e), e * ex);
	}
	LaurentPoly2 r(1), b = *this;
	while (e > 0) {
		if (e & 1)
			r = r * b;
		b = b * b;
		e >>= 1;
	}
	return r;
}

std::string LaurentPoly2::to_string() const
{
	// total degree descending, then x-degree descending
	std::vector<std::pair<Vec2, Rat>> ordered(terms_.begin(), terms_.end());
	std::sort(ordered.begin(), ordered.end(), [](auto const &a, auto const &b) {
		auto da = a.first.x + a.first.y, db = b.first.x + b.first.y;
		if (da != db)
			return da > db;
		return a.first.x > b.first.x;
	});
	std::vector<std::pair<Rat, std::vector<std::pair<std::string, std::int64_t>>>> rows;
	for (auto const &[e, c] : ordered)
		rows.push_back({c, {{"x", e.x}, {"y", e.y}}});
	return format_polynomial(rows);
}

namespace {

struct LaurentOps
{
	LaurentPoly2 number(Rat const &r) { return LaurentPoly2(r); }
	LaurentPoly2 variable(std::string_view name)
	{
		if (name == "x")
			return LaurentPoly2::x();
		if (name == "y")
			return LaurentPoly2::y();
		throw ParseError("unknown variable '" + std::string(name) + "' (expected x or y)");
	}
	LaurentPoly2 call(std::string_view name, std::vector<std::string_view> const &)
	{
		throw ParseError("function calls are not allowed in polynomials: '" +
		                 std::string(name) + "'");
	}
	LaurentPoly2 add(LaurentPoly2 a, LaurentPoly2 b) { return a + b; }
	LaurentPoly2 sub(LaurentPoly2 a, LaurentPoly2 b) { return a - b; }
	LaurentPoly2 mul(LaurentPoly2 a, LaurentPoly2 b) { return a * b; }
	LaurentPoly2 neg(LaurentPoly2 a) { return -a; }
	LaurentPoly2 div(LaurentPoly2 a, LaurentPoly2 b)
	{
		if (!b.is_monomial())
			throw ParseError("division only by nonzero monomials");
		return a * b.pow(-1);
	}
	LaurentPoly2 pow(LaurentPoly2 a, std::int64_t e)
	{
		if (e < 0 && !a.is_monomial())
			throw ParseError("negative exponent on a non-monomial");
		return a.pow(e);
	}
};

} // namespace

LaurentPoly2 LaurentPoly2::parse(std::string_view text)
{
	LaurentOps ops;
	return parse_expression(text, ops);
}

} // namespace stackychow
