#include "stackychow/cycle.hpp"

#include "stackychow/errors.hpp"
#include "stackychow/gcd_free.hpp"
#include "stackychow/log.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace stackychow {

ZeroCycleOnR ZeroCycleOnR::from_components(std::vector<Component> const &parts)
{
	std::vector<UniPoly> polys;
	std::vector<std::int64_t> mults;
	for (auto const &[g, m] : parts) {
		if (g.is_zero())
			throw DomainError("zero polynomial has no divisor");
		if (m == 0 || g.is_constant())
			continue;
		if (g.eval(0).is_zero())
			throw DomainError("component " + g.to_string() + " meets t = 0, which is not in R");
		if (g.eval(-1).is_zero())
			throw DomainError("component " + g.to_string() + " meets t = -1, which is not in R");
		polys.push_back(g);
		mults.push_back(m);
	}

	// Rational points are listed one by one; the remaining closed points are
	// collected into one product per multiplicity.
	ZeroCycleOnR c;
	std::map<std::int64_t, UniPoly> grouped;
	for (auto const &elem : gcd_free_basis(polys)) {
		std::int64_t total = 0;
		for (std::size_t i = 0; i < mults.size(); ++i)
			total += mults[i] * elem.multiplicity[i];
		if (total == 0)
			continue;
		UniPoly rest = elem.poly;
		for (auto const &r : rational_roots(elem.poly)) {
			UniPoly lin = UniPoly::linear_root(r);
			c.parts_.emplace_back(lin, total);
			rest = rest.exact_div(lin);
		}
		if (rest.is_constant())
			continue;
		auto [it, inserted] = grouped.try_emplace(total, rest);
		if (!inserted)
			it->second = it->second * rest;
	}
	for (auto &[m, g] : grouped)
		c.parts_.emplace_back(std::move(g), m);
	std::sort(c.parts_.begin(), c.parts_.end(),
	          [](auto const &a, auto const &b) { return canonical_less(a.first, b.first); });
	return c;
}

ZeroCycleOnR ZeroCycleOnR::point(Rat const &r)
{
	return from_components({{UniPoly::linear_root(r), 1}});
}

std::int64_t ZeroCycleOnR::total_degree() const
{
	std::int64_t n = 0;
	for (auto const &[g, m] : parts_)
		n += std::abs(m) * g.degree();
	return n;
}

ZeroCycleOnR ZeroCycleOnR::operator-() const
{
	ZeroCycleOnR r = *this;
	for (auto &[g, m] : r.parts_)
		m = -m;
	return r;
}

ZeroCycleOnR operator+(ZeroCycleOnR const &a, ZeroCycleOnR const &b)
{
	if (a.is_empty())
		return b;
	if (b.is_empty())
		return a;
	auto parts = a.parts_;
	parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
	return ZeroCycleOnR::from_components(parts);
}

ZeroCycleOnR operator*(std::int64_t k, ZeroCycleOnR const &c)
{
	if (k == 0)
		return {};
	ZeroCycleOnR r = c;
	for (auto &[g, m] : r.parts_)
		m *= k;
	return r;
}

std::string ZeroCycleOnR::to_string() const
{
	if (parts_.empty())
		return "0";
	std::string out;
	for (auto const &[g, m] : parts_) {
		if (m < 0)
			out += '-';
		else if (!out.empty())
			out += '+';
		if (std::abs(m) != 1)
			out += std::to_string(std::abs(m));
		out += "[V(" + g.to_string() + ")]";
	}
	return out;
}

HigherChowClass norm(ZeroCycleOnR const &c)
{
	Rat v(1);
	for (auto const &[g, m] : c.components())
		v *= g.eval(0).pow(m);
	return {v};
}

ZeroCycleOnR boundary_rho(LaurentPoly2 const &f, EdgeDatum const &e)
{
	UniPoly g = edge_polynomial(f, e).monic();
	UniPoly const minus_one = UniPoly::linear_root(-1);
	int dropped = 0;
	while (g.eval(-1).is_zero()) {
		g = g.exact_div(minus_one);
		++dropped;
	}
	if (dropped > 0)
		log().info("edge rho={}: dropped {} point(s) at t = -1 (outside R, norm 1)",
		           to_string(e.rho), dropped);
	return ZeroCycleOnR::divisor(g);
}

ZeroCycleOnR total_boundary(LaurentPoly2 const &f)
{
	if (f.is_zero())
		throw DomainError("boundary of the zero polynomial is undefined");
	Polygon2 gamma = newton_polygon(f);
	if (gamma.is_point())
		return {};
	std::vector<ZeroCycleOnR::Component> parts;
	for (auto const &e : edge_data(gamma))
		for (auto const &comp : boundary_rho(f, e).components())
			parts.push_back(comp);
	return ZeroCycleOnR::from_components(parts);
}

HigherChowClass class_of(ZeroCycleOnR const &c)
{
	return norm(c);
}

namespace {

// g(x) + y
LaurentPoly2 reduction_curve(UniPoly const &g)
{
	LaurentPoly2 f = LaurentPoly2::y();
	for (int i = 0; i <= g.degree(); ++i)
		f += LaurentPoly2::monomial(g.coeff(i), {i, 0});
	return f;
}

bool is_rational_point(ZeroCycleOnR::Component const &c)
{
	return c.first.degree() == 1 && std::abs(c.second) == 1;
}

} // namespace

Reduction reduce_to_point(ZeroCycleOnR const &c)
{
	auto const &parts = c.components();
	if (parts.empty() || (parts.size() == 1 && parts[0].first.degree() == 1 && parts[0].second == 1))
		return {c, {}};

	Certificate cert;
	auto step = [&](int sign, UniPoly const &g) {
		cert.steps.push_back({sign, reduction_curve(g)});
	};

	// Signed rational points still to be absorbed.
	std::vector<std::pair<Rat, int>> points;

	// For monic G with G(0) != 0: boundary of G(x) + y is [V(G)] + [{q}] with
	// q = -1/G(0); the q term is absent when q = -1.
	for (auto const &comp : parts) {
		auto const &[g, m] = comp;
		if (is_rational_point(comp)) {
			points.emplace_back(-g.coeff(0), static_cast<int>(m));
			continue;
		}
		int sign = m > 0 ? 1 : -1;
		UniPoly G = g.pow(static_cast<int>(std::abs(m)));
		step(sign, G);
		Rat q = -G.coeff(0).inverse();
		if (q != Rat(-1))
			points.emplace_back(q, -sign);
	}

	// -[{r}] = -boundary((x - r) + y) + [{1/r}]
	for (auto &[r, s] : points) {
		if (s > 0)
			continue;
		step(-1, UniPoly::linear_root(r));
		r = r.inverse();
		s = 1;
	}

	// [{a}] + [{b}] = boundary((x - a)(x - b) + y) - [{-1/(ab)}], and the
	// negative point is flipped as above, leaving [{-ab}].
	std::optional<Rat> acc;
	for (auto const &[b, s] : points) {
		if (!acc) {
			acc = b;
			continue;
		}
		Rat a = *acc;
		step(1, UniPoly::linear_root(a) * UniPoly::linear_root(b));
		if (a * b == Rat(1)) {
			acc.reset();
			continue;
		}
		Rat q = -(a * b).inverse();
		step(-1, UniPoly::linear_root(q));
		acc = q.inverse();
	}

	ZeroCycleOnR nf = acc ? ZeroCycleOnR::point(*acc) : ZeroCycleOnR{};
	return {nf, cert};
}

bool verify_certificate(ZeroCycleOnR const &c, ZeroCycleOnR const &nf, Certificate const &cert)
{
	std::vector<ZeroCycleOnR::Component> parts;
	for (auto const &s : cert.steps) {
		if (s.sign != 1 && s.sign != -1)
			return false;
		if (s.curve.is_zero())
			return false;
		for (auto const &[g, m] : total_boundary(s.curve).components())
			parts.emplace_back(g, s.sign * m);
	}
	return ZeroCycleOnR::from_components(parts) == c - nf;
}

} // namespace stackychow
