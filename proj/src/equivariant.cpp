#include "stackychow/equivariant.hpp"

#include "stackychow/errors.hpp"
#include "stackychow/expr.hpp"
#include "stackychow/monomial_format.hpp"

#include <algorithm>

namespace stackychow {

LaurentT::LaurentT(RingPtr ring, std::map<std::int64_t, ClassPoly> terms) : ring_(std::move(ring))
{
	for (auto const &[k, c] : terms)
		add(k, c, 1);
}

void LaurentT::add(std::int64_t k, ClassPoly const &c, Rat const &scale)
{
	GradedClass sum(ring_, c);
	sum = scale * sum;
	if (auto it = terms_.find(k); it != terms_.end())
		sum += GradedClass(ring_, it->second);
	if (sum.is_zero())
		terms_.erase(k);
	else
		terms_[k] = sum.terms();
}

LaurentT LaurentT::t_power(RingPtr ring, std::int64_t k, Rat const &c)
{
	LaurentT r(ring);
	r.add(k, scalar(ring, c).terms(), 1);
	return r;
}

LaurentT LaurentT::constant(GradedClass const &c)
{
	LaurentT r(c.ring());
	r.add(0, c.terms(), 1);
	return r;
}

GradedClass LaurentT::coefficient(std::int64_t k) const
{
	auto it = terms_.find(k);
	return GradedClass(ring_, it == terms_.end() ? ClassPoly{} : it->second);
}

LaurentT &LaurentT::operator+=(LaurentT const &o)
{
	if (ring_ != o.ring_)
		throw DomainError("equivariant classes live in different rings");
	for (auto const &[k, c] : o.terms_)
		add(k, c, 1);
	return *this;
}

LaurentT &LaurentT::operator-=(LaurentT const &o)
{
	if (ring_ != o.ring_)
		throw DomainError("equivariant classes live in different rings");
	for (auto const &[k, c] : o.terms_)
		add(k, c, -1);
	return *this;
}

LaurentT operator*(LaurentT const &a, LaurentT const &b)
{
	if (a.ring_ != b.ring_)
		throw DomainError("equivariant classes live in different rings");
	LaurentT r(a.ring_);
	for (auto const &[ka, ca] : a.terms_)
		for (auto const &[kb, cb] : b.terms_) {
			GradedClass prod = GradedClass(a.ring_, ca) * GradedClass(a.ring_, cb);
			r.add(ka + kb, prod.terms(), 1);
		}
	return r;
}

LaurentT LaurentT::operator-() const
{
	LaurentT r(ring_);
	for (auto const &[k, c] : terms_)
		r.add(k, c, -1);
	return r;
}

std::string LaurentT::to_string() const
{
	std::vector<std::pair<Rat, FactorList>> rows;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		auto const &[k, poly] = *it;
		std::vector<std::pair<Monomial, Rat>> ordered(poly.begin(), poly.end());
		std::stable_sort(ordered.begin(), ordered.end(), [&](auto const &a, auto const &b) {
			return ring_->codim(a.first) < ring_->codim(b.first);
		});
		for (auto const &[m, c] : ordered) {
			FactorList f{{"t", k}};
			for (std::size_t i = 0; i < m.size(); ++i)
				f.emplace_back(ring_->generators()[i].name, m[i]);
			rows.emplace_back(c, std::move(f));
		}
	}
	return format_polynomial(rows);
}

namespace {

struct LaurentTOps
{
	RingPtr ring;

	LaurentT number(Rat const &r) { return LaurentT::t_power(ring, 0, r); }
	LaurentT variable(std::string_view name)
	{
		if (name == "t")
			return LaurentT::t_power(ring, 1);
		if (!ring->generator_index(name))
			throw ParseError("unknown variable '" + std::string(name) + "'");
		return LaurentT::constant(generator(ring, name));
	}
	LaurentT call(std::string_view name, std::vector<std::string_view> const &)
	{
		throw ParseError("function calls are not allowed here: '" + std::string(name) + "'");
	}
	LaurentT add(LaurentT a, LaurentT b) { return a + b; }
	LaurentT sub(LaurentT a, LaurentT b) { return a - b; }
	LaurentT mul(LaurentT a, LaurentT b) { return a * b; }
	LaurentT neg(LaurentT a) { return -a; }

	// Only scalar multiples of a single power of t can be inverted here.
	static std::optional<std::pair<std::int64_t, Rat>> t_monomial(LaurentT const &a)
	{
		if (a.terms().size() != 1)
			return std::nullopt;
		auto const &[k, poly] = *a.terms().begin();
		GradedClass c(a.ring(), poly);
		if (c.max_codim() != 0)
			return std::nullopt;
		return std::make_pair(k, c.constant_term());
	}

	LaurentT div(LaurentT a, LaurentT b)
	{
		auto m = t_monomial(b);
		if (!m)
			throw ParseError("division only by nonzero multiples of a power of t");
		return a * LaurentT::t_power(ring, -m->first, m->second.inverse());
	}
	LaurentT pow(LaurentT a, std::int64_t e)
	{
		if (e < 0) {
			auto m = t_monomial(a);
			if (!m)
				throw ParseError("negative exponent on something other than a power of t");
			return LaurentT::t_power(ring, m->first * e, m->second.pow(e));
		}
		LaurentT r = LaurentT::t_power(ring, 0);
		for (std::int64_t i = 0; i < e; ++i)
			r = r * a;
		return r;
	}
};

} // namespace

LaurentT LaurentT::parse(std::string_view text, RingPtr const &ring)
{
	LaurentTOps ops{ring};
	return parse_expression(text, ops);
}

LaurentT invert_ctop(LaurentT const &c)
{
	auto const &ring = c.ring();
	if (c.is_zero())
		throw DomainError("the zero class is not invertible");
	std::int64_t k = c.terms().rbegin()->first;
	Rat u = c.coefficient(k).constant_term();
	if (u.is_zero())
		throw DomainError("top Chern class " + c.to_string() +
		                  " is not invertible: leading t-coefficient has no constant term");
	LaurentT lead = LaurentT::t_power(ring, k, u);
	LaurentT lead_inv = LaurentT::t_power(ring, -k, u.inverse());
	LaurentT r = (c - lead) * lead_inv;
	for (auto const &[j, poly] : r.terms())
		if (GradedClass(ring, poly).constant_term() != 0)
			throw DomainError("top Chern class " + c.to_string() +
			                  " is not invertible: a lower power of t has a constant coefficient");

	// (1 + r)^-1 = sum (-r)^m; r has positive codimension, so r^m = 0 for
	// m > dim.
	LaurentT sum = LaurentT::t_power(ring, 0);
	LaurentT power = sum;
	for (int m = 1; m <= ring->dimension(); ++m) {
		power = power * (-r);
		if (power.is_zero())
			break;
		sum += power;
	}
	return sum * lead_inv;
}

LaurentT localize_integrate(std::vector<FixedComponentData> const &components)
{
	RingPtr pt = point_ring();
	LaurentT total(pt);
	for (auto const &comp : components) {
		if (comp.restriction.ring() != comp.ring || comp.normal_ctop.ring() != comp.ring)
			throw DomainError("fixed-component data must share the component's ring");
		LaurentT local = comp.restriction * invert_ctop(comp.normal_ctop);
		for (auto const &[k, poly] : local.terms())
			total += LaurentT::t_power(pt, k, integrate(GradedClass(comp.ring, poly)));
	}
	return total;
}

Rat check_t_independence(LaurentT const &result)
{
	for (auto const &[k, poly] : result.terms())
		if (k != 0)
			throw DomainError("result depends on t: " + result.to_string());
	return result.coefficient(0).constant_term();
}

} // namespace stackychow
