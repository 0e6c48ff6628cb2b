#include "stackychow/unipoly.hpp"

#include "stackychow/errors.hpp"
#include "stackychow/expr.hpp"
#include "stackychow/monomial_format.hpp"

#include <algorithm>

namespace stackychow {

UniPoly::UniPoly(Rat c)
{
	if (!c.is_zero())
		c_.push_back(std::move(c));
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs))
{
	trim();
}

UniPoly UniPoly::linear_root(Rat const &r)
{
	return UniPoly({-r, Rat(1)});
}

void UniPoly::trim()
{
	while (!c_.empty() && c_.back().is_zero())
		c_.pop_back();
}

Rat UniPoly::coeff(int i) const
{
	return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat(0) : c_[i];
}

Rat UniPoly::eval(Rat const &x) const
{
	Rat acc(0);
	for (auto it = c_.rbegin(); it != c_.rend(); ++it)
		acc = acc * x + *it;
	return acc;
}

UniPoly UniPoly::monic() const
{
	if (c_.empty())
		throw DomainError("monic normalization of the zero polynomial");
	Rat inv = c_.back().inverse();
	UniPoly r = *this;
	for (auto &c : r.c_)
		c *= inv;
	return r;
}

UniPoly UniPoly::derivative() const
{
	std::vector<Rat> d;
	for (std::size_t i = 1; i < c_.size(); ++i)
		d.push_back(c_[i] * Rat(static_cast<std::int64_t>(i)));
	return UniPoly(std::move(d));
}

UniPoly &UniPoly::operator+=(UniPoly const &o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (std::size_t i = 0; i < o.c_.size(); ++i)
		c_[i] += o.c_[i];
	trim();
	return *this;
}

UniPoly &UniPoly::operator-=(UniPoly const &o)
{
	if (o.c_.size() > c_.size())
		c_.resize(o.c_.size());
	for (std::size_t i = 0; i < o.c_.size(); ++i)
		c_[i] -= o.c_[i];
	trim();
	return *this;
}

UniPoly operator*(UniPoly const &a, UniPoly const &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
	for (std::size_t i = 0; i < a.c_.size(); ++i)
		for (std::size_t j = 0; j < b.c_.size(); ++j)
			r[i + j] += a.c_[i] * b.c_[j];
	return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const
{
	UniPoly r = *this;
	for (auto &c : r.c_)
		c = -c;
	return r;
}

UniPoly UniPoly::pow(int e) const
{
	if (e < 0)
		throw DomainError("negative power of a polynomial");
	UniPoly r(1), b = *this;
	while (e > 0) {
		if (e & 1)
			r = r * b;
		b = b * b;
		e >>= 1;
	}
	return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(UniPoly const &d) const
{
	if (d.is_zero())
		throw DomainError("polynomial division by zero");
	UniPoly rem = *this;
	if (rem.degree() < d.degree())
		return {UniPoly(), rem};
	std::vector<Rat> q(rem.degree() - d.degree() + 1);
	Rat lead_inv = d.leading().inverse();
	while (!rem.is_zero() && rem.degree() >= d.degree()) {
		int shift = rem.degree() - d.degree();
		Rat f = rem.leading() * lead_inv;
		q[shift] = f;
		for (int i = 0; i <= d.degree(); ++i)
			rem.c_[i + shift] -= f * d.c_[i];
		rem.c_.pop_back();
		rem.trim();
	}
	return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::exact_div(UniPoly const &d) const
{
	auto [q, r] = divmod(d);
	if (!r.is_zero())
		throw DomainError("inexact polynomial division");
	return q;
}

bool UniPoly::divisible_by(UniPoly const &d) const
{
	return divmod(d).second.is_zero();
}

std::string UniPoly::to_string(std::string_view var) const
{
	std::vector<std::pair<Rat, FactorList>> rows;
	for (int i = degree(); i >= 0; --i)
		rows.push_back({c_[i], {{std::string(var), i}}});
	return format_polynomial(rows);
}

UniPoly gcd(UniPoly a, UniPoly b)
{
	while (!b.is_zero()) {
		auto r = a.divmod(b).second;
		a = std::move(b);
		b = std::move(r);
	}
	return a.is_zero() ? a : a.monic();
}

bool canonical_less(UniPoly const &a, UniPoly const &b)
{
	if (a.degree() != b.degree())
		return a.degree() < b.degree();
	for (int i = 0; i <= a.degree(); ++i) {
		Rat x = a.coeff(i), y = b.coeff(i);
		if (x.abs() != y.abs())
			return x.abs() < y.abs();
		if (x != y)
			return x < y;
	}
	return false;
}

namespace {

int sign_changes(std::vector<UniPoly> const &chain, Rat const &x)
{
	int changes = 0, last = 0;
	for (auto const &p : chain) {
		int s = p.eval(x).sign();
		if (s == 0)
			continue;
		if (last != 0 && s != last)
			++changes;
		last = s;
	}
	return changes;
}

} // namespace

// A rational root of a primitive integer polynomial has the form k/a_n with k
// an integer, so isolating the real roots to intervals shorter than 1/|a_n|
// leaves at most two candidates per root to test exactly.
std::vector<Rat> rational_roots(UniPoly const &f)
{
	if (f.is_zero())
		throw DomainError("rational roots of the zero polynomial");
	if (f.is_constant())
		return {};
	UniPoly s = f.exact_div(gcd(f, f.derivative())).monic();
	if (s.degree() == 1)
		return {-s.coeff(0)};

	mpz_class den = 1;
	for (auto const &c : s.coeffs())
		mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
	Rat lead{mpq_class(den)};

	Rat bound(1);
	for (int i = 0; i < s.degree(); ++i)
		bound = std::max(bound, s.coeff(i).abs() + 1);

	std::vector<UniPoly> chain{s, s.derivative()};
	while (!chain.back().is_constant())
		chain.push_back(-chain[chain.size() - 2].divmod(chain.back()).second);

	std::vector<Rat> roots;
	Rat width_limit = lead.inverse();
	// half-open intervals (lo, hi]
	std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
	while (!stack.empty()) {
		auto [lo, hi] = stack.back();
		stack.pop_back();
		int n = sign_changes(chain, lo) - sign_changes(chain, hi);
		if (n == 0)
			continue;
		if (n == 1 && hi - lo < width_limit) {
			mpq_class a = (lo * lead).raw(), b = (hi * lead).raw();
			mpz_class k, last;
			mpz_fdiv_q(k.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
			mpz_fdiv_q(last.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
			for (++k; k <= last; ++k) {
				Rat r = Rat(mpq_class(k)) / lead;
				if (s.eval(r).is_zero()) {
					roots.push_back(r);
					break;
				}
			}
			continue;
		}
		Rat mid = (lo + hi) / 2;
		stack.push_back({lo, mid});
		stack.push_back({mid, hi});
	}
	std::sort(roots.begin(), roots.end());
	return roots;
}

namespace {

struct UniOps
{
	std::string_view var;

	UniPoly number(Rat const &r) { return UniPoly(r); }
	UniPoly variable(std::string_view name)
	{
		if (name != var)
			throw ParseError("unknown variable '" + std::string(name) + "' (expected " +
			                 std::string(var) + ")");
		return UniPoly({Rat(0), Rat(1)});
	}
	UniPoly call(std::string_view name, std::vector<std::string_view> const &)
	{
		throw ParseError("function calls are not allowed in polynomials: '" +
		                 std::string(name) + "'");
	}
	UniPoly add(UniPoly a, UniPoly b) { return a + b; }
	UniPoly sub(UniPoly a, UniPoly b) { return a - b; }
	UniPoly mul(UniPoly a, UniPoly b) { return a * b; }
	UniPoly neg(UniPoly a) { return -a; }
	UniPoly div(UniPoly a, UniPoly b)
	{
		if (b.is_zero() || !b.is_constant())
			throw ParseError("division only by nonzero constants");
		return a * UniPoly(b.leading().inverse());
	}
	UniPoly pow(UniPoly a, std::int64_t e)
	{
		if (e < 0)
			throw ParseError("negative exponent in a polynomial");
		return a.pow(static_cast<int>(e));
	}
};

} // namespace

UniPoly UniPoly::parse(std::string_view text, std::string_view var)
{
	UniOps ops{var};
	return parse_expression(text, ops);
}

} // namespace stackychow
