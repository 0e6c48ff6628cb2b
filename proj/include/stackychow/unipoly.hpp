#pragma once

#include "stackychow/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stackychow {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The leading stored coefficient is nonzero; the zero polynomial is empty.
class UniPoly
{
  public:
	UniPoly() = default;
	UniPoly(Rat c);
	explicit UniPoly(std::vector<Rat> coeffs);

	/// x - r
	static UniPoly linear_root(Rat const &r);
	/// Parses a polynomial in the single variable `var` (default "t").
	static UniPoly parse(std::string_view text, std::string_view var = "t");

	std::vector<Rat> const &coeffs() const { return c_; }
	int degree() const { return static_cast<int>(c_.size()) - 1; }
	bool is_zero() const { return c_.empty(); }
	bool is_constant() const { return c_.size() <= 1; }
	bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
	Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
	Rat coeff(int i) const;

	Rat eval(Rat const &x) const;
	UniPoly monic() const;
	UniPoly derivative() const;

	UniPoly &operator+=(UniPoly const &o);
	UniPoly &operator-=(UniPoly const &o);
	friend UniPoly operator+(UniPoly a, UniPoly const &b) { return a += b; }
	friend UniPoly operator-(UniPoly a, UniPoly const &b) { return a -= b; }
	friend UniPoly operator*(UniPoly const &a, UniPoly const &b);
	UniPoly operator-() const;
	UniPoly pow(int e) const;

	/// Euclidean division; throws on a zero divisor.
	std::pair<UniPoly, UniPoly> divmod(UniPoly const &d) const;
	/// Quotient of an exact division; throws if the remainder is nonzero.
	UniPoly exact_div(UniPoly const &d) const;
	bool divisible_by(UniPoly const &d) const;

	friend bool operator==(UniPoly const &, UniPoly const &) = default;

	std::string to_string(std::string_view var = "t") const;

  private:
	std::vector<Rat> c_;
	void trim();
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Ordering used for canonical output: degree, then coefficients from the
/// constant term upward by absolute value, then by value.
bool canonical_less(UniPoly const &a, UniPoly const &b);

/// Distinct rational roots of a nonzero polynomial, in increasing order.
std::vector<Rat> rational_roots(UniPoly const &f);

} // namespace stackychow
