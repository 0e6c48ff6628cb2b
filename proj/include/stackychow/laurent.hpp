#pragma once

#include "stackychow/lattice.hpp"
#include "stackychow/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stackychow {

/**
 * Laurent polynomial in x, y with rational coefficients:
 * f = sum a_{mu,nu} x^mu y^nu, (mu, nu) ranging over a finite subset of Z^2.
 *
 * Zero coefficients are never stored, so the key set is exactly the support.
 */
class LaurentPoly2
{
  public:
	using Terms = std::map<Vec2, Rat>;

	LaurentPoly2() = default;
	LaurentPoly2(Rat c);
	static LaurentPoly2 monomial(Rat c, Vec2 exponent);
	static LaurentPoly2 x() { return monomial(1, {1, 0}); }
	static LaurentPoly2 y() { return monomial(1, {0, 1}); }

	/// Parses sums of terms such as "3*x^2*y^-1 - 1/2"; only x and y are
	/// accepted as variables.
	static LaurentPoly2 parse(std::string_view text);

	Terms const &terms() const & { return terms_; }
	Terms terms() && { return std::move(terms_); }
	Rat coeff(Vec2 e) const;
	std::vector<Vec2> support() const;
	bool is_zero() const { return terms_.empty(); }
	bool is_monomial() const { return terms_.size() == 1; }
	std::size_t size() const { return terms_.size(); }

	LaurentPoly2 &operator+=(LaurentPoly2 const &o);
	LaurentPoly2 &operator-=(LaurentPoly2 const &o);
	friend LaurentPoly2 operator+(LaurentPoly2 a, LaurentPoly2 const &b) { return a += b; }
	friend LaurentPoly2 operator-(LaurentPoly2 a, LaurentPoly2 const &b) { return a -= b; }
	friend LaurentPoly2 operator*(LaurentPoly2 const &a, LaurentPoly2 const &b);
	LaurentPoly2 operator-() const;
	LaurentPoly2 pow(std::int64_t e) const;

	friend bool operator==(LaurentPoly2 const &, LaurentPoly2 const &) = default;

	std::string to_string() const;

  private:
	Terms terms_;
	void add_term(Vec2 e, Rat const &c);
};

inline LaurentPoly2 lp_add(LaurentPoly2 const &f, LaurentPoly2 const &g) { return f + g; }
inline LaurentPoly2 lp_mul(LaurentPoly2 const &f, LaurentPoly2 const &g) { return f * g; }

} // namespace stackychow
