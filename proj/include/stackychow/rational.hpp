#pragma once

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace stackychow {

/**
 * Exact rational number in lowest terms with positive denominator.
 *
 * Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
 * so two Rat values compare equal iff their numerators and denominators
 * agree; zero is always stored as 0/1.
 */
class Rat
{
  public:
	Rat() = default;
	Rat(std::int64_t n) : v_(static_cast<long>(n)) {}
	Rat(std::int64_t num, std::int64_t den);
	explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

	/// Parses "p", "-p" or "p/q" with arbitrary-size integers.
	static Rat parse(std::string_view text);

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	bool is_integer() const { return v_.get_den() == 1; }
	int sign() const { return sgn(v_); }

	mpz_class numerator() const { return v_.get_num(); }
	mpz_class denominator() const { return v_.get_den(); }

	Rat inverse() const;
	Rat abs() const { return Rat(mpq_class(::abs(v_))); }
	Rat pow(std::int64_t e) const;

	/// "p" for integers, "p/q" otherwise.
	std::string to_string() const { return v_.get_str(); }

	mpq_class const &raw() const { return v_; }

	Rat &operator+=(Rat const &o)
	{
		v_ += o.v_;
		return *this;
	}
	Rat &operator-=(Rat const &o)
	{
		v_ -= o.v_;
		return *this;
	}
	Rat &operator*=(Rat const &o)
	{
		v_ *= o.v_;
		return *this;
	}
	Rat &operator/=(Rat const &o);

	friend Rat operator+(Rat a, Rat const &b) { return a += b; }
	friend Rat operator-(Rat a, Rat const &b) { return a -= b; }
	friend Rat operator*(Rat a, Rat const &b) { return a *= b; }
	friend Rat operator/(Rat a, Rat const &b) { return a /= b; }
	Rat operator-() const { return Rat(mpq_class(-v_)); }

	friend bool operator==(Rat const &a, Rat const &b) { return a.v_ == b.v_; }
	friend std::strong_ordering operator<=>(Rat const &a, Rat const &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater
		                      : std::strong_ordering::equal);
	}

  private:
	mpq_class v_{0};
};

} // namespace stackychow
