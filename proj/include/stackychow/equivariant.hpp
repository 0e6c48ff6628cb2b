#pragma once

#include "stackychow/chow_ring.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stackychow {

/**
 * Element of A_* X (x) Q[t, t^-1], where t = c_1(O(1)) on BT.
 *
 * Stored as t-power -> normal-form coefficient in a fixed ring; zero
 * coefficients are dropped.
 */
class LaurentT
{
  public:
	explicit LaurentT(RingPtr ring) : ring_(std::move(ring)) {}
	LaurentT(RingPtr ring, std::map<std::int64_t, ClassPoly> terms);

	static LaurentT t_power(RingPtr ring, std::int64_t k, Rat const &c = 1);
	static LaurentT constant(GradedClass const &c);
	/// Parses expressions in t and the ring's generators, e.g. "t^2 - 2*t*H".
	/// Negative powers are allowed on monomials in t alone.
	static LaurentT parse(std::string_view text, RingPtr const &ring);

	RingPtr const &ring() const { return ring_; }
	std::map<std::int64_t, ClassPoly> const &terms() const & { return terms_; }
	std::map<std::int64_t, ClassPoly> terms() && { return std::move(terms_); }
	bool is_zero() const { return terms_.empty(); }
	GradedClass coefficient(std::int64_t k) const;

	LaurentT &operator+=(LaurentT const &o);
	LaurentT &operator-=(LaurentT const &o);
	friend LaurentT operator+(LaurentT a, LaurentT const &b) { return a += b; }
	friend LaurentT operator-(LaurentT a, LaurentT const &b) { return a -= b; }
	friend LaurentT operator*(LaurentT const &a, LaurentT const &b);
	LaurentT operator-() const;

	friend bool operator==(LaurentT const &a, LaurentT const &b)
	{
		return a.ring_ == b.ring_ && a.terms_ == b.terms_;
	}

	std::string to_string() const;

  private:
	RingPtr ring_;
	std::map<std::int64_t, ClassPoly> terms_;

	void add(std::int64_t k, ClassPoly const &c, Rat const &scale);
};

/// Localization data for one fixed component X_j.
struct FixedComponentData
{
	RingPtr ring;        ///< A_* X_j
	LaurentT restriction; ///< i_j^* alpha
	LaurentT normal_ctop; ///< equivariant c_top(N_{X_j} X)
};

/**
 * Exact inverse of an equivariant top Chern class.
 *
 * With c = sum_j a_j t^j and k the top t-power, the codimension-0 part u of
 * a_k must be nonzero and every other term must carry positive codimension;
 * then c = u t^k (1 + r) with r nilpotent and the geometric series
 * terminates. Throws DomainError otherwise.
 */
LaurentT invert_ctop(LaurentT const &c);

/// sum_j integral over X_j of restriction_j / normal_ctop_j, in Q[t, t^-1]
/// (coefficients in the point ring).
LaurentT localize_integrate(std::vector<FixedComponentData> const &components);

/// The t^0 coefficient of a Laurent polynomial over the point ring; throws
/// DomainError if any other power of t survives.
Rat check_t_independence(LaurentT const &result);

} // namespace stackychow
