#pragma once

#include "stackychow/laurent.hpp"
#include "stackychow/rational.hpp"
#include "stackychow/toric.hpp"
#include "stackychow/unipoly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace stackychow {

/**
 * Zero-cycle on R = P^1 minus {0, -1, infinity}, over Q.
 *
 * A closed point of R is the zero locus of a monic irreducible polynomial
 * g(t) with g(0) != 0 and g(-1) != 0. Cycles are stored without a full
 * factorization: rational points appear one by one as t - r, and the other
 * points of equal multiplicity are grouped into one monic square-free
 * polynomial without rational roots. The component polynomials are pairwise
 * coprime and the representation is unique.
 */
class ZeroCycleOnR
{
  public:
	using Component = std::pair<UniPoly, std::int64_t>;

	ZeroCycleOnR() = default;

	/// sum m_i [V(g_i)] for arbitrary nonzero g_i (scaled to monic, repeated
	/// roots counted with multiplicity). Constant g_i contribute nothing.
	/// Throws DomainError if some g_i vanishes at 0 or -1.
	static ZeroCycleOnR from_components(std::vector<Component> const &parts);
	/// [V(g)] counted with root multiplicities.
	static ZeroCycleOnR divisor(UniPoly const &g) { return from_components({{g, 1}}); }
	/// The rational point [{r}].
	static ZeroCycleOnR point(Rat const &r);

	/// Canonical components, sorted by canonical_less.
	std::vector<Component> const &components() const & { return parts_; }
	std::vector<Component> components() && { return std::move(parts_); }
	bool is_empty() const { return parts_.empty(); }
	/// Number of closed points counted with |multiplicity| and degree.
	std::int64_t total_degree() const;

	ZeroCycleOnR operator-() const;
	friend ZeroCycleOnR operator+(ZeroCycleOnR const &a, ZeroCycleOnR const &b);
	friend ZeroCycleOnR operator-(ZeroCycleOnR const &a, ZeroCycleOnR const &b) { return a + (-b); }
	friend ZeroCycleOnR operator*(std::int64_t k, ZeroCycleOnR const &c);
	friend bool operator==(ZeroCycleOnR const &, ZeroCycleOnR const &) = default;

	std::string to_string() const;

  private:
	std::vector<Component> parts_;
};

/// Element of k^* = Q^*, the target of the norm isomorphism.
struct HigherChowClass
{
	Rat value{1};
	friend bool operator==(HigherChowClass const &, HigherChowClass const &) = default;
};

struct CertificateStep
{
	int sign = 1;
	LaurentPoly2 curve;
	friend bool operator==(CertificateStep const &, CertificateStep const &) = default;
};

/// Signed curves on T^2 whose boundaries telescope a cycle to its normal form.
struct Certificate
{
	std::vector<CertificateStep> steps;
};

struct Reduction
{
	ZeroCycleOnR normal_form;
	Certificate certificate;
};

/// Multiplicative extension of N([V(g)]) = g(0) for monic g, i.e. the norm of
/// the function -t.
HigherChowClass norm(ZeroCycleOnR const &c);

/// Divisor of the monic edge polynomial of f along `e`, with every factor
/// (s + 1) removed since -1 is not a point of R.
ZeroCycleOnR boundary_rho(LaurentPoly2 const &f, EdgeDatum const &e);

/// Sum of boundary_rho over the edges of the Newton polygon of f. A monomial
/// (point polygon) has empty boundary. Throws DomainError for f = 0.
ZeroCycleOnR total_boundary(LaurentPoly2 const &f);

/// Class in Z_0 R / boundaries, identified with Q^* by the norm.
HigherChowClass class_of(ZeroCycleOnR const &c);

/// Reduces c modulo boundaries to the empty cycle or a single rational point
/// [{-norm(c)}], recording the curves used.
Reduction reduce_to_point(ZeroCycleOnR const &c);

/// True iff c - nf equals sum sign_i * total_boundary(curve_i).
bool verify_certificate(ZeroCycleOnR const &c, ZeroCycleOnR const &nf,
                        Certificate const &cert);

} // namespace stackychow
