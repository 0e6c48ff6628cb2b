#pragma once

#include "stackychow/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stackychow {

class ChowRing;
using RingPtr = std::shared_ptr<ChowRing const>;

/// Exponent vector, one entry per generator of the ring.
using Monomial = std::vector<int>;
/// Sparse rational polynomial in the generators of a ring.
using ClassPoly = std::map<Monomial, Rat>;

struct Generator
{
	std::string name;
	int codim = 1;
};

/**
 * Element of a presented Chow ring, kept in normal form.
 *
 * Arithmetic requires both operands to live in the same ring; use pullback()
 * to move a class up a tower of projective bundles first.
 */
class GradedClass
{
  public:
	GradedClass(RingPtr ring, ClassPoly terms);

	RingPtr const &ring() const { return ring_; }
	ClassPoly const &terms() const & { return terms_; }
	ClassPoly terms() && { return std::move(terms_); }

	bool is_zero() const { return terms_.empty(); }
	/// Codimension-k homogeneous part.
	GradedClass part(int codim) const;
	/// Largest codimension present, -1 for zero.
	int max_codim() const;
	bool is_homogeneous(int codim) const;
	/// Coefficient of the unit monomial.
	Rat constant_term() const;

	GradedClass &operator+=(GradedClass const &o);
	GradedClass &operator-=(GradedClass const &o);
	friend GradedClass operator+(GradedClass a, GradedClass const &b) { return a += b; }
	friend GradedClass operator-(GradedClass a, GradedClass const &b) { return a -= b; }
	friend GradedClass operator*(GradedClass const &a, GradedClass const &b);
	friend GradedClass operator*(Rat const &k, GradedClass const &a);
	GradedClass operator-() const;
	GradedClass pow(int e) const;

	friend bool operator==(GradedClass const &a, GradedClass const &b);

	std::string to_string() const;

  private:
	RingPtr ring_;
	ClassPoly terms_;
};

/// Vector bundle of rank e recorded through its total Chern class
/// 1 + c_1 + ... + c_e.
class BundleClass
{
  public:
	/// Validates that part 0 is 1 and nothing lives above codimension rank.
	BundleClass(int rank, GradedClass total_chern);

	static BundleClass trivial(RingPtr const &ring, int rank);
	/// Line bundle with first Chern class c1 (codimension 1).
	static BundleClass line(GradedClass const &c1);

	int rank() const { return rank_; }
	RingPtr const &ring() const { return total_.ring(); }
	GradedClass const &total_chern() const { return total_; }
	/// c_i(E); zero outside 0..rank.
	GradedClass chern(int i) const;

	friend bool operator==(BundleClass const &, BundleClass const &) = default;

  private:
	int rank_;
	GradedClass total_;
};

/**
 * Finitely presented graded Q-algebra standing in for A_* X.
 *
 * Relations are triangular and monic: a relation for generator k rewrites a
 * power of it into terms of strictly lower degree in that generator, involving
 * only generators up to k. Classes of codimension above the dimension vanish;
 * inside a projective bundle the base generators are additionally truncated
 * at the base dimension. Rings are immutable and shared by pointer.
 */
class ChowRing
{
  public:
	struct Relation
	{
		std::size_t generator;
		int power;
		ClassPoly rhs; ///< generator^power == rhs
	};

	std::vector<Generator> const &generators() const { return gens_; }
	std::size_t num_generators() const { return gens_.size(); }
	int dimension() const { return dim_; }
	std::vector<Relation> const &relations() const { return relations_; }
	std::optional<std::size_t> generator_index(std::string_view name) const;

	/// Base ring and bundle for rings built by projective_bundle, else null.
	RingPtr const &base() const { return base_; }
	BundleClass const *bundle() const { return bundle_ ? &*bundle_ : nullptr; }

	/// True if `other` is this ring or one of its iterated bases.
	bool descends_from(ChowRing const &other) const;
	bool has_degree_functional() const;

	/// Unique reduced representative; relations applied in index order.
	ClassPoly normal_form(ClassPoly p) const;
	/// Same, but each reducible monomial is rewritten by the first applicable
	/// relation in `relation_order` (a permutation of relation indices).
	ClassPoly normal_form(ClassPoly p, std::vector<std::size_t> const &relation_order) const;

	int codim(Monomial const &m) const;
	std::string format(ClassPoly const &p) const;

	/// Integral over the ring's own degree table (leaf rings only).
	std::optional<Rat> leaf_degree(ClassPoly const &p) const;

	// Used by the factory functions below.
	struct Builder;

  private:
	std::vector<Generator> gens_;
	std::vector<Relation> relations_;
	std::vector<std::pair<std::size_t, int>> truncations_; // (prefix length, max codim)
	int dim_ = 0;
	RingPtr base_;
	std::optional<BundleClass> bundle_;
	std::optional<std::map<Monomial, Rat>> degree_;

	bool truncated(Monomial const &m) const;

	friend RingPtr stacky_point(std::int64_t);
	friend RingPtr truncated_ring(std::vector<Generator>, int, std::optional<std::map<Monomial, Rat>>);
	friend RingPtr projective_bundle(BundleClass const &, std::string);
};

/// A_*(Spec k): dimension 0, integral of 1 equal to 1.
RingPtr point_ring();
/// Point with a cyclic stabilizer of the given order: integral of 1 is 1/order.
RingPtr stacky_point(std::int64_t order);
/// Free graded ring on the generators, truncated above `dimension`. The
/// optional degree table gives the integral of each codim-dimension monomial
/// (missing monomials integrate to 0).
RingPtr truncated_ring(std::vector<Generator> gens, int dimension,
                       std::optional<std::map<Monomial, Rat>> degree = std::nullopt);
/// Q[h]/(h^2) with integral of h equal to 1/(a*b).
RingPtr weighted_projective_line(std::int64_t a, std::int64_t b, std::string gen = "h");
/// A_* P(E) = A_* X[zeta] / (zeta^e + c_1 zeta^(e-1) + ... + c_e).
RingPtr projective_bundle(BundleClass const &E, std::string gen = "zeta");
/// P^n as the projectivization of the trivial rank n+1 bundle over a point.
RingPtr projective_space(int n, std::string gen = "h");

GradedClass generator(RingPtr const &ring, std::string_view name);
GradedClass scalar(RingPtr const &ring, Rat const &c);
GradedClass one(RingPtr const &ring);

/// Embeds a class from an iterated base ring (p^* is the inclusion).
GradedClass pullback(GradedClass const &alpha, RingPtr const &target);

/// Degree functional; throws DomainError when the ring has none.
Rat integrate(GradedClass const &alpha);

/// s(E) = c(E)^-1 truncated at the ring dimension.
GradedClass segre_total(BundleClass const &E);
/// s_i(E); zero for i < 0.
GradedClass segre(BundleClass const &E, int i);
BundleClass whitney_sum(BundleClass const &E, BundleClass const &F);
BundleClass dual_bundle(BundleClass const &E);
/// E tensor L for L with first Chern class `c1_line`.
BundleClass tensor_line(BundleClass const &E, GradedClass const &c1_line);
GradedClass c_top(BundleClass const &E);

/// Coefficients (alpha_0, ..., alpha_{e-1}) on the base with
/// alpha = sum zeta^i p^* alpha_i.
std::vector<GradedClass> theta_decompose(GradedClass const &alpha);
/// Inverse of theta_decompose on the bundle ring `ring`.
GradedClass theta_reassemble(RingPtr const &ring, std::vector<GradedClass> const &parts);
/// p_* along P(E) -> X, determined by p_*(zeta^(e-1+i) p^* beta) = s_i(E) beta.
GradedClass pushforward_pb(GradedClass const &alpha);

} // namespace stackychow
