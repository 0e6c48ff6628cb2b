#pragma once

#include "stackychow/unipoly.hpp"

#include <span>
#include <vector>

namespace stackychow {

struct BasisElement
{
	UniPoly poly;                  ///< monic, square-free
	std::vector<int> multiplicity; ///< exponent of `poly` in each input
};

/**
 * Coprime square-free refinement of a list of nonzero polynomials.
 *
 * The returned polynomials are monic, square-free and pairwise coprime, and
 * every input equals (up to its leading coefficient) the product of the basis
 * raised to the recorded multiplicities. Elements are ordered by
 * canonical_less. Throws DomainError on a zero input.
 */
std::vector<BasisElement> gcd_free_basis(std::span<UniPoly const> polys);

/// Square-free part of a nonzero polynomial, made monic.
UniPoly squarefree_part(UniPoly const &f);

} // namespace stackychow
