#include "stackychow/gcd_free.hpp"

#include "stackychow/errors.hpp"

#include <algorithm>

namespace stackychow {

UniPoly squarefree_part(UniPoly const &f)
{
	if (f.is_zero())
		throw DomainError("square-free part of the zero polynomial");
	if (f.is_constant())
		return UniPoly(1);
	return f.exact_div(gcd(f, f.derivative())).monic();
}

namespace {

// Peels f into square-free layers s_1, s_2, ... with f ~ s_1 * s_2 * ...,
// where s_k is the product of the irreducible factors of multiplicity >= k.
void push_layers(UniPoly f, std::vector<UniPoly> &out)
{
	while (!f.is_constant()) {
		UniPoly s = squarefree_part(f);
		out.push_back(s);
		f = f.exact_div(s);
	}
}

} // namespace

std::vector<BasisElement> gcd_free_basis(std::span<UniPoly const> polys)
{
	std::vector<UniPoly> work;
	for (auto const &p : polys) {
		if (p.is_zero())
			throw DomainError("gcd-free basis of a zero polynomial");
		push_layers(p, work);
	}

	// Refine until pairwise coprime. Every element stays square-free: for
	// square-free a, b with g = gcd(a, b), the pieces a/g, g, b/g are
	// square-free and pairwise coprime.
	bool changed = true;
	while (changed) {
		changed = false;
		for (std::size_t i = 0; i < work.size() && !changed; ++i) {
			for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
				UniPoly g = gcd(work[i], work[j]);
				if (g.is_constant())
					continue;
				UniPoly a = work[i].exact_div(g).monic();
				UniPoly b = work[j].exact_div(g).monic();
				work.erase(work.begin() + j);
				work.erase(work.begin() + i);
				for (auto *piece : {&a, &g, &b})
					if (!piece->is_constant())
						work.push_back(std::move(*piece));
				changed = true;
			}
		}
	}
	std::sort(work.begin(), work.end(), canonical_less);

	std::vector<BasisElement> basis;
	for (auto &b : work)
		basis.push_back({std::move(b), std::vector<int>(polys.size(), 0)});
	for (std::size_t k = 0; k < polys.size(); ++k) {
		for (auto &elem : basis) {
			UniPoly rest = polys[k];
			int m = 0;
			for (;;) {
				auto [q, r] = rest.divmod(elem.poly);
				if (!r.is_zero())
					break;
				rest = std::move(q);
				++m;
			}
			elem.multiplicity[k] = m;
		}
	}
	return basis;
}

} // namespace stackychow
