#pragma once

#include "stackychow/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stackychow {

using FactorList = std::vector<std::pair<std::string, std::int64_t>>;

/// Renders sum of c * prod var^exp in the syntax parse_expression reads back,
/// e.g. "x^2-3*x+2+y" or "1/2*t^-1". Zero exponents are skipped.
inline std::string format_polynomial(std::vector<std::pair<Rat, FactorList>> const &terms)
{
	std::string out;
	for (auto const &[c, factors] : terms) {
		if (c.is_zero())
			continue;
		std::string mono;
		for (auto const &[var, e] : factors) {
			if (e == 0)
				continue;
			if (!mono.empty())
				mono += '*';
			mono += var;
			if (e != 1)
				mono += '^' + std::to_string(e);
		}
		Rat mag = c.abs();
		std::string body;
		if (mono.empty())
			body = mag.to_string();
		else if (mag.is_one())
			body = mono;
		else
			body = mag.to_string() + '*' + mono;
		if (c.sign() < 0)
			out += '-';
		else if (!out.empty())
			out += '+';
		out += body;
	}
	return out.empty() ? "0" : out;
}

} // namespace stackychow
