#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stackychow::cli {

struct Outcome
{
	int exit_code = 0; ///< 0 ok, 1 domain error, 2 input/parse error
	std::string out;
	std::string err;
};

/// Runs one batch command. `args` excludes the program name; `input` stands
/// in for stdin (used by `chow` and by `localize data=-`).
Outcome run(std::vector<std::string> const &args, std::string_view input = {});

} // namespace stackychow::cli
