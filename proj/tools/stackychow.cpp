#include "stackychow/cli.hpp"

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

namespace {

bool needs_stdin(std::vector<std::string> const &args)
{
	for (auto const &a : args)
		if (a == "chow" || a == "data=-")
			return true;
	return false;
}

} // namespace

int main(int argc, char **argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	std::string input;
	bool has_file = false;
	for (auto const &a : args)
		has_file = has_file || a.starts_with("file=");
	if (needs_stdin(args) && !has_file)
		input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());

	auto outcome = stackychow::cli::run(args, input);
	std::cout << outcome.out;
	std::cerr << outcome.err;
	return outcome.exit_code;
}
