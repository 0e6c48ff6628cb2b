#pragma once

#include <stdexcept>

namespace stackychow {

/// Malformed textual input (polynomial syntax, JSON shape, script syntax).
struct ParseError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a mathematical precondition.
struct DomainError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

} // namespace stackychow
