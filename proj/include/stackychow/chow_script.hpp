#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stackychow {

/**
 * Interpreter for the line-oriented Chow calculator language:
 *
 *   ring P = proj_bundle(base=point, rank=3, gen=h)
 *   let a = h^2
 *   print integrate(a)
 *   bundle E = chern(1 + c1 + c2, rank=2)
 *   print segre(E, 2)
 *
 * Every `print` produces one (expression, value) pair. Syntax problems throw
 * ParseError, mathematical ones DomainError; both name the offending line.
 */
std::vector<std::pair<std::string, std::string>> run_chow_script(std::string_view script);

} // namespace stackychow
