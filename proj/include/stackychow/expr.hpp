#pragma once

// Recursive-descent reader for the small arithmetic language shared by every
// textual input: rational constants, identifiers, calls, + - * / ^ and
// parentheses. Whitespace is ignored. The caller supplies the semantics via an
// Ops object:
//
//   Value number(Rat const &);
//   Value variable(std::string_view name);
//   Value call(std::string_view name, std::vector<std::string_view> args);
//   Value add(Value, Value), sub(Value, Value), mul(Value, Value),
//         div(Value, Value), neg(Value), pow(Value, std::int64_t);
//
// Call arguments are handed over as raw source slices split at top-level
// commas, so callers can interpret them as names, integers or nested
// expressions as they see fit.

#include "stackychow/errors.hpp"
#include "stackychow/rational.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stackychow {

namespace detail {

template <class Ops>
class ExprReader
{
	using Value = decltype(std::declval<Ops &>().number(Rat(0)));

  public:
	ExprReader(std::string_view text, Ops &ops) : s_(text), ops_(ops) {}

	Value parse()
	{
		skip();
		if (pos_ == s_.size())
			fail("empty expression");
		Value v = expr();
		skip();
		if (pos_ != s_.size())
			fail("unexpected '" + std::string(1, s_[pos_]) + "'");
		return v;
	}

  private:
	static constexpr std::int64_t kMaxExponent = 4096;

	std::string_view s_;
	std::size_t pos_ = 0;
	Ops &ops_;

	[[noreturn]] void fail(std::string const &what) const
	{
		throw ParseError(what + " at position " + std::to_string(pos_) +
		                 " in '" + std::string(s_) + "'");
	}

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool eat(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	char peek()
	{
		skip();
		return pos_ < s_.size() ? s_[pos_] : '\0';
	}

	Value expr()
	{
		Value v = term();
		for (;;) {
			if (eat('+'))
				v = ops_.add(std::move(v), term());
			else if (eat('-'))
				v = ops_.sub(std::move(v), term());
			else
				return v;
		}
	}

	Value term()
	{
		Value v = unary();
		for (;;) {
			if (eat('*'))
				v = ops_.mul(std::move(v), unary());
			else if (eat('/'))
				v = ops_.div(std::move(v), unary());
			else
				return v;
		}
	}

	Value unary()
	{
		if (eat('-'))
			return ops_.neg(unary());
		if (eat('+'))
			return unary();
		return power();
	}

	Value power()
	{
		Value base = atom();
		if (!eat('^'))
			return base;
		bool paren = eat('(');
		bool negative = eat('-');
		if (!negative)
			eat('+');
		skip();
		std::size_t start = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		if (start == pos_)
			fail("expected integer exponent");
		if (pos_ - start > 5)
			fail("exponent too large");
		std::int64_t e = std::stoll(std::string(s_.substr(start, pos_ - start)));
		if (e > kMaxExponent)
			fail("exponent too large");
		if (paren && !eat(')'))
			fail("expected ')'");
		return ops_.pow(std::move(base), negative ? -e : e);
	}

	Value atom()
	{
		char c = peek();
		if (c == '(') {
			++pos_;
			Value v = expr();
			if (!eat(')'))
				fail("expected ')'");
			return v;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			return ops_.number(Rat::parse(s_.substr(start, pos_ - start)));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			std::size_t start = pos_;
			while (pos_ < s_.size() &&
			       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				++pos_;
			std::string_view name = s_.substr(start, pos_ - start);
			if (peek() == '(') {
				++pos_;
				return ops_.call(name, call_args());
			}
			return ops_.variable(name);
		}
		if (c == '\0')
			fail("unexpected end of input");
		fail("unexpected '" + std::string(1, c) + "'");
	}

	std::vector<std::string_view> call_args()
	{
		std::vector<std::string_view> args;
		int depth = 0;
		std::size_t start = pos_;
		for (; pos_ < s_.size(); ++pos_) {
			char c = s_[pos_];
			if (c == '(')
				++depth;
			else if (c == ')' && depth > 0)
				--depth;
			else if (c == ')' || (c == ',' && depth == 0)) {
				auto arg = s_.substr(start, pos_ - start);
				while (!arg.empty() && std::isspace(static_cast<unsigned char>(arg.front())))
					arg.remove_prefix(1);
				while (!arg.empty() && std::isspace(static_cast<unsigned char>(arg.back())))
					arg.remove_suffix(1);
				if (!arg.empty() || c == ',' || !args.empty())
					args.push_back(arg);
				start = pos_ + 1;
				if (c == ')') {
					++pos_;
					return args;
				}
			}
		}
		fail("unterminated argument list");
	}
};

} // namespace detail

template <class Ops>
auto parse_expression(std::string_view text, Ops &ops)
{
	return detail::ExprReader<Ops>(text, ops).parse();
}

} // namespace stackychow
