#include "stackychow/rational.hpp"

#include "stackychow/errors.hpp"

#include <cctype>

namespace stackychow {

Rat::Rat(std::int64_t num, std::int64_t den)
{
	if (den == 0)
		throw DomainError("rational with zero denominator");
	v_ = mpq_class(mpz_class(static_cast<long>(num)),
	               mpz_class(static_cast<long>(den)));
	v_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
	auto valid_int = [](std::string_view s, bool allow_sign) {
		if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+'))
			s.remove_prefix(1);
		if (s.empty())
			return false;
		for (char c : s)
			if (!std::isdigit(static_cast<unsigned char>(c)))
				return false;
		return true;
	};
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den =
	    slash == std::string_view::npos ? "1" : text.substr(slash + 1);
	if (!valid_int(num, true) || !valid_int(den, false))
		throw ParseError("invalid rational literal '" + std::string(text) + "'");
	std::string n(num);
	if (!n.empty() && n[0] == '+')
		n.erase(0, 1);
	mpz_class d{std::string(den)};
	if (d == 0)
		throw ParseError("rational literal with zero denominator");
	mpq_class q(mpz_class(n), d);
	q.canonicalize();
	return Rat(q);
}

Rat Rat::inverse() const
{
	if (is_zero())
		throw DomainError("division by zero");
	return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(std::int64_t e) const
{
	if (e < 0)
		return inverse().pow(-e);
	Rat r(1), b = *this;
	while (e > 0) {
		if (e & 1)
			r *= b;
		b *= b;
		e >>= 1;
	}
	return r;
}

Rat &Rat::operator/=(Rat const &o)
{
	if (o.is_zero())
		throw DomainError("division by zero");
	v_ /= o.v_;
	return *this;
}

} // namespace stackychow
