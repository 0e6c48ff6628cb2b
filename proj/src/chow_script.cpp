#include "stackychow/chow_script.hpp"

#include "stackychow/chow_ring.hpp"
#include "stackychow/errors.hpp"
#include "stackychow/expr.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace stackychow {

namespace {

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

bool is_identifier(std::string_view s)
{
	if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
		return false;
	for (char c : s)
		if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
			return false;
	return true;
}

std::int64_t parse_int(std::string_view s)
{
	s = trim(s);
	Rat r = Rat::parse(s);
	if (!r.is_integer() || r.abs() > Rat(1'000'000))
		throw ParseError("expected a small integer, got '" + std::string(s) + "'");
	return r.numerator().get_si();
}

/// name(arg, key=value, ...) split into positional and named arguments.
struct CallSyntax
{
	std::string name;
	std::vector<std::string_view> positional;
	std::map<std::string, std::string_view, std::less<>> named;

	std::string_view take(std::string_view key)
	{
		auto it = named.find(key);
		if (it == named.end())
			return {};
		auto v = it->second;
		named.erase(it);
		return v;
	}

	void finish() const
	{
		if (!named.empty())
			throw ParseError("unknown argument '" + named.begin()->first + "' to " + name);
	}
};

CallSyntax parse_call(std::string_view text)
{
	text = trim(text);
	auto open = text.find('(');
	CallSyntax call;
	if (open == std::string_view::npos) {
		if (!is_identifier(text))
			throw ParseError("expected a constructor call, got '" + std::string(text) + "'");
		call.name = std::string(text);
		return call;
	}
	if (text.back() != ')')
		throw ParseError("missing ')' in '" + std::string(text) + "'");
	call.name = std::string(trim(text.substr(0, open)));
	if (!is_identifier(call.name))
		throw ParseError("invalid call '" + std::string(text) + "'");
	std::string_view body = text.substr(open + 1, text.size() - open - 2);
	int depth = 0;
	std::size_t start = 0;
	auto push = [&](std::string_view arg) {
		arg = trim(arg);
		if (arg.empty())
			return;
		auto eq = arg.find('=');
		if (eq != std::string_view::npos && is_identifier(trim(arg.substr(0, eq))))
			call.named.emplace(std::string(trim(arg.substr(0, eq))), trim(arg.substr(eq + 1)));
		else
			call.positional.push_back(arg);
	};
	for (std::size_t i = 0; i < body.size(); ++i) {
		if (body[i] == '(')
			++depth;
		else if (body[i] == ')')
			--depth;
		else if (body[i] == ',' && depth == 0) {
			push(body.substr(start, i - start));
			start = i + 1;
		}
	}
	push(body.substr(start));
	return call;
}

struct Value
{
	std::optional<GradedClass> cls;
	Rat scalar{0};
	std::optional<std::vector<GradedClass>> list;

	static Value of(GradedClass c) { return {std::move(c), 0, std::nullopt}; }
	static Value of(Rat r) { return {std::nullopt, std::move(r), std::nullopt}; }

	std::string to_string() const
	{
		if (list) {
			std::string out = "[";
			for (std::size_t i = 0; i < list->size(); ++i)
				out += (i ? ", " : "") + (*list)[i].to_string();
			return out + "]";
		}
		return cls ? cls->to_string() : scalar.to_string();
	}
};

class Interpreter
{
  public:
	Interpreter() { rings_["point"] = point_ring(); }

	std::vector<std::pair<std::string, std::string>> outputs;

	void statement(std::string_view line)
	{
		line = trim(line);
		auto space = line.find_first_of(" \t");
		std::string_view keyword = line.substr(0, space);
		std::string_view rest = space == std::string_view::npos ? "" : trim(line.substr(space));

		if (keyword == "print") {
			if (rest.empty())
				throw ParseError("print needs an expression");
			outputs.emplace_back(std::string(rest), eval(rest).to_string());
			return;
		}
		if (keyword == "use") {
			current_ = ring(rest);
			return;
		}
		auto eq = rest.find('=');
		if (eq == std::string_view::npos)
			throw ParseError("expected '" + std::string(keyword) + " NAME = ...'");
		std::string name(trim(rest.substr(0, eq)));
		std::string_view rhs = trim(rest.substr(eq + 1));
		if (!is_identifier(name))
			throw ParseError("invalid name '" + name + "'");

		if (keyword == "ring") {
			rings_[name] = current_ = build_ring(rhs);
		} else if (keyword == "bundle") {
			bundles_.insert_or_assign(name, build_bundle(rhs));
		} else if (keyword == "let") {
			Value v = eval(rhs);
			if (v.list)
				throw DomainError("cannot bind a decomposition to a name");
			lets_.insert_or_assign(name, v);
		} else {
			throw ParseError("unknown statement '" + std::string(keyword) + "'");
		}
	}

	// expression callbacks ---------------------------------------------------

	Value number(Rat const &r) { return Value::of(r); }

	Value variable(std::string_view name)
	{
		if (auto it = lets_.find(std::string(name)); it != lets_.end())
			return it->second;
		if (current_ && current_->generator_index(name))
			return Value::of(generator(current_, name));
		throw DomainError("unknown name '" + std::string(name) + "'");
	}

	Value call(std::string_view fn, std::vector<std::string_view> const &args)
	{
		auto arity = [&](std::size_t n) {
			if (args.size() != n)
				throw ParseError(std::string(fn) + " takes " + std::to_string(n) + " argument(s)");
		};
		if (fn == "integrate") {
			arity(1);
			return Value::of(integrate(as_class(eval(args[0]))));
		}
		if (fn == "pushforward") {
			arity(1);
			return Value::of(pushforward_pb(as_class(eval(args[0]))));
		}
		if (fn == "theta") {
			arity(1);
			Value v;
			v.list = theta_decompose(as_class(eval(args[0])));
			return v;
		}
		if (fn == "pullback") {
			arity(2);
			return Value::of(pullback(as_class(eval(args[0])), ring(args[1])));
		}
		if (fn == "segre") {
			arity(2);
			return Value::of(segre(bundle(args[0]), static_cast<int>(parse_int(args[1]))));
		}
		if (fn == "chern" || fn == "c") {
			arity(2);
			return Value::of(bundle(args[0]).chern(static_cast<int>(parse_int(args[1]))));
		}
		if (fn == "ctop") {
			arity(1);
			return Value::of(c_top(bundle(args[0])));
		}
		if (fn == "total_chern") {
			arity(1);
			return Value::of(bundle(args[0]).total_chern());
		}
		if (fn == "total_segre") {
			arity(1);
			return Value::of(segre_total(bundle(args[0])));
		}
		throw ParseError("unknown function '" + std::string(fn) + "'");
	}

	Value add(Value a, Value b) { return binary(a, b, [](auto x, auto y) { return x + y; }); }
	Value sub(Value a, Value b) { return binary(a, b, [](auto x, auto y) { return x - y; }); }
	Value mul(Value a, Value b) { return binary(a, b, [](auto x, auto y) { return x * y; }); }
	Value neg(Value a)
	{
		no_list(a);
		return a.cls ? Value::of(-*a.cls) : Value::of(-a.scalar);
	}
	Value div(Value a, Value b)
	{
		no_list(a);
		no_list(b);
		Rat d;
		if (!b.cls)
			d = b.scalar;
		else if (b.cls->max_codim() <= 0)
			d = b.cls->constant_term();
		else
			throw DomainError("division only by nonzero rational constants");
		if (d.is_zero())
			throw DomainError("division by zero");
		return a.cls ? Value::of(d.inverse() * *a.cls) : Value::of(a.scalar / d);
	}
	Value pow(Value a, std::int64_t e)
	{
		no_list(a);
		if (!a.cls)
			return Value::of(a.scalar.pow(e));
		if (e < 0)
			throw DomainError("negative power of a Chow class");
		return Value::of(a.cls->pow(static_cast<int>(e)));
	}

  private:
	std::map<std::string, RingPtr> rings_;
	std::map<std::string, BundleClass> bundles_;
	std::map<std::string, Value> lets_;
	RingPtr current_;

	Value eval(std::string_view text) { return parse_expression(text, *this); }

	static void no_list(Value const &v)
	{
		if (v.list)
			throw DomainError("a theta decomposition cannot be used in arithmetic");
	}

	GradedClass as_class(Value const &v)
	{
		no_list(v);
		if (v.cls)
			return *v.cls;
		if (!current_)
			throw DomainError("no current ring for a constant class");
		return scalar(current_, v.scalar);
	}

	template <class F>
	Value binary(Value const &a, Value const &b, F op)
	{
		no_list(a);
		no_list(b);
		if (!a.cls && !b.cls)
			return Value::of(op(a.scalar, b.scalar));
		GradedClass x = a.cls ? *a.cls : scalar(b.cls->ring(), a.scalar);
		GradedClass y = b.cls ? *b.cls : scalar(a.cls->ring(), b.scalar);
		if (x.ring() != y.ring()) {
			if (y.ring()->descends_from(*x.ring()))
				x = pullback(x, y.ring());
			else if (x.ring()->descends_from(*y.ring()))
				y = pullback(y, x.ring());
			else
				throw DomainError("classes live in unrelated rings");
		}
		return Value::of(op(x, y));
	}

	RingPtr ring(std::string_view name)
	{
		auto it = rings_.find(std::string(trim(name)));
		if (it == rings_.end())
			throw DomainError("unknown ring '" + std::string(trim(name)) + "'");
		return it->second;
	}

	BundleClass const &bundle(std::string_view name)
	{
		auto it = bundles_.find(std::string(trim(name)));
		if (it == bundles_.end())
			throw DomainError("unknown bundle '" + std::string(trim(name)) + "'");
		return it->second;
	}

	RingPtr require_current()
	{
		if (!current_)
			throw DomainError("no ring defined yet");
		return current_;
	}

	RingPtr build_ring(std::string_view rhs)
	{
		CallSyntax c = parse_call(rhs);
		RingPtr r;
		if (c.name == "point") {
			auto order = c.take("order");
			r = order.empty() ? point_ring() : stacky_point(parse_int(order));
		} else if (c.name == "proj_bundle") {
			std::string gen(c.take("gen"));
			if (gen.empty())
				gen = "zeta";
			auto base = c.take("base");
			auto bundle_name = c.take("bundle");
			auto rank = c.take("rank");
			if (!bundle_name.empty()) {
				BundleClass const &E = bundle(bundle_name);
				if (!base.empty() && ring(base) != E.ring())
					throw DomainError("bundle " + std::string(bundle_name) + " does not live on " +
					                  std::string(base));
				if (!rank.empty() && parse_int(rank) != E.rank())
					throw DomainError("rank does not match bundle " + std::string(bundle_name));
				r = projective_bundle(E, gen);
			} else {
				if (base.empty() || rank.empty())
					throw ParseError("proj_bundle needs base= and rank= (or bundle=)");
				r = projective_bundle(BundleClass::trivial(ring(base), static_cast<int>(parse_int(rank))), gen);
			}
		} else if (c.name == "proj_space") {
			if (c.positional.size() != 1)
				throw ParseError("proj_space(n, gen=h)");
			std::string gen(c.take("gen"));
			r = projective_space(static_cast<int>(parse_int(c.positional[0])), gen.empty() ? "h" : gen);
		} else if (c.name == "weighted_line") {
			if (c.positional.size() != 2)
				throw ParseError("weighted_line(a, b, gen=h)");
			std::string gen(c.take("gen"));
			r = weighted_projective_line(parse_int(c.positional[0]), parse_int(c.positional[1]),
			                             gen.empty() ? "h" : gen);
		} else if (c.name == "truncated") {
			auto dim = c.take("dim");
			if (dim.empty())
				throw ParseError("truncated needs dim=");
			std::vector<Generator> gens;
			for (auto g : c.positional) {
				auto colon = g.find(':');
				if (colon == std::string_view::npos)
					throw ParseError("truncated generators are written name:codim");
				gens.push_back({std::string(trim(g.substr(0, colon))),
				                static_cast<int>(parse_int(g.substr(colon + 1)))});
			}
			r = truncated_ring(std::move(gens), static_cast<int>(parse_int(dim)));
		} else {
			throw ParseError("unknown ring constructor '" + c.name + "'");
		}
		c.finish();
		return r;
	}

	BundleClass build_bundle(std::string_view rhs)
	{
		CallSyntax c = parse_call(rhs);
		auto need = [&](std::size_t n) {
			if (c.positional.size() != n)
				throw ParseError(c.name + " takes " + std::to_string(n) + " positional argument(s)");
		};
		std::optional<BundleClass> E;
		if (c.name == "chern") {
			need(1);
			GradedClass total = as_class(eval(c.positional[0]));
			auto rank = c.take("rank");
			E.emplace(rank.empty() ? std::max(total.max_codim(), 0) : static_cast<int>(parse_int(rank)),
			          total);
		} else if (c.name == "trivial") {
			need(1);
			E = BundleClass::trivial(require_current(), static_cast<int>(parse_int(c.positional[0])));
		} else if (c.name == "line") {
			need(1);
			E = BundleClass::line(as_class(eval(c.positional[0])));
		} else if (c.name == "whitney") {
			need(2);
			E = whitney_sum(bundle(c.positional[0]), bundle(c.positional[1]));
		} else if (c.name == "dual") {
			need(1);
			E = dual_bundle(bundle(c.positional[0]));
		} else if (c.name == "tensor") {
			need(2);
			BundleClass const &F = bundle(c.positional[0]);
			GradedClass l = as_class(eval(c.positional[1]));
			E = tensor_line(F, pullback(l, F.ring()));
		} else {
			throw ParseError("unknown bundle constructor '" + c.name + "'");
		}
		c.finish();
		return *E;
	}
};

} // namespace

std::vector<std::pair<std::string, std::string>> run_chow_script(std::string_view script)
{
	Interpreter in;
	std::size_t line_no = 0;
	while (!script.empty()) {
		auto nl = script.find('\n');
		std::string_view line = script.substr(0, nl);
		script = nl == std::string_view::npos ? std::string_view{} : script.substr(nl + 1);
		++line_no;
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		if (trim(line).empty())
			continue;
		try {
			in.statement(line);
		} catch (ParseError const &e) {
			throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
		} catch (DomainError const &e) {
			throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
		}
	}
	return in.outputs;
}

} // namespace stackychow
