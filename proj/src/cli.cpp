#include "stackychow/cli.hpp"

#include "stackychow/chow_ring.hpp"
#include "stackychow/chow_script.hpp"
#include "stackychow/cycle.hpp"
#include "stackychow/equivariant.hpp"
#include "stackychow/errors.hpp"
#include "stackychow/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace stackychow::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { json, text };

/// key=value positional arguments of one subcommand.
class KeyValues
{
  public:
	KeyValues(std::vector<std::string> const &raw, std::vector<std::string> const &allowed)
	{
		for (auto const &arg : raw) {
			auto eq = arg.find('=');
			if (eq == std::string::npos)
				throw ParseError("expected key=value, got '" + arg + "'");
			std::string key = arg.substr(0, eq);
			if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
				throw ParseError("unknown argument '" + key + "'");
			if (!values_.emplace(key, arg.substr(eq + 1)).second)
				throw ParseError("argument '" + key + "' given twice");
		}
	}

	std::optional<std::string> get(std::string const &key) const
	{
		auto it = values_.find(key);
		if (it == values_.end())
			return std::nullopt;
		return it->second;
	}

  private:
	std::map<std::string, std::string> values_;
};

json parse_json(std::string const &text, std::string const &what)
{
	try {
		return json::parse(text);
	} catch (json::parse_error const &e) {
		throw ParseError("invalid JSON for " + what + ": " + e.what());
	}
}

std::string read_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw ParseError("cannot read '" + path + "'");
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

// --- random inputs ---------------------------------------------------------

Rat random_coefficient(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> num(1, 9), den(1, 3), sign(0, 1);
	return Rat(sign(rng) ? num(rng) : -num(rng), den(rng));
}

LaurentPoly2 random_laurent(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> exp(-4, 4), count(2, 6);
	for (;;) {
		LaurentPoly2 f;
		int n = count(rng);
		for (int i = 0; i < n; ++i)
			f += LaurentPoly2::monomial(random_coefficient(rng), {exp(rng), exp(rng)});
		if (!f.is_zero() && !f.is_monomial())
			return f;
	}
}

ZeroCycleOnR random_cycle(std::mt19937_64 &rng)
{
	std::uniform_int_distribution<int> parts(1, 3), degree(1, 3), mult(-3, 3);
	std::vector<ZeroCycleOnR::Component> comps;
	int n = parts(rng);
	while (static_cast<int>(comps.size()) < n) {
		std::vector<Rat> c;
		int d = degree(rng);
		for (int i = 0; i < d; ++i)
			c.push_back(random_coefficient(rng));
		c.push_back(1);
		UniPoly g(std::move(c));
		int m = mult(rng);
		if (m == 0 || g.eval(0).is_zero() || g.eval(-1).is_zero())
			continue;
		comps.emplace_back(std::move(g), m);
	}
	return ZeroCycleOnR::from_components(comps);
}

// --- serialization ---------------------------------------------------------

json cycle_json(ZeroCycleOnR const &c)
{
	json arr = json::array();
	for (auto const &[g, m] : c.components())
		arr.push_back(json::array({g.to_string(), m}));
	return arr;
}

ZeroCycleOnR cycle_from_json(json const &j)
{
	if (!j.is_array())
		throw ParseError("cycle must be a JSON array of [polynomial, multiplicity] pairs");
	std::vector<ZeroCycleOnR::Component> comps;
	for (auto const &item : j) {
		if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
		    !item[1].is_number_integer())
			throw ParseError("cycle entries must be [\"polynomial in t\", integer]");
		UniPoly g = UniPoly::parse(item[0].get<std::string>());
		if (g.is_zero())
			throw DomainError("cycle component is the zero polynomial");
		comps.emplace_back(std::move(g), item[1].get<std::int64_t>());
	}
	return ZeroCycleOnR::from_components(comps);
}

json certificate_json(Certificate const &cert)
{
	json arr = json::array();
	for (auto const &s : cert.steps)
		arr.push_back({{"sign", s.sign}, {"curve", s.curve.to_string()}});
	return arr;
}

Certificate certificate_from_json(json const &j)
{
	if (!j.is_array())
		throw ParseError("certificate must be a JSON array");
	Certificate cert;
	for (auto const &item : j) {
		if (!item.is_object() || !item.contains("sign") || !item.contains("curve") ||
		    !item["sign"].is_number_integer() || !item["curve"].is_string())
			throw ParseError("certificate steps must be {\"sign\": +-1, \"curve\": \"...\"}");
		int sign = item["sign"].get<int>();
		if (sign != 1 && sign != -1)
			throw ParseError("certificate sign must be 1 or -1");
		cert.steps.push_back({sign, LaurentPoly2::parse(item["curve"].get<std::string>())});
	}
	return cert;
}

json vec_json(Vec2 v)
{
	return json::array({v.x, v.y});
}

std::vector<Vec2> rays_from_json(json const &j)
{
	if (!j.is_array())
		throw ParseError("rays must be a JSON array of [u, v] pairs");
	std::vector<Vec2> rays;
	for (auto const &r : j) {
		if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
			throw ParseError("each ray must be [u, v] with integer entries");
		auto u = r[0].get<std::int64_t>(), v = r[1].get<std::int64_t>();
		if (std::max(std::abs(u), std::abs(v)) > (1 << 20))
			throw DomainError("ray entries are limited to 2^20 in absolute value");
		rays.push_back({u, v});
	}
	return rays;
}

std::string dump(json const &j)
{
	return j.dump(2) + "\n";
}

// --- subcommands -----------------------------------------------------------

struct Settings
{
	Format format = Format::json;
	bool format_given = false;
	bool verify = false;
	std::uint64_t seed = 1;
};

std::string cmd_boundary(KeyValues const &kv, Settings const &s)
{
	auto f_text = kv.get("f");
	auto cert_text = kv.get("cert");
	if (f_text.has_value() == cert_text.has_value())
		throw ParseError("boundary needs exactly one of f=<polynomial> or cert=<json>");

	if (cert_text) {
		Certificate cert = certificate_from_json(parse_json(*cert_text, "cert"));
		std::vector<ZeroCycleOnR::Component> parts;
		for (auto const &st : cert.steps)
			for (auto const &[g, m] : total_boundary(st.curve).components())
				parts.emplace_back(g, st.sign * m);
		ZeroCycleOnR total = ZeroCycleOnR::from_components(parts);
		if (s.format == Format::text)
			return "total = " + total.to_string() + "\nnorm_product = " +
			       norm(total).value.to_string() + "\n";
		return dump({{"total_cycle", cycle_json(total)},
		             {"norm_product", norm(total).value.to_string()}});
	}

	LaurentPoly2 f;
	if (*f_text == "random") {
		std::mt19937_64 rng(s.seed);
		f = random_laurent(rng);
	} else {
		f = LaurentPoly2::parse(*f_text);
	}
	if (f.is_zero())
		throw DomainError("boundary requires a nonzero polynomial");
	Polygon2 gamma = newton_polygon(f);
	if (gamma.is_point())
		throw DomainError("boundary requires a non-monomial polynomial; " + f.to_string() +
		                  " does not meet the torus");

	auto edges = edge_data(gamma);
	std::rotate(edges.begin(),
	            std::min_element(edges.begin(), edges.end(),
	                             [](auto const &a, auto const &b) { return a.rho < b.rho; }),
	            edges.end());

	json jedges = json::array();
	std::string text;
	for (auto const &e : edges) {
		ZeroCycleOnR c = boundary_rho(f, e);
		std::string ep = edge_polynomial(f, e).to_string();
		std::string n = norm(c).value.to_string();
		jedges.push_back({{"rho", vec_json(e.rho)},
		                  {"lambda", e.lambda},
		                  {"p", vec_json(e.p)},
		                  {"q", vec_json(e.q)},
		                  {"edge_poly", ep},
		                  {"cycle", cycle_json(c)},
		                  {"norm", n}});
		text += "edge rho=" + to_string(e.rho) + " lambda=" + std::to_string(e.lambda) +
		        " edge_poly=" + ep + " cycle=" + c.to_string() + " norm=" + n + "\n";
	}
	ZeroCycleOnR total = total_boundary(f);
	std::string product = norm(total).value.to_string();
	if (s.format == Format::text)
		return "f = " + f.to_string() + "\n" + text + "total = " + total.to_string() +
		       "\nnorm_product = " + product + "\n";
	return dump({{"f", f.to_string()},
	             {"edges", jedges},
	             {"total_cycle", cycle_json(total)},
	             {"norm_product", product}});
}

std::string cmd_reduce(KeyValues const &kv, Settings const &s)
{
	auto text = kv.get("cycle");
	if (!text)
		throw ParseError("reduce needs cycle=<json>");
	ZeroCycleOnR c;
	if (*text == "random") {
		std::mt19937_64 rng(s.seed);
		c = random_cycle(rng);
	} else {
		c = cycle_from_json(parse_json(*text, "cycle"));
	}
	Reduction red = reduce_to_point(c);
	bool verified = verify_certificate(c, red.normal_form, red.certificate);
	if (s.verify && !verified)
		throw DomainError("certificate failed verification");
	std::string cls = class_of(c).value.to_string();
	if (s.format == Format::text) {
		std::string out = "input = " + c.to_string() + "\nnormal_form = " +
		                  red.normal_form.to_string() + "\nclass = " + cls + "\n";
		for (auto const &st : red.certificate.steps)
			out += std::string("step ") + (st.sign > 0 ? "+" : "-") + " " + st.curve.to_string() + "\n";
		return out + "verified = " + (verified ? "true" : "false") + "\n";
	}
	return dump({{"input", cycle_json(c)},
	             {"normal_form", cycle_json(red.normal_form)},
	             {"class", cls},
	             {"certificate", certificate_json(red.certificate)},
	             {"verified", verified}});
}

std::string cmd_fan(KeyValues const &kv, Settings const &s)
{
	auto rays_text = kv.get("rays");
	auto f_text = kv.get("f");
	if (rays_text.has_value() == f_text.has_value())
		throw ParseError("fan needs exactly one of rays=<json> or f=<polynomial>");
	std::vector<Vec2> rays;
	if (rays_text) {
		rays = rays_from_json(parse_json(*rays_text, "rays"));
	} else {
		LaurentPoly2 f = LaurentPoly2::parse(*f_text);
		if (f.is_zero())
			throw DomainError("fan of the zero polynomial");
		Polygon2 gamma = newton_polygon(f);
		if (!gamma.is_point())
			for (auto const &e : edge_data(gamma))
				rays.push_back(e.rho);
	}
	Fan2D fan = smooth_complete_fan(rays);
	if (s.format == Format::text) {
		std::string out = "rays =";
		for (auto r : fan.rays)
			out += " " + to_string(r);
		return out + "\nsmooth = " + (is_smooth(fan) ? "true" : "false") +
		       "\ncomplete = " + (is_complete(fan) ? "true" : "false") + "\n";
	}
	json jr = json::array();
	for (auto r : fan.rays)
		jr.push_back(vec_json(r));
	return dump({{"rays", jr}, {"smooth", is_smooth(fan)}, {"complete", is_complete(fan)}});
}

std::string cmd_chow(KeyValues const &kv, Settings const &s, std::string_view input)
{
	auto file = kv.get("file");
	std::string script = file ? read_file(*file) : std::string(input);
	auto results = run_chow_script(script);
	// plain text unless JSON was asked for explicitly
	if (s.format == Format::json && s.format_given) {
		json arr = json::array();
		for (auto const &[expr, value] : results)
			arr.push_back({{"expr", expr}, {"value", value}});
		return dump({{"results", arr}});
	}
	std::string out;
	for (auto const &[expr, value] : results)
		out += expr + " = " + value + "\n";
	return out;
}

RingPtr ring_from_json(json const &j)
{
	if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
		throw ParseError("component ring must be an object with a \"type\"");
	auto type = j["type"].get<std::string>();
	auto get_int = [&](char const *key, std::int64_t fallback) -> std::int64_t {
		if (!j.contains(key))
			return fallback;
		if (!j[key].is_number_integer())
			throw ParseError(std::string("ring field '") + key + "' must be an integer");
		return j[key].get<std::int64_t>();
	};
	auto gen = j.value("gen", std::string("h"));
	if (type == "point")
		return get_int("order", 1) == 1 ? point_ring() : stacky_point(get_int("order", 1));
	if (type == "projective_space")
		return projective_space(static_cast<int>(get_int("n", -1)), gen);
	if (type == "weighted_line")
		return weighted_projective_line(get_int("a", 0), get_int("b", 0), gen);
	throw ParseError("unknown ring type '" + type + "'");
}

std::string cmd_localize(KeyValues const &kv, Settings const &s, std::string_view input)
{
	auto data = kv.get("data");
	if (!data)
		throw ParseError("localize needs data=<file.json> (or data=- for stdin)");
	json j = parse_json(*data == "-" ? std::string(input) : read_file(*data), "localization data");
	if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
		throw ParseError("localization data needs a \"components\" array");

	std::vector<FixedComponentData> comps;
	for (auto const &cj : j["components"]) {
		if (!cj.is_object() || !cj.contains("restriction") || !cj.contains("normal_ctop") ||
		    !cj["restriction"].is_string() || !cj["normal_ctop"].is_string())
			throw ParseError("each component needs \"restriction\" and \"normal_ctop\" strings");
		RingPtr ring = cj.contains("ring") ? ring_from_json(cj["ring"]) : point_ring();
		comps.push_back({ring, LaurentT::parse(cj["restriction"].get<std::string>(), ring),
		                 LaurentT::parse(cj["normal_ctop"].get<std::string>(), ring)});
	}
	LaurentT raw = localize_integrate(comps);
	std::optional<Rat> value;
	if (std::all_of(raw.terms().begin(), raw.terms().end(), [](auto const &t) { return t.first == 0; }))
		value = check_t_independence(raw);

	if (s.format == Format::text)
		return "raw = " + raw.to_string() + "\n" + (value ? "value = " + value->to_string() + "\n" : "");
	json out = {{"raw", raw.to_string()}};
	if (value)
		out["value"] = value->to_string();
	return dump(out);
}

std::string first_line(std::string const &s)
{
	return s.substr(0, s.find('\n'));
}

} // namespace

Outcome run(std::vector<std::string> const &args, std::string_view input)
{
	CLI::App app{"Exact intersection-theory workbench: toric boundaries, norm maps, "
	             "Chow-ring calculus and torus localization.",
	             "stackychow"};
	app.require_subcommand(1, 1);
	app.fallthrough();

	Settings settings;
	std::string format = "json";
	app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
	app.add_flag("--verify", settings.verify, "Fail if a reduce certificate does not verify");
	app.add_option("--seed", settings.seed, "Seed for f=random / cycle=random");

	struct Sub
	{
		CLI::App *app;
		std::vector<std::string> args;
	};
	std::map<std::string, Sub> subs;
	auto add = [&](std::string const &name, std::string const &help) {
		auto *sub = app.add_subcommand(name, help);
		subs[name].app = sub;
		sub->add_option("args", subs[name].args, "key=value arguments");
	};
	add("boundary", "Boundary of a curve on T^2: boundary f=<poly> | cert=<json>");
	add("reduce", "Reduce a zero-cycle on R to normal form: reduce cycle=<json>");
	add("fan", "Smooth complete fan through given rays: fan rays=<json> | f=<poly>");
	add("chow", "Evaluate a Chow-ring script from stdin or file=<path>");
	add("localize", "Torus localization integral: localize data=<file.json>");

	std::vector<char const *> argv{"stackychow"};
	for (auto const &a : args)
		argv.push_back(a.c_str());

	Outcome outcome;
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (CLI::CallForHelp const &) {
		outcome.out = app.help();
		return outcome;
	} catch (CLI::ParseError const &e) {
		outcome.exit_code = 2;
		outcome.err = "error: " + first_line(e.what()) + "\n";
		return outcome;
	}
	settings.format = format == "text" ? Format::text : Format::json;
	settings.format_given = app.count("--format") > 0;

	try {
		for (auto &[name, sub] : subs) {
			if (!sub.app->parsed())
				continue;
			if (name == "boundary")
				outcome.out = cmd_boundary(KeyValues(sub.args, {"f", "cert"}), settings);
			else if (name == "reduce")
				outcome.out = cmd_reduce(KeyValues(sub.args, {"cycle"}), settings);
			else if (name == "fan")
				outcome.out = cmd_fan(KeyValues(sub.args, {"rays", "f"}), settings);
			else if (name == "chow")
				outcome.out = cmd_chow(KeyValues(sub.args, {"file"}), settings, input);
			else if (name == "localize")
				outcome.out = cmd_localize(KeyValues(sub.args, {"data"}), settings, input);
		}
	} catch (ParseError const &e) {
		outcome.exit_code = 2;
		outcome.err = "error: " + first_line(e.what()) + "\n";
	} catch (json::exception const &e) {
		outcome.exit_code = 2;
		outcome.err = "error: malformed JSON input: " + first_line(e.what()) + "\n";
	} catch (std::exception const &e) {
		outcome.exit_code = 1;
		outcome.err = "error: " + first_line(e.what()) + "\n";
	}
	return outcome;
}

} // namespace stackychow::cli
