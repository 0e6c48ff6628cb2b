#include "stackychow/cli.hpp"
#include "stackychow/cycle.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace stackychow;
using json = nlohmann::json;

namespace {

std::string golden(std::string const &name)
{
	std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
	REQUIRE(in.good());
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

cli::Outcome run(std::vector<std::string> args, std::string_view input = {})
{
	return cli::run(args, input);
}

json run_json(std::vector<std::string> args)
{
	auto o = run(std::move(args));
	REQUIRE(o.exit_code == 0);
	return json::parse(o.out);
}

void check_one_line_error(cli::Outcome const &o, int code)
{
	CHECK(o.exit_code == code);
	CHECK(o.out.empty());
	CHECK(o.err.starts_with("error: "));
	CHECK(o.err.find('\n') == o.err.size() - 1);
}

ZeroCycleOnR cycle_of(json const &j)
{
	std::vector<ZeroCycleOnR::Component> parts;
	for (auto const &c : j)
		parts.emplace_back(UniPoly::parse(c[0].get<std::string>()), c[1].get<std::int64_t>());
	return ZeroCycleOnR::from_components(parts);
}

} // namespace

TEST_CASE("golden outputs")
{
	CHECK(run({"boundary", "f=x^2-3*x+2+y"}).out == golden("boundary_worked.json"));
	CHECK(run({"fan", "rays=[[1,0],[1,2]]"}).out == golden("fan_two_rays.json"));
	CHECK(run({"reduce", "cycle=[[\"t^2-3*t+2\",1]]"}).out == golden("reduce_quadratic.json"));
	CHECK(run({"chow"}, golden("weighted_line.chow")).out == golden("weighted_line.txt"));
	CHECK(run({"chow", "file=" GOLDEN_DIR "/weighted_line.chow"}).out == golden("weighted_line.txt"));
	CHECK(run({"localize", "data=" GOLDEN_DIR "/localize_p2.input.json"}).out == golden("localize_p2.json"));
	CHECK(run({"localize", "data=-"}, golden("localize_p2.input.json")).out == golden("localize_p2.json"));
}

TEST_CASE("boundary of the worked example")
{
	auto j = run_json({"boundary", "f=x^2-3*x+2+y"});
	CHECK(j["norm_product"] == "1");
	CHECK(j["total_cycle"] == json::parse(R"([["t+1/2",1],["t-1",1],["t-2",1]])"));
	REQUIRE(j["edges"].size() == 3);
	std::map<std::string, std::string> norms;
	for (auto const &e : j["edges"])
		norms[e["rho"].dump()] = e["norm"];
	CHECK(norms["[0,1]"] == "2");
	CHECK(norms["[-1,-2]"] == "1");
	CHECK(norms["[1,0]"] == "1/2");
	// counterclockwise from the lexicographically least normal
	CHECK(j["edges"][0]["rho"] == json::parse("[-1,-2]"));
}

TEST_CASE("fan and chow examples")
{
	auto fan = run_json({"fan", "rays=[[1,0],[1,2]]"});
	bool found = false;
	for (auto const &r : fan["rays"])
		found = found || r == json::parse("[1,1]");
	CHECK(found);
	CHECK(fan["smooth"] == true);
	CHECK(fan["complete"] == true);

	auto f = run_json({"fan", "f=x^2-3*x+2+y"});
	CHECK(f["smooth"] == true);

	auto chow = run({"chow"}, "ring W = weighted_line(4, 6, gen=h)\nprint integrate(h)\n");
	CHECK(chow.exit_code == 0);
	CHECK(chow.out == "integrate(h) = 1/24\n");
	auto cj = run({"--format", "json", "chow"}, "ring W = weighted_line(4, 6)\nprint integrate(h)\n");
	CHECK(json::parse(cj.out)["results"][0]["value"] == "1/24");
}

TEST_CASE("text output")
{
	auto o = run({"--format", "text", "boundary", "f=x-3+y"});
	CHECK(o.exit_code == 0);
	CHECK(o.out.find("total = [V(t-1/3)]+[V(t-3)]") != std::string::npos);
	CHECK(o.out.find("norm_product = 1") != std::string::npos);
	o = run({"fan", "rays=[[1,0],[0,1],[-1,-1]]", "--format", "text"});
	CHECK(o.out == "rays = (1,0) (0,1) (-1,-1)\nsmooth = true\ncomplete = true\n");
}

TEST_CASE("certificates replay through boundary")
{
	for (std::string cycle : {R"([["t^2+5",2],["t-4",-1]])", R"([["t^3+t+3",1],["t-7/2",3]])",
	                          R"([["t-2",1],["t-1/2",1]])"}) {
		auto red = run_json({"reduce", "cycle=" + cycle, "--verify"});
		CHECK(red["verified"] == true);
		auto replay = run_json({"boundary", "cert=" + red["certificate"].dump()});
		CHECK(cycle_of(replay["total_cycle"]) == cycle_of(red["input"]) - cycle_of(red["normal_form"]));
		CHECK(replay["norm_product"] == "1");
	}
}

TEST_CASE("seeded random inputs are deterministic")
{
	auto a = run({"boundary", "f=random", "--seed", "42"});
	auto b = run({"boundary", "f=random", "--seed", "42"});
	auto c = run({"boundary", "f=random", "--seed", "43"});
	CHECK(a.exit_code == 0);
	CHECK(a.out == b.out);
	CHECK(a.out != c.out);
	CHECK(json::parse(a.out)["norm_product"] == "1");
	for (int seed = 1; seed <= 20; ++seed) {
		auto r = run_json({"reduce", "cycle=random", "--seed", std::to_string(seed), "--verify"});
		CHECK(r["verified"] == true);
	}
}

TEST_CASE("localize reports t-dependence without a value")
{
	auto o = run({"localize", "data=-"}, R"({"components":[{"restriction":"1","normal_ctop":"t"}]})");
	CHECK(o.exit_code == 0);
	auto j = json::parse(o.out);
	CHECK(j["raw"] == "t^-1");
	CHECK_FALSE(j.contains("value"));
	auto w = run({"localize", "data=-"},
	             R"({"components":[
	                  {"ring":{"type":"point","order":4},"restriction":"t/2","normal_ctop":"-2*t"},
	                  {"ring":{"type":"point","order":6},"restriction":"5*t/6","normal_ctop":"4*t/3"}]})");
	CHECK(json::parse(w.out)["value"] == "1/24");
}

TEST_CASE("input errors exit 2")
{
	check_one_line_error(run({}), 2);
	check_one_line_error(run({"bogus"}), 2);
	check_one_line_error(run({"--bogus", "boundary", "f=x+y"}), 2);
	check_one_line_error(run({"boundary", "f=x+y", "--bogus"}), 2);
	check_one_line_error(run({"boundary", "f=x+y", "fan"}), 2);
	check_one_line_error(run({"boundary", "g=1"}), 2);
	check_one_line_error(run({"boundary", "f=x+", "f=y"}), 2);
	check_one_line_error(run({"boundary", "f=x+"}), 2);
	check_one_line_error(run({"boundary"}), 2);
	check_one_line_error(run({"--format", "xml", "boundary", "f=x+y"}), 2);
	check_one_line_error(run({"reduce", "cycle=[1"}), 2);
	check_one_line_error(run({"reduce", "cycle={}"}), 2);
	check_one_line_error(run({"boundary", "cert=[{\"sign\":2,\"curve\":\"x+y\"}]"}), 2);
	check_one_line_error(run({"fan", "rays=[[1]]"}), 2);
	check_one_line_error(run({"chow"}, "ring P = nonsense\n"), 2);
	check_one_line_error(run({"localize", "data=/nonexistent/file.json"}), 2);
	check_one_line_error(run({"localize", "data=-"}, R"({"components":[{"restriction":"1"}]})"), 2);
	check_one_line_error(run({"localize", "data=-"}, R"({"components":[{"ring":{"type":"cone"},"restriction":"1","normal_ctop":"t"}]})"), 2);
}

TEST_CASE("domain errors exit 1 and name the problem")
{
	auto o = run({"boundary", "f=3*x^2*y"});
	check_one_line_error(o, 1);
	CHECK(o.err.find("monomial") != std::string::npos);
	check_one_line_error(run({"boundary", "f=0"}), 1);
	check_one_line_error(run({"reduce", "cycle=[[\"t+1\",1]]"}), 1);
	check_one_line_error(run({"fan", "rays=[[2,4]]"}), 1);
	check_one_line_error(run({"chow"}, "ring W = weighted_line(0, 6)\n"), 1);
	check_one_line_error(run({"localize", "data=-"}, R"({"components":[{"restriction":"1","normal_ctop":"0"}]})"), 1);
}

TEST_CASE("help exits cleanly")
{
	auto o = run({"--help"});
	CHECK(o.exit_code == 0);
	CHECK(o.out.find("localize") != std::string::npos);
}
