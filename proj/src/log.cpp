#include "stackychow/log.hpp"

#include <cstdlib>
#include <spdlog/sinks/stdout_sinks.h>
#include <string_view>

namespace stackychow {

spdlog::logger &log()
{
	static std::shared_ptr<spdlog::logger> logger = [] {
		auto l = spdlog::stderr_logger_mt("stackychow");
		l->set_pattern("[%l] %v");
		auto level = spdlog::level::err;
		if (char const *env = std::getenv("STACKYCHOW_LOG")) {
			std::string_view v(env);
			if (v == "info")
				level = spdlog::level::info;
			else if (v == "debug")
				level = spdlog::level::debug;
		}
		l->set_level(level);
		return l;
	}();
	return *logger;
}

} // namespace stackychow
