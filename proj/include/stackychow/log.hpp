#pragma once

#include <spdlog/spdlog.h>

namespace stackychow {

/// Process-wide stderr logger; level taken from STACKYCHOW_LOG
/// (error, info or debug; default error).
spdlog::logger &log();

} // namespace stackychow
