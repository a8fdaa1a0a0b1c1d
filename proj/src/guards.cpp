#include "forge/guards.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "forge/errors.hpp"

namespace forge {

std::size_t guard_limit(std::size_t default_limit) {
  const char* raw = std::getenv("FORGE_GUARD_OVERRIDE");
  if (raw == nullptr) return default_limit;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end) return default_limit;
  return std::max(default_limit, value);
}

void enforce_guard(std::string_view what, std::size_t value, std::size_t default_limit) {
  const std::size_t limit = guard_limit(default_limit);
  if (value > limit) {
    throw GuardError(std::string(what) + " = " + std::to_string(value) + " exceeds the size guard of " +
                     std::to_string(limit) + " (set FORGE_GUARD_OVERRIDE to raise it)");
  }
}

}  // namespace forge
