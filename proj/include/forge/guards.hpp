#pragma once

#include <cstddef>
#include <string_view>

namespace forge {

/// Effective value of a size guard. FORGE_GUARD_OVERRIDE=<N> raises every
/// guard to at least N; unset or unparsable leaves the default.
std::size_t guard_limit(std::size_t default_limit);

/// Throws GuardError when value exceeds the effective guard.
void enforce_guard(std::string_view what, std::size_t value, std::size_t default_limit);

}  // namespace forge
