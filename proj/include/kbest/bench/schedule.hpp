#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace kbest::bench {

/// 1..10, then steps of 10 to 100, of 100 to 1000 and of 1000 to 10000,
/// truncated at max_kappa.
std::vector<std::size_t> sweep_kappa_schedule(std::size_t max_kappa);

/// "1,2,5" or "sweep:<max>". Throws ConfigError unless strictly increasing
/// and positive.
std::vector<std::size_t> parse_kappa_schedule(std::string_view text);

}  // namespace kbest::bench
