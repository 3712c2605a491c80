#include "kbest/bench/schedule.hpp"

#include <charconv>
#include <string>

#include "kbest/core/errors.hpp"

namespace kbest::bench {

std::vector<std::size_t> sweep_kappa_schedule(std::size_t max_kappa) {
  if (max_kappa == 0) throw PreconditionError("max kappa must be at least 1");
  std::vector<std::size_t> out;
  std::size_t step = 1;
  for (std::size_t k = 1; k <= max_kappa && k <= 10000; k += step) {
    out.push_back(k);
    if (k == 10 * step) step *= 10;
  }
  return out;
}

namespace {

std::size_t to_size(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ConfigError("bad kappa value '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<std::size_t> parse_kappa_schedule(std::string_view text) {
  std::vector<std::size_t> out;
  if (text.starts_with("sweep:")) {
    out = sweep_kappa_schedule(to_size(text.substr(6)));
  } else {
    while (true) {
      const auto comma = text.find(',');
      out.push_back(to_size(text.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == 0) throw ConfigError("kappa values must be positive");
    if (i && out[i] <= out[i - 1]) throw ConfigError("kappa schedule must be strictly increasing");
  }
  return out;
}

}  // namespace kbest::bench
