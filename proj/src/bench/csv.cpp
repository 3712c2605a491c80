#include "kbest/bench/csv.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include "kbest/core/errors.hpp"

namespace kbest::bench {

namespace {

constexpr const char* kFields[] = {
    "domain",          "variant",           "instance_id",       "seed",
    "algorithm",       "kappa",             "paths_found",       "cost_min",
    "cost_max",        "elapsed_seconds",   "expansions",        "duplicate_pops",
    "centroids_created", "centroids_consumed", "gb_insertions",  "ledger_bytes_estimate",
    "status",
};
constexpr std::size_t kFieldCount = std::size(kFields);

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

template <typename T>
T number(std::string_view s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("bad numeric field '" + std::string(s) + "'", line);
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = line.find(',');
    out.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string csv_header() {
  std::string h;
  for (std::size_t i = 0; i < kFieldCount; ++i) {
    if (i) h.push_back(',');
    h += kFields[i];
  }
  return h;
}

std::string emit_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << csv_header() << '\n';
  for (const ResultRow& r : rows) {
    os << r.domain << ',' << r.variant << ',' << r.instance_id << ',' << r.seed << ',' << r.algorithm
       << ',' << r.kappa << ',' << r.paths_found << ',' << r.cost_min << ',' << r.cost_max << ','
       << fixed6(r.elapsed_seconds) << ',' << r.expansions << ',' << r.duplicate_pops << ','
       << r.centroids_created << ',' << r.centroids_consumed << ',' << r.gb_insertions << ','
       << r.ledger_bytes_estimate << ',' << r.status << '\n';
  }
  return os.str();
}

std::vector<ResultRow> parse_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  std::size_t lineno = 0;
  bool header = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header) {
      if (line != csv_header()) throw ParseError("unexpected CSV header", lineno);
      header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != kFieldCount)
      throw ParseError("expected " + std::to_string(kFieldCount) + " fields, got " + std::to_string(f.size()),
                       lineno);
    ResultRow r;
    r.domain = f[0];
    r.variant = f[1];
    r.instance_id = number<std::size_t>(f[2], lineno);
    r.seed = number<std::uint64_t>(f[3], lineno);
    r.algorithm = f[4];
    r.kappa = number<std::size_t>(f[5], lineno);
    r.paths_found = number<std::size_t>(f[6], lineno);
    r.cost_min = number<std::int64_t>(f[7], lineno);
    r.cost_max = number<std::int64_t>(f[8], lineno);
    r.elapsed_seconds = number<double>(f[9], lineno);
    r.expansions = number<std::uint64_t>(f[10], lineno);
    r.duplicate_pops = number<std::uint64_t>(f[11], lineno);
    r.centroids_created = number<std::uint64_t>(f[12], lineno);
    r.centroids_consumed = number<std::uint64_t>(f[13], lineno);
    r.gb_insertions = number<std::uint64_t>(f[14], lineno);
    r.ledger_bytes_estimate = number<std::uint64_t>(f[15], lineno);
    r.status = f[16];
    if (r.status != "ok" && r.status != "capped") throw ParseError("bad status '" + r.status + "'", lineno);
    rows.push_back(std::move(r));
  }
  if (!header) throw ParseError("empty CSV", 0);
  return rows;
}

std::string emit_plot_data(const std::vector<ResultRow>& rows, std::string_view metric) {
  double (*pick)(const ResultRow&) = nullptr;
  if (metric == "elapsed_seconds") pick = [](const ResultRow& r) { return r.elapsed_seconds; };
  else if (metric == "expansions") pick = [](const ResultRow& r) { return static_cast<double>(r.expansions); };
  else if (metric == "ledger_bytes_estimate")
    pick = [](const ResultRow& r) { return static_cast<double>(r.ledger_bytes_estimate); };
  else throw ConfigError("unsupported plot metric '" + std::string(metric) + "'");

  std::vector<std::string> order;
  std::map<std::string, std::map<std::size_t, std::pair<double, std::size_t>>> series;
  for (const ResultRow& r : rows) {
    auto [it, fresh] = series.try_emplace(r.algorithm);
    if (fresh) order.push_back(r.algorithm);
    auto& point = it->second[r.kappa];
    if (r.status == "ok") {
      point.first += pick(r);
      ++point.second;
    }
  }
  std::ostringstream os;
  os << "# metric: " << metric << '\n';
  for (std::size_t s = 0; s < order.size(); ++s) {
    if (s) os << "\n\n";
    os << "# series: " << order[s] << '\n' << "# kappa mean completed\n";
    for (const auto& [kappa, acc] : series[order[s]]) {
      os << kappa << ' ';
      if (acc.second) os << fixed6(acc.first / static_cast<double>(acc.second));
      else os << "nan";
      os << ' ' << acc.second << '\n';
    }
  }
  return os.str();
}

}  // namespace kbest::bench
