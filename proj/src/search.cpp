#include "pierce/search.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace pierce {

namespace {

void next_combinations(std::vector<Offset>& current, Offset lo, Offset hi, std::size_t remaining,
                       const std::function<void(const std::vector<Offset>&)>& emit) {
  if (remaining == 0) {
    emit(current);
    return;
  }
  for (Offset v = lo; v <= hi; ++v) {
    current.push_back(v);
    next_combinations(current, v + 1, hi, remaining - 1, emit);
    current.pop_back();
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Families whose first ship is ships[first], in lexicographic order.
void families_from(const std::vector<Ship>& ships, std::size_t first, std::size_t n,
                   const std::function<bool(const Family&)>& visit) {
  std::vector<std::size_t> idx{first};
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if (idx.size() == n) {
      std::vector<Ship> members;
      members.reserve(n);
      for (auto i : idx) members.push_back(ships[i]);
      Family f(std::move(members));
      if (is_canonical(f) && !visit(f)) stop = true;
      return;
    }
    for (std::size_t j = idx.back() + 1; j < ships.size() && !stop; ++j) {
      idx.push_back(j);
      rec();
      idx.pop_back();
    }
  };
  rec();
}

std::map<std::string, Rational> load_results(const std::filesystem::path& path) {
  std::map<std::string, Rational> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    try {
      out.emplace(line.substr(0, tab), parse_rational(line.substr(tab + 1)));
    } catch (const std::invalid_argument&) {
      // A torn final line from an interrupted write; it will be recomputed.
    }
  }
  return out;
}

void write_results(const std::filesystem::path& path, const std::vector<FamilyDensity>& rows, std::size_t count,
                   const std::string& summary) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    for (std::size_t i = 0; i < count; ++i) out << to_string(rows[i].family) << '\t' << to_string(rows[i].density) << '\n';
    out << summary;
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<FamilyDensity> run_search(std::int64_t n, std::int64_t k, Offset span_budget, const SearchOptions& options) {
  const std::vector<Ship> ships = ships_within(k, span_budget);
  // Shards are the families sharing a first ship.
  std::vector<std::vector<FamilyDensity>> shards(ships.size());
  std::vector<std::size_t> shard_start(ships.size() + 1, 0);
  for (std::size_t s = 0; s < ships.size(); ++s) {
    families_from(ships, s, static_cast<std::size_t>(n), [&](const Family& f) {
      shards[s].push_back({f, Rational(0)});
      return true;
    });
    shard_start[s + 1] = shard_start[s] + shards[s].size();
  }
  const std::size_t total = shard_start.back();

  std::map<std::string, Rational> known;
  if (options.results_file && std::filesystem::exists(*options.results_file)) {
    known = load_results(*options.results_file);
  }

  std::vector<std::uint8_t> done(ships.size(), 0);
  std::mutex mutex;
  std::condition_variable cv;
  std::atomic<std::size_t> next_shard{0};
  std::exception_ptr failure;

  auto worker = [&]() {
    while (true) {
      const std::size_t s = next_shard.fetch_add(1);
      if (s >= shards.size()) return;
      try {
        for (auto& row : shards[s]) {
          if (auto it = known.find(to_string(row.family)); it != known.end()) {
            row.density = it->second;
          } else {
            row.density = exact_density(row.family, options.solve).density;
          }
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        done[s] = 1;
      }
      cv.notify_all();
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);

  // Coordinator: merge shards in order, checkpointing the completed prefix.
  std::vector<FamilyDensity> rows;
  rows.reserve(total);
  std::size_t since_checkpoint = 0;
  for (std::size_t s = 0; s < shards.size(); ++s) {
    {
      std::unique_lock lock(mutex);
      cv.wait(lock, [&] { return done[s] != 0; });
      if (failure) break;
    }
    if (shards[s].empty()) continue;
    for (auto& row : shards[s]) rows.push_back(std::move(row));
    since_checkpoint += shards[s].size();
    if (options.progress) options.progress(rows.size(), total);
    if (options.results_file && since_checkpoint >= options.checkpoint_every) {
      write_results(*options.results_file, rows, rows.size(), "");
      since_checkpoint = 0;
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

SearchReport summarize(std::int64_t n, std::int64_t k, Offset span_budget, const std::vector<FamilyDensity>& rows) {
  SearchReport report;
  report.n = n;
  report.k = k;
  report.span_budget = span_budget;
  report.families_examined = rows.size();
  report.noncanonical_families = noncanonical_family_count(n, k, span_budget);
  for (const auto& row : rows) {
    // Strict comparisons keep the earliest (lexicographically smallest) witness.
    if (!report.max || row.density > report.max->density) report.max = row;
    if (!report.min || row.density < report.min->density) report.min = row;
  }
  return report;
}

}  // namespace

std::vector<Ship> ships_within(std::int64_t k, Offset span_budget) {
  if (k < 1) throw std::invalid_argument("ship size must be positive");
  std::vector<Ship> out;
  if (span_budget < k) return out;
  std::vector<Offset> current;
  next_combinations(current, 1, span_budget - 1, static_cast<std::size_t>(k - 1), [&](const std::vector<Offset>& tail) {
    std::vector<Offset> cells{0};
    cells.insert(cells.end(), tail.begin(), tail.end());
    out.emplace_back(std::move(cells));
  });
  return out;
}

bool is_canonical(const Family& f) {
  if (scale_reduce(f).factor != 1) return false;
  return !(f.reflected() < f);
}

void for_each_family(std::int64_t n, std::int64_t k, Offset span_budget,
                     const std::function<bool(const Family&)>& visit) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::vector<Ship> ships = ships_within(k, span_budget);
  bool stop = false;
  for (std::size_t s = 0; s < ships.size() && !stop; ++s) {
    families_from(ships, s, static_cast<std::size_t>(n), [&](const Family& f) {
      if (!visit(f)) stop = true;
      return !stop;
    });
  }
}

std::vector<Family> enumerate_families(std::int64_t n, std::int64_t k, Offset span_budget) {
  std::vector<Family> out;
  for_each_family(n, k, span_budget, [&](const Family& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t noncanonical_family_count(std::int64_t n, std::int64_t k, Offset span_budget) {
  if (span_budget < k) return 0;
  const std::uint64_t ships = binomial(static_cast<std::uint64_t>(span_budget - 1), static_cast<std::uint64_t>(k - 1));
  return binomial(ships, static_cast<std::uint64_t>(n));
}

std::string summary_block(const SearchReport& report) {
  std::ostringstream os;
  os << "# n=" << report.n << " k=" << report.k << " span_budget=" << report.span_budget << '\n';
  os << "# families " << report.families_examined << '\n';
  os << "# noncanonical " << report.noncanonical_families << '\n';
  if (report.max) os << "# max " << to_string(report.max->density) << ' ' << to_string(report.max->family) << '\n';
  if (report.min) os << "# min " << to_string(report.min->density) << ' ' << to_string(report.min->family) << '\n';
  return os.str();
}

std::vector<FamilyDensity> solve_all(std::int64_t n, std::int64_t k, Offset span_budget, const SearchOptions& options) {
  if (span_budget > options.solve.span_cap) throw SpanCapExceeded(span_budget, options.solve.span_cap);
  auto rows = run_search(n, k, span_budget, options);
  if (options.results_file) write_results(*options.results_file, rows, rows.size(), "");
  return rows;
}

SearchReport compute_extremes(std::int64_t n, std::int64_t k, Offset span_budget, const SearchOptions& options) {
  if (span_budget > options.solve.span_cap) throw SpanCapExceeded(span_budget, options.solve.span_cap);
  const auto rows = run_search(n, k, span_budget, options);
  SearchReport report = summarize(n, k, span_budget, rows);
  if (options.results_file) write_results(*options.results_file, rows, rows.size(), summary_block(report));
  return report;
}

ReflectionCheck check_theorem32(Offset max_a, const SolveOptions& options) {
  ReflectionCheck out;
  out.holds = true;
  const Rational bound(2, 5);
  // b <= a with gcd 1: every pair has b < a except a = b = 1, the ship [0,1,2].
  for (Offset a = 1; a <= max_a; ++a) {
    for (Offset b = 1; b <= a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Ship ship{0, a, a + b};
      Family family{ship, ship.reflected()};
      const Rational density = exact_density(family, options).density;
      const bool extremal = (a == 2 && b == 1) || (a == 3 && b == 1);
      if (density > bound || (density == bound) != extremal) out.holds = false;
      out.cases.push_back({a, b, std::move(family), density});
    }
  }
  return out;
}

std::vector<SearchReport> toughest_table(std::int64_t max_n, std::int64_t k_min, std::int64_t k_max,
                                         Offset total_budget, const SearchOptions& options) {
  std::vector<SearchReport> out;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t k = k_min; k <= k_max; ++k) {
      SearchOptions per = options;
      per.results_file.reset();
      out.push_back(compute_extremes(n, k, total_budget - n, per));
    }
  }
  return out;
}

}  // namespace pierce
