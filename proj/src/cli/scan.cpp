#include "f1curve/cli/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "f1curve/errors.hpp"

namespace f1curve::cli {

namespace {

constexpr std::uint64_t kMaxHeight = std::uint64_t{1} << 62;
// Roughly this many q per batch between checkpoints.
constexpr std::uint64_t kBatchItems = std::uint64_t{1} << 18;

class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) {}

  void add(ScanEntry e) {
    items_.push_back(std::move(e));
    if (items_.size() >= 2 * k_ + 64) {
      trim();
    }
  }
  void merge(TopK&& other) {
    for (auto& e : other.items_) {
      items_.push_back(std::move(e));
    }
    trim();
  }
  std::vector<ScanEntry> finish() {
    trim();
    std::sort(items_.begin(), items_.end(), ranks_before);
    return std::move(items_);
  }

 private:
  void trim() {
    if (items_.size() <= k_) {
      return;
    }
    std::nth_element(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(k_),
                     items_.end(), ranks_before);
    items_.resize(k_);
  }

  std::size_t k_;
  std::vector<ScanEntry> items_;
};

nlohmann::json config_json(const ScanConfig& cfg) {
  return {{"min", cfg.height_min}, {"max", cfg.height_max}, {"top", cfg.top_k}};
}

void write_checkpoint(const ScanConfig& cfg, const ScanResult& r,
                      const std::vector<ScanEntry>& top) {
  nlohmann::json doc;
  doc["config"] = config_json(cfg);
  doc["last_height"] = r.last_height;
  doc["scanned"] = r.scanned;
  doc["skipped"] = r.skipped;
  auto& list = doc["partial_topk"] = nlohmann::json::array();
  for (const auto& e : top) {
    list.push_back({{"a", e.a}, {"b", e.b}, {"S", e.sum.value}});
  }
  const std::filesystem::path path(*cfg.checkpoint);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump(2) << '\n';
    if (!out) {
      throw ArgumentError("cannot write checkpoint " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

// Returns false when there is no checkpoint file yet.
bool read_checkpoint(const ScanConfig& cfg, ScanResult& r, TopK& top) {
  std::ifstream in(*cfg.checkpoint);
  if (!in) {
    return false;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
    if (doc.at("config") != config_json(cfg)) {
      throw ArgumentError("checkpoint " + *cfg.checkpoint +
                          " belongs to a different scan configuration");
    }
    r.last_height = doc.at("last_height").get<std::uint64_t>();
    r.scanned = doc.at("scanned").get<std::uint64_t>();
    r.skipped = doc.at("skipped").get<std::uint64_t>();
    if (r.last_height + 1 < cfg.height_min || r.last_height > cfg.height_max) {
      throw ArgumentError("checkpoint last_height out of range");
    }
    for (const auto& item : doc.at("partial_topk")) {
      ScanEntry e = evaluate_entry(item.at("a").get<std::int64_t>(),
                                   item.at("b").get<std::int64_t>());
      const double stored = item.at("S").get<double>();
      if (std::abs(stored - e.sum.value) > 1e-9 * std::max(1.0, std::abs(stored))) {
        throw ArgumentError("checkpoint entry " + std::to_string(e.a) + "/" +
                            std::to_string(e.b) + " does not match its S value");
      }
      top.add(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ArgumentError("malformed checkpoint " + *cfg.checkpoint + ": " + ex.what());
  }
  r.resumed = true;
  return true;
}

}  // namespace

void ScanConfig::validate() const {
  if (height_min < 2) {
    throw ArgumentError("scan height minimum must be at least 2");
  }
  if (height_min > height_max) {
    throw ArgumentError("empty scan range: min " + std::to_string(height_min) +
                        " > max " + std::to_string(height_max));
  }
  if (top_k < 1) {
    throw ArgumentError("--top must be at least 1");
  }
  if (height_max > kMaxHeight) {
    throw MagnitudeError("scan heights are limited to 2^62");
  }
  if (workers < 1) {
    throw ArgumentError("worker count must be at least 1");
  }
}

bool ranks_before(const ScanEntry& x, const ScanEntry& y) {
  if (x.sum.value != y.sum.value) {
    return x.sum.value > y.sum.value;
  }
  if (x.a != y.a) {
    return x.a < y.a;
  }
  return x.b < y.b;
}

void for_each_of_height(std::uint64_t h,
                        const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const auto hs = static_cast<std::int64_t>(h);
  auto both = [&](std::int64_t a, std::int64_t b) {
    if (std::gcd(a, b) == 1) {
      fn(a, b);
      fn(-a, b);
    }
  };
  for (std::int64_t a = 1; a < hs; ++a) {
    both(a, hs);
  }
  for (std::int64_t b = 1; b <= hs; ++b) {
    both(hs, b);
  }
}

ScanEntry evaluate_entry(std::int64_t a, std::int64_t b) {
  ScanEntry e;
  e.a = a;
  e.b = b;
  e.sum = defect_sum_closed_form(Rat(Integer(a), Integer(b)));
  return e;
}

ScanResult run_scan(const ScanConfig& cfg) {
  cfg.validate();
  ScanResult result;
  TopK top(cfg.top_k);
  result.last_height = cfg.height_min - 1;
  if (cfg.checkpoint) {
    read_checkpoint(cfg, result, top);
  }

  std::uint64_t h0 = result.last_height + 1;
  while (h0 <= cfg.height_max) {
    const std::uint64_t span = std::max<std::uint64_t>(1, kBatchItems / (4 * h0));
    const std::uint64_t h1 = std::min(cfg.height_max, h0 + span - 1);

    std::atomic<std::uint64_t> next{h0};
    std::vector<TopK> local(cfg.workers, TopK(cfg.top_k));
    std::vector<std::uint64_t> scanned(cfg.workers, 0);
    std::vector<std::uint64_t> skipped(cfg.workers, 0);
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&](unsigned w) {
      try {
        for (std::uint64_t h = next++; h <= h1; h = next++) {
          for_each_of_height(h, [&](std::int64_t a, std::int64_t b) {
            try {
              local[w].add(evaluate_entry(a, b));
              ++scanned[w];
            } catch (const MagnitudeError&) {
              ++skipped[w];
            }
          });
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        failure = std::current_exception();
        next = h1 + 1;
      }
    };
    if (cfg.workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < cfg.workers; ++w) {
        pool.emplace_back(work, w);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    if (failure) {
      std::rethrow_exception(failure);
    }
    for (unsigned w = 0; w < cfg.workers; ++w) {
      top.merge(std::move(local[w]));
      result.scanned += scanned[w];
      result.skipped += skipped[w];
    }
    result.last_height = h1;
    if (cfg.checkpoint) {
      TopK snapshot = top;
      write_checkpoint(cfg, result, snapshot.finish());
    }
    h0 = h1 + 1;
  }
  result.top = top.finish();
  return result;
}

unsigned default_workers() {
  const char* env = std::getenv("F1CURVE_THREADS");
  if (env == nullptr || *env == '\0') {
    return 1;
  }
  char* end = nullptr;
  const unsigned long n = std::strtoul(env, &end, 10);
  if (*end != '\0' || n < 1 || n > 1024) {
    throw ArgumentError("F1CURVE_THREADS must be an integer between 1 and 1024");
  }
  return static_cast<unsigned>(n);
}

}  // namespace f1curve::cli
