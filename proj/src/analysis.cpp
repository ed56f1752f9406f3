#include "scmul/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace scmul {

std::string SweepConfig::describe() const {
  std::ostringstream os;
  os << "design=" << to_string(kind) << ";B=" << width;
  if (kind == MultiplierKind::Gaines) os << ";" << gaines.describe();
  if (kind == MultiplierKind::Jenson)
    os << ";truncate=" << (jenson_truncate ? std::to_string(*jenson_truncate) : "none");
  return os.str();
}

MultiplyResult run_multiplier(const SweepConfig& cfg, const BinaryOperand& x,
                              const BinaryOperand& y) {
  switch (cfg.kind) {
    case MultiplierKind::Proposed: return multiply_proposed(x, y);
    case MultiplierKind::Gaines: return multiply_gaines(x, y, cfg.gaines);
    case MultiplierKind::Jenson: return multiply_jenson(x, y, cfg.jenson_truncate);
    case MultiplierKind::Umul: return multiply_umul(x, y);
  }
  throw std::invalid_argument("unknown multiplier kind");
}

namespace {

PairRecord make_record(const SweepConfig& cfg, std::uint32_t x, std::uint32_t y) {
  const BinaryOperand ox(x, cfg.width), oy(y, cfg.width);
  MultiplyResult r = run_multiplier(cfg, ox, oy);
  const auto n = static_cast<std::int64_t>(std::uint64_t{1} << cfg.width);
  const std::int64_t d = x >= y ? x - y : y - x;
  return {x, y, r.observed, r.target, r.abs_error, Rational{d, n}};
}

void check_cap(const SweepConfig& cfg) {
  const std::uint64_t pairs = std::uint64_t{1} << (2 * cfg.width);
  if (pairs > cfg.pair_cap)
    throw std::invalid_argument(
        "exhaustive sweep: 2^(2B) = " + std::to_string(pairs) +
        " pairs exceeds the cap of " + std::to_string(cfg.pair_cap) +
        "; use sampled mode");
}

}  // namespace

std::vector<PairRecord> exhaustive_sweep_serial(const SweepConfig& cfg) {
  check_cap(cfg);
  const std::uint32_t n = std::uint32_t{1} << cfg.width;
  std::vector<PairRecord> records;
  records.reserve(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      records.push_back(make_record(cfg, x, y));
  return records;
}

std::vector<PairRecord> exhaustive_sweep(const SweepConfig& cfg, int threads) {
  check_cap(cfg);
  const std::uint32_t n = std::uint32_t{1} << cfg.width;
  const std::size_t total = std::size_t{n} * n;
  std::vector<PairRecord> records(total);
#ifdef _OPENMP
  // Each pair writes its own slot; record order is by (x, y) no matter the
  // schedule or thread count.
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
    const auto x = static_cast<std::uint32_t>(i / n);
    const auto y = static_cast<std::uint32_t>(i % n);
    records[static_cast<std::size_t>(i)] = make_record(cfg, x, y);
  }
#else
  (void)threads;
  for (std::size_t i = 0; i < total; ++i)
    records[i] = make_record(cfg, static_cast<std::uint32_t>(i / n),
                             static_cast<std::uint32_t>(i % n));
#endif
  return records;
}

std::vector<PairRecord> sampled_sweep(const SweepConfig& cfg, std::size_t count,
                                      std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("sampled_sweep: count must be >= 1");
  const std::uint32_t max_v = (std::uint32_t{1} << cfg.width) - 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, max_v);
  std::vector<PairRecord> records;
  records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t x = dist(rng);
    const std::uint32_t y = dist(rng);
    records.push_back(make_record(cfg, x, y));
  }
  return records;
}

ErrorStats mae(std::span<const PairRecord> records, std::string config) {
  if (records.empty()) throw std::invalid_argument("mae: no records");
  Rational sum{0, 1};
  Rational max_err{0, 1};
  for (const PairRecord& r : records) {
    sum = sum + r.abs_error;
    if (max_err < r.abs_error) max_err = r.abs_error;
  }
  return {sum.divided_by(static_cast<std::int64_t>(records.size())), max_err,
          records.size(), std::move(config)};
}

Histogram diff_histogram(std::span<const PairRecord> records, std::size_t k) {
  if (k == 0) throw std::invalid_argument("diff_histogram: bucket count must be >= 1");
  const auto kk = static_cast<std::int64_t>(k);
  Histogram hist;
  hist.buckets.resize(k);
  std::vector<std::vector<Rational>> errs(k);
  for (std::size_t b = 0; b < k; ++b) {
    hist.buckets[b].lo = Rational{static_cast<std::int64_t>(b), kk};
    hist.buckets[b].hi = Rational{static_cast<std::int64_t>(b) + 1, kk};
  }
  for (const PairRecord& r : records) {
    // floor(norm_diff * k); norm_diff < 1 keeps this in range.
    const auto idx = static_cast<std::size_t>(
        static_cast<__int128>(r.norm_diff.num) * kk / r.norm_diff.den);
    if (idx >= k)
      throw std::invalid_argument("diff_histogram: norm_diff outside [0, 1)");
    errs[idx].push_back(r.abs_error);
  }
  for (std::size_t b = 0; b < k; ++b) {
    auto& bucket = hist.buckets[b];
    auto& e = errs[b];
    bucket.count = e.size();
    if (e.empty()) continue;
    Rational sum{0, 1};
    Rational mx{0, 1};
    for (const Rational& r : e) {
      sum = sum + r;
      if (mx < r) mx = r;
    }
    bucket.mean_abs_error = sum.divided_by(static_cast<std::int64_t>(e.size()));
    bucket.max_abs_error = mx;
    std::sort(e.begin(), e.end());
    const std::size_t rank = (e.size() * 95 + 99) / 100;  // nearest-rank, 1-based
    bucket.p95_abs_error = e[rank == 0 ? 0 : rank - 1];
  }
  return hist;
}

std::optional<double> diff_dependence(std::span<const PairRecord> records) {
  if (records.size() < 2) return std::nullopt;
  double sx = 0, sy = 0;
  for (const PairRecord& r : records) {
    sx += r.norm_diff.to_double();
    sy += r.abs_error.to_double();
  }
  const double n = static_cast<double>(records.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, syy = 0, sxy = 0;
  for (const PairRecord& r : records) {
    const double dx = r.norm_diff.to_double() - mx;
    const double dy = r.abs_error.to_double() - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

void write_pairs_csv(std::ostream& os, const std::string& design, unsigned width,
                     std::span<const PairRecord> records, const std::string& digest) {
  os << "# " << digest << "\n";
  os << "design,B,x,y,observed_num,observed_den,target_num,target_den,"
        "abs_err_num,abs_err_den,norm_diff\n";
  for (const PairRecord& r : records) {
    os << design << ',' << width << ',' << r.x << ',' << r.y << ','
       << r.observed.num << ',' << r.observed.den << ',' << r.target.num << ','
       << r.target.den << ',' << r.abs_error.num << ',' << r.abs_error.den << ','
       << r.norm_diff.to_decimal() << '\n';
  }
}

void write_mae_csv(std::ostream& os, const std::string& design, unsigned width,
                   const ErrorStats& stats, const std::string& digest, bool header) {
  if (header) {
    os << "# " << digest << "\n";
    os << "design,B,mae_decimal,mae_num,mae_den,max_err_decimal,config_digest\n";
  }
  os << design << ',' << width << ',' << stats.mae.to_decimal() << ','
     << stats.mae.num << ',' << stats.mae.den << ','
     << stats.max_error.to_decimal() << ',' << stats.config << '\n';
}

void write_hist_csv(std::ostream& os, const std::string& design, unsigned width,
                    const Histogram& hist, const std::string& digest, bool header) {
  if (header) {
    os << "# " << digest << "\n";
    os << "design,B,bucket_lo,bucket_hi,count,mean_abs_err,max_abs_err,p95_abs_err\n";
  }
  for (const HistogramBucket& b : hist.buckets) {
    os << design << ',' << width << ',' << b.lo.to_decimal() << ','
       << b.hi.to_decimal() << ',' << b.count << ',' << b.mean_abs_error.to_decimal()
       << ',' << b.max_abs_error.to_decimal() << ',' << b.p95_abs_error.to_decimal()
       << '\n';
  }
}

}  // namespace scmul
