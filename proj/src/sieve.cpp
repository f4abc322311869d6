// Segmented factor sieve and its summatory/li companions.

#include "acor/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace acor {
namespace {

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

// Per-segment factorization state: cofactor after stripping the base primes,
// Omega with multiplicity, distinct prime count, squarefree flag.
struct SegScan {
  Window seg;
  std::vector<u64> rem;
  std::vector<u8> omega;
  std::vector<u8> distinct;
  std::vector<u8> sqfree;
};

void factor_segment(const Window& seg, const std::vector<u64>& base,
                    SegScan& s) {
  const u64 lo = seg.lo, hi = seg.hi;
  const std::size_t width = static_cast<std::size_t>(seg.width());
  s.seg = seg;
  s.rem.resize(width);
  s.omega.assign(width, 0);
  s.distinct.assign(width, 0);
  s.sqfree.assign(width, 1);
  for (std::size_t i = 0; i < width; ++i) s.rem[i] = lo + i;

  const u64 root = isqrt_u64(hi);
  for (u64 p : base) {
    if (p > root) break;
    u64 m = ((lo + p - 1) / p) * p;
    if (m < lo || m > hi) continue;
    for (;;) {
      std::size_t i = static_cast<std::size_t>(m - lo);
      u64 v = s.rem[i];
      int e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      s.rem[i] = v;
      s.omega[i] = static_cast<u8>(s.omega[i] + e);
      s.distinct[i] = static_cast<u8>(s.distinct[i] + 1);
      if (e > 1) s.sqfree[i] = 0;
      if (m > hi - p) break;
      m += p;
    }
  }
  // Whatever survives the base pass is a single prime > sqrt(hi): two such
  // factors would already exceed hi.
  for (std::size_t i = 0; i < width; ++i) {
    if (s.rem[i] > 1) {
      s.omega[i] = static_cast<u8>(s.omega[i] + 1);
      s.distinct[i] = static_cast<u8>(s.distinct[i] + 1);
    }
  }
}

// Write the prime powers p^k (p <= sqrt(seg.hi), k >= kmin) that land in the
// segment, via `emit(index_in_segment, p, k)`.
template <class EmitFn>
void enumerate_small_prime_powers(const Window& seg,
                                  const std::vector<u64>& base, u32 kmin,
                                  EmitFn&& emit) {
  const u64 root = isqrt_u64(seg.hi);
  for (u64 p : base) {
    if (p > root) break;
    u64 pw = p;
    u32 k = 1;
    bool overflowed = false;
    while (pw < seg.lo) {
      if (pw > seg.hi / p) {
        overflowed = true;
        break;
      }
      pw *= p;
      ++k;
    }
    if (overflowed) continue;
    while (pw <= seg.hi) {
      if (k >= kmin) emit(static_cast<std::size_t>(pw - seg.lo), p, k);
      if (pw > seg.hi / p) break;
      pw *= p;
      ++k;
    }
  }
}

void fill_slice(Fn kind, const SegScan& s, const std::vector<u64>& base,
                FunctionTable& out) {
  const std::size_t off = static_cast<std::size_t>(s.seg.lo - out.window.lo);
  const std::size_t width = s.rem.size();
  switch (kind) {
    case Fn::MU:
      for (std::size_t i = 0; i < width; ++i)
        out.small[off + i] =
            s.sqfree[i] ? ((s.omega[i] & 1) ? -1 : 1) : std::int8_t{0};
      break;
    case Fn::LAMBDA:
      for (std::size_t i = 0; i < width; ++i)
        out.small[off + i] = (s.omega[i] & 1) ? -1 : 1;
      break;
    case Fn::BIG_OMEGA:
      for (std::size_t i = 0; i < width; ++i) out.counts[off + i] = s.omega[i];
      break;
    case Fn::IS_PRIME:
      for (std::size_t i = 0; i < width; ++i)
        out.counts[off + i] = (s.omega[i] == 1) ? 1 : 0;
      break;
    case Fn::MANGOLDT:
      // Small-prime powers are enumerated directly; any untouched cofactor
      // equal to n itself is a prime (k = 1). Everything else is 0.
      for (std::size_t i = 0; i < width; ++i) out.powers[off + i] = {0, 0};
      enumerate_small_prime_powers(
          s.seg, base, 1,
          [&](std::size_t i, u64 p, u32 k) { out.powers[off + i] = {p, k}; });
      for (std::size_t i = 0; i < width; ++i)
        if (s.rem[i] > 1 && s.rem[i] == s.seg.lo + i)
          out.powers[off + i] = {s.seg.lo + i, 1};
      break;
  }
}

Exec no_cache(const Exec& exec) {
  Exec e = exec;
  e.cache_dir.reset();
  return e;
}

std::filesystem::path cache_path(const std::string& dir, Fn kind, Window w) {
  return std::filesystem::path(dir) /
         ("acor-" + std::to_string(static_cast<int>(kind)) + "-" +
          std::to_string(w.lo) + "-" + std::to_string(w.hi) + ".seg");
}

// Raw little-endian payload for the cache record.
std::vector<char> payload_of(const FunctionTable& t) {
  std::vector<char> buf;
  if (!t.small.empty()) {
    buf.resize(t.small.size());
    std::memcpy(buf.data(), t.small.data(), t.small.size());
  } else if (!t.counts.empty()) {
    buf.resize(t.counts.size());
    std::memcpy(buf.data(), t.counts.data(), t.counts.size());
  } else {
    buf.resize(t.powers.size() * 12);
    char* out = buf.data();
    for (const PrimePower& pp : t.powers) {
      std::memcpy(out, &pp.p, 8);
      std::memcpy(out + 8, &pp.k, 4);
      out += 12;
    }
  }
  return buf;
}

}  // namespace

std::vector<u64> small_primes(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (u64 p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    if (p <= limit / p)
      for (u64 m = p * p; m <= limit; m += p)
        composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

FunctionTable build_table(Fn kind, Window w, const Exec& exec) {
  validate(w);
  if (auto dir = cache_dir_of(exec)) {
    if (auto cached = cache_load(*dir, kind, w)) return std::move(*cached);
  }

  FunctionTable out;
  out.kind = kind;
  out.window = w;
  const std::size_t width = static_cast<std::size_t>(w.width());
  switch (kind) {
    case Fn::MU:
    case Fn::LAMBDA:
      out.small.resize(width);
      break;
    case Fn::BIG_OMEGA:
    case Fn::IS_PRIME:
      out.counts.resize(width);
      break;
    case Fn::MANGOLDT:
      out.powers.resize(width);
      break;
  }

  const std::vector<u64> base = small_primes(isqrt_u64(w.hi));
  const std::vector<Window> segs = segments_of(w, exec.segment);
  parallel_for(segs.size(), exec.threads, [&](std::size_t si) {
    SegScan scan;
    factor_segment(segs[si], base, scan);
    fill_slice(kind, scan, base, out);
  });

  if (auto dir = cache_dir_of(exec)) cache_store(*dir, out);
  return out;
}

std::vector<u64> primes_in(Window w, const Exec& exec) {
  validate(w);
  const std::vector<u64> base = small_primes(isqrt_u64(w.hi));
  const std::vector<Window> segs = segments_of(w, exec.segment);
  std::vector<std::vector<u64>> parts(segs.size());
  parallel_for(segs.size(), exec.threads, [&](std::size_t si) {
    SegScan scan;
    factor_segment(segs[si], base, scan);
    for (std::size_t i = 0; i < scan.rem.size(); ++i)
      if (scan.omega[i] == 1) parts[si].push_back(segs[si].lo + i);
  });
  std::vector<u64> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

SummatoryResult summatory(SumKind kind, u64 x, const Exec& exec) {
  if (x < 1) throw std::invalid_argument("summatory requires x >= 1");
  SummatoryResult res;
  res.kind = kind;
  res.x = x;

  const Window whole{1, x};
  const std::vector<u64> base = small_primes(isqrt_u64(x));
  const std::vector<Window> segs = segments_of(whole, exec.segment);

  if (kind == SumKind::MANGOLDT_PSI) {
    // psi(x) = sum over primes of log p, plus log p for every higher power.
    std::vector<Kahan> parts(segs.size());
    parallel_for(segs.size(), exec.threads, [&](std::size_t si) {
      SegScan scan;
      factor_segment(segs[si], base, scan);
      for (std::size_t i = 0; i < scan.rem.size(); ++i)
        if (scan.omega[i] == 1)
          parts[si].add(std::log(static_cast<double>(segs[si].lo + i)));
      enumerate_small_prime_powers(
          segs[si], base, 2, [&](std::size_t, u64 p, u32) {
            parts[si].add(std::log(static_cast<double>(p)));
          });
    });
    Kahan total;
    for (const Kahan& part : parts) total.merge(part);
    res.is_integer = false;
    res.float_value = total.value();
    return res;
  }

  std::vector<i64> parts(segs.size(), 0);
  parallel_for(segs.size(), exec.threads, [&](std::size_t si) {
    SegScan scan;
    factor_segment(segs[si], base, scan);
    i64 acc = 0;
    for (std::size_t i = 0; i < scan.rem.size(); ++i) {
      switch (kind) {
        case SumKind::MU:
          if (scan.sqfree[i]) acc += (scan.omega[i] & 1) ? -1 : 1;
          break;
        case SumKind::LAMBDA:
          acc += (scan.omega[i] & 1) ? -1 : 1;
          break;
        case SumKind::MU_SQUARED:
          acc += scan.sqfree[i] ? 1 : 0;
          break;
        case SumKind::PRIME_COUNT:
          acc += (scan.omega[i] == 1) ? 1 : 0;
          break;
        case SumKind::MANGOLDT_PSI:
          break;  // handled above
      }
    }
    parts[si] = acc;
  });
  i64 total = 0;
  for (i64 part : parts) total += part;
  res.int_value = total;
  return res;
}

double log_integral(double x) {
  if (!(x >= 2.0)) throw std::domain_error("log_integral requires x >= 2");
  if (x == 2.0) return 0.0;

  // 16-point Gauss-Legendre nodes/weights on [-1, 1].
  static constexpr struct {
    long double x, w;
  } kGl16[16] = {
      {-0.9894009349916499325961542L, 0.02715245941175409485178057L},
      {-0.9445750230732325760779884L, 0.06225352393864789286284384L},
      {-0.8656312023878317438804679L, 0.09515851168249278480992511L},
      {-0.7554044083550030338951012L, 0.1246289712555338720524763L},
      {-0.6178762444026437484466718L, 0.1495959888165767320815017L},
      {-0.4580167776572273863424194L, 0.1691565193950025381893121L},
      {-0.2816035507792589132304605L, 0.1826034150449235888667637L},
      {-0.09501250983763744018531934L, 0.1894506104550684962853967L},
      {0.09501250983763744018531934L, 0.1894506104550684962853967L},
      {0.2816035507792589132304605L, 0.1826034150449235888667637L},
      {0.4580167776572273863424194L, 0.1691565193950025381893121L},
      {0.6178762444026437484466718L, 0.1495959888165767320815017L},
      {0.7554044083550030338951012L, 0.1246289712555338720524763L},
      {0.8656312023878317438804679L, 0.09515851168249278480992511L},
      {0.9445750230732325760779884L, 0.06225352393864789286284384L},
      {0.9894009349916499325961542L, 0.02715245941175409485178057L},
  };

  // Substitute t = e^u: li(x) = integral of e^u / u over [log 2, log x].
  // The integrand is smooth, so modest fixed panels leave quadrature error
  // far below the extended-precision rounding floor.
  const long double a = std::log(2.0L);
  const long double b = std::log(static_cast<long double>(x));
  const int panels = std::max(48, static_cast<int>(std::ceil((b - a) * 8.0L)));
  const long double h = (b - a) / panels;

  long double sum = 0.0L, comp = 0.0L;  // Neumaier in long double
  auto add = [&](long double v) {
    long double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  };
  for (int panel = 0; panel < panels; ++panel) {
    const long double mid = a + h * (panel + 0.5L);
    const long double half = h * 0.5L;
    for (const auto& node : kGl16) {
      const long double u = mid + half * node.x;
      add(node.w * half * std::exp(u) / u);
    }
  }
  return static_cast<double>(sum + comp);
}

// ---- cache -----------------------------------------------------------------

u64 fnv1a64(const void* data, std::size_t bytes) {
  const unsigned char* b = static_cast<const unsigned char*>(data);
  u64 h = 14695981039346656037ULL;
  for (std::size_t i = 0; i < bytes; ++i) {
    h ^= b[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<std::string> cache_dir_of(const Exec& exec) {
  if (exec.cache_dir && !exec.cache_dir->empty()) return exec.cache_dir;
  if (const char* env = std::getenv("ACOR_CACHE_DIR"); env && *env)
    return std::string(env);
  return std::nullopt;
}

std::optional<FunctionTable> cache_load(const std::string& dir, Fn kind,
                                        Window w) {
  std::ifstream in(cache_path(dir, kind, w), std::ios::binary);
  if (!in) return std::nullopt;

  char magic[4];
  u32 version = 0, kind_tag = 0;
  u64 lo = 0, hi = 0, payload_bytes = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&kind_tag), 4);
  in.read(reinterpret_cast<char*>(&lo), 8);
  in.read(reinterpret_cast<char*>(&hi), 8);
  in.read(reinterpret_cast<char*>(&payload_bytes), 8);
  if (!in || std::memcmp(magic, kCacheMagic, 4) != 0 ||
      version != kCacheVersion || kind_tag != static_cast<u32>(kind) ||
      lo != w.lo || hi != w.hi)
    return std::nullopt;

  const u64 width = w.width();
  const u64 expect = (kind == Fn::MANGOLDT) ? width * 12 : width;
  if (payload_bytes != expect) return std::nullopt;

  std::vector<char> payload(static_cast<std::size_t>(payload_bytes));
  u64 checksum = 0;
  in.read(payload.data(), static_cast<std::streamsize>(payload.size()));
  in.read(reinterpret_cast<char*>(&checksum), 8);
  if (!in || checksum != fnv1a64(payload.data(), payload.size()))
    return std::nullopt;

  FunctionTable t;
  t.kind = kind;
  t.window = w;
  switch (kind) {
    case Fn::MU:
    case Fn::LAMBDA: {
      t.small.resize(static_cast<std::size_t>(width));
      std::memcpy(t.small.data(), payload.data(), payload.size());
      for (std::int8_t v : t.small)
        if (v < -1 || v > 1) return std::nullopt;
      break;
    }
    case Fn::BIG_OMEGA:
    case Fn::IS_PRIME: {
      t.counts.resize(static_cast<std::size_t>(width));
      std::memcpy(t.counts.data(), payload.data(), payload.size());
      break;
    }
    case Fn::MANGOLDT: {
      t.powers.resize(static_cast<std::size_t>(width));
      const char* src = payload.data();
      for (PrimePower& pp : t.powers) {
        std::memcpy(&pp.p, src, 8);
        std::memcpy(&pp.k, src + 8, 4);
        src += 12;
      }
      break;
    }
  }
  return t;
}

bool cache_store(const std::string& dir, const FunctionTable& t) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return false;

  const std::vector<char> payload = payload_of(t);
  const u64 checksum = fnv1a64(payload.data(), payload.size());
  const u32 version = kCacheVersion;
  const u32 kind_tag = static_cast<u32>(t.kind);
  const u64 payload_bytes = payload.size();

  std::ofstream out(cache_path(dir, t.kind, t.window),
                    std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(kCacheMagic, 4);
  out.write(reinterpret_cast<const char*>(&version), 4);
  out.write(reinterpret_cast<const char*>(&kind_tag), 4);
  out.write(reinterpret_cast<const char*>(&t.window.lo), 8);
  out.write(reinterpret_cast<const char*>(&t.window.hi), 8);
  out.write(reinterpret_cast<const char*>(&payload_bytes), 8);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  out.write(reinterpret_cast<const char*>(&checksum), 8);
  return static_cast<bool>(out);
}

}  // namespace acor
