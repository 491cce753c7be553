#include "discres/enumeration.hpp"

#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "discres/prng.hpp"
#include "discres/resultants.hpp"

namespace discres {

namespace {

// Fast paths stay inside int64: values are bounded by 5Q^2 (quadratic
// discriminant), 54Q^4 (cubic discriminant), 2Q^2 and 8Q^4 (resultants).
constexpr long kMaxQuadDiscQ = 100'000'000;
constexpr long kMaxCubicDiscQ = 10'000;
constexpr long kMaxLinearResQ = 100'000'000;
constexpr long kMaxQuadResQ = 4'000;

long lead_value(long q, long lead_index) {
  // 0..2Q-1  ->  -Q..-1, 1..Q (ascending).
  return lead_index < q ? lead_index - q : lead_index - q + 1;
}

unsigned long long cell_count(long q) {
  return 2ULL * static_cast<unsigned long long>(q) * (2ULL * static_cast<unsigned long long>(q) + 1);
}

struct CellRange {
  unsigned long long begin;
  unsigned long long end;
};

CellRange chunk_cells(long q, Chunk chunk) {
  if (chunk.count == 0 || chunk.index >= chunk.count) {
    throw std::invalid_argument("chunk index must be below chunk count");
  }
  const unsigned long long total = cell_count(q);
  const unsigned long long begin = total * chunk.index / chunk.count;
  const unsigned long long end = total * (chunk.index + 1) / chunk.count;
  return {begin, end};
}

// floor(B), rounding toward -infinity.
BigInt threshold_floor(const Rational& threshold) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), threshold.get_num().get_mpz_t(), threshold.get_den().get_mpz_t());
  return f;
}

long long clamp_bound(const BigInt& bound, long long max_abs) {
  if (!bound.fits_slong_p()) return max_abs;
  const long long b = bound.get_si();
  return b > max_abs ? max_abs : b;
}

// Number of i in [0, m) with 1 <= |base + step*i| <= bound. The unsigned
// window test folds both band edges and the sign into one comparison;
// four independent lanes keep the adds off the critical path.
unsigned long long count_in_band(long long base, long long step, long long m,
                                 long long bound) {
  if (bound <= 0 || m <= 0) return 0;
  const unsigned long long window = 2ULL * static_cast<unsigned long long>(bound);
  unsigned long long c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  long long x0 = base;
  long long x1 = base + step;
  long long x2 = base + 2 * step;
  long long x3 = base + 3 * step;
  const long long s4 = 4 * step;
  long long i = 0;
  for (; i + 4 <= m; i += 4) {
    c0 += static_cast<unsigned long long>(
        (static_cast<unsigned long long>(x0 + bound) <= window) & (x0 != 0));
    c1 += static_cast<unsigned long long>(
        (static_cast<unsigned long long>(x1 + bound) <= window) & (x1 != 0));
    c2 += static_cast<unsigned long long>(
        (static_cast<unsigned long long>(x2 + bound) <= window) & (x2 != 0));
    c3 += static_cast<unsigned long long>(
        (static_cast<unsigned long long>(x3 + bound) <= window) & (x3 != 0));
    x0 += s4;
    x1 += s4;
    x2 += s4;
    x3 += s4;
  }
  unsigned long long c = c0 + c1 + c2 + c3;
  for (; i < m; ++i) {
    const long long x = base + step * i;
    c += static_cast<unsigned long long>(
        (static_cast<unsigned long long>(x + bound) <= window) & (x != 0));
  }
  return c;
}

// Same band count for a quadratic sweep value(i+1) = value(i) + diff(i),
// diff(i+1) = diff(i) + second.
unsigned long long count_in_band_quadratic(long long value, long long diff,
                                           long long second, long long m,
                                           long long bound) {
  if (bound <= 0 || m <= 0) return 0;
  const unsigned long long window = 2ULL * static_cast<unsigned long long>(bound);
  unsigned long long c = 0;
  for (long long i = 0; i < m; ++i) {
    c += static_cast<unsigned long long>(
        (static_cast<unsigned long long>(value + bound) <= window) & (value != 0));
    value += diff;
    diff += second;
  }
  return c;
}

void check_common(const CountTask& task) {
  if (task.q < 1) throw std::invalid_argument("count task: Q >= 1 required");
  if (task.chunk.count == 0 || task.chunk.index >= task.chunk.count) {
    throw std::invalid_argument("count task: chunk index must be below chunk count");
  }
}

class ItemCap {
 public:
  ItemCap(const CountTask& task, CountRecord* record)
      : cap_(task.item_cap), record_(record) {}

  void add_cell(unsigned long long items, unsigned long long count_so_far,
                unsigned long long cells_done) {
    if (!cap_) return;
    done_ += items;
    if (done_ > *cap_) {
      CountRecord partial = *record_;
      partial.count = BigInt(static_cast<unsigned long>(count_so_far));
      partial.total_enumerated = BigInt(static_cast<unsigned long>(done_));
      throw PartialResultError("count task exceeded its item cap", std::move(partial),
                               cells_done);
    }
  }

 private:
  std::optional<unsigned long long> cap_;
  unsigned long long done_ = 0;
  CountRecord* record_;
};

// One-time equivalence checks of the closed forms against the exact
// Sylvester pipeline, run before a fast path is first used.

IntPolynomial poly_from(const std::vector<long>& coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

void validate_quadratic_discriminant() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    SplitMix64 rng(0xd15c2ULL);
    for (int trial = 0; trial < 10000; ++trial) {
      long a = rng.range(-50, 50);
      if (a == 0) a = 1;
      const long b = rng.range(-50, 50);
      const long c = rng.range(-50, 50);
      const BigInt exact = discriminant(poly_from({c, b, a}));
      if (exact != BigInt(static_cast<long>(quadratic_discriminant(a, b, c)))) {
        throw std::logic_error("quadratic discriminant closed form failed validation");
      }
    }
  });
}

void validate_cubic_discriminant() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    SplitMix64 rng(0xd15c3ULL);
    for (int trial = 0; trial < 10000; ++trial) {
      long a = rng.range(-50, 50);
      if (a == 0) a = 1;
      const long b = rng.range(-50, 50);
      const long c = rng.range(-50, 50);
      const long d = rng.range(-50, 50);
      const BigInt exact = discriminant(poly_from({d, c, b, a}));
      if (exact != BigInt(static_cast<long>(cubic_discriminant(a, b, c, d)))) {
        throw std::logic_error("cubic discriminant closed form failed validation");
      }
    }
  });
}

void validate_linear_resultant() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    SplitMix64 rng(0x4e51ULL);
    for (int trial = 0; trial < 10000; ++trial) {
      long a1 = rng.range(-50, 50);
      if (a1 == 0) a1 = 1;
      long b1 = rng.range(-50, 50);
      if (b1 == 0) b1 = -1;
      const long a0 = rng.range(-50, 50);
      const long b0 = rng.range(-50, 50);
      const BigInt exact = resultant(poly_from({a0, a1}), poly_from({b0, b1}));
      if (exact != BigInt(static_cast<long>(linear_resultant(a1, a0, b1, b0)))) {
        throw std::logic_error("linear resultant closed form failed validation");
      }
    }
  });
}

void validate_quadratic_resultant() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    SplitMix64 rng(0x4e52ULL);
    for (int trial = 0; trial < 10000; ++trial) {
      long a = rng.range(-30, 30);
      if (a == 0) a = 1;
      long d = rng.range(-30, 30);
      if (d == 0) d = -1;
      const long b = rng.range(-30, 30);
      const long c = rng.range(-30, 30);
      const long e = rng.range(-30, 30);
      const long f = rng.range(-30, 30);
      const BigInt exact = resultant(poly_from({c, b, a}), poly_from({f, e, d}));
      if (exact != BigInt(static_cast<long>(quadratic_resultant(a, b, c, d, e, f)))) {
        throw std::logic_error("quadratic resultant closed form failed validation");
      }
    }
  });
}

BigInt inner_vectors(int n, long q) {
  // (2Q+1)^(n-1): free coefficients below the (leading, next) cell.
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2 * static_cast<unsigned long>(q) + 1,
                static_cast<unsigned long>(n - 1));
  return r;
}

}  // namespace

BigInt pn_size(int n, long q) {
  if (n < 1 || q < 1) throw std::invalid_argument("pn_size: n >= 1 and Q >= 1 required");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2 * static_cast<unsigned long>(q) + 1,
                static_cast<unsigned long>(n));
  return BigInt(2 * q) * r;
}

void enumerate_pn(int n, long q, Chunk chunk,
                  const std::function<void(const std::vector<long>&)>& emit) {
  if (n < 1 || q < 1) throw std::invalid_argument("enumerate_pn: n >= 1 and Q >= 1 required");
  const CellRange range = chunk_cells(q, chunk);
  const unsigned long long stride = 2ULL * static_cast<unsigned long long>(q) + 1;
  std::vector<long> coeffs(static_cast<size_t>(n) + 1);
  for (unsigned long long cell = range.begin; cell < range.end; ++cell) {
    coeffs[static_cast<size_t>(n)] = lead_value(q, static_cast<long>(cell / stride));
    const long next = static_cast<long>(cell % stride) - q;
    if (n == 1) {
      coeffs[0] = next;
      emit(coeffs);
      continue;
    }
    coeffs[static_cast<size_t>(n - 1)] = next;
    for (int i = 0; i <= n - 2; ++i) coeffs[static_cast<size_t>(i)] = -q;
    while (true) {
      emit(coeffs);
      int pos = 0;
      while (pos <= n - 2 && coeffs[static_cast<size_t>(pos)] == q) {
        coeffs[static_cast<size_t>(pos)] = -q;
        ++pos;
      }
      if (pos > n - 2) break;
      ++coeffs[static_cast<size_t>(pos)];
    }
  }
}

CountRecord count_discriminants(const CountTask& task) {
  if (task.kind != CountKind::discriminant) {
    throw std::invalid_argument("count_discriminants: task kind must be discriminant");
  }
  if (task.n < 2) throw std::invalid_argument("count_discriminants: n >= 2 required");
  check_common(task);

  const auto start = std::chrono::steady_clock::now();
  CountRecord record;
  record.kind = task.kind;
  record.n = task.n;
  record.q = task.q;
  record.threshold = task.threshold;
  record.chunk = task.chunk;

  const long q = task.q;
  const CellRange range = chunk_cells(q, task.chunk);
  const BigInt per_cell = inner_vectors(task.n, q);
  record.total_enumerated = BigInt(static_cast<unsigned long>(range.end - range.begin)) * per_cell;

  const BigInt bound_floor = threshold_floor(task.threshold);
  if (bound_floor >= 1) {
    const unsigned long long stride = 2ULL * static_cast<unsigned long long>(q) + 1;
    const long long m = 2 * q + 1;
    unsigned long long count = 0;
    ItemCap cap(task, &record);
    const unsigned long long per_cell_items = per_cell.get_ui();

    if (task.n == 2 && q <= kMaxQuadDiscQ) {
      validate_quadratic_discriminant();
      const long long bound = clamp_bound(bound_floor, 5LL * q * q);
      for (unsigned long long cell = range.begin; cell < range.end; ++cell) {
        const long long a = lead_value(q, static_cast<long>(cell / stride));
        const long long b = static_cast<long>(cell % stride) - q;
        // D(c) = b^2 - 4ac over c = -Q..Q.
        count += count_in_band(b * b + 4 * a * q, -4 * a, m, bound);
        cap.add_cell(per_cell_items, count, cell - range.begin + 1);
      }
    } else if (task.n == 3 && q <= kMaxCubicDiscQ) {
      validate_cubic_discriminant();
      const long long bound = clamp_bound(bound_floor, 54LL * q * q * q * q);
      for (unsigned long long cell = range.begin; cell < range.end; ++cell) {
        const long long a = lead_value(q, static_cast<long>(cell / stride));
        const long long b = static_cast<long>(cell % stride) - q;
        const long long second = -54 * a * a;
        for (long long c = -q; c <= q; ++c) {
          // D(d) = -27a^2 d^2 + (18abc - 4b^3) d + (b^2c^2 - 4ac^3).
          const long long lin = 18 * a * b * c - 4 * b * b * b;
          const long long value0 = -27 * a * a * q * q - lin * q + b * b * c * c - 4 * a * c * c * c;
          const long long diff0 = -27 * a * a * (1 - 2 * q) + lin;
          count += count_in_band_quadratic(value0, diff0, second, m, bound);
        }
        cap.add_cell(per_cell_items, count, cell - range.begin + 1);
      }
    } else {
      std::vector<BigInt> big(static_cast<size_t>(task.n) + 1);
      unsigned long long cells_done = 0;
      unsigned long long in_cell = 0;
      enumerate_pn(task.n, q, task.chunk, [&](const std::vector<long>& coeffs) {
        for (size_t i = 0; i < coeffs.size(); ++i) big[i] = coeffs[i];
        const BigInt d = discriminant(IntPolynomial(big));
        if (d != 0 && abs(d) <= bound_floor) ++count;
        if (++in_cell == per_cell_items) {
          in_cell = 0;
          ++cells_done;
          cap.add_cell(per_cell_items, count, cells_done);
        }
      });
    }
    record.count = BigInt(static_cast<unsigned long>(count));
  }

  record.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

CountRecord count_resultants(const CountTask& task) {
  if (task.kind != CountKind::resultant) {
    throw std::invalid_argument("count_resultants: task kind must be resultant");
  }
  if (task.n < 1) throw std::invalid_argument("count_resultants: n >= 1 required");
  check_common(task);

  const auto start = std::chrono::steady_clock::now();
  CountRecord record;
  record.kind = task.kind;
  record.n = task.n;
  record.q = task.q;
  record.threshold = task.threshold;
  record.chunk = task.chunk;

  const long q = task.q;
  const CellRange range = chunk_cells(q, task.chunk);
  const BigInt p1_per_cell = inner_vectors(task.n, q);
  const BigInt all = pn_size(task.n, q);
  record.total_enumerated =
      BigInt(static_cast<unsigned long>(range.end - range.begin)) * p1_per_cell * all;

  const BigInt bound_floor = threshold_floor(task.threshold);
  if (bound_floor >= 1) {
    const unsigned long long stride = 2ULL * static_cast<unsigned long long>(q) + 1;
    const long long m = 2 * q + 1;
    unsigned long long count = 0;
    ItemCap cap(task, &record);
    const unsigned long long pairs_per_cell = BigInt(p1_per_cell * all).get_ui();

    if (task.n == 1 && q <= kMaxLinearResQ) {
      validate_linear_resultant();
      const long long bound = clamp_bound(bound_floor, 2LL * q * q);
      for (unsigned long long cell = range.begin; cell < range.end; ++cell) {
        const long long a = lead_value(q, static_cast<long>(cell / stride));
        const long long b = static_cast<long>(cell % stride) - q;
        for (long lead2 = 0; lead2 < 2 * q; ++lead2) {
          const long long c = lead_value(q, lead2);
          // R(d) = a d - b c over d = -Q..Q.
          count += count_in_band(-a * q - b * c, a, m, bound);
        }
        cap.add_cell(pairs_per_cell, count, cell - range.begin + 1);
      }
    } else if (task.n == 2 && q <= kMaxQuadResQ) {
      validate_quadratic_resultant();
      const long long bound = clamp_bound(bound_floor, 8LL * q * q * q * q);
      for (unsigned long long cell = range.begin; cell < range.end; ++cell) {
        const long long a = lead_value(q, static_cast<long>(cell / stride));
        const long long b = static_cast<long>(cell % stride) - q;
        for (long long c = -q; c <= q; ++c) {
          for (long lead2 = 0; lead2 < 2 * q; ++lead2) {
            const long long d = lead_value(q, lead2);
            const long long cd = c * d;
            const long long second = 2 * a * a;
            for (long long e = -q; e <= q; ++e) {
              // R(f) = (af - cd)^2 - (ae - bd)(bf - ce).
              const long long k = a * e - b * d;
              const long long u0 = -a * q - cd;
              long long value = u0 * u0 - k * (-b * q - c * e);
              long long diff = 2 * a * u0 + a * a - k * b;
              count += count_in_band_quadratic(value, diff, second, m, bound);
            }
          }
        }
        cap.add_cell(pairs_per_cell, count, cell - range.begin + 1);
      }
    } else {
      // Generic exact path: refill the second polynomial's rows of a shared
      // Sylvester template for every inner P2.
      std::vector<BigInt> big(static_cast<size_t>(task.n) + 1);
      unsigned long long cells_done = 0;
      unsigned long long p1_in_cell = 0;
      const unsigned long long p1_per_cell_items = p1_per_cell.get_ui();
      enumerate_pn(task.n, q, task.chunk, [&](const std::vector<long>& c1) {
        for (size_t i = 0; i < c1.size(); ++i) big[i] = c1[i];
        const IntPolynomial p1(big);
        BigMatrix base_matrix = sylvester_matrix(p1, p1);
        enumerate_pn(task.n, q, Chunk{0, 1}, [&](const std::vector<long>& c2) {
          BigMatrix mat = base_matrix;
          const int nn = task.n;
          for (int row = 0; row < nn; ++row) {
            for (int k = 0; k <= nn; ++k) {
              mat[static_cast<size_t>(nn + row)][static_cast<size_t>(row + k)] =
                  BigInt(c2[static_cast<size_t>(nn - k)]);
            }
          }
          const BigInt r = determinant(std::move(mat));
          if (r != 0 && abs(r) <= bound_floor) ++count;
        });
        if (++p1_in_cell == p1_per_cell_items) {
          p1_in_cell = 0;
          ++cells_done;
          cap.add_cell(pairs_per_cell, count, cells_done);
        }
      });
    }
    record.count = BigInt(static_cast<unsigned long>(count));
  }

  record.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

CountRecord merge(const std::vector<CountRecord>& records) {
  if (records.empty()) throw std::invalid_argument("merge: no records");
  const CountRecord& first = records.front();
  const unsigned expected = first.chunk.count;
  if (records.size() != expected) {
    throw std::invalid_argument("merge: incomplete chunk set");
  }
  std::vector<bool> seen(expected, false);
  CountRecord out;
  out.kind = first.kind;
  out.n = first.n;
  out.q = first.q;
  out.threshold = first.threshold;
  out.chunk = Chunk{0, 1};
  for (const CountRecord& r : records) {
    if (r.kind != first.kind || r.n != first.n || r.q != first.q ||
        r.threshold != first.threshold || r.chunk.count != expected) {
      throw std::invalid_argument("merge: mismatched task parameters");
    }
    if (r.chunk.index >= expected || seen[r.chunk.index]) {
      throw std::invalid_argument("merge: duplicate chunk index");
    }
    seen[r.chunk.index] = true;
    out.count += r.count;
    out.total_enumerated += r.total_enumerated;
    out.elapsed_s += r.elapsed_s;
  }
  return out;
}

CountRecord count_parallel(CountTask task, unsigned workers) {
  if (task.chunk.index != 0 || task.chunk.count != 1) {
    throw std::invalid_argument("count_parallel: task must cover the full range");
  }
  if (workers == 0) workers = 1;

  std::vector<CountRecord> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        CountTask sub = task;
        sub.chunk = Chunk{w, workers};
        results[w] = (task.kind == CountKind::discriminant) ? count_discriminants(sub)
                                                            : count_resultants(sub);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (unsigned w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
  }
  return merge(results);
}

Rational campaign_threshold(CountKind kind, int n, long q, const Rational& v_or_w,
                            const Rational& scale) {
  const Rational exponent = (kind == CountKind::discriminant)
                                ? Rational(2 * n - 2) - 2 * v_or_w
                                : Rational(2 * n) - 2 * v_or_w;
  if (exponent < 0) {
    throw std::invalid_argument("campaign_threshold: exponent would be negative");
  }
  // Exact rational when the power is rational; otherwise the floor of a
  // directed-down evaluation, so the counted set is never over-approximated.
  if (auto exact = exact_rational_power(BigInt(q), exponent.get_num(), exponent.get_den())) {
    return scale * *exact;
  }
  return Rational(floor_scaled_power(BigInt(q), exponent, scale));
}

}  // namespace discres
