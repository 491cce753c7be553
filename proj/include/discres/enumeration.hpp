#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "discres/rational_util.hpp"

namespace discres {

enum class CountKind { discriminant, resultant };

// One slice of a partitioned run. Chunks partition the plane spanned by the
// leading and next-to-leading coefficients; merging the per-chunk records
// reproduces the single-chunk result exactly.
struct Chunk {
  unsigned index = 0;
  unsigned count = 1;
};

struct CountTask {
  CountKind kind = CountKind::discriminant;
  int n = 2;
  long q = 1;
  Rational threshold = 1;  // B: counts 1 <= |D| <= B, resp. 0 < |R| <= B
  Chunk chunk;
  // Optional resource cap on enumerated items for this chunk.
  std::optional<unsigned long long> item_cap;
};

struct CountRecord {
  CountKind kind = CountKind::discriminant;
  int n = 0;
  long q = 0;
  Rational threshold = 0;
  Chunk chunk;
  BigInt count = 0;
  BigInt total_enumerated = 0;
  double elapsed_s = 0.0;
};

// Raised when a task exceeds its item cap; carries the counts accumulated so
// far plus a watermark of fully processed (leading, next) cells.
class PartialResultError : public std::runtime_error {
 public:
  PartialResultError(std::string what, CountRecord partial, unsigned long long cells_done)
      : std::runtime_error(std::move(what)),
        partial_record(std::move(partial)),
        cells_done(cells_done) {}
  CountRecord partial_record;
  unsigned long long cells_done;
};

// |P_n(Q)| = 2Q * (2Q+1)^n.
BigInt pn_size(int n, long q);

// Streams every coefficient vector (a_0, ..., a_n) with |a_i| <= Q and
// a_n != 0 that belongs to the given chunk, exactly once across all chunks,
// in lexicographic order on (a_n, a_{n-1}, ..., a_0). The vector passed to
// the callback is reused between calls.
void enumerate_pn(int n, long q, Chunk chunk,
                  const std::function<void(const std::vector<long>&)>& emit);

// Count of P in the chunk with 1 <= |D(P)| <= floor(threshold). Closed-form
// discriminants serve n = 2 and n = 3 (validated against the exact Sylvester
// pipeline before first use); higher degrees take the generic exact path.
CountRecord count_discriminants(const CountTask& task);

// Count of ordered pairs (P1, P2), P1 from the chunk and P2 from the whole
// of P_n(Q), with 0 < |R(P1, P2)| <= floor(threshold).
CountRecord count_resultants(const CountTask& task);

// Sums chunk records into the full-run record. All records must agree on
// (kind, n, Q, threshold) and must form a complete, duplicate-free partition.
CountRecord merge(const std::vector<CountRecord>& records);

// Runs `task` split into `workers` chunks on that many threads and merges.
// The result is identical to a single-chunk run for any worker count.
CountRecord count_parallel(CountTask task, unsigned workers);

// Campaign threshold gamma * Q^(2n-2-2v) (discriminants), rho * Q^(2n-2w)
// (resultants): exact when the power is rational, otherwise rounded down.
Rational campaign_threshold(CountKind kind, int n, long q, const Rational& v_or_w,
                            const Rational& scale);

}  // namespace discres
