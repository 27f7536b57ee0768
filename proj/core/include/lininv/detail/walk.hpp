#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "lininv/config.hpp"

namespace lininv::detail {

/// Splits the mask range [0, 2^bits) into aligned blocks of 2^low masks and
/// folds them. `block(first, low)` returns the accumulator for masks
/// [first, first + 2^low); `merge(into, from)` combines them. Blocks are
/// merged in ascending order, so the result does not depend on the number
/// of threads as long as `merge` is associative.
template <class Acc, class Block, class Merge>
Acc fold_blocks(unsigned bits, Block&& block, Merge&& merge) {
  const std::size_t threads = std::max<std::size_t>(1, config().threads);
  unsigned split = 0;
  if (threads > 1 && bits >= 12) {
    split = std::min<unsigned>(bits - 8, std::bit_width(threads - 1) + 3);
  }
  const unsigned low = bits - split;
  const std::size_t blocks = std::size_t{1} << split;

  if (blocks == 1) return block(std::uint64_t{0}, low);

  std::vector<std::optional<Acc>> results(blocks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks || failed.load()) return;
      try {
        results[b].emplace(block(static_cast<std::uint64_t>(b) << low, low));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::jthread> pool;
  const std::size_t spawn = std::min(threads, blocks);
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  Acc total = std::move(*results[0]);
  for (std::size_t b = 1; b < blocks; ++b) merge(total, std::move(*results[b]));
  return total;
}

/// Visits masks first | g for every g < 2^low in Gray-code order, passing
/// the running signed sum sum_k (-1)^{bit k} w[k] of the full mask.
/// `first` must have its low bits clear.
template <class Visit>
void gray_walk(std::span<const std::int64_t> w, std::uint64_t first, unsigned low, Visit&& visit) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    sum += ((first >> k) & 1U) != 0 ? -w[k] : w[k];
  }
  std::uint64_t mask = first;
  visit(mask, sum);
  const std::uint64_t steps = std::uint64_t{1} << low;
  for (std::uint64_t t = 1; t < steps; ++t) {
    const unsigned b = static_cast<unsigned>(std::countr_zero(t));
    mask ^= std::uint64_t{1} << b;
    sum += ((mask >> b) & 1U) != 0 ? -2 * w[b] : 2 * w[b];
    visit(mask, sum);
  }
}

/// Builds a full-length mask from a mask on the pair-deleted coordinates by
/// inserting the signs at 0-based positions p < q.
inline std::uint64_t insert_pair_bits(std::uint64_t reduced, unsigned p, unsigned q, bool neg_p,
                                      bool neg_q) {
  const std::uint64_t low = reduced & ((std::uint64_t{1} << p) - 1);
  const std::uint64_t mid = (reduced >> p) & ((std::uint64_t{1} << (q - p - 1)) - 1);
  const std::uint64_t high = reduced >> (q - 1);
  std::uint64_t full = low | (mid << (p + 1)) | (high << (q + 1));
  if (neg_p) full |= std::uint64_t{1} << p;
  if (neg_q) full |= std::uint64_t{1} << q;
  return full;
}

/// Inverse of insert_pair_bits: drops positions p < q.
inline std::uint64_t remove_pair_bits(std::uint64_t full, unsigned p, unsigned q) {
  const std::uint64_t low = full & ((std::uint64_t{1} << p) - 1);
  const std::uint64_t mid = (full >> (p + 1)) & ((std::uint64_t{1} << (q - p - 1)) - 1);
  const std::uint64_t high = full >> (q + 1);
  return low | (mid << p) | (high << (q - 1));
}

}  // namespace lininv::detail
