#ifndef FFYB_DETAIL_SCAN_HPP
#define FFYB_DETAIL_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <thread>
#include <vector>

namespace ffyb::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, total) into contiguous chunks, runs scan(begin, end) on each in
// its own thread and returns the partial results in index order.
template <class Scan>
auto partitioned_scan(std::uint64_t total, unsigned threads, Scan&& scan)
    -> std::vector<decltype(scan(std::uint64_t{}, std::uint64_t{}))> {
  using Partial = decltype(scan(std::uint64_t{}, std::uint64_t{}));
  threads = resolve_threads(threads);
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<Partial> out;
  if (chunks == 1) {
    out.push_back(scan(0, total));
    return out;
  }
  std::vector<std::future<Partial>> futures;
  const std::uint64_t step = total / chunks, extra = total % chunks;
  std::uint64_t begin = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t end = begin + step + (c < extra ? 1 : 0);
    futures.push_back(std::async(std::launch::async, [&scan, begin, end] { return scan(begin, end); }));
    begin = end;
  }
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// Base-q odometer over row-major matrix entries, entry 0 least significant.
inline void decode_index(std::uint64_t index, std::uint64_t q, std::vector<std::uint32_t>& digits) {
  for (auto& d : digits) {
    d = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
}

inline void increment(std::vector<std::uint32_t>& digits, std::uint64_t q) {
  for (auto& d : digits) {
    if (++d < q) return;
    d = 0;
  }
}

}  // namespace ffyb::detail

#endif  // FFYB_DETAIL_SCAN_HPP
