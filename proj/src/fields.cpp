#include "wsift/fields.hpp"

#include <bit>
#include <numeric>

namespace wsift {

std::size_t BitField::count() const {
  return std::accumulate(words_.begin(), words_.end(), std::size_t{0},
                         [](std::size_t acc, std::uint64_t w) { return acc + std::popcount(w); });
}

}  // namespace wsift
