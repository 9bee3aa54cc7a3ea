#include "setramsey/colouring.hpp"

#include <stdexcept>

namespace setramsey {

SetColouring::SetColouring(std::uint32_t n, std::uint32_t r)
    : n_(n), r_(r), words_((r + 63) / 64), masks_(pair_count(n) * words_, 0) {
  if (r == 0) throw std::invalid_argument("SetColouring: r must be positive");
}

Edge SetColouring::edge_at(std::uint64_t index) const {
  Vertex u = 0;
  std::uint64_t row = n_ - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {u, static_cast<Vertex>(u + 1 + index)};
}

void SetColouring::fill_all(std::uint64_t e) {
  auto m = mask(e);
  for (std::uint32_t w = 0; w < words_; ++w) m[w] = ~std::uint64_t{0};
  if (r_ % 64) m[words_ - 1] = (std::uint64_t{1} << (r_ % 64)) - 1;
}

std::uint32_t SetColouring::popcount(std::uint64_t e) const {
  std::uint32_t total = 0;
  for (auto w : mask(e)) total += static_cast<std::uint32_t>(std::popcount(w));
  return total;
}

std::vector<std::vector<std::uint64_t>> SetColouring::colour_class_rows(Colour c) const {
  const std::size_t row_words = (n_ + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n_, std::vector<std::uint64_t>(row_words, 0));
  std::uint64_t e = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v, ++e) {
      if (has(e, c)) {
        rows[u][v / 64] |= std::uint64_t{1} << (v % 64);
        rows[v][u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }
  return rows;
}

bool SetColouring::well_formed() const {
  if (r_ % 64 == 0) return true;
  const std::uint64_t high = ~((std::uint64_t{1} << (r_ % 64)) - 1);
  for (std::uint64_t e = 0; e < edge_count(); ++e)
    if (mask(e)[words_ - 1] & high) return false;
  return true;
}

}  // namespace setramsey
