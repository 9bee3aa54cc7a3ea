#include "setramsey/oracle.hpp"

#include <array>
#include <bit>
#include <sstream>

namespace setramsey {

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > (static_cast<unsigned __int128>(1) << 100)) return UINT64_MAX;
  }
  return acc > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(acc);
}

}  // namespace

std::optional<CliqueWitness> brute_force_mono_clique(const SetColouring& colouring, std::uint32_t k) {
  const auto n = colouring.n();
  const auto subsets = binomial_saturating(n, k);
  if (subsets != 0 && (subsets == UINT64_MAX || subsets > brute_force_budget / colouring.r()))
    throw GuardError("brute_force_mono_clique: C(n,k) * r exceeds " + std::to_string(brute_force_budget));
  if (k > n) return std::nullopt;

  for (Colour c = 0; c < colouring.r(); ++c) {
    std::vector<Vertex> subset(k);
    for (std::uint32_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      bool mono = true;
      for (std::uint32_t a = 0; a < k && mono; ++a)
        for (std::uint32_t b = a + 1; b < k && mono; ++b) mono = colouring.has(subset[a], subset[b], c);
      if (mono) return CliqueWitness{c, subset};
      // next k-subset in lexicographic order
      std::int64_t i = static_cast<std::int64_t>(k) - 1;
      while (i >= 0 && subset[i] == n - k + static_cast<std::uint32_t>(i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (auto j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(std::uint32_t r, std::uint32_t s, std::uint32_t k, std::uint32_t n, std::uint64_t max_nodes)
      : r_(r), k_(k), n_(n), max_nodes_(max_nodes), adj_(r, std::array<std::uint64_t, 64>{}) {
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask)
      if (static_cast<std::uint32_t>(std::popcount(mask)) == s) options_.push_back(mask);
    for (std::uint32_t v = 1; v < n; ++v)
      for (std::uint32_t u = 0; u < v; ++u) edges_.push_back({u, v});
    chosen_.assign(edges_.size(), 0);
  }

  bool run() { return edges_.empty() || place(0); }
  std::uint64_t nodes() const { return nodes_; }

  SetColouring witness() const {
    SetColouring out(n_, r_);
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (Colour c = 0; c < r_; ++c)
        if ((chosen_[e] >> c) & 1u) out.set(edges_[e].u, edges_[e].v, c);
    return out;
  }

 private:
  // Does `candidates` contain `need` pairwise adjacent vertices in colour c?
  bool has_clique(Colour c, std::uint64_t candidates, std::uint32_t need) const {
    if (need == 0) return true;
    if (static_cast<std::uint32_t>(std::popcount(candidates)) < need) return false;
    while (candidates) {
      const auto v = static_cast<std::uint32_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      if (has_clique(c, candidates & adj_[c][v], need - 1)) return true;
    }
    return false;
  }

  bool closes_clique(Colour c, Vertex u, Vertex v) const {
    return has_clique(c, adj_[c][u] & adj_[c][v], k_ - 2);
  }

  bool place(std::size_t e) {
    if (++nodes_ > max_nodes_)
      throw GuardError("exact_ramsey: node budget exhausted at n=" + std::to_string(n_));
    const auto [u, v] = edges_[e];
    const std::size_t option_count = e == 0 ? 1 : options_.size();
    for (std::size_t o = 0; o < option_count; ++o) {
      const auto mask = options_[o];
      bool ok = true;
      for (Colour c = 0; c < r_ && ok; ++c)
        if ((mask >> c) & 1u) ok = k_ > 2 && !closes_clique(c, u, v);
      if (!ok) continue;
      for (Colour c = 0; c < r_; ++c)
        if ((mask >> c) & 1u) {
          adj_[c][u] |= std::uint64_t{1} << v;
          adj_[c][v] |= std::uint64_t{1} << u;
        }
      chosen_[e] = mask;
      if (e + 1 == edges_.size() || place(e + 1)) return true;
      for (Colour c = 0; c < r_; ++c)
        if ((mask >> c) & 1u) {
          adj_[c][u] &= ~(std::uint64_t{1} << v);
          adj_[c][v] &= ~(std::uint64_t{1} << u);
        }
    }
    return false;
  }

  std::uint32_t r_;
  std::uint32_t k_;
  std::uint32_t n_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> options_;  // s-subsets of [r], ascending
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::array<std::uint64_t, 64>> adj_;
};

}  // namespace

std::string ExactResult::proof_log() const {
  std::ostringstream out;
  out << "# exact R_{" << r << "," << s << "}(" << k << ")\n";
  for (const auto& level : levels)
    out << "n=" << level.n << " nodes=" << level.nodes << " result=" << (level.colourable ? "colourable" : "refuted")
        << "\n";
  out << "value=" << value << " exhaustive=" << (exhaustive_upper_proof ? "yes" : "no") << "\n";
  return out.str();
}

ExactResult exact_ramsey(std::uint32_t r, std::uint32_t s, std::uint32_t k, std::uint32_t n_cap,
                         const OracleLimits& limits) {
  if (r < 1 || s < 1 || s > r) throw std::domain_error("exact_ramsey: need 1 <= s <= r");
  if (k < 2) throw std::domain_error("exact_ramsey: k must be at least 2");
  if (r > OracleLimits::max_r) throw GuardError("exact_ramsey: r exceeds " + std::to_string(OracleLimits::max_r));
  if (n_cap > OracleLimits::max_n)
    throw GuardError("exact_ramsey: n_cap exceeds " + std::to_string(OracleLimits::max_n));
  if (n_cap < 2) throw std::domain_error("exact_ramsey: n_cap must be at least 2");

  ExactResult result;
  result.r = r;
  result.s = s;
  result.k = k;
  SetColouring best(1, r);
  for (std::uint32_t n = 2; n <= n_cap; ++n) {
    ExhaustiveSearch search(r, s, k, n, limits.max_nodes_per_level);
    const bool colourable = search.run();
    result.levels.push_back({n, search.nodes(), colourable});
    if (!colourable) {
      result.value = n;
      result.witness_colouring = std::move(best);
      result.exhaustive_upper_proof = true;
      return result;
    }
    best = search.witness();
  }
  throw CapExceeded("exact_ramsey: value exceeds n_cap=" + std::to_string(n_cap), std::move(best));
}

}  // namespace setramsey
