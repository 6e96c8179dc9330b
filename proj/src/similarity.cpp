#include "wsd/similarity.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace wsd {

namespace {

constexpr double kJcnDenomEpsilon = 1e-12;

// Symmetric cache key from two packed ids (each fits in 29 bits for
// 8-digit offsets).
uint64_t pair_key(SynsetId a, SynsetId b) {
  uint64_t x = pack(a), y = pack(b);
  if (x > y) std::swap(x, y);
  return (x << 32) | y;
}

}  // namespace

std::optional<Measure> measure_from_string(std::string_view name) {
  if (name == "path") return Measure::path;
  if (name == "lch") return Measure::lch;
  if (name == "wup") return Measure::wup;
  if (name == "jcn") return Measure::jcn;
  return std::nullopt;
}

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::path: return "path";
    case Measure::lch: return "lch";
    case Measure::wup: return "wup";
    case Measure::jcn: return "jcn";
  }
  return "?";
}

SimilarityScorer::SimilarityScorer(const WordNetGraph& graph, const IcTable* ic,
                                   SimilarityConfig cfg)
    : graph_(graph), ic_(ic), cfg_(cfg) {
  if (cfg_.measure == Measure::jcn && !ic_)
    throw std::invalid_argument("jcn needs an information-content table");
  if (cfg_.jcn_zero_denominator_cap <= 0.0)
    throw std::invalid_argument("jcn cap must be positive");
}

bool SimilarityScorer::taxonomic_pair(SynsetId a, SynsetId b) const {
  return a.pos == b.pos && (a.pos == Pos::noun || a.pos == Pos::verb);
}

double SimilarityScorer::from_path_len(std::optional<int> d) const {
  return d ? 1.0 / (1.0 + double(*d)) : 0.0;
}

double SimilarityScorer::lch(SynsetId a, SynsetId b) const {
  int d_max = graph_.max_depth(a.pos);
  if (d_max < 1) return 0.0;
  auto d = graph_.shortest_path_len(a, b, EdgeFilter::taxonomy);
  if (!d) return 0.0;
  // Path length counted in nodes, clamped so the log stays non-negative
  // (the deepest verb pair joined only through the virtual root can exceed
  // 2 * depth by one).
  double len = std::min(double(*d + 1), 2.0 * d_max);
  return -std::log(len / (2.0 * d_max));
}

double SimilarityScorer::wup(SynsetId a, SynsetId b) const {
  auto l = graph_.lcs(a, b);
  if (!l) return 0.0;
  double da = graph_.depth(a), db = graph_.depth(b);
  if (da + db <= 0.0) return 0.0;
  return 2.0 * graph_.depth(*l) / (da + db);
}

double SimilarityScorer::jcn(SynsetId a, SynsetId b) const {
  auto l = graph_.lcs(a, b);
  if (!l) return 0.0;
  double denom = ic_->ic(a) + ic_->ic(b) - 2.0 * ic_->ic(*l);
  if (denom < kJcnDenomEpsilon) return cfg_.jcn_zero_denominator_cap;
  return 1.0 / denom;
}

double SimilarityScorer::taxonomic(SynsetId a, SynsetId b) const {
  switch (cfg_.measure) {
    case Measure::path:
      return from_path_len(graph_.shortest_path_len(a, b, EdgeFilter::taxonomy));
    case Measure::lch: return lch(a, b);
    case Measure::wup: return wup(a, b);
    case Measure::jcn: return jcn(a, b);
  }
  return 0.0;
}

std::optional<double> SimilarityScorer::cached(uint64_t key) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

double SimilarityScorer::remember(uint64_t key, double value) const {
  std::unique_lock lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

double SimilarityScorer::similarity(SynsetId a, SynsetId b) const {
  double out;
  similarity_row(a, {&b, 1}, {&out, 1});
  return out;
}

void SimilarityScorer::similarity_row(SynsetId a, std::span<const SynsetId> bs,
                                      std::span<double> out) const {
  // Cross-POS targets needing a graph search are batched into one walk.
  std::vector<SynsetId> pending;
  std::vector<size_t> pending_at;
  for (size_t i = 0; i < bs.size(); ++i) {
    SynsetId b = bs[i];
    uint64_t key = pair_key(a, b);
    if (auto hit = cached(key)) {
      out[i] = *hit;
      continue;
    }
    if (taxonomic_pair(a, b)) {
      out[i] = remember(key, taxonomic(a, b));
    } else if (cfg_.cross_pos_strategy == CrossPosStrategy::zero) {
      out[i] = remember(key, 0.0);
    } else {
      pending.push_back(b);
      pending_at.push_back(i);
    }
  }
  if (pending.empty()) return;
  std::vector<std::optional<int>> dists(pending.size());
  graph_.shortest_path_to_many(a, pending, EdgeFilter::all, dists);
  for (size_t k = 0; k < pending.size(); ++k) {
    double v = from_path_len(dists[k]);
    out[pending_at[k]] = remember(pair_key(a, pending[k]), v);
  }
}

}  // namespace wsd
