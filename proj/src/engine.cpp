#include "wsd/engine.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace wsd {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::scsmm: return "scsmm";
    case Provenance::sentence_fallback: return "sentence-fallback";
    case Provenance::doc_carry_forward: return "doc-carry-forward";
    case Provenance::heuristic_only: return "heuristic-only";
  }
  return "?";
}

void RunSummary::merge(const RunSummary& o) {
  for (size_t i = 0; i < by_provenance.size(); ++i)
    by_provenance[i] += o.by_provenance[i];
  predicted += o.predicted;
  skipped_unknown_lemma += o.skipped_unknown_lemma;
  skipped_pos_filter += o.skipped_pos_filter;
}

ProductChain scsmm(std::vector<Csm> csms) {
  ProductChain chain;
  chain.csms = std::move(csms);
  chain.products.reserve(chain.csms.size());
  for (size_t k = 0; k < chain.csms.size(); ++k) {
    const Matrix& m = chain.csms[k].values;
    if (k == 0) {
      chain.products.push_back(m);
      continue;
    }
    if (chain.products.back().cols() != m.rows())
      throw std::logic_error("matrix chain dimension mismatch at " +
                             std::to_string(k));
    chain.products.push_back(chain.products.back().multiplied(m));
  }
  return chain;
}

std::optional<std::vector<size_t>> backtrace(const ProductChain& chain) {
  if (chain.products.empty())
    throw std::invalid_argument("backtrace over an empty chain");
  const Matrix& last = chain.products.back();
  if (last.max_value() <= 0.0) return std::nullopt;

  auto [r, c] = last.argmax();
  const size_t n_csms = chain.products.size();
  std::vector<size_t> senses(n_csms + 1);
  senses.front() = r;  // the argmax row pins the first term throughout
  senses.back() = c;

  size_t cur = c;
  for (size_t k = n_csms - 1; k >= 1; --k) {
    const Matrix& prod = chain.products[k - 1];
    const Matrix& csm = chain.csms[k].values;
    size_t best_j = 0;
    double best = -1.0;
    for (size_t j = 0; j < prod.cols(); ++j) {
      double v = prod(r, j) * csm(j, cur);
      if (v > best) {  // strict: ties keep the lowest sense index
        best = v;
        best_j = j;
      }
    }
    senses[k] = best_j;
    cur = best_j;
  }
  return senses;
}

Disambiguator::Disambiguator(const WordNetGraph& graph,
                             const SimilarityScorer& scorer,
                             const HeuristicStore* store, EngineConfig cfg)
    : graph_(graph), scorer_(scorer), store_(store), cfg_(cfg) {
  if (cfg_.heuristic_source != HeuristicSource::off && !store_)
    throw std::invalid_argument("heuristics enabled but no store given");
}

double Disambiguator::heuristic_weight(const SenseEntry& sense) const {
  if (cfg_.heuristic_source == HeuristicSource::off || !store_) return 1.0;
  return heuristic(*store_, sense);
}

double Disambiguator::doc_ctx_sim(SynsetId sense,
                                  const DocumentContext& ctx) const {
  if (!cfg_.doc_ctx_enabled || ctx.entries.empty()) return 1.0;
  std::vector<SynsetId> targets;
  targets.reserve(ctx.entries.size());
  for (const ContextEntry& e : ctx.entries) targets.push_back(e.sense.synset);
  std::vector<double> sims(targets.size());
  scorer_.similarity_row(sense, targets, sims);
  double sum = 0.0;
  for (double s : sims) sum += s;
  return sum / double(sims.size());
}

Matrix Disambiguator::raw_similarity_matrix(std::span<const SenseEntry> prev,
                                            std::span<const SenseEntry> curr) const {
  Matrix m(prev.size(), curr.size());
  std::vector<SynsetId> cols;
  cols.reserve(curr.size());
  for (const SenseEntry& s : curr) cols.push_back(s.synset);
  std::vector<double> row(cols.size());
  for (size_t i = 0; i < prev.size(); ++i) {
    scorer_.similarity_row(prev[i].synset, cols, row);
    for (size_t j = 0; j < cols.size(); ++j) m(i, j) = row[j];
  }
  return m;
}

Csm Disambiguator::build_csm(std::span<const SenseEntry> prev,
                             std::span<const SenseEntry> curr,
                             const DocumentContext& ctx) const {
  if (prev.empty() || curr.empty())
    throw std::invalid_argument("build_csm needs at least one sense per term");
  Csm csm;
  csm.values = raw_similarity_matrix(prev, curr);

  const bool use_h = cfg_.heuristic_source != HeuristicSource::off && store_;
  const bool use_ctx = cfg_.doc_ctx_enabled && !ctx.entries.empty();
  if (use_h || use_ctx) {
    std::vector<double> row_w(prev.size(), 1.0), col_w(curr.size(), 1.0);
    for (size_t i = 0; i < prev.size(); ++i) {
      if (use_h) row_w[i] *= heuristic_weight(prev[i]);
      if (use_ctx) row_w[i] *= doc_ctx_sim(prev[i].synset, ctx);
    }
    for (size_t j = 0; j < curr.size(); ++j) {
      if (use_h) col_w[j] *= heuristic_weight(curr[j]);
      if (use_ctx) col_w[j] *= doc_ctx_sim(curr[j].synset, ctx);
    }
    for (size_t i = 0; i < prev.size(); ++i)
      for (size_t j = 0; j < curr.size(); ++j)
        csm.values(i, j) *= row_w[i] * col_w[j];
  }

  if (cfg_.similarity.normalize_per_matrix) {
    double m = csm.values.max_value();
    if (m > 0.0) {
      csm.values.scale(1.0 / m);
      csm.scale_applied = m;
    }
  }
  return csm;
}

namespace {

bool all_zero(const Matrix& m) { return m.max_value() <= 0.0; }

}  // namespace

std::optional<size_t> Disambiguator::best_by_mean_similarity(
    std::span<const SenseEntry> senses, std::span<const SynsetId> context) const {
  if (context.empty() || senses.empty()) return std::nullopt;
  size_t best = 0;
  double best_mean = 0.0;
  std::vector<double> sims(context.size());
  for (size_t i = 0; i < senses.size(); ++i) {
    scorer_.similarity_row(senses[i].synset, context, sims);
    double sum = 0.0;
    for (double s : sims) sum += s;
    double mean = sum / double(context.size());
    if (mean > best_mean) {
      best_mean = mean;
      best = i;
    }
  }
  if (best_mean <= 0.0) return std::nullopt;
  return best;
}

size_t Disambiguator::heuristic_argmax(std::span<const SenseEntry> senses) const {
  size_t best = 0;
  double best_w = -1.0;
  for (size_t i = 0; i < senses.size(); ++i) {
    double w = heuristic_weight(senses[i]);
    if (w > best_w) {
      best_w = w;
      best = i;
    }
  }
  return best;
}

struct Disambiguator::SentenceOutcome {
  std::vector<Prediction> predictions;
  std::vector<SynsetId> chosen;  // synsets fixed so far, fallback context
  std::vector<const TermInstance*> leftovers;  // carried to the document pass
};

Disambiguator::SentenceOutcome Disambiguator::disambiguate_sentence(
    const Sentence& sentence, const DocumentContext& ctx,
    RunSummary& summary) const {
  SentenceOutcome out;

  std::vector<const TermInstance*> chain_terms;
  for (const TermInstance& t : sentence.tokens) {
    if (!t.is_target()) continue;
    if (!cfg_.pos_of_interest.contains(*t.pos)) {
      ++summary.skipped_pos_filter;
      continue;
    }
    auto senses = graph_.senses_of(t.lemma, *t.pos);
    if (senses.empty()) {
      ++summary.skipped_unknown_lemma;  // hurts recall, not precision
      continue;
    }
    if (senses.size() == 1) {
      out.predictions.push_back(
          {*t.instance_id, senses[0].sense_key, Provenance::scsmm});
      out.chosen.push_back(senses[0].synset);
      summary.add(Provenance::scsmm);
    } else {
      chain_terms.push_back(&t);
    }
  }

  auto senses_of = [&](const TermInstance* t) {
    return graph_.senses_of(t->lemma, *t->pos);
  };

  // Terms with zero raw similarity to every neighbor have no local context;
  // they leave the chain and the remaining terms re-link. Removing a term
  // can zero a new bridge matrix, so iterate to a fixed point.
  std::vector<const TermInstance*> active = chain_terms;
  std::vector<const TermInstance*> withheld;
  while (active.size() >= 2) {
    std::vector<Matrix> raw(active.size() - 1);
    for (size_t i = 0; i + 1 < active.size(); ++i)
      raw[i] = raw_similarity_matrix(senses_of(active[i]), senses_of(active[i + 1]));
    std::vector<const TermInstance*> kept;
    for (size_t i = 0; i < active.size(); ++i) {
      bool left_zero = i == 0 || all_zero(raw[i - 1]);
      bool right_zero = i + 1 == active.size() || all_zero(raw[i]);
      if (left_zero && right_zero) withheld.push_back(active[i]);
      else kept.push_back(active[i]);
    }
    if (kept.size() == active.size()) break;
    active = std::move(kept);
  }

  if (active.size() == 1) {
    // No chain partner: frequency and document-context weights decide, and
    // the dictionary rank breaks full ties.
    auto senses = senses_of(active[0]);
    size_t best = 0;
    double best_w = -1.0;
    for (size_t i = 0; i < senses.size(); ++i) {
      double w = heuristic_weight(senses[i]) * doc_ctx_sim(senses[i].synset, ctx);
      if (w > best_w) {
        best_w = w;
        best = i;
      }
    }
    out.predictions.push_back(
        {*active[0]->instance_id, senses[best].sense_key, Provenance::scsmm});
    out.chosen.push_back(senses[best].synset);
    summary.add(Provenance::scsmm);
    active.clear();
  } else if (active.size() >= 2) {
    std::vector<Csm> csms;
    csms.reserve(active.size() - 1);
    for (size_t i = 0; i + 1 < active.size(); ++i) {
      Csm csm = build_csm(senses_of(active[i]), senses_of(active[i + 1]), ctx);
      csm.prev_term = i;
      csm.curr_term = i + 1;
      csms.push_back(std::move(csm));
    }
    ProductChain chain = scsmm(std::move(csms));
    if (auto traced = backtrace(chain)) {
      for (size_t k = 0; k < active.size(); ++k) {
        const SenseEntry& s = senses_of(active[k])[(*traced)[k]];
        out.predictions.push_back(
            {*active[k]->instance_id, s.sense_key, Provenance::scsmm});
        out.chosen.push_back(s.synset);
        summary.add(Provenance::scsmm);
      }
    } else {
      // The whole product collapsed to zero: no usable context anywhere.
      for (const TermInstance* t : active) withheld.push_back(t);
    }
    active.clear();
  }

  // Withheld terms retry against the sentence's resolved senses, in
  // sentence order, each resolution feeding the next.
  std::sort(withheld.begin(), withheld.end(),
            [&](const TermInstance* a, const TermInstance* b) {
              auto pos_of = [&](const TermInstance* t) {
                return std::find(chain_terms.begin(), chain_terms.end(), t) -
                       chain_terms.begin();
              };
              return pos_of(a) < pos_of(b);
            });
  for (const TermInstance* t : withheld) {
    auto senses = senses_of(t);
    auto best = best_by_mean_similarity(senses, out.chosen);
    if (best) {
      const SenseEntry& s = senses[*best];
      out.predictions.push_back(
          {*t->instance_id, s.sense_key, Provenance::sentence_fallback});
      out.chosen.push_back(s.synset);
      summary.add(Provenance::sentence_fallback);
    } else if (cfg_.doc_cf_enabled) {
      out.leftovers.push_back(t);
    } else {
      const SenseEntry& s = senses[heuristic_argmax(senses)];
      out.predictions.push_back(
          {*t->instance_id, s.sense_key, Provenance::heuristic_only});
      out.chosen.push_back(s.synset);
      summary.add(Provenance::heuristic_only);
    }
  }
  return out;
}

std::vector<Prediction> Disambiguator::disambiguate_document(
    const Document& doc, RunSummary* summary) const {
  RunSummary local;
  std::vector<Prediction> preds;
  std::vector<SynsetId> doc_chosen;
  std::vector<const TermInstance*> carried;

  for (const Sentence& sentence : doc.sentences) {
    SentenceOutcome outcome = disambiguate_sentence(sentence, doc.context, local);
    preds.insert(preds.end(), outcome.predictions.begin(),
                 outcome.predictions.end());
    doc_chosen.insert(doc_chosen.end(), outcome.chosen.begin(),
                      outcome.chosen.end());
    carried.insert(carried.end(), outcome.leftovers.begin(),
                   outcome.leftovers.end());
  }

  // Carry-forward pass: the whole document is the context now.
  for (const TermInstance* t : carried) {
    auto senses = graph_.senses_of(t->lemma, *t->pos);
    auto best = best_by_mean_similarity(senses, doc_chosen);
    if (best) {
      const SenseEntry& s = senses[*best];
      preds.push_back({*t->instance_id, s.sense_key, Provenance::doc_carry_forward});
      doc_chosen.push_back(s.synset);
      local.add(Provenance::doc_carry_forward);
    } else {
      const SenseEntry& s = senses[heuristic_argmax(senses)];
      preds.push_back({*t->instance_id, s.sense_key, Provenance::heuristic_only});
      doc_chosen.push_back(s.synset);
      local.add(Provenance::heuristic_only);
    }
  }

  if (summary) summary->merge(local);
  return preds;
}

std::vector<Prediction> Disambiguator::disambiguate_corpus(
    std::span<const Document> docs, int jobs, RunSummary* summary) const {
  jobs = std::max(1, jobs);
  std::vector<std::vector<Prediction>> per_doc(docs.size());
  std::vector<RunSummary> sums(docs.size());

  if (jobs == 1 || docs.size() <= 1) {
    for (size_t i = 0; i < docs.size(); ++i)
      per_doc[i] = disambiguate_document(docs[i], &sums[i]);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < docs.size(); i = next.fetch_add(1)) {
        try {
          per_doc[i] = disambiguate_document(docs[i], &sums[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min<int>(jobs, int(docs.size())); ++j)
      pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<Prediction> all;
  for (size_t i = 0; i < docs.size(); ++i) {
    all.insert(all.end(), per_doc[i].begin(), per_doc[i].end());
    if (summary) summary->merge(sums[i]);
  }
  std::sort(all.begin(), all.end(), [](const Prediction& a, const Prediction& b) {
    return a.instance_id < b.instance_id;
  });
  return all;
}

std::vector<Prediction> disambiguate_baseline_pedersen(
    const SimilarityScorer& scorer, const WordNetGraph& graph,
    const Sentence& sentence, const PosSet& pos_filter, size_t window,
    double threshold, RunSummary* summary) {
  RunSummary local;
  std::vector<const TermInstance*> targets;
  for (const TermInstance& t : sentence.tokens) {
    if (!t.is_target()) continue;
    if (!pos_filter.contains(*t.pos)) {
      ++local.skipped_pos_filter;
      continue;
    }
    if (graph.senses_of(t.lemma, *t.pos).empty()) {
      ++local.skipped_unknown_lemma;
      continue;
    }
    targets.push_back(&t);
  }

  std::vector<Prediction> preds;
  for (size_t i = 0; i < targets.size(); ++i) {
    auto senses = graph.senses_of(targets[i]->lemma, *targets[i]->pos);
    size_t best = 0;
    double best_score = -1.0;
    for (size_t si = 0; si < senses.size(); ++si) {
      double score = 0.0;
      for (size_t j = 0; j < targets.size(); ++j) {
        if (j == i) continue;
        if (window > 0 && (j > i ? j - i : i - j) > window) continue;
        auto other = graph.senses_of(targets[j]->lemma, *targets[j]->pos);
        std::vector<SynsetId> cols;
        for (const SenseEntry& o : other) cols.push_back(o.synset);
        std::vector<double> sims(cols.size());
        scorer.similarity_row(senses[si].synset, cols, sims);
        double m = 0.0;
        for (double s : sims) m = std::max(m, s);
        if (m > threshold) score += m;
      }
      if (score > best_score) {
        best_score = score;
        best = si;
      }
    }
    preds.push_back({*targets[i]->instance_id, senses[best].sense_key,
                     Provenance::heuristic_only});
    local.add(Provenance::heuristic_only);
  }
  if (summary) summary->merge(local);
  return preds;
}

namespace {

template <typename PickSense>
std::vector<Prediction> baseline_over(const WordNetGraph& graph,
                                      std::span<const Document> docs,
                                      const PosSet& pos_filter,
                                      RunSummary* summary, PickSense pick) {
  RunSummary local;
  std::vector<Prediction> preds;
  for (const Document& doc : docs)
    for (const Sentence& s : doc.sentences)
      for (const TermInstance& t : s.tokens) {
        if (!t.is_target()) continue;
        if (!pos_filter.contains(*t.pos)) {
          ++local.skipped_pos_filter;
          continue;
        }
        if (graph.senses_of(t.lemma, *t.pos).empty()) {
          ++local.skipped_unknown_lemma;
          continue;
        }
        const SenseEntry& chosen = pick(t.lemma, *t.pos);
        preds.push_back(
            {*t.instance_id, chosen.sense_key, Provenance::heuristic_only});
        local.add(Provenance::heuristic_only);
      }
  std::sort(preds.begin(), preds.end(),
            [](const Prediction& a, const Prediction& b) {
              return a.instance_id < b.instance_id;
            });
  if (summary) summary->merge(local);
  return preds;
}

}  // namespace

std::vector<Prediction> baseline_wn_first(const WordNetGraph& graph,
                                          std::span<const Document> docs,
                                          const PosSet& pos_filter,
                                          RunSummary* summary) {
  return baseline_over(graph, docs, pos_filter, summary,
                       [&](const std::string& lemma, Pos pos) -> const SenseEntry& {
                         return wn_first_sense(graph, lemma, pos);
                       });
}

std::vector<Prediction> baseline_mfs(const WordNetGraph& graph,
                                     const HeuristicStore& store,
                                     std::span<const Document> docs,
                                     const PosSet& pos_filter,
                                     RunSummary* summary) {
  return baseline_over(graph, docs, pos_filter, summary,
                       [&](const std::string& lemma, Pos pos) -> const SenseEntry& {
                         return mfs_sense(store, graph, lemma, pos);
                       });
}

void write_predictions(std::ostream& out, std::vector<Prediction> preds) {
  std::sort(preds.begin(), preds.end(),
            [](const Prediction& a, const Prediction& b) {
              return a.instance_id < b.instance_id;
            });
  for (const Prediction& p : preds)
    out << p.instance_id << ' ' << p.sense_key << '\n';
}

}  // namespace wsd
