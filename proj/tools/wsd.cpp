// Command-line front end: disambiguate a dataset, score predictions, print
// dataset statistics, or dump a pairwise sense-similarity matrix.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsd/engine.hpp"
#include "wsd/error.hpp"
#include "wsd/evaluation.hpp"
#include "wsd/ic.hpp"

namespace {

using namespace wsd;

struct CommonOpts {
  std::string wordnet_dir;
  std::string heuristics = "s";  // s | so | off
  std::string semcor_cntlist;
  std::string omsti_keys;
  std::string ic = "compute";  // file path or "compute"
  std::string sim = "jcn";     // path | lch | wup | jcn
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--wordnet", o.wordnet_dir,
                  "WordNet 3.0 database directory (or $WSD_WORDNET_DIR)");
  cmd->add_option("--heuristics", o.heuristics, "Sense-frequency source")
      ->check(CLI::IsMember({"s", "so", "off"}))
      ->capture_default_str();
  cmd->add_option("--semcor-cntlist", o.semcor_cntlist, "SemCor cntlist file");
  cmd->add_option("--omsti-keys", o.omsti_keys, "OMSTI keys file");
  cmd->add_option("--ic", o.ic, "IC table: a .dat file or 'compute'")
      ->capture_default_str();
  cmd->add_option("--sim", o.sim, "Similarity measure")
      ->check(CLI::IsMember({"path", "lch", "wup", "jcn"}))
      ->capture_default_str();
}

std::string wordnet_dir_or_env(const CommonOpts& o) {
  if (!o.wordnet_dir.empty()) return o.wordnet_dir;
  if (const char* env = std::getenv("WSD_WORDNET_DIR")) return env;
  throw std::runtime_error("no WordNet directory: pass --wordnet or set WSD_WORDNET_DIR");
}

HeuristicStore load_store(const CommonOpts& o) {
  if (o.heuristics == "off") return {};
  if (o.semcor_cntlist.empty())
    throw std::runtime_error("--heuristics " + o.heuristics +
                             " needs --semcor-cntlist");
  HeuristicStore semcor = load_semcor_cntlist(o.semcor_cntlist);
  if (o.heuristics == "s") return semcor;
  if (o.omsti_keys.empty())
    throw std::runtime_error("--heuristics so needs --omsti-keys");
  return merge_counts(semcor, load_key_file_counts(o.omsti_keys), "semcor+omsti");
}

std::optional<IcTable> load_ic(const CommonOpts& o, const WordNetGraph& graph) {
  if (o.sim != "jcn") return std::nullopt;
  if (o.ic != "compute") return load_ic_file(o.ic);
  if (o.semcor_cntlist.empty())
    throw std::runtime_error("--sim jcn with --ic compute needs --semcor-cntlist");
  size_t unresolved = 0;
  IcTable table = compute_ic(graph, load_semcor_cntlist(o.semcor_cntlist), &unresolved);
  if (unresolved > 0)
    std::cerr << "note: " << unresolved
              << " sense keys from the cntlist do not resolve in this WordNet\n";
  return table;
}

SimilarityConfig similarity_config(const CommonOpts& o) {
  SimilarityConfig cfg;
  cfg.measure = *measure_from_string(o.sim);
  return cfg;
}

PosSet parse_pos_list(const std::string& csv, const char* flag) {
  auto set = pos_set_from_string(csv);
  if (!set) throw std::runtime_error(std::string(flag) + ": bad POS list '" + csv + "'");
  return *set;
}

std::vector<Prediction> read_predictions_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("missing file: " + path);
  std::vector<Prediction> preds;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    Prediction p;
    if (!(ss >> p.instance_id >> p.sense_key))
      throw FormatError(path, line_no, "expected 'instance_id sense_key'");
    std::string extra;
    if (ss >> extra)
      throw FormatError(path, line_no, "one sense key per prediction line");
    preds.push_back(std::move(p));
  }
  return preds;
}

// ---------------------------------------------------------------------------

struct DisambiguateOpts {
  CommonOpts common;
  std::string dataset;
  std::string doc_ctx = "on";
  std::string doc_cf = "on";
  std::string pos = "n,v,a,r";
  std::string doc_ctx_pos = "n,v";
  std::string baseline = "none";
  std::string out;
  int jobs = 1;
};

int run_disambiguate(const DisambiguateOpts& o) {
  WordNetGraph graph = load_wordnet(wordnet_dir_or_env(o.common));
  std::vector<Document> docs = parse_dataset(o.dataset);

  EngineConfig cfg;
  cfg.similarity = similarity_config(o.common);
  cfg.heuristic_source = o.common.heuristics == "s" ? HeuristicSource::semcor
                         : o.common.heuristics == "so"
                             ? HeuristicSource::semcor_omsti
                             : HeuristicSource::off;
  cfg.doc_ctx_enabled = o.doc_ctx == "on";
  cfg.doc_cf_enabled = o.doc_cf == "on";
  cfg.pos_of_interest = parse_pos_list(o.pos, "--pos");
  cfg.doc_ctx_pos = parse_pos_list(o.doc_ctx_pos, "--doc-ctx-pos");

  HeuristicStore store = load_store(o.common);
  std::optional<IcTable> ic;
  RunSummary summary;
  std::vector<Prediction> preds;

  if (o.baseline == "wn1st") {
    preds = baseline_wn_first(graph, docs, cfg.pos_of_interest, &summary);
  } else if (o.baseline == "mfs") {
    if (cfg.heuristic_source == HeuristicSource::off)
      throw std::runtime_error("--baseline mfs needs --heuristics s or so");
    preds = baseline_mfs(graph, store, docs, cfg.pos_of_interest, &summary);
  } else {
    ic = load_ic(o.common, graph);
    SimilarityScorer scorer(graph, ic ? &*ic : nullptr, cfg.similarity);
    if (o.baseline == "pedersen") {
      for (const Document& doc : docs)
        for (const Sentence& s : doc.sentences) {
          auto batch = disambiguate_baseline_pedersen(scorer, graph, s,
                                                      cfg.pos_of_interest, 0,
                                                      0.0, &summary);
          preds.insert(preds.end(), batch.begin(), batch.end());
        }
    } else {
      if (cfg.doc_ctx_enabled)
        attach_document_contexts(docs, graph, ContextConfig{cfg.doc_ctx_pos});
      Disambiguator engine(graph, scorer,
                           cfg.heuristic_source == HeuristicSource::off
                               ? nullptr
                               : &store,
                           cfg);
      preds = engine.disambiguate_corpus(docs, o.jobs, &summary);
    }
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.out);
    out = &file;
  }
  write_predictions(*out, preds);
  out->flush();

  std::ostream& log = o.out.empty() ? std::cerr : std::cout;
  log << "predicted " << summary.predicted << " instances";
  for (size_t i = 0; i < summary.by_provenance.size(); ++i)
    if (summary.by_provenance[i] > 0)
      log << "  " << provenance_name(Provenance(i)) << "="
          << summary.by_provenance[i];
  log << "\nskipped: unknown-lemma=" << summary.skipped_unknown_lemma
      << " pos-filter=" << summary.skipped_pos_filter << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct ScoreOpts {
  std::string gold;
  std::string pred;
  std::string pos;
  bool by_dataset = false;
  std::string format = "text";
};

int run_score(const ScoreOpts& o) {
  GoldKeys gold = parse_gold_keys(o.gold);
  std::vector<Prediction> preds = read_predictions_file(o.pred);

  if (!o.pos.empty()) {
    PosSet keep = parse_pos_list(o.pos, "--pos");
    for (const Prediction& p : preds)
      if (!gold.by_instance.contains(p.instance_id))
        throw FormatError("predicted instance '" + p.instance_id +
                          "' is not in the gold keys (dataset mix-up?)");
    GoldKeys filtered;
    for (const auto& [id, keys] : gold.by_instance)
      if (keep.contains(sense_key_word(*keys.begin()).second))
        filtered.by_instance.emplace(id, keys);
    std::erase_if(preds, [&](const Prediction& p) {
      return !filtered.by_instance.contains(p.instance_id);
    });
    gold = std::move(filtered);
  }

  ScoreReport report = score(gold, preds);
  std::cout << (o.format == "tsv" ? format_report_tsv(report, o.by_dataset)
                                  : format_report_text(report, o.by_dataset));
  return 0;
}

// ---------------------------------------------------------------------------

struct StatsOpts {
  std::string dataset;
  std::string wordnet_dir;
  std::string format = "text";
};

int run_stats(const StatsOpts& o) {
  CommonOpts common;
  common.wordnet_dir = o.wordnet_dir;
  WordNetGraph graph = load_wordnet(wordnet_dir_or_env(common));
  std::vector<Document> docs = parse_dataset(o.dataset);
  DatasetStats s = dataset_stats(docs, graph);

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(1);
  const char* sep = o.format == "tsv" ? "\t" : " = ";
  out << "docs" << sep << s.n_docs << "\n";
  out << "sentences" << sep << s.n_sentences << "\n";
  out << "terms" << sep << s.n_terms << "\n";
  out << "avg-sentence-size" << sep << s.avg_sentence_size << "\n";
  out << "monosemous" << sep << s.n_monosemous << "\n";
  out << "ambiguous" << sep << s.n_ambiguous << "\n";
  out << "unknown" << sep << s.n_unknown << "\n";
  out << "ambiguity-rate" << sep << 100.0 * s.ambiguity_rate << "\n";
  for (Pos pos : kAllPos) {
    const PosStats& pp = s.per_pos[pos_index(pos)];
    if (pp.n_terms == 0) continue;
    std::string tag = std::string("pos-") + to_char(pos);
    out << tag << "-terms" << sep << pp.n_terms << "\n";
    out << tag << "-ambiguous" << sep << pp.n_ambiguous << "\n";
    out << tag << "-granularity-mean" << sep << pp.mean_granularity << "\n";
    out << tag << "-granularity-max" << sep << pp.max_senses << "\n";
    out << tag << "-granularity-mode" << sep << pp.mode_senses << "\n";
    out << tag << "-granularity-median" << sep << pp.median_senses << "\n";
  }
  std::cout << out.str();
  return 0;
}

// ---------------------------------------------------------------------------

struct SimOpts {
  CommonOpts common;
  std::string l1, l2;
  std::string p1, p2;
  std::string k1, k2;
};

int run_sim(const SimOpts& o) {
  WordNetGraph graph = load_wordnet(wordnet_dir_or_env(o.common));
  std::optional<IcTable> ic = load_ic(o.common, graph);
  SimilarityScorer scorer(graph, ic ? &*ic : nullptr, similarity_config(o.common));

  std::cout.setf(std::ios::fixed);
  std::cout.precision(3);

  if (!o.k1.empty() || !o.k2.empty()) {
    if (o.k1.empty() || o.k2.empty())
      throw std::runtime_error("--k1 and --k2 must be given together");
    const SenseEntry* a = graph.sense_by_key(o.k1);
    const SenseEntry* b = graph.sense_by_key(o.k2);
    if (!a) throw std::runtime_error("unknown sense key '" + o.k1 + "'");
    if (!b) throw std::runtime_error("unknown sense key '" + o.k2 + "'");
    std::cout << scorer.similarity(a->synset, b->synset) << "\n";
    return 0;
  }

  if (o.l1.empty() || o.l2.empty() || o.p1.empty() || o.p2.empty())
    throw std::runtime_error("need --l1/--p1/--l2/--p2 (or --k1/--k2)");
  auto pos1 = pos_from_char(o.p1[0]);
  auto pos2 = pos_from_char(o.p2[0]);
  if (o.p1.size() != 1 || !pos1) throw std::runtime_error("bad --p1 '" + o.p1 + "'");
  if (o.p2.size() != 1 || !pos2) throw std::runtime_error("bad --p2 '" + o.p2 + "'");
  auto rows = graph.senses_of(o.l1, *pos1);
  auto cols = graph.senses_of(o.l2, *pos2);
  if (rows.empty()) throw std::runtime_error("no senses for '" + o.l1 + "'");
  if (cols.empty()) throw std::runtime_error("no senses for '" + o.l2 + "'");

  // Header row, then one row per sense of the first term.
  for (const SenseEntry& c : cols) std::cout << '\t' << c.lemma << c.sense_number;
  std::cout << '\n';
  std::vector<SynsetId> col_ids;
  for (const SenseEntry& c : cols) col_ids.push_back(c.synset);
  std::vector<double> sims(col_ids.size());
  for (const SenseEntry& r : rows) {
    scorer.similarity_row(r.synset, col_ids, sims);
    std::cout << r.lemma << r.sense_number;
    for (double v : sims) std::cout << '\t' << v;
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-words word sense disambiguation over the WordNet graph"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Configuration file (key = value lines)");

  DisambiguateOpts d;
  CLI::App* disambiguate =
      app.add_subcommand("disambiguate", "Disambiguate a dataset");
  disambiguate->add_option("--dataset", d.dataset, "Evaluation XML file")->required();
  add_common(disambiguate, d.common);
  disambiguate->add_option("--doc-ctx", d.doc_ctx, "Use document context")
      ->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  disambiguate->add_option("--doc-cf", d.doc_cf, "Carry unresolved terms to the document pass")
      ->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  disambiguate->add_option("--pos", d.pos, "POS of interest")->capture_default_str();
  disambiguate->add_option("--doc-ctx-pos", d.doc_ctx_pos, "POS allowed in the document context")
      ->capture_default_str();
  disambiguate->add_option("--baseline", d.baseline, "Run a baseline instead of the engine")
      ->check(CLI::IsMember({"none", "wn1st", "mfs", "pedersen"}))
      ->capture_default_str();
  disambiguate->add_option("--out", d.out, "Prediction output file (default: stdout)");
  disambiguate->add_option("--jobs", d.jobs, "Worker threads across documents")
      ->check(CLI::PositiveNumber)->capture_default_str();

  ScoreOpts sc;
  CLI::App* score_cmd = app.add_subcommand("score", "Score predictions against gold keys");
  score_cmd->add_option("--gold", sc.gold, "Gold key file")->required();
  score_cmd->add_option("--pred", sc.pred, "Prediction file")->required();
  score_cmd->add_option("--pos", sc.pos, "Restrict to one POS (n|v|a|r)");
  score_cmd->add_flag("--by-dataset", sc.by_dataset, "Break down by instance-id prefix");
  score_cmd->add_option("--format", sc.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();

  StatsOpts st;
  CLI::App* stats_cmd = app.add_subcommand("stats", "Dataset statistics");
  stats_cmd->add_option("--dataset", st.dataset, "Evaluation XML file")->required();
  stats_cmd->add_option("--wordnet", st.wordnet_dir, "WordNet 3.0 database directory");
  stats_cmd->add_option("--format", st.format, "Output format")
      ->check(CLI::IsMember({"text", "tsv"}))->capture_default_str();

  SimOpts si;
  CLI::App* sim_cmd = app.add_subcommand("sim", "Pairwise sense similarity");
  add_common(sim_cmd, si.common);
  sim_cmd->add_option("--measure", si.common.sim, "Similarity measure (alias of --sim)")
      ->check(CLI::IsMember({"path", "lch", "wup", "jcn"}));
  sim_cmd->add_option("--l1", si.l1, "First lemma");
  sim_cmd->add_option("--p1", si.p1, "First POS (n|v|a|r)");
  sim_cmd->add_option("--l2", si.l2, "Second lemma");
  sim_cmd->add_option("--p2", si.p2, "Second POS (n|v|a|r)");
  sim_cmd->add_option("--k1", si.k1, "First sense key");
  sim_cmd->add_option("--k2", si.k2, "Second sense key");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (disambiguate->parsed()) return run_disambiguate(d);
    if (score_cmd->parsed()) return run_score(sc);
    if (stats_cmd->parsed()) return run_stats(st);
    if (sim_cmd->parsed()) return run_sim(si);
  } catch (const wsd::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
