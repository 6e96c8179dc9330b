#include "wsd/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "wsd/error.hpp"
#include "wsd/xml.hpp"

namespace wsd {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("missing file: " + path.string());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

const std::string* attr(const xml::Event& ev, std::string_view name) {
  for (const auto& a : ev.attributes)
    if (a.name == name) return &a.value;
  return nullptr;
}

const char* coarse_tag(Pos p) {
  switch (p) {
    case Pos::noun: return "NOUN";
    case Pos::verb: return "VERB";
    case Pos::adj: return "ADJ";
    case Pos::adv: return "ADV";
  }
  return "X";
}

}  // namespace

std::vector<Document> parse_dataset_string(std::string content,
                                           std::string origin) {
  xml::Reader reader(std::move(content), origin);
  std::vector<Document> docs;

  Document* doc = nullptr;
  Sentence* sentence = nullptr;
  std::optional<TermInstance> open_token;  // between <wf>/<instance> and text
  bool in_corpus = false;

  for (xml::Event ev = reader.next(); ev.type != xml::EventType::eof;
       ev = reader.next()) {
    switch (ev.type) {
      case xml::EventType::start_element: {
        if (ev.name == "corpus") {
          in_corpus = true;
        } else if (ev.name == "text") {
          if (!in_corpus) throw FormatError(origin, ev.line, "<text> outside <corpus>");
          const std::string* id = attr(ev, "id");
          if (!id) throw FormatError(origin, ev.line, "<text> missing id");
          docs.push_back(Document{*id, {}, {}});
          doc = &docs.back();
        } else if (ev.name == "sentence") {
          if (!doc) throw FormatError(origin, ev.line, "<sentence> outside <text>");
          const std::string* id = attr(ev, "id");
          doc->sentences.push_back(Sentence{id ? *id : "", {}});
          sentence = &doc->sentences.back();
        } else if (ev.name == "wf" || ev.name == "instance") {
          if (!sentence)
            throw FormatError(origin, ev.line, "<" + ev.name + "> outside <sentence>");
          TermInstance tok;
          if (ev.name == "instance") {
            const std::string* id = attr(ev, "id");
            const std::string* lemma = attr(ev, "lemma");
            const std::string* pos = attr(ev, "pos");
            if (!id || !lemma || !pos)
              throw FormatError(origin, ev.line, "<instance> missing id/lemma/pos");
            auto parsed = pos_from_tag(*pos);
            if (!parsed)
              throw FormatError(origin, ev.line,
                                "instance '" + *id + "' has unscorable pos '" + *pos + "'");
            tok.instance_id = *id;
            tok.lemma = normalize_lemma(*lemma);
            tok.pos = parsed;
          } else {
            if (const std::string* lemma = attr(ev, "lemma"))
              tok.lemma = normalize_lemma(*lemma);
            if (const std::string* pos = attr(ev, "pos"))
              tok.pos = pos_from_tag(*pos);  // unknown tags stay empty
          }
          if (ev.self_closing) {
            sentence->tokens.push_back(std::move(tok));
          } else {
            open_token = std::move(tok);
          }
        }
        break;
      }
      case xml::EventType::text: {
        if (open_token) open_token->surface += ev.text;
        break;
      }
      case xml::EventType::end_element: {
        if (ev.name == "wf" || ev.name == "instance") {
          if (open_token) {
            sentence->tokens.push_back(std::move(*open_token));
            open_token.reset();
          }
        } else if (ev.name == "sentence") {
          sentence = nullptr;
        } else if (ev.name == "text") {
          doc = nullptr;
        }
        break;
      }
      case xml::EventType::eof:
        break;
    }
  }
  return docs;
}

std::vector<Document> parse_dataset(const std::filesystem::path& xml_path) {
  return parse_dataset_string(read_file(xml_path), xml_path.string());
}

std::string serialize_dataset(std::span<const Document> docs) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" ?>\n<corpus>\n";
  for (const Document& doc : docs) {
    out << "<text id=\"" << xml::escape(doc.id) << "\">\n";
    for (const Sentence& s : doc.sentences) {
      out << "<sentence id=\"" << xml::escape(s.id) << "\">\n";
      for (const TermInstance& t : s.tokens) {
        if (t.is_target()) {
          out << "<instance id=\"" << xml::escape(*t.instance_id) << "\" lemma=\""
              << xml::escape(t.lemma) << "\" pos=\"" << coarse_tag(*t.pos) << "\">"
              << xml::escape(t.surface) << "</instance>\n";
        } else {
          out << "<wf";
          if (!t.lemma.empty()) out << " lemma=\"" << xml::escape(t.lemma) << "\"";
          if (t.pos) out << " pos=\"" << coarse_tag(*t.pos) << "\"";
          out << ">" << xml::escape(t.surface) << "</wf>\n";
        }
      }
      out << "</sentence>\n";
    }
    out << "</text>\n";
  }
  out << "</corpus>\n";
  return out.str();
}

GoldKeys parse_gold_keys(const std::filesystem::path& path) {
  const std::string fname = path.string();
  std::ifstream in(path);
  if (!in) throw FormatError("missing file: " + fname);

  GoldKeys gold;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string id;
    ss >> id;
    std::set<std::string> keys;
    std::string key;
    while (ss >> key) keys.insert(key);
    if (keys.empty())
      throw FormatError(fname, line_no, "instance '" + id + "' has no keys");
    auto [it, fresh] = gold.by_instance.emplace(std::move(id), std::move(keys));
    if (!fresh)
      throw FormatError(fname, line_no, "duplicate instance id '" + it->first + "'");
  }
  return gold;
}

void attach_document_contexts(std::vector<Document>& docs,
                              const WordNetGraph& graph,
                              const ContextConfig& cfg) {
  // Document frequencies over the dataset's own documents.
  std::unordered_map<std::string, size_t> df;
  for (const Document& doc : docs) {
    std::unordered_set<std::string> seen;
    for (const Sentence& s : doc.sentences)
      for (const TermInstance& t : s.tokens) {
        if (t.lemma.empty() || !t.pos) continue;
        std::string key = t.lemma + '|' + to_char(*t.pos);
        if (seen.insert(key).second) ++df[key];
      }
  }
  const double n_docs = double(docs.size());

  for (Document& doc : docs) {
    doc.context.entries.clear();
    std::unordered_map<std::string, size_t> tf;
    std::vector<std::pair<std::string, const TermInstance*>> order;
    for (const Sentence& s : doc.sentences)
      for (const TermInstance& t : s.tokens) {
        if (t.lemma.empty() || !t.pos) continue;
        std::string key = t.lemma + '|' + to_char(*t.pos);
        if (++tf[key] == 1) order.emplace_back(std::move(key), &t);
      }
    for (const auto& [key, tok] : order) {
      if (!cfg.pos.contains(*tok->pos)) continue;
      auto senses = graph.senses_of(tok->lemma, *tok->pos);
      if (senses.size() != 1) continue;  // context terms must be monosemous
      double idf = std::log(n_docs / double(df.at(key)));
      double tfidf = double(tf.at(key)) * idf;
      if (tfidf <= 0.0) continue;
      doc.context.entries.push_back(
          ContextEntry{tok->lemma, *tok->pos, senses[0], tfidf});
    }
  }
}

DatasetStats dataset_stats(std::span<const Document> docs,
                           const WordNetGraph& graph) {
  DatasetStats stats;
  stats.n_docs = docs.size();
  std::array<std::vector<int>, 4> granularity;  // per POS, ambiguous targets

  for (const Document& doc : docs) {
    for (const Sentence& s : doc.sentences) {
      size_t targets_here = 0;
      for (const TermInstance& t : s.tokens) {
        if (!t.is_target()) continue;
        ++targets_here;
        ++stats.n_terms;
        PosStats& pp = stats.per_pos[pos_index(*t.pos)];
        ++pp.n_terms;
        size_t n_senses = graph.senses_of(t.lemma, *t.pos).size();
        if (n_senses == 0) {
          ++stats.n_unknown;
        } else if (n_senses == 1) {
          ++stats.n_monosemous;
        } else {
          ++stats.n_ambiguous;
          ++pp.n_ambiguous;
          granularity[pos_index(*t.pos)].push_back(int(n_senses));
        }
      }
      if (targets_here > 0) ++stats.n_sentences;
    }
  }

  if (stats.n_sentences > 0)
    stats.avg_sentence_size =
        int(std::lround(double(stats.n_terms) / double(stats.n_sentences)));
  if (stats.n_terms > 0)
    stats.ambiguity_rate = double(stats.n_ambiguous) / double(stats.n_terms);

  for (int p = 0; p < 4; ++p) {
    std::vector<int>& g = granularity[p];
    PosStats& pp = stats.per_pos[p];
    if (g.empty()) continue;
    std::sort(g.begin(), g.end());
    double sum = 0;
    for (int x : g) sum += x;
    pp.mean_granularity = sum / double(g.size());
    pp.max_senses = g.back();
    pp.median_senses = g.size() % 2 == 1
                           ? g[g.size() / 2]
                           : (g[g.size() / 2 - 1] + g[g.size() / 2]) / 2.0;
    int best_count = 0, run = 0, prev = -1;
    for (int x : g) {
      run = x == prev ? run + 1 : 1;
      prev = x;
      if (run > best_count) {  // ties keep the smaller value (sorted input)
        best_count = run;
        pp.mode_senses = x;
      }
    }
  }
  return stats;
}

}  // namespace wsd
