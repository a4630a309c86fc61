// sgec/corpus_io.hpp

// Copyright 2026  The sgec authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SGEC_CORPUS_IO_HPP_
#define SGEC_CORPUS_IO_HPP_

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sgec/error.hpp"
#include "sgec/types.hpp"

namespace sgec {

// ---------------------------------------------------------------------------
// Transcript TSV: one utterance per line, `<utt_id>\t<token> <token> ...`.
// Label TSV:      same shape with flags in {0,1} instead of tokens.
// UTF-8, LF line endings, blank lines ignored.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

// Splits on single spaces; empty fields are the caller's problem to reject.
inline std::vector<std::string> split_fields(std::string_view rest) {
  std::vector<std::string> fields;
  if (rest.empty()) return fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t sp = rest.find(' ', pos);
    if (sp == std::string_view::npos) {
      fields.emplace_back(rest.substr(pos));
      break;
    }
    fields.emplace_back(rest.substr(pos, sp - pos));
    pos = sp + 1;
  }
  return fields;
}

}  // namespace detail

/// Parses transcript TSV text into a Corpus, preserving line order.
inline Corpus parse_transcript_file(std::string_view text) {
  Corpus corpus;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = lines[ln];
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw DataError("line " + std::to_string(ln + 1) +
                      ": missing tab separator");
    Transcript t;
    t.utt_id = std::string(line.substr(0, tab));
    if (t.utt_id.empty())
      throw DataError("line " + std::to_string(ln + 1) + ": empty utt_id");
    for (auto& tok : detail::split_fields(line.substr(tab + 1))) {
      if (!valid_token(tok))
        throw DataError("utt " + t.utt_id + ": invalid token '" + tok +
                        "' (tokens must be lowercase, non-empty, and free of "
                        "whitespace)");
      t.tokens.push_back(std::move(tok));
    }
    corpus.add(std::move(t));  // throws on duplicate utt_id
  }
  return corpus;
}

/// Attaches binary labels to every transcript of `corpus`.
/// Every corpus utterance must appear in the label text and vice versa.
inline LabeledCorpus parse_label_file(std::string_view text,
                                      const Corpus& corpus) {
  std::unordered_map<std::string, Labels> parsed;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = lines[ln];
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw DataError("label line " + std::to_string(ln + 1) +
                      ": missing tab separator");
    std::string id(line.substr(0, tab));
    if (!corpus.contains(id))
      throw DataError("label file names unknown utt_id " + id);
    if (parsed.count(id)) throw DataError("duplicate utt_id " + id);
    Labels labels;
    for (const auto& field : detail::split_fields(line.substr(tab + 1))) {
      if (field == "0")
        labels.push_back(0);
      else if (field == "1")
        labels.push_back(1);
      else
        throw DataError("utt " + id + ": invalid flag '" + field + "'");
    }
    parsed.emplace(std::move(id), std::move(labels));
  }

  LabeledCorpus out;
  for (const Transcript& t : corpus) {
    auto it = parsed.find(t.utt_id);
    if (it == parsed.end())
      throw DataError("no labels for utt_id " + t.utt_id);
    if (it->second.size() != t.tokens.size())
      throw DataError("label count mismatch for utt_id " + t.utt_id + " (" +
                      std::to_string(it->second.size()) + " labels, " +
                      std::to_string(t.tokens.size()) + " tokens)");
    out.add(LabeledTranscript{t, std::move(it->second)});
  }
  return out;
}

inline std::string emit_transcripts(const Corpus& corpus) {
  std::string out;
  for (const Transcript& t : corpus) {
    out += t.utt_id;
    out += '\t';
    for (std::size_t i = 0; i < t.tokens.size(); ++i) {
      if (i) out += ' ';
      out += t.tokens[i];
    }
    out += '\n';
  }
  return out;
}

inline std::string emit_labels(const LabeledCorpus& corpus) {
  std::string out;
  for (const LabeledTranscript& lt : corpus) {
    out += lt.transcript.utt_id;
    out += '\t';
    for (std::size_t i = 0; i < lt.labels.size(); ++i) {
      if (i) out += ' ';
      out += lt.labels[i] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

/// Strict join on utt_id, preserving a's order.  Ids present on only one
/// side are a data error; the diagnostic lists up to 10 of them.
inline ParallelCorpus pair_corpora(const Corpus& a, const Corpus& b) {
  std::vector<std::string> missing;
  for (const Transcript& t : a)
    if (!b.contains(t.utt_id)) missing.push_back(t.utt_id);
  for (const Transcript& t : b)
    if (!a.contains(t.utt_id)) missing.push_back(t.utt_id);
  if (!missing.empty()) {
    std::string msg = "utt_ids present on only one side:";
    std::size_t shown = std::min<std::size_t>(missing.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) msg += " " + missing[i];
    if (missing.size() > shown)
      msg += " (+" + std::to_string(missing.size() - shown) + " more)";
    throw DataError(msg);
  }
  ParallelCorpus out;
  out.pairs.reserve(a.size());
  for (const Transcript& t : a) {
    const Transcript* other = b.find(t.utt_id);
    out.pairs.push_back(UttPair{t.utt_id, t.tokens, other->tokens});
  }
  return out;
}

/// Reads a whole file; the diagnostic names the path.
inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw DataError("read error on file " + path);
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open file " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("write error on file " + path);
}

inline Corpus load_transcripts(const std::string& path) {
  return parse_transcript_file(read_file(path));
}

}  // namespace sgec

#endif  // SGEC_CORPUS_IO_HPP_
