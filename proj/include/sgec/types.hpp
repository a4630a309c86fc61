// sgec/types.hpp

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

#ifndef SGEC_TYPES_HPP_
#define SGEC_TYPES_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgec/error.hpp"

namespace sgec {

using Tokens = std::vector<std::string>;

/// Binary fluency tags, one per token.  1 = disfluent, 0 = fluent.
using Labels = std::vector<std::uint8_t>;

/// Tokens are pre-normalized: lowercase, no whitespace, non-empty.
/// The parsers reject rather than normalize so that scoring stays bit-exact.
inline bool valid_token(const std::string& tok) {
  if (tok.empty()) return false;
  for (unsigned char c : tok) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
        c == '\v')
      return false;
    if (c >= 'A' && c <= 'Z') return false;
  }
  return true;
}

/// One utterance: an id plus its ordered word tokens.
struct Transcript {
  std::string utt_id;
  Tokens tokens;

  std::size_t size() const { return tokens.size(); }
};

/// A transcript with one binary fluency tag per token.
struct LabeledTranscript {
  Transcript transcript;
  Labels labels;

  std::size_t size() const { return transcript.size(); }
};

inline const std::string& id_of(const Transcript& t) { return t.utt_id; }
inline const std::string& id_of(const LabeledTranscript& t) {
  return t.transcript.utt_id;
}

/// Ordered collection of utterances with unique ids.
template <class Entry>
class BasicCorpus {
 public:
  void add(Entry entry) {
    const std::string& id = id_of(entry);
    if (id.empty()) throw DataError("empty utt_id");
    if (index_.count(id)) throw DataError("duplicate utt_id " + id);
    index_.emplace(id, entries_.size());
    entries_.push_back(std::move(entry));
  }

  bool contains(const std::string& id) const { return index_.count(id) > 0; }

  /// nullptr when absent.
  const Entry* find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const Entry& at(std::size_t i) const { return entries_[i]; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Corpus = BasicCorpus<Transcript>;
using LabeledCorpus = BasicCorpus<LabeledTranscript>;

/// The same utterance seen from two sides (e.g. a reference and a hypothesis).
struct UttPair {
  std::string utt_id;
  Tokens a;  // reference side
  Tokens b;  // hypothesis side
};

/// Utterance-paired corpora; every id appears on both sides exactly once.
struct ParallelCorpus {
  std::vector<UttPair> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  auto begin() const { return pairs.begin(); }
  auto end() const { return pairs.end(); }
};

}  // namespace sgec

#endif  // SGEC_TYPES_HPP_
