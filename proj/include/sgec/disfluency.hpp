// sgec/disfluency.hpp

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

#ifndef SGEC_DISFLUENCY_HPP_
#define SGEC_DISFLUENCY_HPP_

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgec/alignment.hpp"
#include "sgec/error.hpp"
#include "sgec/prf.hpp"
#include "sgec/types.hpp"

namespace sgec {

/// Rule-based disfluency tagger configuration.  A rule is disabled by
/// emptying its set; max_repeat_span must stay >= 1.
struct DisfluencyRules {
  std::set<std::string> fillers = {"uh",     "um",     "uhm", "er",
                                   "uh-huh", "uh-hum", "mm"};
  std::set<std::pair<std::string, std::string>> phrase_fillers = {
      {"you", "know"}, {"i", "mean"}};
  std::size_t max_repeat_span = 2;
};

/// Labels 1: filler tokens, phrase-filler bigrams, and the first copy of any
/// immediately repeated n-gram with n <= max_repeat_span.
inline Labels tag_disfluencies(std::span<const std::string> tokens,
                               const DisfluencyRules& rules = {}) {
  if (rules.max_repeat_span < 1)
    throw UsageError("max_repeat_span must be >= 1");
  Labels labels(tokens.size(), 0);
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (rules.fillers.count(tokens[i])) labels[i] = 1;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i)
    if (rules.phrase_fillers.count({tokens[i], tokens[i + 1]})) {
      labels[i] = 1;
      labels[i + 1] = 1;
    }
  for (std::size_t n = 1; n <= rules.max_repeat_span; ++n) {
    for (std::size_t i = 0; i + 2 * n <= tokens.size(); ++i) {
      bool repeat = true;
      for (std::size_t k = 0; k < n; ++k)
        if (tokens[i + k] != tokens[i + n + k]) {
          repeat = false;
          break;
        }
      if (repeat)
        for (std::size_t k = 0; k < n; ++k) labels[i + k] = 1;
    }
  }
  return labels;
}

inline Labels tag_disfluencies(const Tokens& tokens,
                               const DisfluencyRules& rules = {}) {
  return tag_disfluencies(std::span<const std::string>(tokens), rules);
}

/// Keeps the 0-labeled tokens, order preserved.
inline Transcript remove_disfluencies(const LabeledTranscript& labeled) {
  if (labeled.labels.size() != labeled.transcript.tokens.size())
    throw DataError("label count mismatch for utt_id " +
                    labeled.transcript.utt_id);
  Transcript out;
  out.utt_id = labeled.transcript.utt_id;
  for (std::size_t i = 0; i < labeled.labels.size(); ++i)
    if (!labeled.labels[i]) out.tokens.push_back(labeled.transcript.tokens[i]);
  return out;
}

/// Gold labels carried from manual tokens onto hypothesis tokens.
struct ProjectedLabels {
  LabeledTranscript labeled;
  /// Gold positives that sat on reference-only (deleted) tokens.
  std::size_t unprojected = 0;
};

/// Aligns the manual transcript to the hypothesis and carries each gold
/// label across Match and Substitute ops.  Hypothesis-only tokens get 0;
/// positives on reference-only tokens are dropped and tallied.
inline ProjectedLabels project_labels(const LabeledTranscript& gold,
                                      const Transcript& hyp_dsf) {
  if (gold.labels.size() != gold.transcript.tokens.size())
    throw DataError("label count mismatch for utt_id " +
                    gold.transcript.utt_id);
  const Alignment a = align(gold.transcript.tokens, hyp_dsf.tokens);
  ProjectedLabels out;
  out.labeled.transcript = hyp_dsf;
  out.labeled.labels.assign(hyp_dsf.tokens.size(), 0);
  for (const auto& op : a.ops) {
    switch (op.kind) {
      case OpKind::Match:
      case OpKind::Substitute:
        out.labeled.labels[*op.hyp_index] = gold.labels[*op.ref_index];
        break;
      case OpKind::Delete:
        if (gold.labels[*op.ref_index]) ++out.unprojected;
        break;
      case OpKind::Insert:
        break;  // stays 0
    }
  }
  return out;
}

/// Deletion-based disfluency prediction: aligns the disfluent hypothesis
/// (reference side) against the fluent hypothesis and predicts 1 exactly for
/// tokens consumed by Delete ops.  Substitutions predict 0.
inline Labels deletion_predictions(const Transcript& hyp_dsf,
                                   const Transcript& hyp_flt) {
  const Alignment a = align(hyp_dsf.tokens, hyp_flt.tokens);
  Labels pred(hyp_dsf.tokens.size(), 0);
  for (const auto& op : a.ops)
    if (op.kind == OpKind::Delete) pred[*op.ref_index] = 1;
  return pred;
}

enum class Averaging { Macro, Micro };

inline const char* averaging_name(Averaging a) {
  return a == Averaging::Macro ? "macro" : "micro";
}

/// Per-utterance gold/predicted label pair for scoring.
struct DdExample {
  std::string utt_id;
  Labels gold;
  Labels pred;
};

struct DdScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t n_utts = 0;
  Averaging averaging = Averaging::Macro;
};

/// Token-level precision/recall/F1 over binary disfluency labels.
///
/// Macro averages the per-utterance scores (F1 averaged directly, not
/// recomputed from averaged P/R); micro pools the counts first.  Empty
/// utterances score 100 under the zero-denominator convention of
/// prf_from_counts.
inline DdScore dd_score(std::span<const DdExample> examples,
                        Averaging averaging) {
  DdScore out;
  out.averaging = averaging;
  out.n_utts = examples.size();
  if (examples.empty()) return out;

  std::size_t tp = 0, fp = 0, fn = 0;
  double p_sum = 0.0, r_sum = 0.0, f_sum = 0.0;
  for (const auto& ex : examples) {
    if (ex.gold.size() != ex.pred.size())
      throw DataError("label count mismatch for utt_id " + ex.utt_id);
    std::size_t utt_tp = 0, utt_fp = 0, utt_fn = 0;
    for (std::size_t i = 0; i < ex.gold.size(); ++i) {
      if (ex.pred[i] && ex.gold[i]) ++utt_tp;
      else if (ex.pred[i]) ++utt_fp;
      else if (ex.gold[i]) ++utt_fn;
    }
    tp += utt_tp;
    fp += utt_fp;
    fn += utt_fn;
    const Prf prf = prf_from_counts(utt_tp, utt_fp, utt_fn, 1.0);
    p_sum += prf.precision;
    r_sum += prf.recall;
    f_sum += prf.f;
  }

  if (averaging == Averaging::Macro) {
    const double n = static_cast<double>(examples.size());
    out.precision = p_sum / n;
    out.recall = r_sum / n;
    out.f1 = f_sum / n;
  } else {
    const Prf prf = prf_from_counts(tp, fp, fn, 1.0);
    out.precision = prf.precision;
    out.recall = prf.recall;
    out.f1 = prf.f;
  }
  return out;
}

}  // namespace sgec

#endif  // SGEC_DISFLUENCY_HPP_
