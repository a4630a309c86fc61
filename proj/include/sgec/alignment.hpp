// sgec/alignment.hpp

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

#ifndef SGEC_ALIGNMENT_HPP_
#define SGEC_ALIGNMENT_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgec/error.hpp"
#include "sgec/parallel.hpp"
#include "sgec/types.hpp"

namespace sgec {

enum class OpKind { Match, Substitute, Delete, Insert };

inline const char* op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::Match: return "Match";
    case OpKind::Substitute: return "Substitute";
    case OpKind::Delete: return "Delete";
    case OpKind::Insert: return "Insert";
  }
  return "?";
}

/// One alignment step.  Match/Substitute carry both indices, Delete carries
/// only the reference index, Insert only the hypothesis index.
struct AlignOp {
  OpKind kind;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;
};

/// Minimum-edit-distance word alignment between a reference and a hypothesis.
struct Alignment {
  std::vector<AlignOp> ops;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;

  std::size_t count(OpKind k) const {
    std::size_t n = 0;
    for (const auto& op : ops)
      if (op.kind == k) ++n;
    return n;
  }

  /// S + D + I.
  std::size_t cost() const {
    return ops.size() - count(OpKind::Match);
  }

  /// Checks index coverage and op-count conservation; throws on violation.
  void check_invariants(std::span<const std::string> ref,
                        std::span<const std::string> hyp) const {
    std::size_t next_ref = 0, next_hyp = 0;
    for (const auto& op : ops) {
      const bool has_ref = op.ref_index.has_value();
      const bool has_hyp = op.hyp_index.has_value();
      switch (op.kind) {
        case OpKind::Match:
        case OpKind::Substitute:
          if (!has_ref || !has_hyp)
            throw std::logic_error("match/substitute op missing an index");
          if (*op.ref_index != next_ref || *op.hyp_index != next_hyp)
            throw std::logic_error("alignment indices out of order");
          if ((ref[*op.ref_index] == hyp[*op.hyp_index]) !=
              (op.kind == OpKind::Match))
            throw std::logic_error("op kind inconsistent with token equality");
          ++next_ref;
          ++next_hyp;
          break;
        case OpKind::Delete:
          if (!has_ref || has_hyp)
            throw std::logic_error("delete op must carry only a ref index");
          if (*op.ref_index != next_ref)
            throw std::logic_error("alignment indices out of order");
          ++next_ref;
          break;
        case OpKind::Insert:
          if (has_ref || !has_hyp)
            throw std::logic_error("insert op must carry only a hyp index");
          if (*op.hyp_index != next_hyp)
            throw std::logic_error("alignment indices out of order");
          ++next_hyp;
          break;
      }
    }
    if (next_ref != ref_len || next_hyp != hyp_len)
      throw std::logic_error("alignment does not cover both sequences");
  }
};

/// Edit-distance cost only (two-row DP); used where the backtrace is not
/// needed, e.g. inside the TER shift search.
inline std::size_t edit_distance(std::span<const std::string> ref,
                                 std::span<const std::string> hyp) {
  const std::size_t m = ref.size(), n = hyp.size();
  std::vector<std::uint32_t> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t sub = prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

/// Word-level minimum-edit-distance alignment with unit costs.
///
/// Cost ties are resolved deterministically: at each backtrace step the
/// diagonal (Match/Substitute) is preferred over Delete, and Delete over
/// Insert.  The tie-break matters downstream — deletion-based disfluency
/// prediction lands deletions on the earliest copy of repeated tokens.
inline Alignment align(std::span<const std::string> ref,
                       std::span<const std::string> hyp) {
  const std::size_t m = ref.size(), n = hyp.size();
  // Full cost matrix; utterances are sentence-sized.
  std::vector<std::uint32_t> dp((m + 1) * (n + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return dp[i * (n + 1) + j];
  };
  for (std::size_t i = 0; i <= m; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= n; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t sub =
          at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({sub, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  Alignment out;
  out.ref_len = m;
  out.hyp_len = n;
  out.ops.reserve(std::max(m, n));
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    const std::uint32_t here = at(i, j);
    if (i > 0 && j > 0) {
      const bool eq = ref[i - 1] == hyp[j - 1];
      if (at(i - 1, j - 1) + (eq ? 0 : 1) == here) {
        out.ops.push_back(AlignOp{eq ? OpKind::Match : OpKind::Substitute,
                                  i - 1, j - 1});
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && at(i - 1, j) + 1 == here) {
      out.ops.push_back(AlignOp{OpKind::Delete, i - 1, std::nullopt});
      --i;
      continue;
    }
    out.ops.push_back(AlignOp{OpKind::Insert, std::nullopt, j - 1});
    --j;
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

inline Alignment align(const Tokens& ref, const Tokens& hyp) {
  return align(std::span<const std::string>(ref),
               std::span<const std::string>(hyp));
}

// ---------------------------------------------------------------------------
// WER
// ---------------------------------------------------------------------------

/// WER with Sub/Del/Ins breakdown.  Percentages are against ref_len; when the
/// reference is empty but the hypothesis is not, the rate is reported against
/// hyp_len and the report is flagged undefined_ref.
struct WerReport {
  std::size_t matches = 0;
  std::size_t subs = 0;
  std::size_t dels = 0;
  std::size_t ins = 0;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;
  std::size_t n_utts = 0;

  bool empty_input = false;   // no tokens on either side
  bool undefined_ref = false; // ref empty, hyp tokens present

  double wer = 0.0;
  double sub_pct = 0.0;
  double del_pct = 0.0;
  double ins_pct = 0.0;

  /// Mean of per-utterance WERs; set by corpus_wer only.
  std::optional<double> macro_wer;

  std::size_t errors() const { return subs + dels + ins; }

  static WerReport from_counts(std::size_t matches, std::size_t subs,
                               std::size_t dels, std::size_t ins,
                               std::size_t ref_len, std::size_t hyp_len,
                               std::size_t n_utts) {
    WerReport r;
    r.matches = matches;
    r.subs = subs;
    r.dels = dels;
    r.ins = ins;
    r.ref_len = ref_len;
    r.hyp_len = hyp_len;
    r.n_utts = n_utts;
    if (ref_len == 0 && hyp_len == 0) {
      r.empty_input = true;
      return r;  // all rates 0
    }
    std::size_t denom = ref_len;
    if (ref_len == 0) {
      r.undefined_ref = true;
      denom = hyp_len;
    }
    r.wer = 100.0 * static_cast<double>(r.errors()) / static_cast<double>(denom);
    r.sub_pct = 100.0 * static_cast<double>(subs) / static_cast<double>(denom);
    r.del_pct = 100.0 * static_cast<double>(dels) / static_cast<double>(denom);
    r.ins_pct = 100.0 * static_cast<double>(ins) / static_cast<double>(denom);
    return r;
  }
};

/// Reads the error counts off an alignment.
inline WerReport wer(const Alignment& a) {
  return WerReport::from_counts(a.count(OpKind::Match),
                                a.count(OpKind::Substitute),
                                a.count(OpKind::Delete),
                                a.count(OpKind::Insert), a.ref_len, a.hyp_len,
                                1);
}

/// Pooled (micro) corpus WER: counts are summed over utterances and the
/// formula is applied once.  The per-utterance mean is exposed as macro_wer.
inline WerReport corpus_wer(const ParallelCorpus& pairs, unsigned threads = 1) {
  std::vector<WerReport> per_utt(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    per_utt[i] = wer(align(pairs.pairs[i].a, pairs.pairs[i].b));
  });
  std::size_t matches = 0, subs = 0, dels = 0, ins = 0, ref_len = 0,
              hyp_len = 0;
  double wer_sum = 0.0;
  for (const auto& r : per_utt) {
    matches += r.matches;
    subs += r.subs;
    dels += r.dels;
    ins += r.ins;
    ref_len += r.ref_len;
    hyp_len += r.hyp_len;
    wer_sum += r.wer;
  }
  WerReport out = WerReport::from_counts(matches, subs, dels, ins, ref_len,
                                         hyp_len, pairs.size());
  if (pairs.empty())
    out.empty_input = true;
  else
    out.macro_wer = wer_sum / static_cast<double>(pairs.size());
  return out;
}

}  // namespace sgec

#endif  // SGEC_ALIGNMENT_HPP_
