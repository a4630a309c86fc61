// sgec/ter.hpp

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

#ifndef SGEC_TER_HPP_
#define SGEC_TER_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sgec/alignment.hpp"
#include "sgec/parallel.hpp"
#include "sgec/types.hpp"

namespace sgec {

struct TerOptions {
  std::size_t max_shifts = 10;
  std::size_t max_block_len = 10;
};

/// Translation edit rate: edit distance plus block shifts, each shift
/// costing 1 regardless of block length.
struct TerScore {
  std::size_t shifts = 0;
  std::size_t subs = 0;
  std::size_t dels = 0;
  std::size_t ins = 0;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;
  std::size_t n_utts = 0;

  std::size_t max_shifts = 0;
  std::size_t max_block_len = 0;
  bool shift_cap_hit = false;  // search stopped while a reducing shift remained
  bool block_cap_hit = false;  // a matching block longer than the cap existed

  bool empty_input = false;
  bool undefined_ref = false;

  double ter = 0.0;

  std::size_t edits() const { return shifts + subs + dels + ins; }

  void finish() {
    if (ref_len == 0 && hyp_len == 0) {
      empty_input = true;
      ter = 0.0;
      return;
    }
    std::size_t denom = ref_len;
    if (ref_len == 0) {
      undefined_ref = true;
      denom = hyp_len;
    }
    ter = 100.0 * static_cast<double>(edits()) / static_cast<double>(denom);
  }
};

namespace detail {

// True iff block occurs as a contiguous substring of ref.
inline bool is_ref_substring(std::span<const std::string> ref,
                             std::span<const std::string> block) {
  if (block.size() > ref.size()) return false;
  for (std::size_t s = 0; s + block.size() <= ref.size(); ++s) {
    bool ok = true;
    for (std::size_t k = 0; k < block.size(); ++k)
      if (ref[s + k] != block[k]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// Hypothesis tokens covered by Substitute or Insert ops are misaligned.
inline std::vector<char> hyp_misaligned(const Alignment& a) {
  std::vector<char> err(a.hyp_len, 0);
  for (const auto& op : a.ops)
    if (op.hyp_index &&
        (op.kind == OpKind::Substitute || op.kind == OpKind::Insert))
      err[*op.hyp_index] = 1;
  return err;
}

// Removes [start, start+len) and reinserts it at position dest of the
// remaining sequence.
inline Tokens apply_shift(const Tokens& seq, std::size_t start,
                          std::size_t len, std::size_t dest) {
  Tokens rest;
  rest.reserve(seq.size());
  rest.insert(rest.end(), seq.begin(), seq.begin() + start);
  rest.insert(rest.end(), seq.begin() + start + len, seq.end());
  Tokens out;
  out.reserve(seq.size());
  out.insert(out.end(), rest.begin(), rest.begin() + dest);
  out.insert(out.end(), seq.begin() + start, seq.begin() + start + len);
  out.insert(out.end(), rest.begin() + dest, rest.end());
  return out;
}

struct ShiftCandidate {
  std::size_t start = 0;
  std::size_t len = 0;
  std::size_t dest = 0;
  std::size_t new_edits = 0;
  bool found = false;
};

// Greedy step: the shift with the largest edit-distance reduction.  Ties go
// to the leftmost block start, then the longest block, then the leftmost
// destination.  Blocks must exactly match a reference substring and contain
// at least one currently misaligned word.
inline ShiftCandidate best_shift(std::span<const std::string> ref,
                                 const Tokens& hyp, std::size_t cur_edits,
                                 const TerOptions& opt, bool* block_cap_hit) {
  ShiftCandidate best;
  const Alignment a = align(ref, std::span<const std::string>(hyp));
  const std::vector<char> err = hyp_misaligned(a);
  for (std::size_t start = 0; start < hyp.size(); ++start) {
    const std::size_t max_len =
        std::min(opt.max_block_len, hyp.size() - start);
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::span<const std::string> block(hyp.data() + start, len);
      // A prefix that fails to match cannot be extended into a match.
      if (!is_ref_substring(ref, block)) break;
      if (len == opt.max_block_len && start + len < hyp.size() &&
          is_ref_substring(ref, std::span<const std::string>(
                                    hyp.data() + start, len + 1)))
        *block_cap_hit = true;
      bool has_err = false;
      for (std::size_t k = start; k < start + len; ++k)
        if (err[k]) {
          has_err = true;
          break;
        }
      if (!has_err) continue;
      for (std::size_t dest = 0; dest + len <= hyp.size(); ++dest) {
        if (dest == start) continue;  // no-op
        const Tokens moved = apply_shift(hyp, start, len, dest);
        const std::size_t e = edit_distance(ref, moved);
        if (e >= cur_edits) continue;  // must strictly reduce
        if (!best.found || e < best.new_edits ||
            (e == best.new_edits &&
             (start < best.start ||
              (start == best.start &&
               (len > best.len || (len == best.len && dest < best.dest)))))) {
          best = ShiftCandidate{start, len, dest, e, true};
        }
      }
    }
  }
  return best;
}

}  // namespace detail

/// Snover-style greedy TER.  Each round picks the admissible block shift
/// that maximally reduces the remaining edit distance and charges 1 for it;
/// leftover edits are scored by the alignment module.  The search stops when
/// no shift strictly reduces the remainder or the shift cap is reached.
inline TerScore ter(std::span<const std::string> ref,
                    std::span<const std::string> hyp,
                    const TerOptions& opt = {}) {
  TerScore score;
  score.ref_len = ref.size();
  score.hyp_len = hyp.size();
  score.n_utts = 1;
  score.max_shifts = opt.max_shifts;
  score.max_block_len = opt.max_block_len;

  Tokens cur(hyp.begin(), hyp.end());
  std::size_t cur_edits = edit_distance(ref, hyp);
  while (true) {
    const auto cand =
        detail::best_shift(ref, cur, cur_edits, opt, &score.block_cap_hit);
    if (!cand.found) break;
    if (score.shifts == opt.max_shifts) {
      score.shift_cap_hit = true;
      break;
    }
    cur = detail::apply_shift(cur, cand.start, cand.len, cand.dest);
    cur_edits = cand.new_edits;
    ++score.shifts;
  }

  const Alignment final_align = align(ref, std::span<const std::string>(cur));
  score.subs = final_align.count(OpKind::Substitute);
  score.dels = final_align.count(OpKind::Delete);
  score.ins = final_align.count(OpKind::Insert);
  score.finish();
  return score;
}

inline TerScore ter(const Tokens& ref, const Tokens& hyp,
                    const TerOptions& opt = {}) {
  return ter(std::span<const std::string>(ref),
             std::span<const std::string>(hyp), opt);
}

/// Pooled corpus TER: edit counts and reference lengths summed over
/// utterances, rate computed once.  Cap flags are OR-ed.
inline TerScore corpus_ter(const ParallelCorpus& pairs,
                           const TerOptions& opt = {}, unsigned threads = 1) {
  std::vector<TerScore> per_utt(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    per_utt[i] = ter(pairs.pairs[i].a, pairs.pairs[i].b, opt);
  });
  TerScore out;
  out.n_utts = pairs.size();
  out.max_shifts = opt.max_shifts;
  out.max_block_len = opt.max_block_len;
  for (const auto& s : per_utt) {
    out.shifts += s.shifts;
    out.subs += s.subs;
    out.dels += s.dels;
    out.ins += s.ins;
    out.ref_len += s.ref_len;
    out.hyp_len += s.hyp_len;
    out.shift_cap_hit = out.shift_cap_hit || s.shift_cap_hit;
    out.block_cap_hit = out.block_cap_hit || s.block_cap_hit;
  }
  out.finish();
  if (pairs.empty()) out.empty_input = true;
  return out;
}

}  // namespace sgec

#endif  // SGEC_TER_HPP_
