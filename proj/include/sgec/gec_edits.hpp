// sgec/gec_edits.hpp

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

#ifndef SGEC_GEC_EDITS_HPP_
#define SGEC_GEC_EDITS_HPP_

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgec/alignment.hpp"
#include "sgec/corpus_io.hpp"
#include "sgec/error.hpp"
#include "sgec/lexicon.hpp"
#include "sgec/prf.hpp"
#include "sgec/types.hpp"

namespace sgec {

// ---------------------------------------------------------------------------
// Edit labels
// ---------------------------------------------------------------------------

/// R = replace, M = missing (pure insertion), U = unnecessary (pure deletion).
enum class EditPrefix { Replace, Missing, Unnecessary };

enum class EditCategory {
  Det,
  Prep,
  Pron,
  Conj,
  Noun,
  NounNum,
  Verb,
  VerbForm,
  VerbTense,
  VerbSva,
  Adj,
  Adv,
  Other
};

inline const char* edit_prefix_name(EditPrefix p) {
  switch (p) {
    case EditPrefix::Replace: return "R";
    case EditPrefix::Missing: return "M";
    case EditPrefix::Unnecessary: return "U";
  }
  return "?";
}

inline const char* edit_category_name(EditCategory c) {
  switch (c) {
    case EditCategory::Det: return "DET";
    case EditCategory::Prep: return "PREP";
    case EditCategory::Pron: return "PRON";
    case EditCategory::Conj: return "CONJ";
    case EditCategory::Noun: return "NOUN";
    case EditCategory::NounNum: return "NOUN:NUM";
    case EditCategory::Verb: return "VERB";
    case EditCategory::VerbForm: return "VERB:FORM";
    case EditCategory::VerbTense: return "VERB:TENSE";
    case EditCategory::VerbSva: return "VERB:SVA";
    case EditCategory::Adj: return "ADJ";
    case EditCategory::Adv: return "ADV";
    case EditCategory::Other: return "OTHER";
  }
  return "?";
}

struct EditLabel {
  EditPrefix prefix = EditPrefix::Replace;
  EditCategory category = EditCategory::Other;

  bool operator==(const EditLabel&) const = default;
  bool operator<(const EditLabel& o) const {
    return str() < o.str();
  }

  std::string str() const {
    return std::string(edit_prefix_name(prefix)) + ":" +
           edit_category_name(category);
  }

  static EditLabel parse(std::string_view s) {
    EditLabel out;
    if (s.size() < 3 || s[1] != ':')
      throw DataError("bad edit label '" + std::string(s) + "'");
    switch (s[0]) {
      case 'R': out.prefix = EditPrefix::Replace; break;
      case 'M': out.prefix = EditPrefix::Missing; break;
      case 'U': out.prefix = EditPrefix::Unnecessary; break;
      default:
        throw DataError("bad edit label '" + std::string(s) + "'");
    }
    const std::string_view cat = s.substr(2);
    static const std::pair<const char*, EditCategory> kCats[] = {
        {"DET", EditCategory::Det},
        {"PREP", EditCategory::Prep},
        {"PRON", EditCategory::Pron},
        {"CONJ", EditCategory::Conj},
        {"NOUN", EditCategory::Noun},
        {"NOUN:NUM", EditCategory::NounNum},
        {"VERB", EditCategory::Verb},
        {"VERB:FORM", EditCategory::VerbForm},
        {"VERB:TENSE", EditCategory::VerbTense},
        {"VERB:SVA", EditCategory::VerbSva},
        {"ADJ", EditCategory::Adj},
        {"ADV", EditCategory::Adv},
        {"OTHER", EditCategory::Other}};
    for (const auto& [name, value] : kCats)
      if (cat == name) {
        out.category = value;
        return out;
      }
    throw DataError("bad edit label '" + std::string(s) + "'");
  }
};

// ---------------------------------------------------------------------------
// Edits
// ---------------------------------------------------------------------------

/// A correction unit: replace source tokens [src_start, src_end) by the
/// replacement sequence.  Pure insertions have an empty span, pure deletions
/// an empty replacement; never both.
struct Edit {
  std::size_t src_start = 0;
  std::size_t src_end = 0;
  Tokens replacement;
  EditLabel label;
  bool clamped = false;  // set by shift_spans when a span hit a boundary

  bool is_insertion() const { return src_start == src_end; }
  bool is_deletion() const { return replacement.empty(); }

  /// Span+replacement identity; labels are diagnostic only.
  bool same_correction(const Edit& o) const {
    return src_start == o.src_start && src_end == o.src_end &&
           replacement == o.replacement;
  }
};

/// Extracts unlabeled edits between a source and a corrected sequence.
///
/// The alignment's maximal non-Match runs are re-paired canonically: the
/// leading min(#src, #cor) tokens of a run pair off as one substitution
/// edit, and the leftover tail becomes a separate pure insertion or pure
/// deletion.  An adjacent sub+insert run therefore yields two edits (the
/// replacement and a standalone missing-word edit) rather than one blob,
/// which is what the label set needs.
inline std::vector<Edit> extract_edits(std::span<const std::string> src,
                                       std::span<const std::string> cor) {
  const Alignment a = align(src, cor);
  std::vector<Edit> edits;
  std::size_t r = 0, h = 0;  // cursors into src and cor
  std::size_t i = 0;
  while (i < a.ops.size()) {
    if (a.ops[i].kind == OpKind::Match) {
      ++r;
      ++h;
      ++i;
      continue;
    }
    const std::size_t r0 = r, h0 = h;
    while (i < a.ops.size() && a.ops[i].kind != OpKind::Match) {
      switch (a.ops[i].kind) {
        case OpKind::Substitute: ++r; ++h; break;
        case OpKind::Delete: ++r; break;
        case OpKind::Insert: ++h; break;
        case OpKind::Match: break;
      }
      ++i;
    }
    const std::size_t nr = r - r0, nc = h - h0;
    const std::size_t k = std::min(nr, nc);
    if (k > 0) {
      Edit e;
      e.src_start = r0;
      e.src_end = r0 + k;
      e.replacement.assign(cor.begin() + h0, cor.begin() + h0 + k);
      edits.push_back(std::move(e));
    }
    if (nr > k) {
      Edit e;
      e.src_start = r0 + k;
      e.src_end = r;
      edits.push_back(std::move(e));
    } else if (nc > k) {
      Edit e;
      e.src_start = r;
      e.src_end = r;
      e.replacement.assign(cor.begin() + h0 + k, cor.begin() + h);
      edits.push_back(std::move(e));
    }
  }
  return edits;
}

inline std::vector<Edit> extract_edits(const Tokens& src, const Tokens& cor) {
  return extract_edits(std::span<const std::string>(src),
                       std::span<const std::string>(cor));
}

/// Applies edits to the source (right to left), reconstructing the
/// correction.  Edits must be sorted by src_start and non-overlapping, as
/// extract_edits produces them.
inline Tokens apply_edits(std::span<const std::string> src,
                          std::span<const Edit> edits) {
  Tokens out(src.begin(), src.end());
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    if (it->src_end > out.size() || it->src_start > it->src_end)
      throw DataError("edit span out of bounds");
    out.erase(out.begin() + it->src_start, out.begin() + it->src_end);
    out.insert(out.begin() + it->src_start, it->replacement.begin(),
               it->replacement.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace detail {

inline EditCategory single_token_category(const std::string& w,
                                          const Lexicon& lex) {
  if (lex.determiners.count(w)) return EditCategory::Det;
  if (lex.prepositions.count(w)) return EditCategory::Prep;
  if (lex.pronouns.count(w)) return EditCategory::Pron;
  if (lex.conjunctions.count(w)) return EditCategory::Conj;
  if (lex.analyze_noun(w)) return EditCategory::Noun;
  if (lex.analyze_verb(w)) return EditCategory::Verb;
  if (lex.known_adjective(w)) return EditCategory::Adj;
  if (Lexicon::ends_with(w, "ly")) return EditCategory::Adv;
  return EditCategory::Other;
}

// Comparative/superlative alternation on a shared stem (big/bigger,
// easy/easier, great/greatest).
inline bool adjective_grade_pair(const std::string& a, const std::string& b) {
  auto stems = [](const std::string& w) {
    std::vector<std::string> out;
    for (const char* suf : {"er", "est"}) {
      if (!Lexicon::ends_with(w, suf)) continue;
      const std::string stem = w.substr(0, w.size() - std::string(suf).size());
      if (stem.empty()) continue;
      out.push_back(stem);
      if (stem.size() >= 2 && stem.back() == 'i')
        out.push_back(stem.substr(0, stem.size() - 1) + "y");  // easier
      if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2])
        out.push_back(stem.substr(0, stem.size() - 1));  // bigger
      out.push_back(stem + "e");                         // nicer
    }
    return out;
  };
  for (const auto& s : stems(a))
    if (s == b) return true;
  for (const auto& s : stems(b))
    if (s == a) return true;
  return false;
}

inline EditCategory substitution_category(const std::string& a,
                                          const std::string& b,
                                          const Lexicon& lex) {
  // Closed sets first; both sides must sit in the same set.
  if (lex.determiners.count(a) && lex.determiners.count(b))
    return EditCategory::Det;
  if (lex.prepositions.count(a) && lex.prepositions.count(b))
    return EditCategory::Prep;
  if (lex.pronouns.count(a) && lex.pronouns.count(b))
    return EditCategory::Pron;
  if (lex.conjunctions.count(a) && lex.conjunctions.count(b))
    return EditCategory::Conj;

  // Noun number: same noun lemma, singular/plural flip.
  const auto na = lex.analyze_noun(a), nb = lex.analyze_noun(b);
  if (na && nb && na->lemma == nb->lemma && na->plural != nb->plural)
    return EditCategory::NounNum;

  // Verb alternations on a shared lemma.  Gerund involvement wins (form),
  // then past/participle (tense), then 3sg (agreement).
  const auto va = lex.analyze_verb(a), vb = lex.analyze_verb(b);
  if (va && vb && va->lemma == vb->lemma && va->form != vb->form) {
    auto has = [&](VerbForm f) { return va->form == f || vb->form == f; };
    if (has(VerbForm::Gerund)) return EditCategory::VerbForm;
    if (has(VerbForm::Past) || has(VerbForm::PastParticiple))
      return EditCategory::VerbTense;
    if (has(VerbForm::ThirdSg)) return EditCategory::VerbSva;
    return EditCategory::VerbForm;
  }
  if (va && vb && va->lemma != vb->lemma) return EditCategory::Verb;
  if (na && nb && na->lemma != nb->lemma) return EditCategory::Noun;

  // Suffix heuristics.
  if (lex.known_adjective(a) && lex.known_adjective(b))
    return EditCategory::Adj;
  if ((lex.known_adjective(a) || lex.known_adjective(b)) &&
      adjective_grade_pair(a, b))
    return EditCategory::Adj;
  if (Lexicon::ends_with(a, "ly") && Lexicon::ends_with(b, "ly") &&
      !lex.known_adjective(a) && !lex.known_adjective(b))
    return EditCategory::Adv;

  return EditCategory::Other;
}

}  // namespace detail

/// Deterministic rule-cascade classification.  The prefix comes from
/// span/replacement emptiness; single-token edits run through closed-set
/// membership, noun/verb morphology, and suffix heuristics; everything
/// multi-token or unresolved falls back to OTHER.
inline EditLabel classify_edit(const Edit& edit,
                               std::span<const std::string> src,
                               const Lexicon& lex = Lexicon::builtin()) {
  EditLabel label;
  const std::size_t span = edit.src_end - edit.src_start;
  if (span == 0 && edit.replacement.empty())
    throw DataError("edit with empty span and empty replacement");
  if (span == 0) {
    label.prefix = EditPrefix::Missing;
    label.category = edit.replacement.size() == 1
                         ? detail::single_token_category(edit.replacement[0],
                                                         lex)
                         : EditCategory::Other;
    return label;
  }
  if (edit.replacement.empty()) {
    label.prefix = EditPrefix::Unnecessary;
    label.category =
        span == 1 ? detail::single_token_category(src[edit.src_start], lex)
                  : EditCategory::Other;
    return label;
  }
  label.prefix = EditPrefix::Replace;
  label.category =
      span == 1 && edit.replacement.size() == 1
          ? detail::substitution_category(src[edit.src_start],
                                          edit.replacement[0], lex)
          : EditCategory::Other;
  return label;
}

/// Extracts and labels edits in one go.
inline std::vector<Edit> extract_classified_edits(
    std::span<const std::string> src, std::span<const std::string> cor,
    const Lexicon& lex = Lexicon::builtin()) {
  std::vector<Edit> edits = extract_edits(src, cor);
  for (Edit& e : edits) e.label = classify_edit(e, src, lex);
  return edits;
}

inline std::vector<Edit> extract_classified_edits(
    const Tokens& src, const Tokens& cor,
    const Lexicon& lex = Lexicon::builtin()) {
  return extract_classified_edits(std::span<const std::string>(src),
                                  std::span<const std::string>(cor), lex);
}

// ---------------------------------------------------------------------------
// Span shifting across ASR errors
// ---------------------------------------------------------------------------

/// Re-indexes hypothesis edits into reference-source coordinates.
///
/// asr_alignment must align the reference source transcript (reference side)
/// to the hypothesis source transcript (hypothesis side).  Each edit is
/// rigidly shifted by the number of reference-only tokens minus the number
/// of hypothesis-only tokens occurring strictly before its span; ASR errors
/// inside a span do not move it.  Shifted spans are clamped into reference
/// bounds and flagged when clamping changed them.
inline std::vector<Edit> shift_spans(std::span<const Edit> hyp_edits,
                                     const Alignment& asr_alignment) {
  // offset[p]: reference tokens consumed before hypothesis position p, minus
  // hypothesis-only tokens before p.
  const std::size_t hyp_len = asr_alignment.hyp_len;
  std::vector<long> offset(hyp_len + 1, 0);
  long dels = 0, inss = 0;
  std::size_t h = 0;
  for (const auto& op : asr_alignment.ops) {
    if (op.kind == OpKind::Delete) {
      ++dels;
      continue;
    }
    offset[h] = dels - inss;
    if (op.kind == OpKind::Insert) ++inss;
    ++h;
  }
  for (; h <= hyp_len; ++h) offset[h] = dels - inss;

  const long ref_len = static_cast<long>(asr_alignment.ref_len);
  std::vector<Edit> out;
  out.reserve(hyp_edits.size());
  for (const Edit& e : hyp_edits) {
    Edit shifted = e;
    const std::size_t anchor = std::min(e.src_start, hyp_len);
    const long off = offset[anchor];
    long start = static_cast<long>(e.src_start) + off;
    long end = static_cast<long>(e.src_end) + off;
    const long cs = std::clamp(start, 0L, ref_len);
    const long ce = std::clamp(end, cs, ref_len);
    shifted.clamped = e.clamped || cs != start || ce != end;
    shifted.src_start = static_cast<std::size_t>(cs);
    shifted.src_end = static_cast<std::size_t>(ce);
    out.push_back(std::move(shifted));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matching and scoring
// ---------------------------------------------------------------------------

struct MatchResult {
  std::vector<std::pair<Edit, Edit>> matched;  // (hypothesis, reference)
  std::vector<Edit> unmatched_hyp;             // false positives
  std::vector<Edit> unmatched_ref;             // false negatives

  std::size_t tp() const { return matched.size(); }
  std::size_t fp() const { return unmatched_hyp.size(); }
  std::size_t fn() const { return unmatched_ref.size(); }
};

/// Greedy left-to-right one-to-one matching on identical
/// (src_start, src_end, replacement).  Label equality is not required;
/// labels feed the per-label report only.
inline MatchResult match_edits(std::span<const Edit> hyp_edits,
                               std::span<const Edit> ref_edits) {
  MatchResult out;
  std::vector<char> used(ref_edits.size(), 0);
  for (const Edit& h : hyp_edits) {
    bool found = false;
    for (std::size_t i = 0; i < ref_edits.size(); ++i) {
      if (used[i] || !h.same_correction(ref_edits[i])) continue;
      used[i] = 1;
      out.matched.emplace_back(h, ref_edits[i]);
      found = true;
      break;
    }
    if (!found) out.unmatched_hyp.push_back(h);
  }
  for (std::size_t i = 0; i < ref_edits.size(); ++i)
    if (!used[i]) out.unmatched_ref.push_back(ref_edits[i]);
  return out;
}

struct GecScore {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_beta = 0.0;
  double beta = 0.5;
};

/// Corpus-level (micro) P/R/F-beta from pooled edit counts.
inline GecScore gec_score(std::size_t tp, std::size_t fp, std::size_t fn,
                          double beta = 0.5) {
  if (beta <= 0.0) throw UsageError("beta must be positive");
  GecScore s;
  s.tp = tp;
  s.fp = fp;
  s.fn = fn;
  s.beta = beta;
  const Prf prf = prf_from_counts(tp, fp, fn, beta);
  s.precision = prf.precision;
  s.recall = prf.recall;
  s.f_beta = prf.f;
  return s;
}

/// Per-label scores.  A matched pair counts as TP of a label only when both
/// sides carry it; a label mismatch counts as FP of the hypothesis label and
/// FN of the reference label, like unmatched edits do.
inline std::map<std::string, GecScore> per_label_score(
    const MatchResult& match, double beta = 0.5) {
  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;
  };
  std::map<std::string, Counts> counts;
  for (const auto& [h, r] : match.matched) {
    if (h.label == r.label) {
      ++counts[h.label.str()].tp;
    } else {
      ++counts[h.label.str()].fp;
      ++counts[r.label.str()].fn;
    }
  }
  for (const Edit& h : match.unmatched_hyp) ++counts[h.label.str()].fp;
  for (const Edit& r : match.unmatched_ref) ++counts[r.label.str()].fn;

  std::map<std::string, GecScore> out;
  for (const auto& [label, c] : counts)
    out.emplace(label, gec_score(c.tp, c.fp, c.fn, beta));
  return out;
}

/// Label counts sorted by descending count, ties lexicographic, truncated to
/// top_n.  OTHER is excluded unless include_other is set.
inline std::vector<std::pair<std::string, std::size_t>> label_histogram(
    std::span<const Edit> edits, std::size_t top_n,
    bool include_other = false) {
  std::map<std::string, std::size_t> counts;
  for (const Edit& e : edits) {
    if (!include_other && e.label.category == EditCategory::Other) continue;
    ++counts[e.label.str()];
  }
  std::vector<std::pair<std::string, std::size_t>> out(counts.begin(),
                                                       counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (out.size() > top_n) out.resize(top_n);
  return out;
}

// ---------------------------------------------------------------------------
// M2-style serialization
// ---------------------------------------------------------------------------

/// One utterance with its source tokens and extracted edits.
struct AnnotatedUtt {
  std::string utt_id;
  Tokens src;
  std::vector<Edit> edits;
};

/// M2-style output: a source line, then one `A <start> <end>|||<label>|||
/// <replacement>` line per edit; utterances separated by blank lines.
inline std::string emit_m2(std::span<const AnnotatedUtt> utts) {
  std::string out;
  bool first = true;
  for (const auto& u : utts) {
    if (!first) out += '\n';
    first = false;
    out += 'S';
    for (const auto& tok : u.src) {
      out += ' ';
      out += tok;
    }
    out += '\n';
    for (const Edit& e : u.edits) {
      out += "A " + std::to_string(e.src_start) + " " +
             std::to_string(e.src_end) + "|||" + e.label.str() + "|||";
      for (std::size_t i = 0; i < e.replacement.size(); ++i) {
        if (i) out += ' ';
        out += e.replacement[i];
      }
      out += '\n';
    }
  }
  return out;
}

inline std::vector<AnnotatedUtt> parse_m2(std::string_view text) {
  std::vector<AnnotatedUtt> out;
  AnnotatedUtt* cur = nullptr;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = lines[ln];
    if (line.empty()) {
      cur = nullptr;
      continue;
    }
    if (line == "S" || line.substr(0, 2) == "S ") {
      out.emplace_back();
      cur = &out.back();
      if (line.size() > 2)
        for (auto& tok : detail::split_fields(line.substr(2)))
          cur->src.push_back(std::move(tok));
      continue;
    }
    if (line.substr(0, 2) == "A ") {
      if (!cur)
        throw DataError("m2 line " + std::to_string(ln + 1) +
                        ": edit before any source line");
      const std::string_view rest = line.substr(2);
      const std::size_t bar = rest.find("|||");
      if (bar == std::string_view::npos)
        throw DataError("m2 line " + std::to_string(ln + 1) +
                        ": missing ||| separator");
      const std::string_view span_part = rest.substr(0, bar);
      const std::string_view tail = rest.substr(bar + 3);
      const std::size_t bar2 = tail.find("|||");
      if (bar2 == std::string_view::npos)
        throw DataError("m2 line " + std::to_string(ln + 1) +
                        ": missing second ||| separator");
      Edit e;
      const std::size_t sp = span_part.find(' ');
      if (sp == std::string_view::npos)
        throw DataError("m2 line " + std::to_string(ln + 1) +
                        ": bad span field");
      try {
        e.src_start = std::stoul(std::string(span_part.substr(0, sp)));
        e.src_end = std::stoul(std::string(span_part.substr(sp + 1)));
      } catch (const std::exception&) {
        throw DataError("m2 line " + std::to_string(ln + 1) +
                        ": bad span field");
      }
      if (e.src_start > e.src_end || e.src_end > cur->src.size())
        throw DataError("m2 line " + std::to_string(ln + 1) +
                        ": span out of bounds");
      e.label = EditLabel::parse(tail.substr(0, bar2));
      const std::string_view repl = tail.substr(bar2 + 3);
      if (!repl.empty())
        for (auto& tok : detail::split_fields(repl))
          e.replacement.push_back(std::move(tok));
      if (e.src_start == e.src_end && e.replacement.empty())
        throw DataError("m2 line " + std::to_string(ln + 1) +
                        ": empty span and empty replacement");
      cur->edits.push_back(std::move(e));
      continue;
    }
    throw DataError("m2 line " + std::to_string(ln + 1) +
                    ": expected S or A line");
  }
  return out;
}

}  // namespace sgec

#endif  // SGEC_GEC_EDITS_HPP_
