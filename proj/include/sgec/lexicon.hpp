// sgec/lexicon.hpp

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

#ifndef SGEC_LEXICON_HPP_
#define SGEC_LEXICON_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgec/error.hpp"

namespace sgec {

enum class VerbForm { Base, Past, PastParticiple, ThirdSg, Gerund };

struct VerbForms {
  std::string past;
  std::string past_participle;
  std::string third_sg;
  std::string gerund;
};

/// Embedded vocabulary backing the edit classifier and the synthetic
/// generator.  An external POS tagger is deliberately avoided: the closed
/// sets and word lists below, plus light morphology, cover the label set.
/// Closed sets must be pairwise disjoint; the open-class lists are kept
/// disjoint as well so that classification is unambiguous.
struct Lexicon {
  std::set<std::string> determiners;
  std::set<std::string> prepositions;
  std::set<std::string> pronouns;
  std::set<std::string> conjunctions;
  std::map<std::string, VerbForms> irregular_verbs;  // base -> forms
  std::map<std::string, std::string> irregular_nouns;  // singular -> plural
  std::set<std::string> verbs;       // regular verb bases
  std::set<std::string> nouns;       // singular nouns
  std::set<std::string> adjectives;
  // Forms that do not fit the base->forms table (the copula).
  std::map<std::string, std::pair<std::string, VerbForm>> extra_verb_forms;

  void check_disjoint() const {
    const std::set<std::string>* sets[] = {&determiners, &prepositions,
                                           &pronouns, &conjunctions};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (const auto& w : *sets[i])
          if (sets[j]->count(w))
            throw UsageError("lexicon closed sets overlap on '" + w + "'");
  }

  struct VerbAnalysis {
    std::string lemma;
    VerbForm form;
  };

  struct NounAnalysis {
    std::string lemma;
    bool plural;
  };

  bool known_verb_base(const std::string& w) const {
    return verbs.count(w) || irregular_verbs.count(w);
  }

  /// Lemma and form when the word is a recognizable verb form.
  std::optional<VerbAnalysis> analyze_verb(const std::string& w) const {
    if (auto it = extra_verb_forms.find(w); it != extra_verb_forms.end())
      return VerbAnalysis{it->second.first, it->second.second};
    if (irregular_verbs.count(w)) return VerbAnalysis{w, VerbForm::Base};
    for (const auto& [base, f] : irregular_verbs) {
      if (w == f.past) return VerbAnalysis{base, VerbForm::Past};
      if (w == f.past_participle)
        return VerbAnalysis{base, VerbForm::PastParticiple};
      if (w == f.third_sg) return VerbAnalysis{base, VerbForm::ThirdSg};
      if (w == f.gerund) return VerbAnalysis{base, VerbForm::Gerund};
    }
    if (verbs.count(w)) return VerbAnalysis{w, VerbForm::Base};
    // Regular morphology against the known bases.
    for (const std::string& base : strip_s_candidates(w))
      if (verbs.count(base)) return VerbAnalysis{base, VerbForm::ThirdSg};
    for (const std::string& base : strip_ed_candidates(w))
      if (verbs.count(base)) return VerbAnalysis{base, VerbForm::Past};
    for (const std::string& base : strip_ing_candidates(w))
      if (verbs.count(base)) return VerbAnalysis{base, VerbForm::Gerund};
    return std::nullopt;
  }

  std::optional<NounAnalysis> analyze_noun(const std::string& w) const {
    if (irregular_nouns.count(w)) return NounAnalysis{w, false};
    for (const auto& [sg, pl] : irregular_nouns)
      if (w == pl) return NounAnalysis{sg, true};
    if (nouns.count(w)) return NounAnalysis{w, false};
    for (const std::string& base : strip_s_candidates(w))
      if (nouns.count(base)) return NounAnalysis{base, true};
    return std::nullopt;
  }

  bool known_adjective(const std::string& w) const {
    return adjectives.count(w) > 0;
  }

  // --- inflection (used by the synthetic generator) ---

  std::string pluralize(const std::string& noun) const {
    if (auto it = irregular_nouns.find(noun); it != irregular_nouns.end())
      return it->second;
    return add_s(noun);
  }

  std::string third_sg(const std::string& base) const {
    if (auto it = irregular_verbs.find(base); it != irregular_verbs.end())
      return it->second.third_sg;
    return add_s(base);
  }

  std::string past(const std::string& base) const {
    if (auto it = irregular_verbs.find(base); it != irregular_verbs.end())
      return it->second.past;
    if (ends_with(base, "e")) return base + "d";
    if (consonant_y(base)) return base.substr(0, base.size() - 1) + "ied";
    return base + "ed";
  }

  std::string gerund(const std::string& base) const {
    if (auto it = irregular_verbs.find(base); it != irregular_verbs.end())
      return it->second.gerund;
    if (base.size() > 1 && ends_with(base, "e") && !ends_with(base, "ee"))
      return base.substr(0, base.size() - 1) + "ing";
    return base + "ing";
  }

  // --- shared morphology helpers ---

  static bool ends_with(const std::string& w, const std::string& suf) {
    return w.size() >= suf.size() &&
           w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
  }

  static bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  }

  static bool consonant_y(const std::string& w) {
    return w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2]);
  }

  static std::string add_s(const std::string& w) {
    if (consonant_y(w)) return w.substr(0, w.size() - 1) + "ies";
    if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") ||
        ends_with(w, "ch") || ends_with(w, "sh"))
      return w + "es";
    return w + "s";
  }

  /// Possible bases for an s-inflected form (plural noun or 3sg verb).
  static std::vector<std::string> strip_s_candidates(const std::string& w) {
    std::vector<std::string> out;
    if (ends_with(w, "ies") && w.size() > 3)
      out.push_back(w.substr(0, w.size() - 3) + "y");
    if (ends_with(w, "es") && w.size() > 2)
      out.push_back(w.substr(0, w.size() - 2));
    if (ends_with(w, "s") && w.size() > 1)
      out.push_back(w.substr(0, w.size() - 1));
    return out;
  }

  static std::vector<std::string> strip_ed_candidates(const std::string& w) {
    std::vector<std::string> out;
    if (ends_with(w, "ied") && w.size() > 3)
      out.push_back(w.substr(0, w.size() - 3) + "y");
    if (ends_with(w, "ed") && w.size() > 2) {
      out.push_back(w.substr(0, w.size() - 2));
      out.push_back(w.substr(0, w.size() - 1));  // liked -> like
      if (w.size() > 4 && w[w.size() - 3] == w[w.size() - 4])
        out.push_back(w.substr(0, w.size() - 3));  // stopped -> stop
    }
    return out;
  }

  static std::vector<std::string> strip_ing_candidates(const std::string& w) {
    std::vector<std::string> out;
    if (!ends_with(w, "ing") || w.size() <= 3) return out;
    const std::string stem = w.substr(0, w.size() - 3);
    out.push_back(stem);
    out.push_back(stem + "e");  // liking -> like
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2])
      out.push_back(stem.substr(0, stem.size() - 1));  // stopping -> stop
    return out;
  }

  /// The built-in lexicon; validated once on first use.
  static const Lexicon& builtin();
};

namespace detail {

inline Lexicon make_builtin_lexicon() {
  Lexicon lex;
  lex.determiners = {"a",     "an",    "the",   "this",    "that",   "these",
                     "those", "my",    "your",  "his",     "her",    "its",
                     "our",   "their", "some",  "any",     "no",     "each",
                     "every", "either", "neither", "another", "both", "all",
                     "many",  "few",   "several", "enough"};
  lex.prepositions = {"about",  "above",   "across", "after",   "against",
                      "along",  "among",   "around", "at",      "before",
                      "behind", "below",   "beneath", "beside", "between",
                      "beyond", "by",      "down",   "during",  "for",
                      "from",   "in",      "inside", "into",    "near",
                      "of",     "off",     "on",     "onto",    "outside",
                      "over",   "since",   "through", "to",     "toward",
                      "towards", "under",  "until",  "up",      "upon",
                      "with",   "within",  "without"};
  lex.pronouns = {"i",        "you",        "he",         "she",
                  "it",       "we",         "they",       "me",
                  "him",      "them",       "us",         "mine",
                  "yours",    "hers",       "ours",       "theirs",
                  "myself",   "yourself",   "himself",    "herself",
                  "itself",   "ourselves",  "yourselves", "themselves",
                  "who",      "whom",       "whose",      "someone",
                  "somebody", "anyone",     "anybody",    "everyone",
                  "everybody", "nobody",    "something",  "anything",
                  "everything", "nothing"};
  lex.conjunctions = {"and",      "because", "but",     "if",       "or",
                      "nor",      "so",      "than",    "although", "though",
                      "unless",   "whereas", "whether", "while",    "yet",
                      "as",       "when",    "whenever"};

  auto v = [&](const char* base, const char* past, const char* pp,
               const char* s3, const char* ger) {
    lex.irregular_verbs[base] = VerbForms{past, pp, s3, ger};
  };
  v("be", "was", "been", "is", "being");
  v("begin", "began", "begun", "begins", "beginning");
  v("bring", "brought", "brought", "brings", "bringing");
  v("buy", "bought", "bought", "buys", "buying");
  v("catch", "caught", "caught", "catches", "catching");
  v("choose", "chose", "chosen", "chooses", "choosing");
  v("come", "came", "come", "comes", "coming");
  v("do", "did", "done", "does", "doing");
  v("drink", "drank", "drunk", "drinks", "drinking");
  v("drive", "drove", "driven", "drives", "driving");
  v("eat", "ate", "eaten", "eats", "eating");
  v("fall", "fell", "fallen", "falls", "falling");
  v("feel", "felt", "felt", "feels", "feeling");
  v("find", "found", "found", "finds", "finding");
  v("forget", "forgot", "forgotten", "forgets", "forgetting");
  v("get", "got", "gotten", "gets", "getting");
  v("give", "gave", "given", "gives", "giving");
  v("go", "went", "gone", "goes", "going");
  v("grow", "grew", "grown", "grows", "growing");
  v("have", "had", "had", "has", "having");
  v("hear", "heard", "heard", "hears", "hearing");
  v("hold", "held", "held", "holds", "holding");
  v("keep", "kept", "kept", "keeps", "keeping");
  v("know", "knew", "known", "knows", "knowing");
  v("leave", "left", "left", "leaves", "leaving");
  v("lose", "lost", "lost", "loses", "losing");
  v("make", "made", "made", "makes", "making");
  v("meet", "met", "met", "meets", "meeting");
  v("pay", "paid", "paid", "pays", "paying");
  v("put", "put", "put", "puts", "putting");
  v("read", "read", "read", "reads", "reading");
  v("ride", "rode", "ridden", "rides", "riding");
  v("run", "ran", "run", "runs", "running");
  v("say", "said", "said", "says", "saying");
  v("see", "saw", "seen", "sees", "seeing");
  v("sell", "sold", "sold", "sells", "selling");
  v("send", "sent", "sent", "sends", "sending");
  v("sing", "sang", "sung", "sings", "singing");
  v("sit", "sat", "sat", "sits", "sitting");
  v("sleep", "slept", "slept", "sleeps", "sleeping");
  v("speak", "spoke", "spoken", "speaks", "speaking");
  v("spend", "spent", "spent", "spends", "spending");
  v("stand", "stood", "stood", "stands", "standing");
  v("swim", "swam", "swum", "swims", "swimming");
  v("take", "took", "taken", "takes", "taking");
  v("teach", "taught", "taught", "teaches", "teaching");
  v("tell", "told", "told", "tells", "telling");
  v("think", "thought", "thought", "thinks", "thinking");
  v("throw", "threw", "thrown", "throws", "throwing");
  v("understand", "understood", "understood", "understands",
    "understanding");
  v("wear", "wore", "worn", "wears", "wearing");
  v("win", "won", "won", "wins", "winning");
  v("write", "wrote", "written", "writes", "writing");

  lex.extra_verb_forms = {
      {"am", {"be", VerbForm::Base}},
      {"are", {"be", VerbForm::Base}},
      {"were", {"be", VerbForm::Past}},
  };

  lex.irregular_nouns = {
      {"analysis", "analyses"}, {"child", "children"}, {"crisis", "crises"},
      {"foot", "feet"},         {"goose", "geese"},    {"half", "halves"},
      {"knife", "knives"},      {"leaf", "leaves"},    {"life", "lives"},
      {"man", "men"},           {"mouse", "mice"},     {"ox", "oxen"},
      {"person", "people"},     {"shelf", "shelves"},  {"tooth", "teeth"},
      {"wife", "wives"},        {"woman", "women"}};

  lex.verbs = {"agree",   "answer",  "arrive",  "ask",      "attend",
               "believe", "belong",  "call",    "carry",    "climb",
               "cook",    "dance",   "decide",  "enjoy",    "explain",
               "finish",  "fix",     "follow",  "happen",   "help",
               "hire",    "hope",    "improve", "invite",   "join",
               "jump",    "laugh",   "learn",   "like",     "listen",
               "live",    "look",    "love",    "move",     "need",
               "paint",   "play",    "practice", "prepare", "promise",
               "remember", "repair", "return",  "save",     "share",
               "smile",   "solve",   "start",   "stay",     "study",
               "talk",    "thank",   "travel",  "try",      "use",
               "visit",   "wait",    "walk",    "want",     "wash",
               "watch",   "work"};

  lex.nouns = {"apple",    "beach",   "bird",     "book",      "box",
               "boy",      "bus",     "car",      "cat",       "chair",
               "city",     "classroom", "coffee", "computer",  "country",
               "day",      "dinner",  "dog",      "door",      "dress",
               "family",   "farmer",  "flower",   "food",      "friend",
               "game",     "garden",  "girl",     "hometown",  "house",
               "idea",     "island",  "job",      "kitchen",   "language",
               "lesson",   "letter",  "market",   "morning",   "mountain",
               "movie",    "museum",  "music",    "neighbor",  "night",
               "office",   "park",    "party",    "phone",     "picture",
               "problem",  "product", "question", "river",     "road",
               "school",   "sister",  "staff",    "station",   "store",
               "story",    "street",  "student",  "table",     "teacher",
               "town",     "train",   "tree",     "village",   "water",
               "week",     "window",  "word",     "year"};

  lex.adjectives = {"angry",   "bad",       "beautiful", "big",
                    "busy",    "cheap",     "clean",     "cold",
                    "constant", "dark",     "deep",      "difficult",
                    "early",   "easy",      "expensive", "famous",
                    "fast",    "free",      "fresh",     "friendly",
                    "good",    "great",     "green",     "happy",
                    "hard",    "healthy",   "heavy",     "high",
                    "hot",     "important", "interesting", "kind",
                    "large",   "late",      "lazy",      "long",
                    "loud",    "low",       "lucky",     "modern",
                    "new",     "nice",      "noisy",     "old",
                    "poor",    "pretty",    "quick",     "quiet",
                    "rich",    "sad",       "short",     "simple",
                    "slow",    "small",     "strong",    "sunny",
                    "tall",    "tired",     "warm",      "weak",
                    "wonderful", "young"};

  lex.check_disjoint();
  return lex;
}

}  // namespace detail

inline const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = detail::make_builtin_lexicon();
  return lex;
}

}  // namespace sgec

#endif  // SGEC_LEXICON_HPP_
