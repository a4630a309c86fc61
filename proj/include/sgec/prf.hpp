// sgec/prf.hpp

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

#ifndef SGEC_PRF_HPP_
#define SGEC_PRF_HPP_

#include <cstddef>

#include "sgec/error.hpp"

namespace sgec {

/// F-beta over precision/recall given as percentages; result in percent.
/// Zero denominator yields 0.
inline double f_beta_score(double precision, double recall, double beta) {
  if (beta <= 0.0) throw UsageError("beta must be positive");
  const double b2 = beta * beta;
  const double denom = b2 * precision + recall;
  if (denom <= 0.0) return 0.0;
  return (1.0 + b2) * precision * recall / denom;
}

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

/// Precision/recall/F-beta (percentages) from counts.
///
/// Zero-denominator convention: a side with no positives scores 100 when the
/// other side also has none, else 0.  Keeps empty utterances well-defined.
inline Prf prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn,
                           double beta) {
  Prf out;
  const std::size_t pred = tp + fp;   // predicted positives
  const std::size_t gold = tp + fn;   // gold positives
  if (pred == 0 && gold == 0) {
    out.precision = out.recall = out.f = 100.0;
    return out;
  }
  out.precision = pred == 0 ? 0.0
                            : 100.0 * static_cast<double>(tp) /
                                  static_cast<double>(pred);
  out.recall = gold == 0 ? 0.0
                         : 100.0 * static_cast<double>(tp) /
                               static_cast<double>(gold);
  out.f = f_beta_score(out.precision, out.recall, beta);
  return out;
}

}  // namespace sgec

#endif  // SGEC_PRF_HPP_
