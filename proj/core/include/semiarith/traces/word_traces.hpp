#pragma once

#include "semiarith/traces/trace_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace semiarith::traces {

/// Words in the generators A, B; lower case letters are inverses.
std::string free_reduce(const std::string& word);
std::string cyclic_reduce(const std::string& word);
std::string inverse_word(const std::string& word);

/// Representative of the conjugacy class of w and w^-1 (both have the same
/// trace in SL(2)): the least rotation of either, after cyclic reduction.
std::string canonical_word(const std::string& word);

/// Words whose traces a depth-d integrality check covers: {A, B, AB} for
/// d = 1, otherwise one representative per class of the reduced words of
/// length <= d.  Ordered by length, then A < B < a < b.
std::vector<std::string> words_up_to(int depth);

/// Traces of words from tr A, tr B, tr AB via the SL(2) trace identities,
/// memoized on canonical words.
class WordTraceEvaluator {
 public:
  WordTraceEvaluator(const TraceAlgebra& algebra, TraceAlgebra::Elem tr_a, TraceAlgebra::Elem tr_b,
                     TraceAlgebra::Elem tr_ab);

  TraceAlgebra::Elem trace(const std::string& word);

 private:
  TraceAlgebra::Elem compute(const std::string& word);

  const TraceAlgebra& alg_;
  TraceAlgebra::Elem a_, b_, c_;
  std::map<std::string, TraceAlgebra::Elem> memo_;
};

}  // namespace semiarith::traces
