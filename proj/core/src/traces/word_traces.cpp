#include "semiarith/traces/word_traces.hpp"

#include "semiarith/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace semiarith::traces {

namespace {

char invert(char c) {
  return std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c))
                                                     : static_cast<char>(std::toupper(c));
}

void check_letters(const std::string& w) {
  for (char c : w)
    if (c != 'A' && c != 'a' && c != 'B' && c != 'b') throw InvalidArgument("word letters must be A, a, B, b: " + w);
}

int letter_rank(char c) {
  switch (c) {
    case 'A': return 0;
    case 'B': return 1;
    case 'a': return 2;
    default: return 3;
  }
}

bool word_less(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](char p, char q) { return letter_rank(p) < letter_rank(q); });
}

}  // namespace

std::string free_reduce(const std::string& word) {
  check_letters(word);
  std::string out;
  for (char c : word) {
    if (!out.empty() && out.back() == invert(c)) out.pop_back();
    else out.push_back(c);
  }
  return out;
}

std::string cyclic_reduce(const std::string& word) {
  std::string w = free_reduce(word);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == invert(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return w.substr(lo, hi - lo);
}

std::string inverse_word(const std::string& word) {
  std::string out(word.rbegin(), word.rend());
  for (char& c : out) c = invert(c);
  return out;
}

std::string canonical_word(const std::string& word) {
  const std::string w = cyclic_reduce(word);
  std::string best = w;
  for (const std::string& v : {w, inverse_word(w)}) {
    for (std::size_t r = 0; r < v.size(); ++r) {
      const std::string rot = v.substr(r) + v.substr(0, r);
      if (word_less(rot, best)) best = rot;
    }
  }
  return best;
}

std::vector<std::string> words_up_to(int depth) {
  if (depth < 1) throw InvalidArgument("word depth must be at least 1");
  if (depth == 1) return {"A", "B", "AB"};
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::vector<std::string> layer{""};
  for (int len = 1; len <= depth; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : layer) {
      for (char c : {'A', 'B', 'a', 'b'}) {
        if (!w.empty() && w.back() == invert(c)) continue;
        next.push_back(w + c);
      }
    }
    for (const std::string& w : next) {
      const std::string key = canonical_word(w);
      if (key.empty() || !seen.insert(key).second) continue;
      out.push_back(key);
    }
    layer = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), word_less);
  return out;
}

WordTraceEvaluator::WordTraceEvaluator(const TraceAlgebra& algebra, TraceAlgebra::Elem tr_a,
                                       TraceAlgebra::Elem tr_b, TraceAlgebra::Elem tr_ab)
    : alg_(algebra), a_(std::move(tr_a)), b_(std::move(tr_b)), c_(std::move(tr_ab)) {}

TraceAlgebra::Elem WordTraceEvaluator::trace(const std::string& word) {
  const std::string key = canonical_word(word);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  TraceAlgebra::Elem t = compute(key);
  memo_.emplace(key, t);
  return t;
}

TraceAlgebra::Elem WordTraceEvaluator::compute(const std::string& w) {
  if (w.empty()) return alg_.constant(2);
  const auto gen = [&](char c) { return std::toupper(static_cast<unsigned char>(c)) == 'A' ? a_ : b_; };

  // Powers of a single letter: Chebyshev recursion.
  if (std::all_of(w.begin(), w.end(), [&](char c) { return c == w.front(); })) {
    const TraceAlgebra::Elem t = gen(w.front());
    TraceAlgebra::Elem prev = alg_.constant(2), cur = t;
    for (std::size_t k = 1; k < w.size(); ++k) {
      TraceAlgebra::Elem nxt = alg_.sub(alg_.mul(t, cur), prev);
      prev = std::move(cur);
      cur = std::move(nxt);
    }
    return cur;
  }

  // A repeated letter: rotate to w = x P x Q, then
  // tr(xP xQ) = tr(xP) tr(xQ) - tr(P Q^-1).
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t j = w.find(w[i], i + 1);
    if (j == std::string::npos) continue;
    const std::string rot = w.substr(i) + w.substr(0, i);
    const std::size_t k = j - i;
    const std::string p = rot.substr(1, k - 1), q = rot.substr(k + 1);
    const std::string x(1, rot[0]);
    return alg_.sub(alg_.mul(trace(x + p), trace(x + q)), trace(p + inverse_word(q)));
  }

  // All letters distinct: A, B, one of each generator, or a commutator.
  switch (w.size()) {
    case 1: return gen(w[0]);
    case 2: {
      const bool same_sign = (std::isupper(static_cast<unsigned char>(w[0])) != 0) ==
                             (std::isupper(static_cast<unsigned char>(w[1])) != 0);
      return same_sign ? c_ : alg_.sub(alg_.mul(a_, b_), c_);
    }
    case 4: {
      // a^2 + b^2 + c^2 - abc - 2
      TraceAlgebra::Elem t = alg_.add(alg_.add(alg_.mul(a_, a_), alg_.mul(b_, b_)), alg_.mul(c_, c_));
      t = alg_.sub(t, alg_.mul(alg_.mul(a_, b_), c_));
      return alg_.sub(t, alg_.constant(2));
    }
    default: throw VerificationFailure("unexpected cyclically reduced word " + w);
  }
}

}  // namespace semiarith::traces
