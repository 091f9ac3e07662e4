#pragma once
// Law harnesses. Every check is an exact identity; a failing law is
// reported with a witness naming the offending inputs.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "finstoch/midpoint.hpp"

namespace finstoch {

struct LawCheck {
  std::string law;
  bool pass = true;
  std::size_t cases = 0;
  std::string witness;  // empty when the law holds

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
};

struct LawReport {
  std::string harness;
  std::vector<LawCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Short one-line renderings for witnesses.
std::string brief(const Rational& r);
std::string brief(const Dist& d);
std::string brief(const Kernel& k);

// Structural-map replacements, keyed by the space's label list; used by
// tests to inject violations and watch the harness catch them.
struct MarkovLawOverrides {
  std::map<std::vector<std::string>, Kernel> copy_overrides;
  std::map<std::vector<std::string>, Kernel> del_overrides;
};

// Comonoid equations, naturality of del, monoidal coherence, category
// laws, all on the given kernels and the spaces they mention. Pair and
// triple laws run on a systematic subset when the corpus is large; the
// report carries the case counts.
LawReport check_markov_laws(const std::vector<Kernel>& kernels,
                            const MarkovLawOverrides* overrides = nullptr);

// The three midpoint axioms plus cancellativity, the unfolding law of
// the countable operator, and the recurrence-uniqueness condition, on
// systematic tuples drawn from the samples.
template <class T>
LawReport check_midpoint_laws(const std::string& instance, const std::vector<T>& samples,
                              const std::function<T(const T&, const T&)>& m) {
  LawReport report{"midpoint(" + instance + ")", {}};
  if (samples.empty()) return report;
  const std::size_t n = samples.size();
  auto at = [&](std::size_t i) -> const T& { return samples[i % n]; };

  LawCheck idem{"idempotency"};
  for (std::size_t i = 0; i < n; ++i) {
    ++idem.cases;
    if (m(at(i), at(i)) != at(i)) idem.fail("x = " + brief(at(i)));
  }
  report.checks.push_back(idem);

  LawCheck comm{"commutativity"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= std::min<std::size_t>(n, 8); ++d) {
      ++comm.cases;
      if (m(at(i), at(i + d)) != m(at(i + d), at(i)))
        comm.fail("x = " + brief(at(i)) + ", y = " + brief(at(i + d)));
    }
  report.checks.push_back(comm);

  LawCheck inter{"interchange"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= std::min<std::size_t>(n, 4); ++d) {
      ++inter.cases;
      const T &x = at(i), &y = at(i + d), &z = at(i + 2 * d), &w = at(i + 3 * d);
      if (m(m(x, y), m(z, w)) != m(m(x, z), m(y, w)))
        inter.fail("x = " + brief(x) + ", y = " + brief(y) + ", z = " + brief(z) +
                   ", w = " + brief(w));
    }
  report.checks.push_back(inter);

  LawCheck cancel{"cancellativity"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t d = 1; d <= std::min<std::size_t>(n, 4); ++d) {
      ++cancel.cases;
      const T &a = at(i), &b = at(i + d), &c = at(i + 2 * d);
      if (m(a, b) == m(a, c) && !(b == c))
        cancel.fail("a = " + brief(a) + ", b = " + brief(b) + ", c = " + brief(c));
    }
  report.checks.push_back(cancel);

  // The countable operator is only available for the genuine midpoint,
  // so the sequence laws use mid() and are meaningful when m is mid.
  LawCheck unfold{"big-mid-unfolding"};
  LawCheck recur{"big-mid-recurrence"};
  for (std::size_t i = 0; i + 2 < n && i < 64; ++i) {
    EventuallyPeriodicSeq<T> seq({at(i)}, {at(i + 1), at(i + 2)});
    ++unfold.cases;
    if (big_mid(seq) != mid(seq.at(0), big_mid(seq.tail())))
      unfold.fail("preamble head " + brief(at(i)));
    // b_j := big_mid(shift^j seq) satisfies b_j = m(a_j, b_{j+1}); check
    // one full period past the preamble.
    EventuallyPeriodicSeq<T> shifted = seq;
    ++recur.cases;
    for (std::size_t j = 0; j < 4; ++j) {
      if (big_mid(shifted) != mid(shifted.at(0), big_mid(shifted.tail()))) {
        recur.fail("shift " + std::to_string(j) + " of head " + brief(at(i)));
        break;
      }
      shifted = shifted.tail();
    }
  }
  report.checks.push_back(unfold);
  report.checks.push_back(recur);
  return report;
}

template <class T>
LawReport check_midpoint_laws(const std::string& instance, const std::vector<T>& samples) {
  std::function<T(const T&, const T&)> m = [](const T& a, const T& b) { return mid(a, b); };
  return check_midpoint_laws(instance, samples, m);
}

}  // namespace finstoch
