#include "ptol/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "ptol/text_format.hpp"

namespace ptol {

namespace {

struct CoverSearch {
  Poset const& poset;
  std::vector<ElementPair> covers;
  std::vector<BinaryRelation> found;

  // Chooses, for each cover pair from index i on, whether it joins E.
  // up_used / down_used mark elements that already have an edge going up /
  // coming from below.
  void extend(std::size_t i, Mask up_used, Mask down_used, BinaryRelation& rel) {
    if (i == covers.size()) {
      if ((up_used | down_used) == poset.carrier()) {
        found.push_back(rel);
      }
      return;
    }
    extend(i + 1, up_used, down_used, rel);
    auto const [a, b] = covers[i];
    if (has_bit(up_used, a) || has_bit(down_used, b)) {
      return;
    }
    rel.insert(a, b);
    rel.insert(b, a);
    extend(i + 1, up_used | bit(a), down_used | bit(b), rel);
    rel.erase(a, b);
    rel.erase(b, a);
  }
};

bool has_only_pair_blocks(BinaryRelation const& r) {
  for (ElementSet const& block : maximal_cliques(r)) {
    if (block.size() != 2) {
      return false;
    }
  }
  return true;
}

void sort_by_relation(std::vector<Tolerance>& ts) {
  std::sort(ts.begin(), ts.end(), [](Tolerance const& a, Tolerance const& b) {
    return a.relation() < b.relation();
  });
}

std::vector<std::string> generated_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
  }
  return labels;
}

// Row-major bits of the order matrix read through `order` (position -> element).
std::uint64_t matrix_key(Poset const& p, std::vector<Element> const& order) {
  std::size_t const n = order.size();
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      key = (key << 1) | (p.leq(order[i], order[j]) ? 1U : 0U);
    }
  }
  return key;
}

// Enumerates orderings that list the classes one after another, each class
// in every internal order, and keeps the least key.
void minimize_key(Poset const& p, std::vector<std::vector<Element>>& classes, std::size_t cls,
                  std::vector<Element>& order, std::uint64_t& best) {
  if (cls == classes.size()) {
    best = std::min(best, matrix_key(p, order));
    return;
  }
  std::vector<Element>& members = classes[cls];
  std::sort(members.begin(), members.end());
  do {
    std::size_t const base = order.size();
    order.insert(order.end(), members.begin(), members.end());
    minimize_key(p, classes, cls + 1, order, best);
    order.resize(base);
  } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

std::vector<Tolerance> enumerate_2uniform(PosetPtr const& p) {
  CoverSearch search{*p, p->cover_pairs(), {}};
  BinaryRelation scratch = BinaryRelation::identity(p->size());
  search.extend(0, 0, 0, scratch);

  std::vector<Tolerance> out;
  auto accept = [&](BinaryRelation rel) {
    if (auto t = Tolerance::try_make(p, std::move(rel)); t && is_2_uniform(*t).holds()) {
      out.push_back(std::move(*t));
    }
  };
  for (BinaryRelation& rel : search.found) {
    accept(std::move(rel));
  }
  if (p->size() <= 2) {
    BinaryRelation full = BinaryRelation::full(p->size());
    bool const seen = std::any_of(out.begin(), out.end(),
                                  [&](Tolerance const& t) { return t.relation() == full; });
    if (!seen) {
      accept(std::move(full));
    }
  }
  sort_by_relation(out);
  return out;
}

std::vector<Tolerance> enumerate_2uniform_brute_force(PosetPtr const& p) {
  std::size_t const n = p->size();
  if (n > kBruteForceCap) {
    throw BoundExceeded("brute-force enumeration is limited to " + std::to_string(kBruteForceCap)
                        + " elements");
  }
  std::vector<ElementPair> slots;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      slots.emplace_back(a, b);
    }
  }
  std::vector<Tolerance> out;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << slots.size()); ++pattern) {
    BinaryRelation rel = BinaryRelation::identity(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (has_bit(pattern, k)) {
        rel.insert(slots[k].first, slots[k].second);
        rel.insert(slots[k].second, slots[k].first);
      }
    }
    if (!has_only_pair_blocks(rel)) {
      continue;
    }
    if (auto t = Tolerance::try_make(p, std::move(rel))) {
      out.push_back(std::move(*t));
    }
  }
  sort_by_relation(out);
  return out;
}

void for_each_naturally_labeled_order(std::size_t n,
                                      std::function<void(BinaryRelation const&)> const& visit) {
  std::vector<ElementPair> slots;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      slots.emplace_back(a, b);
    }
  }
  if (slots.size() >= 63) {
    throw BoundExceeded("too many elements to enumerate orders");
  }
  std::vector<Mask> rows(n);
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << slots.size()); ++pattern) {
    for (Element a = 0; a < n; ++a) {
      rows[a] = bit(a);
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (has_bit(pattern, k)) {
        rows[slots[k].first] |= bit(slots[k].second);
      }
    }
    bool transitive = true;
    for (Element a = 0; a < n && transitive; ++a) {
      for_each_bit(rows[a], [&](Element k) { transitive = transitive && (rows[k] & ~rows[a]) == 0; });
    }
    if (!transitive) {
      continue;
    }
    BinaryRelation leq(n);
    for (Element a = 0; a < n; ++a) {
      leq.set_row(a, rows[a]);
    }
    visit(leq);
  }
}

std::uint64_t canonical_key(Poset const& p) {
  std::size_t const n = p.size();
  if (n > 8) {
    throw BoundExceeded("canonical keys are limited to 8 elements");
  }
  // Relabelings that preserve (|down-set|, |up-set|) suffice: any isomorphism
  // maps each class onto the class with the same signature.
  std::vector<std::pair<std::pair<int, int>, Element>> signature;
  for (Element x = 0; x < n; ++x) {
    signature.push_back({{std::popcount(p.down_set(x)), std::popcount(p.up_set(x))}, x});
  }
  std::sort(signature.begin(), signature.end());
  std::vector<std::vector<Element>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || signature[i].first != signature[i - 1].first) {
      classes.emplace_back();
    }
    classes.back().push_back(signature[i].second);
  }
  std::vector<Element> order;
  std::uint64_t best = ~std::uint64_t{0};
  minimize_key(p, classes, 0, order, best);
  // Distinguish sizes: prefix a marker bit above the n² payload bits.
  return best | (n < 8 ? (std::uint64_t{1} << (n * n)) : 0);
}

PosetCorpus generate_posets(std::size_t max_n, bool dedup, std::size_t cap) {
  if (max_n == 0 || max_n > cap) {
    throw BoundExceeded("max_n must be between 1 and " + std::to_string(cap) + ", got "
                        + std::to_string(max_n));
  }
  PosetCorpus corpus;
  corpus.max_n = max_n;
  corpus.deduplicated = dedup;
  corpus.count_by_size.assign(max_n + 1, 0);
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::string> const labels = generated_labels(n);
    for_each_naturally_labeled_order(n, [&](BinaryRelation const& leq) {
      auto poset = std::make_shared<Poset const>(Poset::from_order(labels, leq));
      if (dedup && !seen.insert(canonical_key(*poset)).second) {
        return;
      }
      corpus.posets.push_back(std::move(poset));
      ++corpus.count_by_size[n];
    });
  }
  return corpus;
}

void TheoremReport::merge(TheoremReport const& other) {
  max_n = std::max(max_n, other.max_n);
  deduplicated = deduplicated || other.deduplicated;
  posets_checked += other.posets_checked;
  tolerances_enumerated += other.tolerances_enumerated;
  tolerance_pairs_checked += other.tolerance_pairs_checked;
  agreements += other.agreements;
  amicable_pairs += other.amicable_pairs;
  permuting_pairs += other.permuting_pairs;
  if (by_size.size() < other.by_size.size()) {
    by_size.resize(other.by_size.size());
  }
  for (std::size_t n = 0; n < other.by_size.size(); ++n) {
    SizeTally& mine = by_size[n];
    SizeTally const& theirs = other.by_size[n];
    mine.posets += theirs.posets;
    mine.tolerances += theirs.tolerances;
    mine.pairs += theirs.pairs;
    mine.amicable_pairs += theirs.amicable_pairs;
    mine.permuting_pairs += theirs.permuting_pairs;
  }
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
}

TheoremReport verify_poset(PosetPtr const& p) {
  std::vector<Tolerance> const tolerances = enumerate_2uniform(p);
  std::vector<TolerancePair> diagonal;
  diagonal.reserve(tolerances.size());
  for (Tolerance const& t : tolerances) {
    diagonal.emplace_back(t, t);
  }

  TheoremReport report;
  std::size_t const n = p->size();
  report.max_n = n;
  report.posets_checked = 1;
  report.tolerances_enumerated = tolerances.size();
  report.by_size.resize(n + 1);
  SizeTally& tally = report.by_size[n];
  tally.posets = 1;
  tally.tolerances = tolerances.size();

  for (std::size_t i = 0; i < tolerances.size(); ++i) {
    for (std::size_t j = 0; j < tolerances.size(); ++j) {
      TolerancePair const pair = i == j ? diagonal[i] : TolerancePair(tolerances[i], tolerances[j]);
      Verdict const amicable = is_amicable(pair);
      Verdict const permutes = permute(pair);
      ++report.tolerance_pairs_checked;
      ++tally.pairs;
      if (amicable.holds()) {
        ++report.amicable_pairs;
        ++tally.amicable_pairs;
      }
      if (permutes.holds()) {
        ++report.permuting_pairs;
        ++tally.permuting_pairs;
      }
      if (amicable.holds() == permutes.holds()) {
        ++report.agreements;
        continue;
      }
      report.counterexamples.push_back({format_poset(*p),
                                        format_tolerance(*p, pair.t().relation()),
                                        format_tolerance(*p, pair.s().relation()),
                                        amicable.holds(), permutes.holds(),
                                        describe(*p, amicable), describe(*p, permutes)});
    }
  }
  return report;
}

TheoremReport verify_theorem(PosetCorpus const& corpus, VerifyOptions options) {
  auto const start = std::chrono::steady_clock::now();
  std::size_t jobs = options.jobs;
  if (jobs == 0) {
    jobs = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  std::vector<TheoremReport> partial(corpus.posets.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < partial.size(); i = next++) {
      partial[i] = verify_poset(corpus.posets[i]);
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t k = 0; k < jobs; ++k) {
      workers.emplace_back(work);
    }
  }

  TheoremReport report;
  report.max_n = corpus.max_n;
  report.deduplicated = corpus.deduplicated;
  report.by_size.resize(corpus.max_n + 1);
  for (TheoremReport const& r : partial) {
    report.merge(r);
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

PairFilter parse_pair_filter(std::string_view tag) {
  for (PairFilter f : {PairFilter::all, PairFilter::permuting, PairFilter::non_permuting,
                       PairFilter::amicable, PairFilter::non_amicable}) {
    if (pair_filter_name(f) == tag) {
      return f;
    }
  }
  throw UnknownFilter("unknown pair filter '" + std::string(tag) + "'");
}

std::string_view pair_filter_name(PairFilter f) {
  switch (f) {
    case PairFilter::all:
      return "all";
    case PairFilter::permuting:
      return "permuting";
    case PairFilter::non_permuting:
      return "non_permuting";
    case PairFilter::amicable:
      return "amicable";
    case PairFilter::non_amicable:
      return "non_amicable";
  }
  return "all";
}

std::vector<TolerancePair> find_pairs(PosetPtr const& p, PairFilter filter) {
  std::vector<Tolerance> const tolerances = enumerate_2uniform(p);
  std::vector<TolerancePair> out;
  for (Tolerance const& t : tolerances) {
    for (Tolerance const& s : tolerances) {
      TolerancePair pair(t, s);
      bool keep = true;
      switch (filter) {
        case PairFilter::all:
          break;
        case PairFilter::permuting:
          keep = permute(pair).holds();
          break;
        case PairFilter::non_permuting:
          keep = !permute(pair).holds();
          break;
        case PairFilter::amicable:
          keep = is_amicable(pair).holds();
          break;
        case PairFilter::non_amicable:
          keep = !is_amicable(pair).holds();
          break;
      }
      if (keep) {
        out.push_back(std::move(pair));
      }
    }
  }
  return out;
}

}  // namespace ptol
