#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ptol/amicability.hpp"
#include "ptol/tolerance.hpp"

namespace ptol {

// Largest poset size the corpus generator accepts by default.
inline constexpr std::size_t kCorpusHardCap = 7;

// Largest carrier for the brute-force scan over all symmetric relations.
inline constexpr std::size_t kBruteForceCap = 6;

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// All 2-uniform tolerances on p, sorted by relation.
//
// Candidates are T = Δ ∪ E ∪ E⁻¹ for sets E of cover pairs in which every
// element has at most one edge up, at most one edge down and at least one
// edge. Each candidate is validated with check_tolerance and is_2_uniform,
// so the cover-pair restriction only prunes. On carriers of at most two
// elements P² is tried as well, since it can be 2-uniform there without
// consisting of cover pairs.
std::vector<Tolerance> enumerate_2uniform(PosetPtr const& p);

// Same result by scanning every reflexive symmetric relation on p.
// Throws BoundExceeded above kBruteForceCap elements.
std::vector<Tolerance> enumerate_2uniform_brute_force(PosetPtr const& p);

// Calls visit(leq) for every order on 0..n-1 whose strict part lies above the
// diagonal, i.e. for which 0,1,...,n-1 is a linear extension. Every poset on
// n elements is isomorphic to at least one of these.
void for_each_naturally_labeled_order(std::size_t n,
                                      std::function<void(BinaryRelation const&)> const& visit);

// Isomorphism invariant: the least row-major bit string of the order matrix
// over all relabelings. Requires at most 8 elements.
std::uint64_t canonical_key(Poset const& p);

struct PosetCorpus {
  std::size_t max_n = 0;
  bool deduplicated = false;
  std::vector<PosetPtr> posets;
  // count_by_size[n] = number of members with n elements (index 0 unused).
  std::vector<std::size_t> count_by_size;
};

// Every naturally labeled order on 1..max_n elements, labelled e0, e1, ...
// With dedup only the first member of each isomorphism class is kept.
// Throws BoundExceeded when max_n is 0 or above cap.
PosetCorpus generate_posets(std::size_t max_n, bool dedup = false,
                            std::size_t cap = kCorpusHardCap);

struct Counterexample {
  std::string poset;  // poset file text
  std::string t;      // tolerance file text
  std::string s;
  bool amicable = false;
  bool permute = false;
  std::string amicable_detail;
  std::string permute_detail;

  friend bool operator==(Counterexample const&, Counterexample const&) = default;
};

struct SizeTally {
  std::size_t posets = 0;
  std::size_t tolerances = 0;
  std::size_t pairs = 0;
  std::size_t amicable_pairs = 0;
  std::size_t permuting_pairs = 0;

  friend bool operator==(SizeTally const&, SizeTally const&) = default;
};

// Outcome of checking "amicable iff permute" over a corpus. Merging is
// associative and commutative up to counterexample order, which callers fix
// by merging in corpus order.
struct TheoremReport {
  std::size_t max_n = 0;
  bool deduplicated = false;
  std::size_t posets_checked = 0;
  std::size_t tolerances_enumerated = 0;
  std::size_t tolerance_pairs_checked = 0;
  std::size_t agreements = 0;
  std::size_t amicable_pairs = 0;
  std::size_t permuting_pairs = 0;
  std::vector<SizeTally> by_size;  // index = poset size
  std::vector<Counterexample> counterexamples;
  std::chrono::duration<double> wall_time{0};

  void merge(TheoremReport const& other);
};

struct VerifyOptions {
  std::size_t jobs = 1;
};

// Checks every ordered pair (T,S) of 2-uniform tolerances on p, including
// T = S, computing amicability and permutability independently.
TheoremReport verify_poset(PosetPtr const& p);

// verify_poset over the corpus on `jobs` worker threads. Per-poset results
// are merged in corpus order, so the report does not depend on `jobs`.
TheoremReport verify_theorem(PosetCorpus const& corpus, VerifyOptions options = {});

enum class PairFilter { all, permuting, non_permuting, amicable, non_amicable };

class UnknownFilter : public Error {
 public:
  using Error::Error;
};

PairFilter parse_pair_filter(std::string_view tag);
std::string_view pair_filter_name(PairFilter f);

// Ordered pairs over enumerate_2uniform(p) accepted by the filter.
std::vector<TolerancePair> find_pairs(PosetPtr const& p, PairFilter filter);

}  // namespace ptol
