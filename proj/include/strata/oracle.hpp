#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "strata/alcove.hpp"
#include "strata/sigma.hpp"

namespace strata {

// B(G)_x with the dimension of each Newton stratum's ADLV.
using ReductionResult = std::map<SigmaClass, Int>;

struct StrataRow {
  SigmaClass cls;
  Int dim = 0;
  Rat vdim;
  Rat delta;
  Int codim = 0;
};

struct StrataTable {
  AffElt x;
  Int len = 0;
  std::vector<StrataRow> rows;  // sorted along the partial order
  bool has_unique_min = false;
  bool saturated = true;
  bool cordial_candidate = false;
};

// Memoized Deligne-Lusztig reduction engine. Single-worker: one engine per
// thread. The memo is keyed on (level, element) and shared across queries.
class Oracle {
 public:
  explicit Oracle(std::shared_ptr<const RootDatum> datum,
                  size_t budget = kDefaultBudget)
      : datum_(std::move(datum)), budget_(budget) {}

  const ReductionResult& reduce(const Group& g, const AffElt& x);

  // dimension of X_x(b); absent key means the ADLV is empty
  std::optional<Int> dim_adlv(const Group& g, const AffElt& x,
                              const SigmaClass& b);

  StrataTable strata_table(const Group& g, const AffElt& x);

  // all x with saturated == false and len(x) <= max_len
  std::vector<AffElt> gap_search(const Group& g, Int max_len);

  // every element of length <= max_len, up to the central-translation
  // window: W_a-ball times one Omega representative per finite window class
  std::vector<AffElt> ball(const Group& g, Int max_len);
  std::vector<AffElt> omega_window(const Group& g);

  size_t budget() const { return budget_; }
  size_t memo_size() const { return memo_.size(); }

  // Randomized replay: shuffle the generator order per plateau node, so the
  // determinism invariant (results independent of move order) is testable.
  void set_replay_seed(unsigned long seed) {
    replay_seed_ = seed;
    memo_.clear();
  }

 private:
  IVec memo_key(const Group& g, const AffElt& x) const;

  std::shared_ptr<const RootDatum> datum_;
  size_t budget_;
  std::optional<unsigned long> replay_seed_;
  std::unordered_map<IVec, std::shared_ptr<const ReductionResult>, IVecHash>
      memo_;
};

}  // namespace strata
