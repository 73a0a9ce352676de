#pragma once

#include <map>
#include <string>
#include <vector>

#include "rif/degree.hpp"
#include "rif/universe.hpp"

namespace rif {

// Set with graded membership AND graded nonmembership per element, the two
// summing to at most 1. Crisp and fuzzy sets embed into this type, so the
// approximation and comparison machinery has a single code path.
class IFSet {
 public:
  IFSet(UniversePtr universe, std::vector<DegreePair> grades);

  // Requires a grade for every element of the universe; throws
  // MissingElementError otherwise.
  static IFSet from_map(UniversePtr universe,
                        const std::map<std::string, DegreePair>& grades);

  static IFSet constant(UniversePtr universe, DegreePair grade);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return grades_.size(); }
  const DegreePair& at(std::size_t i) const { return grades_[i]; }
  Degree mu(std::size_t i) const { return grades_[i].mu; }
  Degree nu(std::size_t i) const { return grades_[i].nu; }
  const std::vector<DegreePair>& grades() const { return grades_; }

  friend bool operator==(const IFSet& a, const IFSet& b) {
    return same_universe(a.universe_, b.universe_) && a.grades_ == b.grades_;
  }

 private:
  UniversePtr universe_;
  std::vector<DegreePair> grades_;
};

// Membership-only graded set; nonmembership is implicitly 1 - mu.
class FuzzySet {
 public:
  FuzzySet(UniversePtr universe, std::vector<Degree> membership);

  static FuzzySet from_map(UniversePtr universe,
                           const std::map<std::string, Degree>& membership);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return membership_.size(); }
  Degree mu(std::size_t i) const { return membership_[i]; }
  const std::vector<Degree>& membership() const { return membership_; }

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return same_universe(a.universe_, b.universe_) &&
           a.membership_ == b.membership_;
  }

 private:
  UniversePtr universe_;
  std::vector<Degree> membership_;
};

// Embeddings: members become (1,0), non-members (0,1); a fuzzy grade m
// becomes (m, 1-m). Both are exact, so approximating an embedded set and
// embedding an approximated set commute.
IFSet embed_crisp(const CrispSet& x);
IFSet embed_fuzzy(const FuzzySet& x);

// Pointwise complement swaps the two grades.
IFSet complement_if(const IFSet& x);
// Pointwise (max mu, min nu) / (min mu, max nu).
IFSet union_if(const IFSet& x, const IFSet& y);
IFSet intersect_if(const IFSet& x, const IFSet& y);
// Pointwise mu_x <= mu_y and nu_x >= nu_y.
bool subset_if(const IFSet& x, const IFSet& y);

// True when every grade is (1,0) or (0,1) / when nu == 1 - mu throughout.
bool is_crisp_valued(const IFSet& x);
bool is_fuzzy_valued(const IFSet& x);

// Inverse views of the embeddings; throw KindMismatchError when the grades
// do not actually lie in the sub-lattice.
CrispSet to_crisp(const IFSet& x);
FuzzySet to_fuzzy(const IFSet& x);

}  // namespace rif
