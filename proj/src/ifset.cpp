#include "rif/ifset.hpp"

namespace rif {

IFSet::IFSet(UniversePtr universe, std::vector<DegreePair> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (!universe_ || grades_.size() != universe_->size()) {
    throw ValidationError("grade vector does not match universe size");
  }
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (!pair_valid(grades_[i])) {
      throw ValidationError("element '" + universe_->element(i) +
                            "': mu + nu exceeds 1 (" + grades_[i].mu.str() +
                            " + " + grades_[i].nu.str() + ")");
    }
  }
}

IFSet IFSet::from_map(UniversePtr universe,
                      const std::map<std::string, DegreePair>& grades) {
  std::vector<DegreePair> v;
  v.reserve(universe->size());
  for (const auto& id : universe->elements()) {
    auto it = grades.find(id);
    if (it == grades.end()) {
      throw MissingElementError("no grade given for element '" + id + "'");
    }
    v.push_back(it->second);
  }
  if (grades.size() != universe->size()) {
    for (const auto& [id, grade] : grades) {
      (void)grade;
      if (!universe->index_of(id)) {
        throw ValidationError("grade given for '" + id +
                              "' which is not in the universe");
      }
    }
  }
  return IFSet(std::move(universe), std::move(v));
}

IFSet IFSet::constant(UniversePtr universe, DegreePair grade) {
  std::vector<DegreePair> v(universe->size(), grade);
  return IFSet(std::move(universe), std::move(v));
}

FuzzySet::FuzzySet(UniversePtr universe, std::vector<Degree> membership)
    : universe_(std::move(universe)), membership_(std::move(membership)) {
  if (!universe_ || membership_.size() != universe_->size()) {
    throw ValidationError("membership vector does not match universe size");
  }
}

FuzzySet FuzzySet::from_map(UniversePtr universe,
                            const std::map<std::string, Degree>& membership) {
  std::vector<Degree> v;
  v.reserve(universe->size());
  for (const auto& id : universe->elements()) {
    auto it = membership.find(id);
    if (it == membership.end()) {
      throw MissingElementError("no membership given for element '" + id +
                                "'");
    }
    v.push_back(it->second);
  }
  return FuzzySet(std::move(universe), std::move(v));
}

IFSet embed_crisp(const CrispSet& x) {
  std::vector<DegreePair> grades;
  grades.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    grades.push_back(x.contains(i) ? DegreePair{Degree::one(), Degree::zero()}
                                   : DegreePair{Degree::zero(), Degree::one()});
  }
  return IFSet(x.universe(), std::move(grades));
}

IFSet embed_fuzzy(const FuzzySet& x) {
  std::vector<DegreePair> grades;
  grades.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    grades.push_back({x.mu(i), x.mu(i).complemented()});
  }
  return IFSet(x.universe(), std::move(grades));
}

IFSet complement_if(const IFSet& x) {
  std::vector<DegreePair> grades;
  grades.reserve(x.size());
  for (const auto& g : x.grades()) grades.push_back({g.nu, g.mu});
  return IFSet(x.universe(), std::move(grades));
}

IFSet union_if(const IFSet& x, const IFSet& y) {
  require_same_universe(x.universe(), y.universe(), "union");
  std::vector<DegreePair> grades;
  grades.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    grades.push_back({max(x.mu(i), y.mu(i)), min(x.nu(i), y.nu(i))});
  }
  return IFSet(x.universe(), std::move(grades));
}

IFSet intersect_if(const IFSet& x, const IFSet& y) {
  require_same_universe(x.universe(), y.universe(), "intersection");
  std::vector<DegreePair> grades;
  grades.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    grades.push_back({min(x.mu(i), y.mu(i)), max(x.nu(i), y.nu(i))});
  }
  return IFSet(x.universe(), std::move(grades));
}

bool subset_if(const IFSet& x, const IFSet& y) {
  require_same_universe(x.universe(), y.universe(), "subset");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.mu(i) > y.mu(i) || x.nu(i) < y.nu(i)) return false;
  }
  return true;
}

bool is_crisp_valued(const IFSet& x) {
  for (const auto& g : x.grades()) {
    bool member = g.mu == Degree::one() && g.nu == Degree::zero();
    bool nonmember = g.mu == Degree::zero() && g.nu == Degree::one();
    if (!member && !nonmember) return false;
  }
  return true;
}

bool is_fuzzy_valued(const IFSet& x) {
  for (const auto& g : x.grades()) {
    if (g.nu != g.mu.complemented()) return false;
  }
  return true;
}

CrispSet to_crisp(const IFSet& x) {
  if (!is_crisp_valued(x)) {
    throw KindMismatchError("set carries grades outside {(1,0), (0,1)}");
  }
  std::vector<bool> members(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    members[i] = x.mu(i) == Degree::one();
  }
  return CrispSet(x.universe(), std::move(members));
}

FuzzySet to_fuzzy(const IFSet& x) {
  if (!is_fuzzy_valued(x)) {
    throw KindMismatchError("set carries grades with mu + nu < 1");
  }
  std::vector<Degree> membership;
  membership.reserve(x.size());
  for (const auto& g : x.grades()) membership.push_back(g.mu);
  return FuzzySet(x.universe(), std::move(membership));
}

}  // namespace rif
