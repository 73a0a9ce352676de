#include "rif/properties.hpp"

#include <utility>

#include "rif/equality.hpp"

namespace rif {

std::string to_string(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::Holds: return "Holds";
    case PropertyStatus::Fails: return "Fails";
    case PropertyStatus::WitnessFound: return "WitnessFound";
    case PropertyStatus::NoWitnessInSpace: return "NoWitnessInSpace";
  }
  return "?";
}

namespace {

const IFSet& setX(const Instance& t) { return t.sets[0]; }
const IFSet& setY(const Instance& t) { return t.sets[1]; }
const IFSet& setXp(const Instance& t) { return t.sets[2]; }
const IFSet& setYp(const Instance& t) { return t.sets[3]; }

CrispSet low_cut(const Instance& t, const IFSet& s) {
  return cut(lower_if(t.partition, s), t.params);
}

CrispSet up_cut(const Instance& t, const IFSet& s) {
  return cut(upper_if(t.partition, s), t.params);
}

bool rel(const Instance& t, const IFSet& a, const IFSet& b, Side side) {
  return related(a, b, t.partition, t.params, side);
}

IFSet void_set(const Instance& t) {
  return IFSet::constant(t.partition.universe(),
                         {Degree::zero(), Degree::one()});
}

IFSet whole_set(const Instance& t) {
  return IFSet::constant(t.partition.universe(),
                         {Degree::one(), Degree::zero()});
}

bool cmp(const Instance& t, const IFSet& a, const IFSet& b,
         InclusionMode mode) {
  return comparable(a, b, t.partition, t.params, mode);
}

// Comparability of the upper approximations as whole graded sets, not just
// of one cut. This is the hypothesis under which union preserves top
// relatedness; one-cut comparability is refutably weaker (see the
// "-cutlevel" searches).
bool pointwise_comparable_upper(const Instance& t, const IFSet& a,
                                const IFSet& b) {
  IFSet ua = upper_if(t.partition, a);
  IFSet ub = upper_if(t.partition, b);
  return subset_if(ua, ub) || subset_if(ub, ua);
}

std::string ids_str(const CrispSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& id : s.ids()) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  return out + "}";
}

std::string strictness_note(const Instance& t, const CrispSet& gap) {
  return "containment proper at alpha=" + t.params.alpha().str() +
         " beta=" + t.params.beta().str() + ", gap " + ids_str(gap);
}

PropertyEval eval_lattice(const Instance& t) {
  EqualityVerdict v = classify(setX(t), setY(t), t.partition, t.params);
  bool ok = true;
  if (v.rough_equality()) {
    ok = ok && v.approximate_rough_equality() &&
         v.approximate_rough_equivalence() && v.rough_equivalence();
  }
  if (v.approximate_rough_equality()) ok = ok && v.rough_equivalence();
  if (v.approximate_rough_equivalence()) ok = ok && v.rough_equivalence();
  return {true, ok, ""};
}

PropertyEval eval_531(const Instance& t) {
  CrispSet lhs = low_cut(t, intersect_if(setX(t), setY(t)));
  CrispSet rhs = cut(intersect_if(lower_if(t.partition, setX(t)),
                                  lower_if(t.partition, setY(t))),
                     t.params);
  return {true, lhs == rhs, ""};
}

PropertyEval eval_532(const Instance& t) {
  CrispSet big = low_cut(t, union_if(setX(t), setY(t)));
  CrispSet small = cut(union_if(lower_if(t.partition, setX(t)),
                                lower_if(t.partition, setY(t))),
                       t.params);
  PropertyEval e{true, subset_of(small, big), ""};
  if (e.holds && !(small == big)) {
    e.note = strictness_note(t, set_difference(big, small));
  }
  return e;
}

PropertyEval eval_533(const Instance& t) {
  CrispSet small = up_cut(t, intersect_if(setX(t), setY(t)));
  CrispSet big = cut(intersect_if(upper_if(t.partition, setX(t)),
                                  upper_if(t.partition, setY(t))),
                     t.params);
  PropertyEval e{true, subset_of(small, big), ""};
  if (e.holds && !(small == big)) {
    e.note = strictness_note(t, set_difference(big, small));
  }
  return e;
}

PropertyEval eval_534(const Instance& t) {
  CrispSet lhs = up_cut(t, union_if(setX(t), setY(t)));
  CrispSet rhs = cut(union_if(upper_if(t.partition, setX(t)),
                              upper_if(t.partition, setY(t))),
                     t.params);
  return {true, lhs == rhs, ""};
}

PropertyEval eval_532_strict(const Instance& t) {
  PropertyEval inc = eval_532(t);
  // Witness = containment holds AND is proper.
  return {true, !(inc.holds && !inc.note.empty()), inc.note};
}

PropertyEval eval_533_strict(const Instance& t) {
  PropertyEval inc = eval_533(t);
  return {true, !(inc.holds && !inc.note.empty()), inc.note};
}

std::vector<PropertyDef> build_registry() {
  std::vector<PropertyDef> defs;

  auto add = [&](PropertyDef def) { defs.push_back(std::move(def)); };

  add({"lattice", 2, true, false,
       "rough equality implies both approximate kinds and rough equivalence; "
       "each approximate kind implies rough equivalence",
       "", eval_lattice});

  add({"5.3.1", 2, true, false,
       "cut of lower(x intersect y) equals cut of (lower x intersect lower y)",
       "", eval_531});
  add({"5.3.2", 2, true, false,
       "cut of (lower x union lower y) is contained in cut of lower(x union y)",
       "", eval_532});
  add({"5.3.3", 2, true, false,
       "cut of upper(x intersect y) is contained in cut of (upper x intersect "
       "upper y)",
       "", eval_533});
  add({"5.3.4", 2, true, false,
       "cut of upper(x union y) equals cut of (upper x union upper y)",
       "", eval_534});

  add({"5.3.2-strict", 2, false, false,
       "the lower/union containment can be proper",
       "lower(x union y) strictly exceeds (lower x union lower y) at the cut",
       eval_532_strict});
  add({"5.3.3-strict", 2, false, false,
       "the upper/intersection containment can be proper",
       "upper(x intersect y) strictly below (upper x intersect upper y) at "
       "the cut",
       eval_533_strict});

  add({"5.4.1.i", 2, true, false,
       "if x intersect y is bottom related to both x and y, x and y are "
       "bottom related",
       "", [](const Instance& t) -> PropertyEval {
         IFSet m = intersect_if(setX(t), setY(t));
         bool hyp = rel(t, m, setX(t), Side::Lower) &&
                    rel(t, m, setY(t), Side::Lower);
         return {hyp, !hyp || rel(t, setX(t), setY(t), Side::Lower), ""};
       }});
  add({"5.4.1.ii-converse", 2, false, false,
       "bottom relatedness of x and y need not pass to their intersection",
       "bottom related pair whose intersection is not bottom related to both",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Lower);
         IFSet m = intersect_if(setX(t), setY(t));
         bool concl = rel(t, m, setX(t), Side::Lower) &&
                      rel(t, m, setY(t), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.1.ii-sufficiency", 2, true, false,
       "bottom comparability makes the converse go through",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Lower) &&
                    cmp(t, setX(t), setY(t), InclusionMode::Bottom);
         IFSet m = intersect_if(setX(t), setY(t));
         bool concl = rel(t, m, setX(t), Side::Lower) &&
                      rel(t, m, setY(t), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.1.ii-not-necessary", 2, false, false,
       "bottom comparability is not necessary for the converse",
       "converse conclusion holds although the pair is not bottom comparable",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Lower) &&
                    !cmp(t, setX(t), setY(t), InclusionMode::Bottom);
         IFSet m = intersect_if(setX(t), setY(t));
         bool concl = rel(t, m, setX(t), Side::Lower) &&
                      rel(t, m, setY(t), Side::Lower);
         return {hyp, !hyp || !concl, ""};
       }});

  add({"5.4.2.i", 2, true, false,
       "if x union y is top related to both x and y, x and y are top related",
       "", [](const Instance& t) -> PropertyEval {
         IFSet u = union_if(setX(t), setY(t));
         bool hyp = rel(t, u, setX(t), Side::Upper) &&
                    rel(t, u, setY(t), Side::Upper);
         return {hyp, !hyp || rel(t, setX(t), setY(t), Side::Upper), ""};
       }});
  add({"5.4.2.ii-converse", 2, false, false,
       "top relatedness of x and y need not pass to their union",
       "top related pair whose union is not top related to both",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Upper);
         IFSet u = union_if(setX(t), setY(t));
         bool concl = rel(t, u, setX(t), Side::Upper) &&
                      rel(t, u, setY(t), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.2.ii-sufficiency", 2, true, false,
       "pointwise comparable upper approximations make the converse go "
       "through",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Upper) &&
                    pointwise_comparable_upper(t, setX(t), setY(t));
         IFSet u = union_if(setX(t), setY(t));
         bool concl = rel(t, u, setX(t), Side::Upper) &&
                      rel(t, u, setY(t), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.2.ii-cutlevel", 2, false, false,
       "one-cut comparability does NOT suffice for the union converse",
       "cut-comparable top related pair whose union is not top related to "
       "both",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Upper) &&
                    cmp(t, setX(t), setY(t), InclusionMode::Top);
         IFSet u = union_if(setX(t), setY(t));
         bool concl = rel(t, u, setX(t), Side::Upper) &&
                      rel(t, u, setY(t), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.2.ii-not-necessary", 2, false, false,
       "pointwise comparability is not necessary for the union converse",
       "union converse holds although the uppers are not pointwise comparable",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Upper) &&
                    !pointwise_comparable_upper(t, setX(t), setY(t));
         IFSet u = union_if(setX(t), setY(t));
         bool concl = rel(t, u, setX(t), Side::Upper) &&
                      rel(t, u, setY(t), Side::Upper);
         return {hyp, !hyp || !concl, ""};
       }});

  add({"5.4.3.i", 4, false, false,
       "top relatedness of two pairs need not pass to their unions",
       "top related pairs (x,x') and (y,y') whose unions are not top related",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Upper) &&
                    rel(t, setY(t), setYp(t), Side::Upper);
         bool concl = rel(t, union_if(setX(t), setY(t)),
                          union_if(setXp(t), setYp(t)), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.3.ii-sufficiency", 4, true, false,
       "pointwise comparable uppers on both pairs make union preserve top "
       "relatedness",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Upper) &&
                    rel(t, setY(t), setYp(t), Side::Upper) &&
                    pointwise_comparable_upper(t, setX(t), setY(t)) &&
                    pointwise_comparable_upper(t, setXp(t), setYp(t));
         bool concl = rel(t, union_if(setX(t), setY(t)),
                          union_if(setXp(t), setYp(t)), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.3.ii-cutlevel", 4, false, false,
       "one-cut comparability on both pairs does NOT make union preserve top "
       "relatedness",
       "cut-comparable top related pairs whose unions are not top related",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Upper) &&
                    rel(t, setY(t), setYp(t), Side::Upper) &&
                    cmp(t, setX(t), setY(t), InclusionMode::Top) &&
                    cmp(t, setXp(t), setYp(t), InclusionMode::Top);
         bool concl = rel(t, union_if(setX(t), setY(t)),
                          union_if(setXp(t), setYp(t)), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.3.ii-not-necessary", 4, false, false,
       "pointwise comparability is not necessary for union to preserve top "
       "relatedness",
       "unions stay top related although one pair is not pointwise comparable",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Upper) &&
                    rel(t, setY(t), setYp(t), Side::Upper) &&
                    !(pointwise_comparable_upper(t, setX(t), setY(t)) &&
                      pointwise_comparable_upper(t, setXp(t), setYp(t)));
         bool concl = rel(t, union_if(setX(t), setY(t)),
                          union_if(setXp(t), setYp(t)), Side::Upper);
         return {hyp, !hyp || !concl, ""};
       }});

  add({"5.4.4.i", 4, false, false,
       "bottom relatedness of two pairs need not pass to their intersections",
       "bottom related pairs whose intersections are not bottom related",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Lower) &&
                    rel(t, setY(t), setYp(t), Side::Lower);
         bool concl = rel(t, intersect_if(setX(t), setY(t)),
                          intersect_if(setXp(t), setYp(t)), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.4.ii-sufficiency", 4, true, false,
       "bottom comparability on both pairs makes intersection preserve "
       "bottom relatedness",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Lower) &&
                    rel(t, setY(t), setYp(t), Side::Lower) &&
                    cmp(t, setX(t), setY(t), InclusionMode::Bottom) &&
                    cmp(t, setXp(t), setYp(t), InclusionMode::Bottom);
         bool concl = rel(t, intersect_if(setX(t), setY(t)),
                          intersect_if(setXp(t), setYp(t)), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.4.ii-not-necessary", 4, false, false,
       "bottom comparability is not necessary for intersection to preserve "
       "bottom relatedness",
       "intersections stay bottom related although one pair is not "
       "comparable",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Lower) &&
                    rel(t, setY(t), setYp(t), Side::Lower) &&
                    !(cmp(t, setX(t), setY(t), InclusionMode::Bottom) &&
                      cmp(t, setXp(t), setYp(t), InclusionMode::Bottom));
         bool concl = rel(t, intersect_if(setX(t), setY(t)),
                          intersect_if(setXp(t), setYp(t)), Side::Lower);
         return {hyp, !hyp || !concl, ""};
       }});

  add({"5.4.5.i", 2, false, false,
       "top relatedness does not force x union complement(y) to top-relate "
       "to the whole universe",
       "top related pair with x union complement(y) not top related to the "
       "universe",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Upper);
         bool concl = rel(t, union_if(setX(t), complement_if(setY(t))),
                          whole_set(t), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.6.i", 2, false, false,
       "bottom relatedness does not force x intersect complement(y) to "
       "bottom-relate to the void set",
       "bottom related pair with x intersect complement(y) not bottom "
       "related to the void set",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Lower);
         bool concl = rel(t, intersect_if(setX(t), complement_if(setY(t))),
                          void_set(t), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});

  add({"5.4.7", 2, true, false,
       "a pointwise subset of a set bottom related to the void set is itself "
       "bottom related to the void set",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = subset_if(setX(t), setY(t)) &&
                    rel(t, setY(t), void_set(t), Side::Lower);
         return {hyp, !hyp || rel(t, setX(t), void_set(t), Side::Lower), ""};
       }});
  add({"5.4.7.r", 2, true, false,
       "a pointwise subset of a set top related to the void set is itself "
       "top related to the void set",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = subset_if(setX(t), setY(t)) &&
                    rel(t, setY(t), void_set(t), Side::Upper);
         return {hyp, !hyp || rel(t, setX(t), void_set(t), Side::Upper), ""};
       }});
  add({"5.4.8", 2, true, false,
       "a pointwise superset of a set top related to the whole universe is "
       "itself top related to the whole universe",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = subset_if(setX(t), setY(t)) &&
                    rel(t, setX(t), whole_set(t), Side::Upper);
         return {hyp, !hyp || rel(t, setY(t), whole_set(t), Side::Upper), ""};
       }});
  add({"5.4.8.r", 2, true, false,
       "a pointwise superset of a set bottom related to the whole universe "
       "is itself bottom related to the whole universe",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = subset_if(setX(t), setY(t)) &&
                    rel(t, setX(t), whole_set(t), Side::Lower);
         return {hyp, !hyp || rel(t, setY(t), whole_set(t), Side::Lower), ""};
       }});

  add({"5.4.9", 1, true, false,
       "lower of the complement is the complement of the upper, and upper of "
       "the complement is the complement of the lower",
       "", [](const Instance& t) -> PropertyEval {
         IFSet c = complement_if(setX(t));
         bool ok = lower_if(t.partition, c) ==
                       complement_if(upper_if(t.partition, setX(t))) &&
                   upper_if(t.partition, c) ==
                       complement_if(lower_if(t.partition, setX(t)));
         return {true, ok, ""};
       }});
  add({"5.4.9-iff", 2, false, true,
       "top relatedness of a pair versus bottom relatedness of the "
       "complements at the same thresholds",
       "pair where the two relatedness judgements disagree",
       [](const Instance& t) -> PropertyEval {
         bool lhs = rel(t, setX(t), setY(t), Side::Upper);
         bool rhs = rel(t, complement_if(setX(t)), complement_if(setY(t)),
                        Side::Lower);
         return {true, lhs == rhs, ""};
       }});

  add({"5.4.10", 2, true, false,
       "two sets bottom related to the void set have an intersection bottom "
       "related to the void set",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), void_set(t), Side::Lower) &&
                    rel(t, setY(t), void_set(t), Side::Lower);
         bool concl = rel(t, intersect_if(setX(t), setY(t)), void_set(t),
                          Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.10.r", 2, true, false,
       "two sets top related to the void set have an intersection top "
       "related to the void set",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), void_set(t), Side::Upper) &&
                    rel(t, setY(t), void_set(t), Side::Upper);
         bool concl = rel(t, intersect_if(setX(t), setY(t)), void_set(t),
                          Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.11", 2, true, false,
       "if either set is top related to the whole universe, so is their "
       "union",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), whole_set(t), Side::Upper) ||
                    rel(t, setY(t), whole_set(t), Side::Upper);
         bool concl = rel(t, union_if(setX(t), setY(t)), whole_set(t),
                          Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.4.11.r", 2, true, false,
       "if either set is bottom related to the whole universe, so is their "
       "union",
       "", [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), whole_set(t), Side::Lower) ||
                    rel(t, setY(t), whole_set(t), Side::Lower);
         bool concl = rel(t, union_if(setX(t), setY(t)), whole_set(t),
                          Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});

  add({"5.5.1.i", 2, true, false,
       "if x intersect y is top related to both x and y, x and y are top "
       "related",
       "", [](const Instance& t) -> PropertyEval {
         IFSet m = intersect_if(setX(t), setY(t));
         bool hyp = rel(t, m, setX(t), Side::Upper) &&
                    rel(t, m, setY(t), Side::Upper);
         return {hyp, !hyp || rel(t, setX(t), setY(t), Side::Upper), ""};
       }});
  add({"5.5.1.ii", 2, false, true,
       "whether cut-exact distribution of upper over the intersection makes "
       "the converse go through",
       "distribution and top relatedness hold yet the intersection is not "
       "top related to both",
       [](const Instance& t) -> PropertyEval {
         IFSet m = intersect_if(setX(t), setY(t));
         bool distributes =
             up_cut(t, m) == cut(intersect_if(upper_if(t.partition, setX(t)),
                                              upper_if(t.partition, setY(t))),
                                 t.params);
         bool hyp = rel(t, setX(t), setY(t), Side::Upper) && distributes;
         bool concl = rel(t, m, setX(t), Side::Upper) &&
                      rel(t, m, setY(t), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.5.2.i", 2, true, false,
       "if x union y is bottom related to both x and y, x and y are bottom "
       "related",
       "", [](const Instance& t) -> PropertyEval {
         IFSet u = union_if(setX(t), setY(t));
         bool hyp = rel(t, u, setX(t), Side::Lower) &&
                    rel(t, u, setY(t), Side::Lower);
         return {hyp, !hyp || rel(t, setX(t), setY(t), Side::Lower), ""};
       }});
  add({"5.5.2.ii", 2, false, true,
       "whether cut-exact distribution of lower over the union makes the "
       "converse go through",
       "distribution holds at the cut yet the union is not bottom related to "
       "both",
       [](const Instance& t) -> PropertyEval {
         IFSet u = union_if(setX(t), setY(t));
         bool distributes =
             low_cut(t, u) == cut(union_if(lower_if(t.partition, setX(t)),
                                           lower_if(t.partition, setY(t))),
                                  t.params);
         bool hyp = rel(t, setX(t), setY(t), Side::Lower) && distributes;
         bool concl = rel(t, u, setX(t), Side::Lower) &&
                      rel(t, u, setY(t), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});

  add({"5.5.3.i", 4, false, false,
       "bottom relatedness of two pairs need not pass to their unions",
       "bottom related pairs whose unions are not bottom related",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Lower) &&
                    rel(t, setY(t), setYp(t), Side::Lower);
         bool concl = rel(t, union_if(setX(t), setY(t)),
                          union_if(setXp(t), setYp(t)), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.5.3.ii", 4, false, true,
       "whether cut-exact distribution of lower over both unions rescues the "
       "union step",
       "distribution holds for both pairs yet the unions are not bottom "
       "related",
       [](const Instance& t) -> PropertyEval {
         auto distributes = [&](const IFSet& a, const IFSet& b) {
           return low_cut(t, union_if(a, b)) ==
                  cut(union_if(lower_if(t.partition, a),
                               lower_if(t.partition, b)),
                      t.params);
         };
         bool hyp = rel(t, setX(t), setXp(t), Side::Lower) &&
                    rel(t, setY(t), setYp(t), Side::Lower) &&
                    distributes(setX(t), setY(t)) &&
                    distributes(setXp(t), setYp(t));
         bool concl = rel(t, union_if(setX(t), setY(t)),
                          union_if(setXp(t), setYp(t)), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.5.4.i", 4, false, false,
       "top relatedness of two pairs need not pass to their intersections",
       "top related pairs whose intersections are not top related",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setXp(t), Side::Upper) &&
                    rel(t, setY(t), setYp(t), Side::Upper);
         bool concl = rel(t, intersect_if(setX(t), setY(t)),
                          intersect_if(setXp(t), setYp(t)), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.5.4.ii", 4, false, true,
       "whether cut-exact distribution of upper over both intersections "
       "rescues the intersection step",
       "distribution holds for both pairs yet the intersections are not top "
       "related",
       [](const Instance& t) -> PropertyEval {
         auto distributes = [&](const IFSet& a, const IFSet& b) {
           return up_cut(t, intersect_if(a, b)) ==
                  cut(intersect_if(upper_if(t.partition, a),
                                   upper_if(t.partition, b)),
                      t.params);
         };
         bool hyp = rel(t, setX(t), setXp(t), Side::Upper) &&
                    rel(t, setY(t), setYp(t), Side::Upper) &&
                    distributes(setX(t), setY(t)) &&
                    distributes(setXp(t), setYp(t));
         bool concl = rel(t, intersect_if(setX(t), setY(t)),
                          intersect_if(setXp(t), setYp(t)), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});

  add({"5.5.5", 2, false, false,
       "bottom relatedness does not force x union complement(y) to "
       "bottom-relate to the whole universe",
       "bottom related pair with x union complement(y) not bottom related to "
       "the universe",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Lower);
         bool concl = rel(t, union_if(setX(t), complement_if(setY(t))),
                          whole_set(t), Side::Lower);
         return {hyp, !hyp || concl, ""};
       }});
  add({"5.5.6", 2, false, false,
       "top relatedness does not force x intersect complement(y) to "
       "top-relate to the void set",
       "top related pair with x intersect complement(y) not top related to "
       "the void set",
       [](const Instance& t) -> PropertyEval {
         bool hyp = rel(t, setX(t), setY(t), Side::Upper);
         bool concl = rel(t, intersect_if(setX(t), complement_if(setY(t))),
                          void_set(t), Side::Upper);
         return {hyp, !hyp || concl, ""};
       }});

  return defs;
}

}  // namespace

const std::vector<PropertyDef>& property_registry() {
  static const std::vector<PropertyDef> defs = build_registry();
  return defs;
}

const PropertyDef& find_property(const std::string& id) {
  for (const auto& def : property_registry()) {
    if (def.id == id) return def;
  }
  std::string known;
  for (const auto& def : property_registry()) {
    if (!known.empty()) known += ", ";
    known += def.id;
  }
  throw UnknownPropertyError("unknown property '" + id + "'; known: " + known);
}

PropertySuite::PropertySuite(std::vector<const PropertyDef*> defs) {
  tallies_.reserve(defs.size());
  for (const auto* def : defs) tallies_.push_back({def, 0, 0, 0, {}, "", ""});
}

PropertySuite PropertySuite::all_theorems() {
  std::vector<const PropertyDef*> defs;
  for (const auto& def : property_registry()) {
    if (def.theorem) defs.push_back(&def);
  }
  return PropertySuite(std::move(defs));
}

void PropertySuite::feed(const Instance& inst) {
  for (auto& tally : tallies_) {
    if (static_cast<std::size_t>(tally.def->arity) > inst.sets.size()) {
      continue;
    }
    PropertyEval e = tally.def->eval(inst);
    ++tally.checked;
    if (!e.applicable) {
      ++tally.vacuous;
      continue;
    }
    if (!e.holds) {
      if (tally.hits == 0) {
        tally.first_hit = inst;
        tally.first_note = e.note;
      }
      ++tally.hits;
    } else if (!e.note.empty() && tally.info_note.empty()) {
      tally.info_note = e.note;
    }
  }
}

std::vector<PropertyReport> PropertySuite::reports() const {
  std::vector<PropertyReport> out;
  out.reserve(tallies_.size());
  for (const auto& tally : tallies_) {
    PropertyReport r;
    r.property_id = tally.def->id;
    r.checked = tally.checked;
    r.vacuous = tally.vacuous;
    r.witness = tally.first_hit;
    r.note = tally.hits > 0 ? tally.first_note : tally.info_note;
    if (tally.def->theorem) {
      r.status = tally.hits == 0 ? PropertyStatus::Holds
                                 : PropertyStatus::Fails;
    } else {
      r.status = tally.hits == 0 ? PropertyStatus::NoWitnessInSpace
                                 : PropertyStatus::WitnessFound;
      if (tally.hits > 0 && r.note.empty()) {
        r.note = tally.def->witness_means;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PropertyReport> check_algebra(const Partition& r, const IFSet& x,
                                          const IFSet& y, const CutParams& p) {
  Instance inst{r, {x, y}, p};
  std::vector<const PropertyDef*> defs;
  for (const char* id : {"5.3.1", "5.3.2", "5.3.3", "5.3.4"}) {
    defs.push_back(&find_property(id));
  }
  PropertySuite suite(std::move(defs));
  suite.feed(inst);
  return suite.reports();
}

std::vector<PropertyReport> check_guaranteed(const Instance& inst) {
  PropertySuite suite = PropertySuite::all_theorems();
  suite.feed(inst);
  std::vector<PropertyReport> out;
  for (auto& r : suite.reports()) {
    if (r.checked > 0) out.push_back(std::move(r));
  }
  return out;
}

PropertyReport check_lattice(const Instance& inst) {
  PropertySuite suite({&find_property("lattice")});
  suite.feed(inst);
  return suite.reports().front();
}

PropertyReport search_counterexample(const std::string& property_id,
                                     const InstanceSpec& spec,
                                     const SearchOptions& options) {
  const PropertyDef& def = find_property(property_id);
  InstanceSpec s = spec;
  s.set_count = def.arity;

  PropertyReport report;
  report.property_id = def.id;

  auto consume = [&](const Instance& inst) -> bool {
    PropertyEval e = def.eval(inst);
    ++report.checked;
    if (!e.applicable) {
      ++report.vacuous;
      return true;
    }
    if (!e.holds) {
      report.status = PropertyStatus::WitnessFound;
      report.witness = inst;
      report.note = e.note.empty() ? def.witness_means : e.note;
      return false;
    }
    return true;
  };

  // Exhaust in stable order when the whole space fits the budget, otherwise
  // sample. Both paths are deterministic for a given spec and seed.
  bool exhaustive_feasible =
      s.universe_size <= 4 && s.step >= Degree::parse("0.25");
  if (exhaustive_feasible) {
    std::uint64_t total = 0;
    for (std::size_t n = 1; n <= s.universe_size; ++n) {
      InstanceSpec per = s;
      per.universe_size = n;
      total += exhaustive_space_size(per);
    }
    exhaustive_feasible = total <= options.budget && total <= kExhaustiveCap;
  }

  report.status = PropertyStatus::NoWitnessInSpace;
  if (exhaustive_feasible) {
    for (std::size_t n = 1; n <= s.universe_size; ++n) {
      InstanceSpec per = s;
      per.universe_size = n;
      bool keep_going = true;
      for_each_exhaustive(per, [&](const Instance& inst) {
        keep_going = consume(inst);
        return keep_going;
      });
      if (!keep_going) break;
    }
  } else {
    RandomInstanceGen gen(s, options.seed);
    for (std::uint64_t i = 0; i < options.budget; ++i) {
      if (!consume(gen.next())) break;
    }
  }
  return report;
}

PropertyReport replay_witness(const std::string& property_id,
                              const Instance& inst) {
  const PropertyDef& def = find_property(property_id);
  if (inst.sets.size() < static_cast<std::size_t>(def.arity)) {
    throw ValidationError("witness for '" + def.id + "' needs " +
                          std::to_string(def.arity) + " sets, got " +
                          std::to_string(inst.sets.size()));
  }
  PropertyEval e = def.eval(inst);
  PropertyReport report;
  report.property_id = def.id;
  report.checked = 1;
  if (e.applicable && !e.holds) {
    report.status = PropertyStatus::WitnessFound;
    report.witness = inst;
    report.note = e.note.empty() ? def.witness_means : e.note;
  } else {
    report.status = PropertyStatus::NoWitnessInSpace;
    report.note = e.applicable ? "instance satisfies the law"
                               : "hypothesis does not fire on the instance";
  }
  return report;
}

}  // namespace rif
