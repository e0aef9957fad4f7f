#pragma once

#include <string>
#include <vector>

#include "plab/cochain.hpp"
#include "plab/kostant.hpp"

namespace plab {

// Graded subspace of a real kind: g^L_{-1}, g_{-2} (single factor), ...
struct SpaceRef {
  Factor factor = Factor::Single;
  int grade = 0;
  friend bool operator==(const SpaceRef& x, const SpaceRef& y) {
    return x.factor == y.factor && x.grade == y.grade;
  }
  friend bool operator<(const SpaceRef& x, const SpaceRef& y) {
    if (x.grade != y.grade) return x.grade < y.grade;
    return int(x.factor) < int(y.factor);
  }
  std::string str() const;
};

enum class SlotVerdict { Linear, Antilinear, Real, Mixed };
std::string slot_verdict_name(SlotVerdict v);

// Per-argument complex-(anti)linearity of a harmonic component, plus the
// aggregate label used in the tables' comment columns.
struct LinearityType {
  SlotVerdict slot1 = SlotVerdict::Real, slot2 = SlotVerdict::Real;
  bool pair_invariant = false;  // c(Jx,Jy) = c(x,y) exactly
  std::string aggregate;        // linear | antilinear-both | sesquilinear(...) | real-bilinear
  std::string comment;          // wording as in Tables 1 and 2
};

struct ComponentRow {
  int homogeneity = 0;
  SpaceRef dom1, dom2, target;
  int real_dim = 0;
  LinearityType linearity;
  std::string torsion_label;
  bool embedded_vanishing = false;
  std::vector<Cochain> basis;
};

SpaceRef space_of(const GradedAlgebra& g, int basis_index);

// The full classified table (all homogeneities with nonzero harmonic H^2)
// for a real kind; rows in canonical order.
std::vector<ComponentRow> component_table(AlgebraKind kind);

// Geometric label per the bracket dictionary of the hyperbolic/elliptic
// sections; throws on an unknown row shape.
std::string torsion_classify(AlgebraKind kind, const ComponentRow& row);

struct EmbeddedVanishingReport {
  std::vector<ComponentRow> flagged;   // all arguments and values inside g_{-1}
  std::vector<ComponentRow> remaining;
};
EmbeddedVanishingReport check_embedded_vanishing(AlgebraKind kind);

// Signature set predicted by the Kunneth route: realified duals of the 16
// complexified component shapes (conjugate pairs collapse onto real rows).
std::vector<std::pair<std::pair<SpaceRef, SpaceRef>, SpaceRef>> realified_kostant_signatures(
    AlgebraKind kind);

std::string classify_json(AlgebraKind kind);
std::string table12_json(int which);  // 1 = hyperbolic, 2 = elliptic

}  // namespace plab
