#pragma once

#include "suslink/plumbing_tree.hpp"
#include "suslink/rational.hpp"
#include "suslink/resolution_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suslink {

std::vector<Rational> canonical_class(const PlumbingTree& tree);
bool is_num_gorenstein(const std::vector<Rational>& k);
Rational k_squared(const PlumbingTree& tree, const std::vector<Rational>& k);
Integer chi_resolution(const PlumbingTree& tree);

struct FibreEuler {
  Integer chi;
  Integer genus;
  Integer boundary;
  friend bool operator==(const FibreEuler&, const FibreEuler&) = default;
};

FibreEuler fibre_euler(const MultPlumbing& mp);

Integer join_euler(const Integer& chi_fibre, const Integer& r);
Integer join_wedge_count(const Integer& chi_fibre, const Integer& r);

struct LauferSteenbrink {
  bool applicable = false;
  Integer left;   // chi_F mod 12
  Integer right;  // (chi_res + K^2) mod 12
  bool congruent = false;
  Integer chi_plus_k2;  // signed value before reduction
};

LauferSteenbrink laufer_steenbrink(const PlumbingTree& tree, const Integer& chi_fibre_f);

Integer determinant(const PlumbingTree& tree);
bool negative_definite(const PlumbingTree& tree);

struct ObstructionReport {
  std::vector<Rational> K;
  Rational K_squared;
  bool numerically_gorenstein = false;
  Integer chi_resolution;
  Integer chi_fibre_fg;
  Integer fibre_genus;
  Integer fibre_boundary;
  Integer chi_fibre_F;
  Integer wedge_count;
  LauferSteenbrink ls;
  bool negative_definite = false;
  Integer determinant;
};

ObstructionReport obstruction_report(const PlumbingTree& tree, const MultPlumbing& mp, const Integer& r);

}  // namespace suslink
