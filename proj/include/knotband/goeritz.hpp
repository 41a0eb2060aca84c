#pragma once

#include <optional>
#include <vector>

#include "knotband/planar_diagram.hpp"
#include "knotband/smith.hpp"

namespace knotband {

/// Goeritz matrix of one checkerboard class ("white" faces) of a connected
/// diagram, with the Gordon-Litherland correction term.
///
/// Crossing incidence eta(c) = +1 when the white corners of c are {0,2}
/// (the corners the B-smoothing merges), else -1. A crossing is of type II
/// when its oriented smoothing separates its two white corners; mu is the
/// sum of eta over type-II crossings. Then sigma = sig(matrix) - mu, which
/// gives sigma = +2 for the trefoil with V(omega) = -i*sqrt3.
struct GoeritzForm {
  IntMatrix full;            // all white faces, rows sum to zero
  IntMatrix matrix;          // last white face deleted
  int correction = 0;        // mu
  std::vector<int> white_faces;
  std::vector<int> eta;      // per crossing
  std::vector<bool> type_two;
};

/// `flows` gives the orientation at each crossing of d; white_color picks
/// which checkerboard class is used (both give the same invariants).
GoeritzForm goeritz(const PlanarDiagram& d, const std::vector<CrossingFlow>& flows, int white_color = 0);
GoeritzForm goeritz(const PlanarDiagram& d);

struct DoubleCoverHomology {
  std::vector<BigInt> factors;  // nontrivial invariant factors; 0 stands for a Z summand
  int e2 = 0;                   // number of factors (minimal generator count)
  int delta = 0;                // factors divisible by 3 (dim over Z/3)
  int r = 0;                    // factors divisible by 5 (dim over Z/5)
  /// For a connected diagram with H_1 = Z/n, n > 1: the a in [0, n) with
  /// lk(g, g) = a/n for a generator g, using the form G^{-1}. Defined up to
  /// multiplication by unit squares and (with the other checkerboard class) by -1.
  std::optional<BigInt> linking;
};

/// Signature, determinant and H_1 of the double branched cover. Split
/// diagrams are handled piece by piece: signatures add, each extra split
/// component (piece or free loop) contributes a Z summand, so det = 0.
int signature(const PlanarDiagram& d, const Orientation& o);
int signature(const PlanarDiagram& d);
BigInt determinant(const PlanarDiagram& d);
DoubleCoverHomology double_cover_homology(const PlanarDiagram& d);

}  // namespace knotband
