#pragma once

#include <cstddef>

namespace blowup {

/// Size caps and search radii shared by the oracles and decision procedures.
/// Zero in `scan_bound` / `alpha_box_high` means "derive from the input".
struct Limits {
  int chromatic_cap_n = 9;   // exhaustive colouring / perfection oracle
  int clutter_cap_n = 7;     // exhaustive clutter and submatrix scans
  int hb_dim_cap = 10;       // Hilbert basis ambient dimension
  int scan_bound = 0;        // Gorenstein interior scan: t-degree bound, default n
  int alpha_box_low = -2;    // TDI oracle objective box
  int alpha_box_high = 0;    // default: max column sum
  std::size_t enumeration_budget = 20'000'000;  // lattice points / search nodes
};

}  // namespace blowup
