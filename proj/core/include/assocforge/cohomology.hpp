#pragma once

#include <vector>

#include "assocforge/chord_algebra.hpp"
#include "assocforge/rational_linalg.hpp"

namespace assocforge {

/// The two cochain complexes built from the tower of chord algebras. In the
/// plain complex position p holds the p-strand algebra; in the shifted one
/// it holds the (p+1)-strand algebra and the differential uses the twisted
/// top face (empty strand inserted before the last strand).
enum class ComplexKind { plain, shifted };

struct CochainSlot {
  ComplexKind complex;
  int position;  // >= 0
  int degree;    // homogeneous chord degree
};

int slot_source_strands(const CochainSlot& slot);

/// Matrix of the outgoing differential at the slot, over the normal-form
/// bases of source and target in canonical order.
RationalMatrix boundary_matrix(const CochainSlot& slot);

struct H2Entry {
  int degree = 0;
  int dim = 0;
  std::vector<ChordSeries> generators;  // kernel representatives reduced
                                        // against the image
};

/// dim H^2 per chord degree, with explicit generators.
std::vector<H2Entry> h2_dimensions(ComplexKind complex, int max_chord_degree);

struct H01Entry {
  int degree = 0;
  int dim_h0 = 0;
  int dim_h1 = 0;
};

std::vector<H01Entry> h01_dimensions(ComplexKind complex, int max_chord_degree);

struct CohomologyRow {
  ComplexKind complex;
  int position;
  int degree;
  int dim_kernel;  // of the outgoing differential
  int dim_image;   // rank of the incoming differential
  int dim_h;
};

/// Per-slot table for positions 0..max_position and degrees 0..max_degree.
std::vector<CohomologyRow> cohomology_table(ComplexKind complex, int max_position,
                                            int max_chord_degree);

}  // namespace assocforge
