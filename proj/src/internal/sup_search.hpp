#pragma once

// Smoothed multi-start ascent for sup_{||y||=1} max_j |a_j(y)| max_k |b_k(y)|
// where a, b are the coefficient maps of two packed row families. Shared by
// the primal certificates (sphere of X) and the dual ones (sphere of X*).

#include <span>

#include "internal/packed_rows.hpp"
#include "pframe/certify.hpp"
#include "pframe/spaces.hpp"

namespace pframe::internal {

struct SphereDomain {
    Field field = Field::Real;
    LqDescriptor desc; // norm defining the sphere

    static SphereDomain primal(const NormedSpace& space) {
        return {space.field, primal_descriptor(space)};
    }
    static SphereDomain dual(const NormedSpace& space) {
        return {space.field, dual_descriptor(space)};
    }

    // Scales coords to unit norm; throws InputError on (numerically) zero input.
    double normalize(CoordVector& v) const;

    // Holder extremal of a row on this sphere: maximizes |sum row_i y_i|.
    CoordVector extremal(std::span<const Complex> row) const { return descriptor_extremal(desc, row); }
};

struct SupResult {
    double value = 0.0;  // exact objective at witness
    CoordVector witness; // unit point on the domain sphere
};

SupResult estimate_sup(const PackedRows& a, const PackedRows& b, const SphereDomain& dom,
                       const OptimizerConfig& cfg, std::span<const CoordVector> extra_starts);

// Exact objective at a unit point: max_j |a_j(z)| * max_k |b_k(z)|.
double exact_max_product(const PackedRows& a, const PackedRows& b, const CoordVector& unit_z);

PackedRows pack_frame(const AnalysisFrame& frame);

} // namespace pframe::internal
