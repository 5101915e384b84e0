#pragma once

// Split-plane, row-major packing of frame rows. All hot loops (coefficient
// magnitudes, Parseval sums, sup-search objectives) reduce to kernels::dot
// on these planes.

#include <cstddef>
#include <span>
#include <vector>

#include "pframe/kernels.hpp"
#include "pframe/spaces.hpp"

namespace pframe::internal {

struct PackedRows {
    std::size_t rows = 0;
    std::size_t dim = 0;
    bool cplx = false;          // any nonzero imaginary entry
    std::vector<double> re;     // rows*dim
    std::vector<double> im;     // rows*dim when cplx, else empty

    static PackedRows pack(std::span<const CoordVector> row_coords) {
        PackedRows p;
        p.rows = row_coords.size();
        p.dim = p.rows ? row_coords[0].size() : 0;
        for (const auto& r : row_coords)
            for (const auto& z : r)
                if (z.imag() != 0.0) {
                    p.cplx = true;
                    break;
                }
        p.re.resize(p.rows * p.dim);
        if (p.cplx) p.im.resize(p.rows * p.dim);
        for (std::size_t j = 0; j < p.rows; ++j)
            for (std::size_t i = 0; i < p.dim; ++i) {
                p.re[j * p.dim + i] = row_coords[j][i].real();
                if (p.cplx) p.im[j * p.dim + i] = row_coords[j][i].imag();
            }
        return p;
    }

    // out[j] = |sum_i row_ji * x_i|^2.  xim == nullptr means real x.
    void coeff_sq_mags(const double* xre, const double* xim, double* out) const {
        for (std::size_t j = 0; j < rows; ++j) {
            const double* rre = re.data() + j * dim;
            double cre = kernels::dot(rre, xre, dim);
            double cim = xim ? kernels::dot(rre, xim, dim) : 0.0;
            if (cplx) {
                const double* rim = im.data() + j * dim;
                if (xim) {
                    cre -= kernels::dot(rim, xim, dim);
                    cim += kernels::dot(rim, xre, dim);
                } else {
                    cim += kernels::dot(rim, xre, dim);
                }
            }
            out[j] = cre * cre + cim * cim;
        }
    }

    // out_re[j] + i*out_im[j] = sum_i row_ji * x_i
    void coeffs(const double* xre, const double* xim, double* out_re, double* out_im) const {
        for (std::size_t j = 0; j < rows; ++j) {
            const double* rre = re.data() + j * dim;
            double cre = kernels::dot(rre, xre, dim);
            double cim = xim ? kernels::dot(rre, xim, dim) : 0.0;
            if (cplx) {
                const double* rim = im.data() + j * dim;
                if (xim) {
                    cre -= kernels::dot(rim, xim, dim);
                    cim += kernels::dot(rim, xre, dim);
                } else {
                    cim += kernels::dot(rim, xre, dim);
                }
            }
            out_re[j] = cre;
            out_im[j] = cim;
        }
    }
};

// Split a complex coordinate vector into planes (im plane only when needed).
struct SplitPoint {
    std::vector<double> re, im;
    bool has_im = false;

    SplitPoint() = default;
    explicit SplitPoint(std::span<const Complex> coords) { assign(coords); }

    void assign(std::span<const Complex> coords) {
        const std::size_t n = coords.size();
        re.resize(n);
        im.assign(n, 0.0);
        has_im = false;
        for (std::size_t i = 0; i < n; ++i) {
            re[i] = coords[i].real();
            im[i] = coords[i].imag();
            if (im[i] != 0.0) has_im = true;
        }
    }

    const double* im_ptr() const { return has_im ? im.data() : nullptr; }
};

} // namespace pframe::internal
