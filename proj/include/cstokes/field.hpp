#pragma once

#include <span>
#include <string>
#include <vector>

#include "cstokes/grid.hpp"
#include "cstokes/types.hpp"

namespace cstokes {

enum class Rep { Physical, TanSpectral, Spectral };
enum class Parity { Even, Odd };

/// Per-component reflection parity; the standard choice for N-vector data is
/// even in the tangential components and odd in the normal one.
std::vector<Parity> vector_parity(int ncomp);
std::vector<Parity> all_parity(Parity p, int ncomp);

namespace detail {

/// Shared sample container: `ncomp` components, each `nt * nz` complex
/// samples in [tangential][normal] row-major order.
struct FieldData {
    GridPtr grid;
    int ncomp = 1;
    Rep rep = Rep::Physical;
    std::vector<cplx> data;

    cplx* comp(int c) { return data.data() + static_cast<std::size_t>(c) * slice(); }
    const cplx* comp(int c) const {
        return data.data() + static_cast<std::size_t>(c) * slice();
    }
    virtual ~FieldData() = default;
    virtual std::size_t slice() const = 0;
};

}  // namespace detail

class WholeField;

/// Sampled data on the half-space grid: nt tangential points x nz normal
/// points per component, physical or tangential-spectral representation.
class Field : public detail::FieldData {
  public:
    Field() = default;
    Field(GridPtr g, int ncomponents, Rep r = Rep::Physical);

    std::size_t slice() const override {
        return static_cast<std::size_t>(grid->nt()) * grid->nz();
    }
    cplx& at(int c, int t, int z) { return comp(c)[t * grid->nz() + z]; }
    cplx at(int c, int t, int z) const { return comp(c)[t * grid->nz() + z]; }

    bool scalar() const { return ncomp == 1; }
};

/// Samples on the reflected periodic box (normal length 2K); supports the
/// full spectral representation.
class WholeField : public detail::FieldData {
  public:
    WholeField() = default;
    WholeField(GridPtr g, int ncomponents, Rep r = Rep::Physical);

    std::size_t slice() const override {
        return static_cast<std::size_t>(grid->nt()) * grid->nz_whole();
    }
    cplx& at(int c, int t, int z) { return comp(c)[t * grid->nz_whole() + z]; }
    cplx at(int c, int t, int z) const {
        return comp(c)[t * grid->nz_whole() + z];
    }
};

// ---- transforms -----------------------------------------------------------

/// Discrete realization of the partial (tangential) Fourier transform and its
/// inverse; round trip is the identity to machine precision.
Field fourier_tangential(const Field& f);
Field inverse_fourier_tangential(const Field& f);

WholeField to_rep(const WholeField& f, Rep target);

// ---- extension / restriction ----------------------------------------------

/// Reflect half-space samples onto the whole box, component c with parity
/// par[c]; exact sample map (no interpolation). Works in Physical or
/// TanSpectral representation.
WholeField extend_reflect(const Field& f, std::span<const Parity> par);
WholeField extend_reflect(const Field& f);  // vector default / scalar even

/// Take the positive-half samples; inverse of extend_reflect on samples.
Field restrict_half(const WholeField& w);

// ---- algebra ---------------------------------------------------------------

void axpy(cplx a, const Field& x, Field& y);          // y += a x
void axpy(cplx a, const WholeField& x, WholeField& y);
void scale(Field& f, cplx a);
void scale(WholeField& f, cplx a);

// ---- derivatives -----------------------------------------------------------

/// Spectral derivatives on the whole box (input any rep; output spectral).
WholeField differentiate_gradient(const WholeField& f);    // scalar -> vector
WholeField differentiate_divergence(const WholeField& f);  // vector -> scalar
WholeField differentiate_laplacian(const WholeField& f);
WholeField differentiate_dN(const WholeField& f, int order);

/// Half-space derivatives: tangential spectrally, normal by 6th-order finite
/// differences on the uniform normal grid. Input/output TanSpectral.
Field differentiate_gradient(const Field& f);
Field differentiate_divergence(const Field& f);
Field differentiate_laplacian(const Field& f);
Field differentiate_dN(const Field& f, int order);

// ---- norms ------------------------------------------------------------------

/// Discrete L_q norm (pointwise Euclidean magnitude across components).
double lq_norm(const Field& f, double q);
double lq_norm(const WholeField& f, double q);
double l2_norm(const Field& f);
double l2_norm(const WholeField& f);

/// Max |Im| over all samples relative to max |sample| (realness residue).
double imag_residue(const Field& f);

// ---- serialization ----------------------------------------------------------

/// Self-describing JSON container with grid metadata, component count and
/// row-major complex samples.
std::string field_to_json(const Field& f);
Field field_from_json(const std::string& text);
void write_field(const Field& f, const std::string& path);
Field read_field(const std::string& path);

}  // namespace cstokes
