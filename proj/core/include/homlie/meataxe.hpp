#pragma once

#include "homlie/algebra.hpp"

namespace homlie::alg {

/// Norton-style irreducibility test for F^n as a module over the matrix
/// algebra generated by `generators`, over the rationals (or any field,
/// though the exhaustive GF paths elsewhere are cheaper).
///
/// Looks for a singular envelope element T; any kernel vector that spins to
/// a proper nonzero submodule is a witness. A nullity-one T whose kernel
/// vector spins to everything is decided by co-spinning a kernel vector of
/// T^tr in the transpose module: a proper dual spin U yields the witness
/// U-perp, a full one certifies irreducibility.
IdealReport norton_irreducible(exact::FieldSpec field, std::size_t dim,
                               const std::vector<exact::Matrix>& generators,
                               const SimplicityOptions& opts = {});

}  // namespace homlie::alg
