#pragma once

#include <span>
#include <string>
#include <vector>

#include "bwlv/types.hpp"

namespace bwlv::kernels {

/// Available backends for the grid kernels. The scalar kernel is the
/// reference; vector backends must match it bit for bit (Horner evaluation
/// with identical operation order, no FMA contraction).
enum class backend { scalar, avx2, neon };

const char* backend_name(backend be);

/// True if the backend can run on this machine (scalar always can).
bool backend_available(backend be);

/// Best available backend, detected once at first call.
backend preferred_backend();

std::vector<backend> available_backends();

/// out[i] = n_t * ((a*l[i] + b) * l[i] + c), dispatched to the preferred
/// backend. out.size() must equal l.size().
void psi_grid(const quadratic_form& q, double n_t, std::span<const double> l,
              std::span<double> out);

/// Same, on an explicitly chosen backend. Throws range_violation if the
/// backend is unavailable on this machine.
void psi_grid_with(backend be, const quadratic_form& q, double n_t, std::span<const double> l,
                   std::span<double> out);

/// Grid points start + k*step for k = 0.. while the point stays within
/// stop + 1e-9*step. Points are computed independently, never accumulated.
std::vector<double> make_grid(double start, double stop, double step);

}  // namespace bwlv::kernels
