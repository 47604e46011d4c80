#pragma once

#include "magnomech/lyapunov.hpp"
#include "magnomech/types.hpp"

#include <Eigen/Dense>
#include <array>
#include <string>
#include <utility>
#include <vector>

namespace magnomech {

/// The four modes, in quadrature-block order.
enum class Mode { Cavity = 0, Magnon1 = 1, Magnon2 = 2, Mechanics = 3 };

const char* mode_name(Mode mode);

using ModePair = std::pair<Mode, Mode>;

/// Canonical enumeration of the six unordered mode pairs.
inline constexpr std::array<ModePair, 6> all_mode_pairs{{
    {Mode::Cavity, Mode::Magnon1},
    {Mode::Cavity, Mode::Magnon2},
    {Mode::Cavity, Mode::Mechanics},
    {Mode::Magnon1, Mode::Magnon2},
    {Mode::Magnon1, Mode::Mechanics},
    {Mode::Magnon2, Mode::Mechanics},
}};

/// Entanglement verdict for one mode pair.
struct EntanglementResult {
    ModePair pair{Mode::Cavity, Mode::Magnon1};
    double nu_minus = 0.0;        ///< minimum symplectic eigenvalue after partial transposition
    double log_negativity = 0.0;  ///< max(0, -ln(2 nu_minus)), capped at 50
    bool entangled = false;       ///< log_negativity > 0
};

/// Extracts the 4x4 two-mode covariance block for the given pair, preserving
/// the order in which the pair names the modes.
/// Throws std::domain_error when both entries name the same mode.
Mat4 reduce(const CovarianceMatrix& cm, ModePair pair);

/// Momentum-quadrature sign flip of the first mode: P * cm4 * P with
/// P = diag(1, -1, 1, 1). Realizes partial transposition on a two-mode
/// covariance matrix.
Mat4 partial_transpose(const Mat4& cm4);

/// Symplectic spectrum of a 2n x 2n covariance matrix: the moduli of the
/// eigenvalues of Omega * V (which come in +/- i nu pairs), deduplicated into
/// n values, sorted ascending. Omega is the block-diagonal symplectic form
/// [[0,1],[-1,0]] per mode.
/// Throws NumericalError when the eigenvalues fail to pair within relative
/// 1e-8 (non-symmetric or unphysical input).
std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& cm);

/// Logarithmic negativity of a two-mode covariance matrix; `pair` only labels
/// the result. nu_minus below 1e-12 is treated as zero and the negativity is
/// capped at 50 to avoid infinities on degenerate inputs. A negativity below
/// 1e-12 is within eigensolver roundoff of the separability boundary for any
/// covariance matrix of this domain's scale and is reported as exactly zero
/// (and not entangled) to avoid false positives on separable states.
EntanglementResult log_negativity(const Mat4& cm4,
                                  ModePair pair = {Mode::Cavity, Mode::Magnon1});

/// Logarithmic negativity for every unordered mode pair of an 8x8 covariance
/// matrix, in the order of all_mode_pairs.
std::array<EntanglementResult, 6> all_bipartite(const CovarianceMatrix& cm);

} // namespace magnomech
