#include "magnomech/entanglement.hpp"

#include "magnomech/errors.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace magnomech {

namespace {

constexpr double pair_tolerance = 1e-8;  // relative, for +/- i nu eigenvalue pairing
constexpr double nu_floor = 1e-12;       // below this nu counts as zero
constexpr double log_neg_cap = 50.0;
// Separable states can land an ulp below nu = 1/2 through eigensolver
// roundoff; a negativity below this floor is indistinguishable from zero and
// must not be reported as entanglement.
constexpr double log_neg_noise_floor = 1e-12;

Eigen::MatrixXd symplectic_form(Eigen::Index n_modes) {
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (Eigen::Index k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

} // namespace

const char* mode_name(Mode mode) {
    switch (mode) {
    case Mode::Cavity: return "cavity";
    case Mode::Magnon1: return "magnon1";
    case Mode::Magnon2: return "magnon2";
    case Mode::Mechanics: return "mechanics";
    }
    return "unknown";
}

Mat4 reduce(const CovarianceMatrix& cm, ModePair pair) {
    if (pair.first == pair.second) {
        throw std::domain_error("reduce: the two modes of a pair must be distinct");
    }
    const int i = 2 * static_cast<int>(pair.first);
    const int j = 2 * static_cast<int>(pair.second);
    Mat4 out;
    out.block<2, 2>(0, 0) = cm.entries.block<2, 2>(i, i);
    out.block<2, 2>(0, 2) = cm.entries.block<2, 2>(i, j);
    out.block<2, 2>(2, 0) = cm.entries.block<2, 2>(j, i);
    out.block<2, 2>(2, 2) = cm.entries.block<2, 2>(j, j);
    return out;
}

Mat4 partial_transpose(const Mat4& cm4) {
    Mat4 p = Mat4::Identity();
    p(1, 1) = -1.0;
    return p * cm4 * p;
}

std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& cm) {
    if (cm.rows() != cm.cols() || cm.rows() % 2 != 0 || cm.rows() == 0) {
        throw std::domain_error("symplectic_spectrum: matrix must be 2n x 2n");
    }
    const Eigen::Index n = cm.rows() / 2;
    const Eigen::MatrixXd omega_v = symplectic_form(n) * cm;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(omega_v, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("symplectic_spectrum: eigensolver failed to converge");
    }

    std::vector<double> moduli(static_cast<size_t>(2 * n));
    for (Eigen::Index k = 0; k < 2 * n; ++k) {
        moduli[static_cast<size_t>(k)] = std::abs(solver.eigenvalues()(k));
    }
    std::sort(moduli.begin(), moduli.end());

    // The spectrum of Omega*V consists of +/- i nu pairs; after sorting by
    // modulus, neighbors must agree pairwise.
    std::vector<double> spectrum;
    spectrum.reserve(static_cast<size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        const double lo = moduli[static_cast<size_t>(2 * k)];
        const double hi = moduli[static_cast<size_t>(2 * k + 1)];
        if (hi - lo > pair_tolerance * std::max(hi, 1.0)) {
            throw NumericalError("symplectic_spectrum: eigenvalues fail to pair; "
                                 "input is not a symmetric physical covariance matrix");
        }
        spectrum.push_back(0.5 * (lo + hi));
    }
    return spectrum;
}

EntanglementResult log_negativity(const Mat4& cm4, ModePair pair) {
    const std::vector<double> spectrum = symplectic_spectrum(partial_transpose(cm4));

    EntanglementResult result;
    result.pair = pair;
    result.nu_minus = spectrum.front();
    if (result.nu_minus < nu_floor) {
        result.log_negativity = log_neg_cap;
    } else {
        result.log_negativity =
            std::min(std::max(0.0, -std::log(2.0 * result.nu_minus)), log_neg_cap);
        if (result.log_negativity < log_neg_noise_floor) {
            result.log_negativity = 0.0;
        }
    }
    result.entangled = result.log_negativity > 0.0;
    return result;
}

std::array<EntanglementResult, 6> all_bipartite(const CovarianceMatrix& cm) {
    std::array<EntanglementResult, 6> results;
    for (size_t k = 0; k < all_mode_pairs.size(); ++k) {
        results[k] = log_negativity(reduce(cm, all_mode_pairs[k]), all_mode_pairs[k]);
    }
    return results;
}

} // namespace magnomech
