#include "magnomech/lyapunov.hpp"

#include "magnomech/errors.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace magnomech {

namespace {

double infinity_norm(const Mat8& m) {
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

void require_stable(const DriftMatrix& drift, const char* who) {
    const StabilityResult stability = check_stability(drift);
    if (!stability.stable) {
        throw StabilityError(std::string(who) +
                             ": drift matrix is not stable (max Re eig = " +
                             std::to_string(stability.max_re_eig) + " rad/s)");
    }
}

} // namespace

CovarianceMatrix solve_steady(const DriftMatrix& drift, const DiffusionMatrix& diffusion) {
    require_stable(drift, "solve_steady");

    // Vectorize A V + V A^T = -D columnwise: (I (x) A + A (x) I) vec(V) = -vec(D).
    const Mat8& a = drift.entries;
    Eigen::Matrix<double, 64, 64> system = Eigen::Matrix<double, 64, 64>::Zero();
    for (int j = 0; j < 8; ++j) {
        system.block<8, 8>(8 * j, 8 * j) += a; // I (x) A
        for (int i = 0; i < 8; ++i) {
            system.block<8, 8>(8 * i, 8 * j).diagonal().array() += a(i, j); // A (x) I
        }
    }
    const Eigen::Map<const Eigen::Matrix<double, 64, 1>> rhs(diffusion.entries.data());

    Eigen::PartialPivLU<Eigen::Matrix<double, 64, 64>> lu(system);
    const Eigen::Matrix<double, 64, 1> vec_v = lu.solve(-rhs);
    if (!vec_v.allFinite()) {
        throw NumericalError("solve_steady: singular linear system");
    }

    CovarianceMatrix cm;
    cm.entries = Eigen::Map<const Mat8>(vec_v.data());
    cm.entries = 0.5 * (cm.entries + cm.entries.transpose()).eval();

    const double residual = lyapunov_residual(drift, cm, diffusion);
    const double d_norm = diffusion.entries.norm();
    if (!(residual <= 1e-8 * d_norm)) {
        throw NumericalError("solve_steady: residual check failed");
    }
    return cm;
}

CovarianceMatrix integrate_to_steady(const DriftMatrix& drift, const DiffusionMatrix& diffusion,
                                     double horizon, double step) {
    require_stable(drift, "integrate_to_steady");
    if (!(horizon > 0.0) || !(step > 0.0)) {
        throw std::domain_error("integrate_to_steady: horizon and step must be positive");
    }

    const Mat8& a = drift.entries;
    const Mat8& d = diffusion.entries;
    auto flow = [&](const Mat8& v) -> Mat8 { return a * v + v * a.transpose() + d; };

    Mat8 v = 0.5 * Mat8::Identity();
    const long steps = static_cast<long>(std::ceil(horizon / step));
    const double h = horizon / static_cast<double>(steps);
    for (long n = 0; n < steps; ++n) {
        const Mat8 k1 = flow(v);
        const Mat8 k2 = flow(v + 0.5 * h * k1);
        const Mat8 k3 = flow(v + 0.5 * h * k2);
        const Mat8 k4 = flow(v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!v.allFinite()) {
            throw NumericalError("integrate_to_steady: iteration diverged; use a smaller step");
        }
    }

    CovarianceMatrix cm;
    cm.entries = 0.5 * (v + v.transpose());
    return cm;
}

double default_integration_step(const DriftMatrix& drift) {
    return 0.01 / infinity_norm(drift.entries);
}

double lyapunov_residual(const DriftMatrix& drift, const CovarianceMatrix& cm,
                         const DiffusionMatrix& diffusion) {
    const Mat8 residual = drift.entries * cm.entries + cm.entries * drift.entries.transpose() +
                          diffusion.entries;
    return residual.norm();
}

} // namespace magnomech
