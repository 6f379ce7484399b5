// discrete_bath.cpp: normal modes, residue sums and the eigen-decomposition oracle

#include "qbm/discrete_bath.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double coincidence_tol = 1e-9;

std::vector<double> coupling_strengths(const DiscreteBath& bath) {
    std::vector<double> g;
    g.reserve(bath.oscillators.size());
    for (const auto& o : bath.oscillators) g.push_back(o.coupling * o.coupling / (bath.M * o.mass * o.omega * o.omega));
    return g;
}

// s(λ) = λ − ω₀² − λ·Σ g_j/(λ − ω_j²), increasing between consecutive poles.
struct Secular {
    double w02;
    std::vector<double> poles;
    std::vector<double> g;

    double value(double lambda) const {
        double sum = 0.0;
        for (std::size_t j = 0; j < poles.size(); ++j) sum += g[j] / (lambda - poles[j]);
        return lambda - w02 - lambda * sum;
    }
    // s at λ = poles[a] + delta, with every λ − ω_j² formed from pole differences.
    double value_near(std::size_t a, double delta) const {
        const double lambda = poles[a] + delta;
        double sum = 0.0;
        for (std::size_t j = 0; j < poles.size(); ++j) sum += g[j] / (j == a ? delta : (poles[a] - poles[j]) + delta);
        return lambda - w02 - lambda * sum;
    }
    double derivative(double lambda) const {
        double sum = 0.0;
        for (std::size_t j = 0; j < poles.size(); ++j) {
            const double d = lambda - poles[j];
            sum += g[j] * poles[j] / (d * d);
        }
        return 1.0 + sum;
    }
};

double bisect(const Secular& s, double lo, double hi) {
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (s.value(mid) < 0.0) lo = mid;
        else hi = mid;
        if (hi - lo <= 2.0 * eps * hi) break;
    }
    double x = 0.5 * (lo + hi);
    const double step = s.value(x) / s.derivative(x);
    if (std::isfinite(step) && x - step > lo && x - step < hi) x -= step;
    return x;
}

double bisect_near(const Secular& s, std::size_t a, double lo, double hi) {
    for (int it = 0; it < 4000; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (s.value_near(a, mid) < 0.0) lo = mid;
        else hi = mid;
        if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

// ω̄_k² − ω_l², exact to rounding when the root was anchored at a bath pole.
double gap(const DiscreteBath& bath, const NormalModes& modes, std::size_t k, std::size_t l) {
    const double wl2 = bath.oscillators[l].omega * bath.oscillators[l].omega;
    if (k < modes.anchor.size() && modes.anchor[k] != NormalModes::npos) {
        const std::size_t a = modes.anchor[k];
        if (a == l) return modes.offset[k];
        const double wa = bath.oscillators[a].omega;
        return (wa * wa - wl2) + modes.offset[k];
    }
    return modes.omega_bar[k] * modes.omega_bar[k] - wl2;
}

// ω̄_k² − ω̄_m².
double mode_gap(const DiscreteBath& bath, const NormalModes& modes, std::size_t k, std::size_t m) {
    if (k < modes.anchor.size() && m < modes.anchor.size() && modes.anchor[m] != NormalModes::npos)
        return gap(bath, modes, k, modes.anchor[m]) - modes.offset[m];
    return modes.omega_bar[k] * modes.omega_bar[k] - modes.omega_bar[m] * modes.omega_bar[m];
}

}  // namespace

void validate(const DiscreteBath& bath) {
    if (!(bath.M > 0.0) || !std::isfinite(bath.M)) throw DomainError("bath: system mass must be positive");
    if (!(bath.omega0 > 0.0) || !std::isfinite(bath.omega0)) throw DomainError("bath: omega0 must be positive");
    for (std::size_t j = 0; j < bath.oscillators.size(); ++j) {
        const auto& o = bath.oscillators[j];
        if (!(o.mass > 0.0) || !std::isfinite(o.mass))
            throw DomainError("bath oscillator " + std::to_string(j + 1) + ": mass must be positive");
        if (!(o.omega > 0.0) || !std::isfinite(o.omega))
            throw DomainError("bath oscillator " + std::to_string(j + 1) + ": frequency must be positive");
        if (o.coupling == 0.0 || !std::isfinite(o.coupling))
            throw DomainError("bath oscillator " + std::to_string(j + 1) + ": coupling must be nonzero");
        if (j > 0) {
            const double prev = bath.oscillators[j - 1].omega;
            if (!(o.omega > prev))
                throw DegenerateBath("bath frequencies must be strictly increasing (oscillator " +
                                     std::to_string(j + 1) + ")");
            if (o.omega * o.omega - prev * prev < 1e-13 * o.omega * o.omega)
                throw DegenerateBath("bath frequencies " + std::to_string(j) + " and " + std::to_string(j + 1) +
                                     " are numerically degenerate");
        }
    }
}

double gamma_zero(const DiscreteBath& bath) {
    double sum = 0.0;
    for (double g : coupling_strengths(bath)) sum += g;
    return sum;
}

double d_chi(const DiscreteBath& bath, double omega) {
    const double lambda = omega * omega;
    const auto g = coupling_strengths(bath);
    const auto& osc = bath.oscillators;
    double prod = lambda - bath.omega0 * bath.omega0;
    for (const auto& o : osc) prod *= lambda - o.omega * o.omega;
    double coupled = 0.0;
    for (std::size_t j = 0; j < osc.size(); ++j) {
        double term = g[j];
        for (std::size_t i = 0; i < osc.size(); ++i)
            if (i != j) term *= lambda - osc[i].omega * osc[i].omega;
        coupled += term;
    }
    return prod - lambda * coupled;
}

NormalModes normal_modes(const DiscreteBath& bath) {
    validate(bath);
    Secular s;
    s.w02 = bath.omega0 * bath.omega0;
    s.g = coupling_strengths(bath);
    for (const auto& o : bath.oscillators) s.poles.push_back(o.omega * o.omega);

    std::vector<double> edges;
    edges.push_back(0.0);
    for (double p : s.poles) edges.push_back(p);
    const double top = (s.poles.empty() ? 0.0 : s.poles.back()) + s.w02 + gamma_zero(bath);
    edges.push_back(top);

    NormalModes modes;
    const double scale = top;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double lo = edges[k];
        const double hi = edges[k + 1];
        if (hi - lo < 1e-13 * scale) throw DegenerateBath("interlacing bracket collapsed");
        double lambda;
        if (k + 2 == edges.size()) {
            // The last bracket is closed on the right: s(top) >= 0.
            lambda = s.value(hi) <= 0.0 ? hi : bisect(s, lo, hi);
        } else {
            lambda = bisect(s, lo, hi);
        }
        std::size_t a = NormalModes::npos;
        double offset = lambda;
        const bool has_left = k >= 1;
        const bool has_right = k < s.poles.size();
        if (has_left && (!has_right || lambda - lo <= hi - lambda)) {
            a = k - 1;
            offset = lambda == hi ? hi - lo : bisect_near(s, a, 0.0, hi - lo);
        } else if (has_right) {
            a = k;
            offset = bisect_near(s, a, lo - hi, 0.0);
        }
        modes.omega_bar.push_back(a == NormalModes::npos ? std::sqrt(lambda) : std::sqrt(s.poles[a] + offset));
        modes.anchor.push_back(a);
        modes.offset.push_back(offset);
        modes.brackets.emplace_back(std::sqrt(lo), std::sqrt(hi));
    }
    return modes;
}

std::vector<double> residue_weights(const DiscreteBath& bath, const NormalModes& modes) {
    const auto& osc = bath.oscillators;
    std::vector<double> u2;
    for (std::size_t k = 0; k < modes.omega_bar.size(); ++k) {
        double w = 1.0;
        for (std::size_t l = 0; l < osc.size(); ++l) w *= gap(bath, modes, k, l);
        for (std::size_t k2 = 0; k2 < modes.omega_bar.size(); ++k2)
            if (k2 != k) w /= mode_gap(bath, modes, k, k2);
        u2.push_back(w);
    }
    return u2;
}

double free_energy_0(const DiscreteBath& bath, const NormalModes& modes, double hbar) {
    double sum = 0.0;
    for (double w : modes.omega_bar) sum += w;
    for (const auto& o : bath.oscillators) sum -= o.omega;
    return 0.5 * hbar * sum;
}

double system_energy_0(const DiscreteBath& bath, const NormalModes& modes, double hbar) {
    for (std::size_t k = 0; k < modes.omega_bar.size(); ++k)
        for (std::size_t l = 0; l < bath.oscillators.size(); ++l)
            if (gap(bath, modes, k, l) == 0.0)
                throw DegenerateBath("normal mode coincides with a bath frequency; residue weight vanishes");
    const auto u2 = residue_weights(bath, modes);
    const double w02 = bath.omega0 * bath.omega0;
    double sum = 0.0;
    for (std::size_t k = 0; k < u2.size(); ++k) {
        const double wb = modes.omega_bar[k];
        sum += u2[k] * (w02 + wb * wb) / wb;
    }
    return 0.25 * hbar * sum;
}

SecondLawReport k_second_law(const DiscreteBath& bath, const NormalModes& modes, double hbar,
                             bool throw_on_coincident) {
    SecondLawReport out;
    out.K = free_energy_0(bath, modes, hbar) - system_energy_0(bath, modes, hbar);

    const auto& osc = bath.oscillators;
    const auto& wb = modes.omega_bar;
    std::vector<bool> mode_skipped(wb.size(), false);
    std::vector<bool> pole_skipped(osc.size(), false);
    for (std::size_t k = 0; k < wb.size(); ++k)
        for (std::size_t l = 0; l < osc.size(); ++l)
            if (std::abs(osc[l].omega - wb[k]) < coincidence_tol * osc[l].omega) {
                if (throw_on_coincident) {
                    std::ostringstream msg;
                    msg << "bath frequency " << osc[l].omega << " coincides with normal mode " << wb[k];
                    throw CoincidentPole(msg.str());
                }
                mode_skipped[k] = true;
                pole_skipped[l] = true;
                out.skipped.emplace_back(k, l);
            }

    // w_l = c_l²/(2 m_l ω_l²)
    std::vector<double> w;
    for (const auto& o : osc) w.push_back(o.coupling * o.coupling / (2.0 * o.mass * o.omega * o.omega));

    const auto u2 = residue_weights(bath, modes);
    for (std::size_t k = 0; k < wb.size(); ++k) {
        const double a1 = wb[k] * u2[k];
        double a2 = 0.0;
        for (std::size_t l = 0; l < osc.size(); ++l) {
            const double plus = osc[l].omega + wb[k];
            const double minus = -gap(bath, modes, k, l) / plus;
            a2 += w[l] * (1.0 / (plus * plus) + 1.0 / (minus * minus));
        }
        const double term = hbar / (4.0 * bath.M) * a1 * a2;
        out.per_mode_terms.push_back(term);
        if (!mode_skipped[k]) out.residue_sum += term;
    }

    for (std::size_t l = 0; l < osc.size(); ++l) {
        const double wl = osc[l].omega;
        const double ll = wl * wl;
        double ratio = 1.0;
        for (std::size_t j = 0; j < osc.size(); ++j)
            if (j != l) ratio *= ll - osc[j].omega * osc[j].omega;
        for (std::size_t k = 0; k < wb.size(); ++k) ratio /= -gap(bath, modes, k, l);
        const double term = hbar / (2.0 * bath.M) * w[l] * ll * 2.0 * wl * ratio;
        out.per_bath_pole_terms.push_back(term);
        if (!pole_skipped[l]) out.residue_sum += term;
    }
    return out;
}

GroundStateReport exact_ground_state_oracle(const DiscreteBath& bath, double hbar) {
    validate(bath);
    const auto& osc = bath.oscillators;
    const std::size_t n = osc.size() + 1;
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    W(0, 0) = bath.omega0 * bath.omega0 + gamma_zero(bath);
    for (std::size_t j = 0; j < osc.size(); ++j) {
        const auto i = static_cast<Eigen::Index>(j + 1);
        W(i, i) = osc[j].omega * osc[j].omega;
        W(0, i) = W(i, 0) = -osc[j].coupling / std::sqrt(bath.M * osc[j].mass);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(W);
    if (solver.info() != Eigen::Success) throw EigenFailure("eigen-decomposition of the potential matrix failed");
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();

    GroundStateReport r;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        if (!(values(k) > 0.0)) throw EigenFailure("potential matrix is not positive definite");
        r.omega_bar.push_back(std::sqrt(values(k)));
    }

    // Mass-weighted coordinates y = √m·x: ⟨y_i²⟩ = (ħ/2)Σ V_ik²/ω̄_k, ⟨p_i²⟩ = (ħ/2)Σ V_ik²·ω̄_k.
    auto moments = [&](Eigen::Index i, double& y2, double& p2) {
        y2 = 0.0;
        p2 = 0.0;
        for (Eigen::Index k = 0; k < values.size(); ++k) {
            const double v2 = vectors(i, k) * vectors(i, k);
            const double wk = r.omega_bar[static_cast<std::size_t>(k)];
            y2 += 0.5 * hbar * v2 / wk;
            p2 += 0.5 * hbar * v2 * wk;
        }
    };

    double y2 = 0.0;
    double p2 = 0.0;
    moments(0, y2, p2);
    r.E_s = 0.5 * p2 + 0.5 * bath.omega0 * bath.omega0 * y2;
    r.q_variance = y2 / bath.M;
    r.p_variance = p2 * bath.M;
    for (Eigen::Index k = 0; k < values.size(); ++k) r.weights.push_back(vectors(0, k) * vectors(0, k));
    for (std::size_t j = 0; j < osc.size(); ++j) {
        moments(static_cast<Eigen::Index>(j + 1), y2, p2);
        r.E_bath.push_back(0.5 * p2 + 0.5 * osc[j].omega * osc[j].omega * y2);
    }
    for (double wk : r.omega_bar) r.E_total += 0.5 * hbar * wk;
    return r;
}

}  // namespace qbm
