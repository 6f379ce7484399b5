// quadrature.cpp: globally adaptive Gauss-Kronrod 7-15

#include "qbm/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "qbm/errors.hpp"

namespace qbm {
namespace {

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double uflow = std::numeric_limits<double>::min();

struct Segment {
    std::size_t piece;
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

struct Piece {
    RealFunction h;
};

double eval_checked(const RealFunction& h, double t) {
    const double v = h(t);
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "integrand is not finite at t = " << t;
        throw DomainError(msg.str());
    }
    return v;
}

Segment gauss_kronrod(const RealFunction& h, std::size_t piece, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, 7> f1{};
    std::array<double, 7> f2{};
    const double fc = eval_checked(h, center);
    double resk = fc * wgk[7];
    double resg = fc * wg[3];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        f1[j] = eval_checked(h, center - dx);
        f2[j] = eval_checked(h, center + dx);
        resk += wgk[j] * (f1[j] + f2[j]);
        resabs += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += wg[j / 2] * (f1[j] + f2[j]);
    }
    const double mean = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double ah = std::abs(half);
    resk *= half;
    resabs *= ah;
    resasc *= ah;
    double err = std::abs((resk - resg * half));
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > uflow / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return {piece, a, b, resk, err};
}

struct Range {
    std::size_t piece;
    double a;
    double b;
};

IntegralResult adaptive(const std::vector<Piece>& pieces, const std::vector<Range>& ranges,
                        const QuadratureOptions& opts) {
    std::priority_queue<Segment> heap;
    std::size_t evals = 0;
    double frozen_value = 0.0;
    double frozen_error = 0.0;

    for (const auto& r : ranges) {
        if (r.b <= r.a) continue;
        heap.push(gauss_kronrod(pieces[r.piece].h, r.piece, r.a, r.b));
        evals += 15;
    }

    auto totals = [&](double& value, double& error) {
        // Summation in a fixed order keeps results independent of heap layout details.
        std::vector<Segment> all;
        auto copy = heap;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const Segment& x, const Segment& y) {
            return x.piece != y.piece ? x.piece < y.piece : x.a < y.a;
        });
        value = frozen_value;
        error = frozen_error;
        for (const auto& s : all) {
            value += s.value;
            error += s.error;
        }
    };

    double value = 0.0;
    double error = 0.0;
    double running_value = frozen_value;
    double running_error = frozen_error;
    {
        auto copy = heap;
        while (!copy.empty()) {
            running_value += copy.top().value;
            running_error += copy.top().error;
            copy.pop();
        }
    }

    while (!heap.empty()) {
        const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(running_value));
        if (running_error <= tol) break;
        if (evals + 30 > opts.max_evals) break;

        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const double scale = std::max({std::abs(worst.a), std::abs(worst.b), 1e-300});
        if (worst.b - worst.a < 1e3 * eps * scale || mid <= worst.a || mid >= worst.b) {
            frozen_value += worst.value;
            frozen_error += worst.error;
            if (heap.empty()) break;
            continue;
        }
        const auto& h = pieces[worst.piece].h;
        Segment left = gauss_kronrod(h, worst.piece, worst.a, mid);
        Segment right = gauss_kronrod(h, worst.piece, mid, worst.b);
        evals += 30;
        running_value += left.value + right.value - worst.value;
        running_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    totals(value, error);
    IntegralResult result;
    result.value = value;
    result.abs_error_estimate = error;
    result.evaluations = evals;
    result.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
    if (!result.converged && opts.throw_on_failure) {
        std::ostringstream msg;
        msg << "quadrature did not converge: value " << value << ", error estimate " << error
            << " after " << evals << " evaluations";
        throw NonConvergence(msg.str(), value, error, evals);
    }
    return result;
}

std::vector<double> interior_points(const std::vector<double>& splits, double a, double b) {
    std::vector<double> pts;
    for (double s : splits)
        if (std::isfinite(s) && s > a && s < b) pts.push_back(s);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

void add_finite(std::vector<Range>& ranges, std::size_t piece, double a, double b,
                const std::vector<double>& splits) {
    double lo = a;
    for (double s : interior_points(splits, a, b)) {
        ranges.push_back({piece, lo, s});
        lo = s;
    }
    ranges.push_back({piece, lo, b});
}

IntegralResult combine(const IntegralResult& x, const IntegralResult& y) {
    return {x.value + y.value, x.abs_error_estimate + y.abs_error_estimate, x.evaluations + y.evaluations,
            x.converged && y.converged};
}

}  // namespace

std::string_view to_string(DivergenceTag tag) {
    switch (tag) {
        case DivergenceTag::Convergent: return "convergent";
        case DivergenceTag::LogDivergent: return "log-divergent";
        case DivergenceTag::PowerDivergent: return "power-divergent";
    }
    return "unknown";
}

std::string_view to_string(TailSign sign) {
    switch (sign) {
        case TailSign::Positive: return "+";
        case TailSign::Negative: return "-";
        case TailSign::Mixed: return "mixed";
    }
    return "unknown";
}

IntegralResult integrate(const RealFunction& f, double a, double b, const QuadratureOptions& opts,
                         const std::vector<double>& splits) {
    if (!(b > a)) throw DomainError("integrate: requires a < b");
    std::vector<Piece> pieces{{f}};
    std::vector<Range> ranges;
    add_finite(ranges, 0, a, b, splits);
    return adaptive(pieces, ranges, opts);
}

IntegralResult integrate_from(const RealFunction& f, double a, const QuadratureOptions& opts,
                              const std::vector<double>& splits) {
    const auto pts = interior_points(splits, a, std::numeric_limits<double>::infinity());
    const double start = pts.empty() ? a : pts.back();
    const double L = std::max(std::abs(start), 1.0);

    std::vector<Piece> pieces;
    pieces.push_back({f});
    pieces.push_back({[f, start, L](double t) {
        const double one_minus = 1.0 - t;
        const double x = start + L * t / one_minus;
        if (!std::isfinite(x)) return 0.0;
        const double v = f(x);
        if (v == 0.0) return 0.0;
        return v * L / (one_minus * one_minus);
    }});
    std::vector<Range> ranges;
    if (!pts.empty()) add_finite(ranges, 0, a, start, pts);
    ranges.push_back({1, 0.0, 1.0});
    return adaptive(pieces, ranges, opts);
}

IntegralResult integrate_semi_infinite(const RealFunction& f, const QuadratureOptions& opts,
                                       const std::vector<double>& splits) {
    return integrate_from(f, 0.0, opts, splits);
}

IntegralResult principal_value_integral(const RealFunction& f, double singularity,
                                        const QuadratureOptions& opts, const std::vector<double>& splits) {
    const double s = singularity;
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("principal_value_integral: singularity must be positive");

    // Fold held constant below u_min.
    const double u_min = 1e-8 * s;
    auto folded = [&f, s, u_min](double u) {
        u = std::max(u, u_min);
        return f(s + u) + f(s - u);
    };

    // u·|f(s + u)| stays bounded at a simple pole and grows at a higher-order one.
    const double u1 = 1e-3 * s;
    const double u2 = 1e-6 * s;
    const double r1 = u1 * std::abs(f(s + u1));
    const double r2 = u2 * std::abs(f(s + u2));
    if (!std::isfinite(r1) || !std::isfinite(r2) || r2 > 10.0 * r1) {
        std::ostringstream msg;
        msg << "principal_value_integral: integrand is not a simple pole at x = " << s;
        throw SingularityMisdeclared(msg.str());
    }

    std::vector<double> fold_splits;
    std::vector<double> tail_splits;
    for (double x : splits) {
        if (!std::isfinite(x) || x <= 0.0) continue;
        if (x < 2.0 * s) {
            const double u = std::abs(x - s);
            if (u > 0.0 && u < s) fold_splits.push_back(u);
        } else if (x > 2.0 * s) {
            tail_splits.push_back(x);
        }
    }

    QuadratureOptions half = opts;
    half.abs_tol = 0.5 * opts.abs_tol;
    half.throw_on_failure = false;
    const IntegralResult near = integrate(folded, 0.0, s, half, fold_splits);
    const IntegralResult far = integrate_from(f, 2.0 * s, half, tail_splits);
    IntegralResult total = combine(near, far);
    total.converged = total.abs_error_estimate <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total.value));
    if (!total.converged && opts.throw_on_failure) {
        std::ostringstream msg;
        msg << "principal value integral did not converge: error estimate " << total.abs_error_estimate;
        throw NonConvergence(msg.str(), total.value, total.abs_error_estimate, total.evaluations);
    }
    return total;
}

DivergenceClass classify_tail(const RealFunction& f, double lo, double hi, const QuadratureOptions& opts) {
    if (!(lo > 0.0) || !(hi > 2.0 * lo)) throw DomainError("classify_tail: requires 0 < lo and hi > 2 lo");
    constexpr int windows = 16;
    const double ratio = std::pow(hi / lo, 1.0 / windows);

    QuadratureOptions local = opts;
    local.rel_tol = 1e-8;
    local.abs_tol = 1e-300;
    local.throw_on_failure = false;

    std::vector<double> xs;
    std::vector<double> ys;
    int positive = 0;
    int negative = 0;
    double x = lo;
    for (int k = 0; k < windows; ++k) {
        const double next = x * ratio;
        const double inc = integrate(f, x, next, local).value;
        if (inc > 0.0) ++positive;
        if (inc < 0.0) ++negative;
        if (inc != 0.0) {
            xs.push_back(std::log(std::sqrt(x * next)));
            ys.push_back(std::log(std::abs(inc)));
        }
        x = next;
    }

    DivergenceClass out;
    out.sign = negative == 0 && positive > 0 ? TailSign::Positive
             : positive == 0 && negative > 0 ? TailSign::Negative
                                             : TailSign::Mixed;
    if (xs.size() < 3) {
        out.tag = DivergenceTag::Convergent;
        out.slope = -std::numeric_limits<double>::infinity();
        return out;
    }

    const double n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    out.slope = sxy / sxx;

    if (std::abs(out.slope) < 0.1) {
        out.tag = DivergenceTag::LogDivergent;
    } else if (out.slope > 0.25) {
        out.tag = DivergenceTag::PowerDivergent;
    } else if (out.slope < -0.25) {
        out.tag = DivergenceTag::Convergent;
    } else {
        std::ostringstream msg;
        msg << "classify_tail: fitted exponent " << out.slope << " does not separate the cases";
        throw Inconclusive(msg.str());
    }
    return out;
}

}  // namespace qbm
