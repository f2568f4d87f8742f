#include "qspread/resources.hpp"

#include <algorithm>
#include <cmath>

#include "qspread/errors.hpp"

namespace qspread {

ResourceReport resource_report(const Circuit& c) {
    ResourceReport r;
    r.qubits = c.num_qubits();
    std::vector<std::uint64_t> track(static_cast<std::size_t>(c.num_qubits()), 0);
    for (const Gate& g : c.gates()) {
        ++r.counts[g.kind];
        ++r.total_gates;
        std::uint64_t start = track[static_cast<std::size_t>(g.target)];
        for (int q : g.controls) start = std::max(start, track[static_cast<std::size_t>(q)]);
        const std::uint64_t finish = start + 1;
        track[static_cast<std::size_t>(g.target)] = finish;
        for (int q : g.controls) track[static_cast<std::size_t>(q)] = finish;
        r.depth = std::max(r.depth, finish);
    }
    const RegisterLayout& l = c.layout();
    int owned = l.value_reg.width + (l.target >= 0 ? 1 : 0);
    r.ancillas = c.num_qubits() - owned;
    if (r.ancillas < 0) r.ancillas = 0;
    return r;
}

LinearFit fit_linear(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw DomainError("fit: need at least two matched points");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw DomainError("fit: x values are constant");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

LinearFit fit_log_log(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> lx(xs.size()), ly(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0.0 || ys[i] <= 0.0) throw DomainError("fit: log-log needs positive data");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }
    return fit_linear(lx, ly);
}

} // namespace qspread
