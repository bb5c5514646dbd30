#include "regen/traffic.hpp"

#include <algorithm>
#include <numeric>

namespace regen {

double uniform_beta(const CodeParams& code, BetaMode mode) {
    if (code.d < code.k) throw std::invalid_argument("uniform_beta: need d >= k");
    if (!(code.file_mb > 0)) throw std::invalid_argument("uniform_beta: need M > 0");
    double denom = code.d - code.k + 1;
    return mode == BetaMode::Msr ? code.file_mb / (code.k * denom)
                                 : code.file_mb / (code.d * denom);
}

TrafficVector flexible_beta(const std::vector<double>& capacities, const CodeParams& code) {
    const int d = (int)capacities.size();
    if (d < code.k) throw std::invalid_argument("flexible_beta: need d >= k capacities");
    for (double c : capacities)
        if (!(c > 0)) throw std::invalid_argument("flexible_beta: capacities must be > 0");

    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (capacities[a] != capacities[b]) return capacities[a] < capacities[b];
        return a < b;
    });

    const int m = d - code.k + 1;  // slow group size
    double slow_sum = 0;
    for (int r = 0; r < m; ++r) slow_sum += capacities[order[r]];
    const double scale = code.file_mb / (code.k * slow_sum);
    const double cap_cutoff = capacities[order[m - 1]];

    TrafficVector beta(d);
    for (int i = 0; i < d; ++i)
        beta[order[i]] = (i < m ? capacities[order[i]] : cap_cutoff) * scale;
    return beta;
}

double star_regen_time(const TrafficVector& traffic, const std::vector<double>& capacities) {
    if (traffic.size() != capacities.size())
        throw std::invalid_argument("star_regen_time: traffic/capacity length mismatch");
    double t = 0;
    for (size_t i = 0; i < traffic.size(); ++i) {
        if (!(capacities[i] > 0))
            throw std::invalid_argument("star_regen_time: capacities must be > 0");
        t = std::max(t, traffic[i] / capacities[i]);
    }
    return t;
}

double flexible_regen_time(const std::vector<double>& capacities, const CodeParams& code) {
    const int d = (int)capacities.size();
    if (d < code.k) throw std::invalid_argument("flexible_regen_time: need d >= k capacities");
    std::vector<double> sorted = capacities;
    for (double c : sorted)
        if (!(c > 0)) throw std::invalid_argument("flexible_regen_time: capacities must be > 0");
    std::sort(sorted.begin(), sorted.end());
    double slow_sum = std::accumulate(sorted.begin(), sorted.begin() + (d - code.k + 1), 0.0);
    return code.file_mb / (code.k * slow_sum);
}

}  // namespace regen
