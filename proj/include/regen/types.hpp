#pragma once

#include <stdexcept>
#include <string>

namespace regen {

// (N, n, k, d, M, alpha) description of a regenerating-coded storage system.
// N storage nodes total, n of them hold coded blocks, any k suffice to
// rebuild the file, d providers participate in a repair. Data in Mb,
// bandwidth everywhere in Mbps, time in seconds.
struct CodeParams {
    int num_nodes = 0;    // N
    int coded_nodes = 0;  // n
    int k = 0;
    int d = 0;
    double file_mb = 0;   // M
    double alpha_mb = 0;  // per-node storage, M/k at the MDS point

    static CodeParams mds(int num_nodes, int coded_nodes, int k, int d, double file_mb) {
        CodeParams c{num_nodes, coded_nodes, k, d, file_mb, file_mb / k};
        c.validate();
        return c;
    }

    void validate() const {
        if (num_nodes < 1 || coded_nodes < 1 || k < 1 || d < 1)
            throw std::invalid_argument("code params: all counts must be >= 1");
        if (!(k <= d && d <= coded_nodes - 1 && coded_nodes - 1 < num_nodes))
            throw std::invalid_argument("code params: need k <= d <= n-1 < N");
        if (!(file_mb > 0))
            throw std::invalid_argument("code params: file size must be > 0");
        if (alpha_mb != file_mb / k)
            throw std::invalid_argument("code params: alpha must equal M/k");
    }
};

struct BandwidthDistribution {
    double low = 0;   // Mbps
    double high = 0;  // Mbps

    void validate() const {
        if (!(low > 0) || !(low <= high))
            throw std::invalid_argument("bandwidth distribution: need 0 < low <= high");
    }
};

// Which uniform-traffic convention to use for beta.
enum class BetaMode { Msr, Eval };

enum class Scheme { RS, SPSN, FRS, FLEX, RSF, SPSNF, Oracle };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);
std::string to_string(BetaMode m);
BetaMode beta_mode_from_string(const std::string& s);

inline bool scheme_is_overlay(Scheme s) {
    return s == Scheme::RS || s == Scheme::SPSN || s == Scheme::FRS || s == Scheme::FLEX;
}
inline bool scheme_is_fattree(Scheme s) {
    return s == Scheme::RSF || s == Scheme::SPSNF;
}
inline bool scheme_is_flexible(Scheme s) {
    return s == Scheme::FRS || s == Scheme::FLEX;
}

}  // namespace regen
