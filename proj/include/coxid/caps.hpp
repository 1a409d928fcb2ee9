#pragma once

#include <string>

#include "coxid/error.hpp"

namespace coxid {

inline constexpr int kMaxGroundSet = 16;

// Size limits for the exhaustive routines. All are overridable from the CLI.
struct Caps {
    int ordered_partitions = 10;  // streamed enumeration of ordered partitions
    int complex = 9;              // materialized face sets (build_complex)
    int matchings = 14;           // maximal matching enumeration
    int pfaffian_order = 16;      // signed matching expansion
    int homology = 6;             // GF(2) boundary ranks
    int el_labeling = 8;          // exhaustive interval check on B(lambda)
    int facets = 8;               // enumeration of A(lambda) over all of S_n
    int decomposition = 7;        // decomposition suite inside sweeps
};

inline void require_cap(int n, int cap, const char* what) {
    if (n > cap) {
        throw CapExceeded(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
    }
}

}  // namespace coxid
