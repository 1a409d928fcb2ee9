#include "coxid/homology.hpp"

#include <unordered_map>

#include "coxid/cube_poset.hpp"

namespace coxid {

std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t columns) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][word] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r][word] & bit)) {
                for (std::size_t w = word; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<long long> homology_gf2(const WeightedComplex& c, const Caps& caps) {
    const int n = c.ground_size();
    require_cap(n, caps.homology, "homology_gf2");
    std::vector<long long> betti(static_cast<std::size_t>(n), 0);
    if (c.empty()) return betti;

    // Chains indexed by length; chain length L = k - 1 is dimension L - 1.
    using Chain = std::vector<Mask>;
    struct ChainHash {
        std::size_t operator()(const Chain& ch) const noexcept {
            std::size_t h = 0;
            for (Mask m : ch) h = h * 0x9e3779b1u + m;
            return h;
        }
    };
    std::vector<std::vector<Chain>> by_length(static_cast<std::size_t>(n));
    std::vector<std::unordered_map<Chain, std::size_t, ChainHash>> index(static_cast<std::size_t>(n));
    for (const auto& s : c.faces) {
        auto chain = face_to_chain(s, c.lambda);
        const std::size_t len = chain.size();
        index[len].emplace(chain, by_length[len].size());
        by_length[len].push_back(std::move(chain));
    }

    // rank of the boundary map from chains of length L to chains of length L-1.
    std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t len = 1; len < by_length.size(); ++len) {
        const std::size_t columns = by_length[len - 1].size();
        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(by_length[len].size());
        for (const auto& chain : by_length[len]) {
            std::vector<std::uint64_t> row((columns + 63) / 64, 0);
            for (std::size_t drop = 0; drop < chain.size(); ++drop) {
                Chain face;
                for (std::size_t i = 0; i < chain.size(); ++i)
                    if (i != drop) face.push_back(chain[i]);
                const std::size_t col = index[len - 1].at(face);
                row[col / 64] ^= std::uint64_t{1} << (col % 64);
            }
            rows.push_back(std::move(row));
        }
        boundary_rank[len] = gf2_rank(std::move(rows), columns);
    }

    for (std::size_t len = 0; len < by_length.size(); ++len) {
        const auto dim_chains = static_cast<long long>(by_length[len].size());
        betti[len] = dim_chains - static_cast<long long>(boundary_rank[len]) -
                     static_cast<long long>(boundary_rank[len + 1]);
    }
    return betti;
}

}  // namespace coxid
