#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

// Undirected simple graph as bit-packed adjacency rows. Row i is a run of
// 64-bit words with bit j set iff {i,j} is an edge; the matrix stays
// symmetric with a zero diagonal, and padding bits past column n-1 stay
// clear so word-wise popcounts are exact.
class DenseGraph {
public:
    DenseGraph() = default;

    explicit DenseGraph(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
        if (n < 0)
            throw std::domain_error("DenseGraph: negative vertex count");
    }

    int vertex_count() const { return n_; }
    int words_per_row() const { return words_; }

    bool edge(int i, int j) const {
        return (word(i, j >> 6) >> (j & 63)) & 1;
    }

    void add_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j)
            throw std::domain_error("DenseGraph: self-loop at vertex " + std::to_string(i));
        word(i, j >> 6) |= std::uint64_t{1} << (j & 63);
        word(j, i >> 6) |= std::uint64_t{1} << (i & 63);
    }

    std::span<const std::uint64_t> row(int i) const {
        return {&bits_[static_cast<std::size_t>(i) * words_], static_cast<std::size_t>(words_)};
    }

    int degree(int i) const {
        int d = 0;
        for (std::uint64_t w : row(i))
            d += std::popcount(w);
        return d;
    }

    std::int64_t edge_count() const {
        std::int64_t total = 0;
        for (int i = 0; i < n_; ++i)
            total += degree(i);
        return total / 2;
    }

    bool operator==(const DenseGraph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::domain_error("DenseGraph: vertex " + std::to_string(v) + " out of range");
    }

    std::uint64_t& word(int i, int w) {
        return bits_[static_cast<std::size_t>(i) * words_ + w];
    }
    std::uint64_t word(int i, int w) const {
        return bits_[static_cast<std::size_t>(i) * words_ + w];
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline void validate_connection_set(int n, const std::vector<int>& s) {
    for (int v : s) {
        if (v < 1 || v > n / 2)
            throw std::domain_error("connection set element " + std::to_string(v) +
                                    " outside {1.." + std::to_string(n / 2) + "} for n = " +
                                    std::to_string(n));
    }
}

// Circulant graph G_n(S): vertices are Z_n and {i,j} is an edge iff
// min((i-j) mod n, (j-i) mod n) lies in S.
class CirculantGraph {
public:
    CirculantGraph(int n, std::vector<int> connection_set, DenseGraph adjacency)
        : n_(n), connection_set_(std::move(connection_set)), adjacency_(std::move(adjacency)) {}

    int vertex_count() const { return n_; }
    const std::vector<int>& connection_set() const { return connection_set_; }
    const DenseGraph& adjacency() const { return adjacency_; }

private:
    int n_;
    std::vector<int> connection_set_;
    DenseGraph adjacency_;
};

inline CirculantGraph build_circulant(int n, std::vector<int> s) {
    if (n < 1)
        throw std::domain_error("build_circulant: vertex count must be >= 1");
    validate_connection_set(n, s);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    std::vector<char> in_s(static_cast<std::size_t>(n / 2) + 1, 0);
    for (int v : s)
        in_s[static_cast<std::size_t>(v)] = 1;

    DenseGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int d = j - i;
            const int circular = std::min(d, n - d);
            if (in_s[static_cast<std::size_t>(circular)])
                g.add_edge(i, j);
        }
    }
    return CirculantGraph(n, std::move(s), std::move(g));
}

// {1..floor(n/2)} \ S. For the circulant construction this yields the
// complement graph's connection set.
inline std::vector<int> complement_set(int n, const std::vector<int>& s) {
    validate_connection_set(n, s);
    std::vector<char> in_s(static_cast<std::size_t>(n / 2) + 1, 0);
    for (int v : s)
        in_s[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n / 2) - s.size());
    for (int v = 1; v <= n / 2; ++v)
        if (!in_s[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

inline DenseGraph complement(const DenseGraph& g) {
    const int n = g.vertex_count();
    DenseGraph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.edge(i, j))
                out.add_edge(i, j);
    return out;
}

} // namespace ramsey
