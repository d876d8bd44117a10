#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace reslab {

inline constexpr const char* kVersion = "0.1.0";

/// Hard cap on edge count: edge subsets are fixed 128-bit masks.
inline constexpr int kMaxEdges = 128;

/// Soft guard on edge count for exhaustive enumeration, overridable via the
/// RESLAB_EDGE_GUARD environment variable (clamped to kMaxEdges).
inline int edge_guard() {
    static const int guard = [] {
        if (const char* env = std::getenv("RESLAB_EDGE_GUARD")) {
            int v = std::atoi(env);
            if (v > 0) return v < kMaxEdges ? v : kMaxEdges;
        }
        return 64;
    }();
    return guard;
}

enum class errc {
    non_planar_embedding,
    not_bipartite,
    bad_rotation,
    no_perfect_matching,
    size_limit_exceeded,
    not_a_cycle,
    not_elementary,
    not_weakly_elementary,
    not_a_tree,
    disconnected,
    not_partial_cube,
    not_resonant,
    not_a_hypercube,
    bad_parameter,
    invalid_chain_spec,
    class_mismatch,
    precondition_failed,
    not_unique,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_planar_embedding: return "NonPlanarEmbedding";
        case errc::not_bipartite: return "NotBipartite";
        case errc::bad_rotation: return "BadRotation";
        case errc::no_perfect_matching: return "NoPerfectMatching";
        case errc::size_limit_exceeded: return "SizeLimitExceeded";
        case errc::not_a_cycle: return "NotACycle";
        case errc::not_elementary: return "NotElementary";
        case errc::not_weakly_elementary: return "NotWeaklyElementary";
        case errc::not_a_tree: return "NotATree";
        case errc::disconnected: return "Disconnected";
        case errc::not_partial_cube: return "NotPartialCube";
        case errc::not_resonant: return "NotResonant";
        case errc::not_a_hypercube: return "NotAHypercube";
        case errc::bad_parameter: return "BadParameter";
        case errc::invalid_chain_spec: return "InvalidChainSpec";
        case errc::class_mismatch: return "ClassMismatch";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::not_unique: return "NotUnique";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

/// Fixed-width edge subset (up to kMaxEdges edges). Total order is the
/// 128-bit integer order, which makes downstream enumeration orders canonical.
struct EdgeSet {
    std::array<std::uint64_t, 2> w{0, 0};

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool none() const { return w[0] == 0 && w[1] == 0; }
    int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }

    bool contains(const EdgeSet& o) const {
        return (o.w[0] & ~w[0]) == 0 && (o.w[1] & ~w[1]) == 0;
    }
    bool intersects(const EdgeSet& o) const {
        return (w[0] & o.w[0]) != 0 || (w[1] & o.w[1]) != 0;
    }

    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) {
        a.w[0] ^= b.w[0];
        a.w[1] ^= b.w[1];
        return a;
    }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) {
        a.w[0] &= b.w[0];
        a.w[1] &= b.w[1];
        return a;
    }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) {
        a.w[0] |= b.w[0];
        a.w[1] |= b.w[1];
        return a;
    }
    friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.w == b.w; }
    friend bool operator<(const EdgeSet& a, const EdgeSet& b) {
        return a.w[1] != b.w[1] ? a.w[1] < b.w[1] : a.w[0] < b.w[0];
    }

    template <class F>
    void for_each(F&& f) const {
        for (int word = 0; word < 2; ++word) {
            std::uint64_t bits = w[word];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(word * 64 + b);
                bits &= bits - 1;
            }
        }
    }
};

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const {
        std::uint64_t h = s.w[0] * 0x9e3779b97f4a7c15ull;
        h ^= s.w[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace reslab
