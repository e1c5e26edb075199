#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berezin {

// Anticommuting generators, densely numbered so that a monomial is a bit
// mask and the global order is the numeric order:
//   0..9   face generators a[ijk], one per 3-subset of {1..5}, lex by triple
//   10..19 auxiliary pairs b1[t], b2[t], one pair per 4-subset, lex by
//          4-tuple then slot
// Every face id precedes every auxiliary id, which fixes the canonical form
// of mixed monomials (faces first).
using Mask = std::uint32_t;

inline constexpr int kNumFaces = 10;
inline constexpr int kNumTets = 5;
inline constexpr int kNumGenerators = kNumFaces + 2 * kNumTets;

namespace detail {
inline constexpr std::array<std::array<int, 3>, kNumFaces> kFaceTable = {{{1, 2, 3},
                                                                          {1, 2, 4},
                                                                          {1, 2, 5},
                                                                          {1, 3, 4},
                                                                          {1, 3, 5},
                                                                          {1, 4, 5},
                                                                          {2, 3, 4},
                                                                          {2, 3, 5},
                                                                          {2, 4, 5},
                                                                          {3, 4, 5}}};
inline constexpr std::array<std::array<int, 4>, kNumTets> kTetTable = {{{1, 2, 3, 4},
                                                                        {1, 2, 3, 5},
                                                                        {1, 2, 4, 5},
                                                                        {1, 3, 4, 5},
                                                                        {2, 3, 4, 5}}};
}  // namespace detail

inline int face_id(int i, int j, int k) {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    if (i < 1 || k > 5 || i == j || j == k) throw std::invalid_argument("face needs three distinct labels in 1..5");
    for (int f = 0; f < kNumFaces; ++f) {
        const auto& t = detail::kFaceTable[static_cast<std::size_t>(f)];
        if (t[0] == i && t[1] == j && t[2] == k) return f;
    }
    throw std::logic_error("unreachable face lookup");
}

inline const std::array<int, 3>& face_vertices(int f) {
    if (f < 0 || f >= kNumFaces) throw std::invalid_argument("face id out of range");
    return detail::kFaceTable[static_cast<std::size_t>(f)];
}

inline int tet_index(const std::array<int, 4>& sorted) {
    for (int t = 0; t < kNumTets; ++t)
        if (detail::kTetTable[static_cast<std::size_t>(t)] == sorted) return t;
    throw std::invalid_argument("not a 4-subset of {1..5}");
}

inline const std::array<int, 4>& tet_vertices(int t) {
    if (t < 0 || t >= kNumTets) throw std::invalid_argument("tetrahedron id out of range");
    return detail::kTetTable[static_cast<std::size_t>(t)];
}

// slot is 1 or 2 (the two auxiliary generators attached to a tetrahedron).
inline int aux_id(const std::array<int, 4>& sorted_tet, int slot) {
    if (slot != 1 && slot != 2) throw std::invalid_argument("auxiliary slot must be 1 or 2");
    return kNumFaces + 2 * tet_index(sorted_tet) + (slot - 1);
}

inline bool is_face_generator(int g) { return g >= 0 && g < kNumFaces; }

inline std::string generator_label(int g) {
    if (is_face_generator(g)) {
        const auto& f = face_vertices(g);
        return "a[" + std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]) + "]";
    }
    if (g < kNumFaces || g >= kNumGenerators) throw std::invalid_argument("generator id out of range");
    int t = (g - kNumFaces) / 2, slot = (g - kNumFaces) % 2 + 1;
    const auto& v = tet_vertices(t);
    return "b" + std::to_string(slot) + "[" + std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]) +
           std::to_string(v[3]) + "]";
}

inline Mask mask_bit(int g) { return Mask{1} << g; }

inline Mask mask_of(std::initializer_list<int> gens) {
    Mask m = 0;
    for (int g : gens) {
        if (m & mask_bit(g)) throw std::invalid_argument("repeated generator in monomial");
        m |= mask_bit(g);
    }
    return m;
}

inline std::vector<int> mask_generators(Mask m) {
    std::vector<int> out;
    for (int g = 0; g < kNumGenerators; ++g)
        if (m & mask_bit(g)) out.push_back(g);
    return out;
}

inline int mask_degree(Mask m) { return __builtin_popcount(m); }

inline std::string monomial_label(Mask m) {
    if (m == 0) return "1";
    std::string out;
    for (int g : mask_generators(m)) {
        if (!out.empty()) out += "*";
        out += generator_label(g);
    }
    return out;
}

// Rendering order: lower degree first, then lexicographic on the generator
// sequence (which equals lexicographic on ascending id lists).
inline bool monomial_render_less(Mask a, Mask b) {
    int da = mask_degree(a), db = mask_degree(b);
    if (da != db) return da < db;
    return mask_generators(a) < mask_generators(b);
}

// An ordered tetrahedron: four distinct labels, orientation as listed.
struct Tetra {
    std::array<int, 4> v;

    Tetra(int a, int b, int c, int d) : v{a, b, c, d} { validate(); }
    explicit Tetra(const std::array<int, 4>& arr) : v(arr) { validate(); }

    static Tetra parse(const std::string& s) {
        if (s.size() != 4) throw std::invalid_argument("tetrahedron must be four digits, e.g. 1234");
        std::array<int, 4> a{};
        for (int i = 0; i < 4; ++i) {
            char c = s[static_cast<std::size_t>(i)];
            if (c < '1' || c > '5') throw std::invalid_argument("tetrahedron labels must be digits 1..5");
            a[static_cast<std::size_t>(i)] = c - '0';
        }
        return Tetra(a);
    }

    std::array<int, 4> sorted() const {
        auto s = v;
        std::sort(s.begin(), s.end());
        return s;
    }
    // Sign of the permutation taking the listed order to sorted order.
    int parity_to_sorted() const {
        int sign = 1;
        auto a = v;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(j)]) {
                    std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
                    sign = -sign;
                }
        return sign;
    }

    // The four faces in substitution order: drop the 4th, 3rd, 2nd, 1st label.
    std::array<int, 4> face_ids() const {
        return {face_id(v[0], v[1], v[2]), face_id(v[0], v[1], v[3]), face_id(v[0], v[2], v[3]),
                face_id(v[1], v[2], v[3])};
    }
    int aux1() const { return aux_id(sorted(), 1); }
    int aux2() const { return aux_id(sorted(), 2); }

    std::string label() const {
        return std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]) + std::to_string(v[3]);
    }

  private:
    void validate() const {
        for (int x : v)
            if (x < 1 || x > 5) throw std::invalid_argument("tetrahedron labels must lie in 1..5");
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(j)])
                    throw std::invalid_argument("tetrahedron labels must be distinct");
    }
};

// Parses "124" into a face id and "124,125,135" into a face monomial mask.
// Faces are unoriented; digits may come in any order.
inline int parse_face(const std::string& s) {
    if (s.size() != 3) throw std::invalid_argument("face must be three digits, e.g. 124");
    for (char c : s)
        if (c < '1' || c > '5') throw std::invalid_argument("face labels must be digits 1..5");
    return face_id(s[0] - '0', s[1] - '0', s[2] - '0');
}

inline Mask parse_face_monomial(const std::string& s) {
    Mask m = 0;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("empty face in monomial list");
        int f = parse_face(cur);
        if (m & mask_bit(f)) throw std::invalid_argument("repeated face " + cur + " in monomial");
        m |= mask_bit(f);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return m;
}

}  // namespace berezin
