#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tsurf {

/// A permutation of {0,1,2,3}, stored as its image table: p[i] = image of i.
struct Perm4 {
    std::array<int, 4> img{0, 1, 2, 3};

    Perm4() = default;
    Perm4(int a, int b, int c, int d) : img{a, b, c, d} {}
    explicit Perm4(const std::array<int, 4>& a) : img(a) {}

    int operator()(int i) const { return img[static_cast<size_t>(i)]; }
    int operator[](int i) const { return img[static_cast<size_t>(i)]; }

    bool operator==(const Perm4& o) const { return img == o.img; }
    bool operator!=(const Perm4& o) const { return img != o.img; }

    bool is_valid() const {
        std::array<bool, 4> seen{false, false, false, false};
        for (int v : img) {
            if (v < 0 || v > 3 || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = true;
        }
        return true;
    }

    /// (this ∘ other)(i) = this(other(i)).
    Perm4 compose(const Perm4& other) const {
        return Perm4{img[static_cast<size_t>(other.img[0])],
                     img[static_cast<size_t>(other.img[1])],
                     img[static_cast<size_t>(other.img[2])],
                     img[static_cast<size_t>(other.img[3])]};
    }

    Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
        return r;
    }

    /// +1 for even, -1 for odd.
    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img[static_cast<size_t>(i)] > img[static_cast<size_t>(j)]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    bool is_even() const { return sign() == 1; }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 4; ++i) {
            s += std::to_string(img[static_cast<size_t>(i)]);
            if (i < 3) s += ",";
        }
        return s + ")";
    }
};

/// Identity check helper.
inline bool is_identity(const Perm4& p) { return p == Perm4{}; }

}  // namespace tsurf
