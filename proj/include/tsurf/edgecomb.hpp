#pragma once

#include "tsurf/qmatching.hpp"
#include "tsurf/triangulation.hpp"

#include <utility>
#include <vector>

namespace tsurf {

/// One square side running along the edge: the crossing of sheet `sheet` of
/// the quad in tetrahedron `tet` (walk incidence `incidence` of the edge
/// class). sign +1 is a 0-edge, -1 an infinity-edge.
struct Letter {
    int incidence = 0;
    int tet = 0;
    int quad_type = -1;
    int sheet = 0;
    int sign = 0;
    bool operator==(const Letter& o) const {
        return incidence == o.incidence && tet == o.tet && quad_type == o.quad_type &&
               sheet == o.sheet && sign == o.sign;
    }
};

/// Cyclic letter sequence around one end of an edge class, in that end's
/// positive rotation order. End 0 (the head) follows the walk order; end 1 is
/// the mirror reversal.
struct CornerWord {
    int edge = 0;
    int end = 0;
    std::vector<Letter> letters;
    int length() const { return static_cast<int>(letters.size()); }
};

/// Builds both end words for an edge. Requires integral admissible x; the
/// matching equations need not hold (the word is defined regardless).
std::pair<CornerWord, CornerWord> corner_word(const IdealTriangulation& T, const QuadVector& x,
                                              const EdgeClass& e);

/// labels[i] is the integer of the gap directly after letter i in the word's
/// own rotation order; crossing a 0-edge increments, an infinity-edge
/// decrements, minimum normalized to zero. n is the maximum label.
struct RegionLabels {
    std::vector<long long> labels;
    long long n = 0;
};

RegionLabels region_labels(const CornerWord& w);

/// True when the two end labelings of one edge correspond by k <-> n-k under
/// the mirror correspondence of gaps.
bool check_end_duality(const CornerWord& w0, const RegionLabels& l0, const CornerWord& w1,
                       const RegionLabels& l1);

/// Chords pairing each 0-letter with an infinity-letter, non-crossing on the
/// cross-section circle. Positions index the source word's letter order.
struct StripMatching {
    int edge = 0;
    std::vector<std::pair<int, int>> pairs;  // (0-letter position, infinity-letter position)
};

/// All non-crossing perfect matchings, sorted canonically. The empty word
/// yields one empty matching.
std::vector<StripMatching> enumerate_strip_matchings(const CornerWord& w);

/// Per-gap bookkeeping pairs (k, n-k).
std::vector<std::pair<long long, long long>> sheet_push_counts(const RegionLabels& l);

}  // namespace tsurf
