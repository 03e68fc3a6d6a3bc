#pragma once

#include <string>
#include <vector>

namespace fh {

// Letters are signed generator indices: +i is sigma_i, -i its inverse.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> w);

    BraidWord inverse() const;
    BraidWord operator*(const BraidWord& o) const;
    BraidWord pow(int k) const;
    BraidWord on_strands(int n) const;  // same letters, more strands
    int writhe() const;
    bool operator==(const BraidWord&) const = default;
};

BraidWord full_twist(int k, int n);
BraidWord jucys_murphy(int k, int n);
BraidWord torus_braid(int n, int k);  // (sigma_1 ... sigma_{n-1})^k

struct ClosureData {
    std::vector<int> permutation;  // image of each strand position, 0-based
    int components = 0;
    int writhe = 0;
};
ClosureData closure_data(const BraidWord& w);

// "s1 s2 -s1"; an empty string is the trivial braid.
BraidWord parse_braid(const std::string& text, int strands);
std::string to_string(const BraidWord& w);

}  // namespace fh
