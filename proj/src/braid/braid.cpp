#include "fhkit/braid.hpp"

#include <cstdlib>
#include <sstream>

#include "fhkit/errors.hpp"

namespace fh {

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (n < 1) fail(ErrorCode::ParseError, "a braid needs at least one strand");
    for (int x : letters)
        if (x == 0 || std::abs(x) >= n) fail(ErrorCode::ParseError, "generator index out of range");
}

BraidWord BraidWord::inverse() const {
    std::vector<int> w(letters.rbegin(), letters.rend());
    for (int& x : w) x = -x;
    return {strands, w};
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
    if (strands != o.strands) fail(ErrorCode::StrandMismatch, "braids on different strand counts");
    auto w = letters;
    w.insert(w.end(), o.letters.begin(), o.letters.end());
    return {strands, w};
}

BraidWord BraidWord::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    BraidWord r(strands, {});
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

BraidWord BraidWord::on_strands(int n) const {
    if (n < strands) fail(ErrorCode::StrandMismatch, "cannot remove strands");
    return {n, letters};
}

int BraidWord::writhe() const {
    int s = 0;
    for (int x : letters) s += x > 0 ? 1 : -1;
    return s;
}

BraidWord full_twist(int k, int n) {
    if (k < 1 || k > n) fail(ErrorCode::ParseError, "full twist needs 1 <= k <= n");
    std::vector<int> w;
    for (int r = 0; r < k; ++r)
        for (int i = 1; i < k; ++i) w.push_back(i);
    return {n, w};
}

BraidWord jucys_murphy(int k, int n) {
    if (k < 2 || k > n) fail(ErrorCode::ParseError, "Jucys-Murphy element needs 2 <= k <= n");
    std::vector<int> w;
    for (int i = k - 1; i >= 1; --i) w.push_back(i);
    for (int i = 1; i <= k - 1; ++i) w.push_back(i);
    return {n, w};
}

BraidWord torus_braid(int n, int k) {
    std::vector<int> one;
    for (int i = 1; i < n; ++i) one.push_back(i);
    return BraidWord(n, one).pow(k);
}

ClosureData closure_data(const BraidWord& w) {
    ClosureData d;
    int n = w.strands;
    // pos[s] = current position of the strand that started at s
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[i] = i;  // at[position] = starting strand
    for (int x : w.letters) {
        int i = std::abs(x) - 1;
        std::swap(at[i], at[i + 1]);
    }
    d.permutation.assign(n, 0);
    for (int p = 0; p < n; ++p) d.permutation[at[p]] = p;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++d.components;
        for (int x = s; !seen[x]; x = d.permutation[x]) seen[x] = true;
    }
    d.writhe = w.writhe();
    return d;
}

BraidWord parse_braid(const std::string& text, int strands) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> w;
    while (in >> tok) {
        bool neg = false;
        std::size_t i = 0;
        if (tok[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= tok.size() || tok[i] != 's') fail(ErrorCode::ParseError, "bad braid letter: " + tok);
        try {
            std::size_t used = 0;
            int g = std::stoi(tok.substr(i + 1), &used);
            if (used != tok.size() - i - 1) throw std::invalid_argument(tok);
            w.push_back(neg ? -g : g);
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad braid letter: " + tok);
        }
    }
    return {strands, w};
}

std::string to_string(const BraidWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        int x = w.letters[i];
        s += (i ? " " : "") + std::string(x < 0 ? "-" : "") + "s" + std::to_string(std::abs(x));
    }
    return s;
}

}  // namespace fh
