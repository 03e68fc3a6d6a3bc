#include "fhkit/skein.hpp"

#include <cstdlib>

namespace fh {

LaurentPoly SkeinOracle::eval(const std::vector<int>& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    const int m = static_cast<int>(w.size());
    std::vector<int> visits(m, 0);
    std::vector<bool> top_used(n_, false);
    int bad = -1, components = 0;
    for (int start = 0; start < n_ && bad < 0; ++start) {
        if (top_used[start]) continue;
        ++components;
        int pos = start;
        do {
            top_used[pos] = true;
            for (int k = 0; k < m && bad < 0; ++k) {
                int g = std::abs(w[k]) - 1;
                if (pos != g && pos != g + 1) continue;
                bool left = pos == g;
                bool over = (w[k] > 0) == left;
                if (visits[k]++ == 0 && !over) bad = k;
                pos = left ? g + 1 : g;
            }
        } while (pos != start && bad < 0);
    }
    LaurentPoly r;
    if (bad < 0) {
        int e = 0;
        for (int x : w) e += x > 0 ? 1 : -1;
        r = LaurentPoly(Monomial::var(D, components) * a_pow((n_ - e - components) / 2));
    } else {
        std::vector<int> flipped = w, deleted = w;
        flipped[bad] = -w[bad];
        deleted.erase(deleted.begin() + bad);
        LaurentPoly g = LaurentPoly(Monomial::qta(1, 0)) - LaurentPoly(Monomial::qta(-1, 0));
        r = eval(flipped) + (w[bad] > 0 ? eval(deleted) * g : -(eval(deleted) * g));
    }
    memo_.emplace(w, r);
    return r;
}

BraidWord random_braid(int n, int max_len, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, std::max(1, n - 1)), coin(0, 1);
    BraidWord w(n, {});
    if (n > 1)
        for (int i = len(rng); i > 0; --i) w.letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
    return w;
}

}  // namespace fh
