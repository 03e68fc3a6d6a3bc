#include "fhkit/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "fhkit/errors.hpp"

namespace fh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            fail(ErrorCode::ParseError, "parts must be positive and weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
}

bool Partition::contains(const Box& x) const {
    return x.a >= 0 && x.b >= 0 && x.a < static_cast<int>(parts_.size()) && x.b < parts_[x.a];
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    for (int a = 0; a < static_cast<int>(parts_.size()); ++a)
        for (int b = 0; b < parts_[a]; ++b) out.push_back({a, b});
    return out;
}

Partition Partition::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
    for (int x : parts_)
        for (int b = 0; b < x; ++b) ++t[b];
    return Partition(t);
}

Partition Partition::with(const Box& x) const {
    std::vector<int> p = parts_;
    if (x.a == static_cast<int>(p.size())) p.push_back(0);
    if (x.a > static_cast<int>(p.size()) || p[x.a] != x.b) fail(ErrorCode::BoxOutsideDiagram, "box is not addable");
    ++p[x.a];
    return Partition(p);
}

Partition Partition::without(const Box& x) const {
    std::vector<int> p = parts_;
    if (!contains(x) || p[x.a] != x.b + 1) fail(ErrorCode::BoxOutsideDiagram, "box is not removable");
    --p[x.a];
    return Partition(p);
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int content(const Box& x) { return x.a - x.b; }

int arm(const Partition& p, const Box& x) {
    if (!p.contains(x)) fail(ErrorCode::BoxOutsideDiagram, "box " + to_string(x) + " is outside " + to_string(p));
    return p.parts()[x.a] - x.b - 1;
}

int leg(const Partition& p, const Box& x) {
    if (!p.contains(x)) fail(ErrorCode::BoxOutsideDiagram, "box " + to_string(x) + " is outside " + to_string(p));
    int l = 0;
    while (p.contains({x.a + l + 1, x.b})) ++l;
    return l;
}

int hook(const Partition& p, const Box& x) { return arm(p, x) + leg(p, x) + 1; }

int n_statistic(const Partition& p) {
    int s = 0;
    for (const Box& x : p.boxes()) s += x.a;
    return s;
}

Corners corners(const Partition& p) {
    Corners c;
    const auto& parts = p.parts();
    int rows = static_cast<int>(parts.size());
    for (int a = 0; a <= rows; ++a) {
        int len = a < rows ? parts[a] : 0;
        int prev = a == 0 ? -1 : parts[a - 1];
        if (a == 0 || len < prev) c.addable.push_back({a, len});
        if (a < rows && (a + 1 == rows || parts[a + 1] < len)) c.removable.push_back({a, len - 1});
    }
    std::sort(c.addable.begin(), c.addable.end());
    std::sort(c.removable.begin(), c.removable.end());
    return c;
}

StandardTableau::StandardTableau(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    Partition p;
    for (const Box& x : boxes_) p = p.with(x);
}

Partition StandardTableau::shape() const {
    Partition p;
    for (const Box& x : boxes_) p = p.with(x);
    return p;
}

std::vector<Monomial> StandardTableau::weights() const {
    std::vector<Monomial> w;
    for (const Box& x : boxes_) w.push_back(x.weight());
    return w;
}

StandardTableau StandardTableau::restrict(int k) const {
    return StandardTableau(std::vector<Box>(boxes_.begin(), boxes_.begin() + k));
}

StandardTableau StandardTableau::extend(const Box& x) const {
    auto b = boxes_;
    b.push_back(x);
    return StandardTableau(b);
}

StandardTableau StandardTableau::transpose() const {
    std::vector<Box> b;
    for (const Box& x : boxes_) b.push_back({x.b, x.a});
    return StandardTableau(b);
}

std::vector<StandardTableau> enumerate_syt(const Partition& p) {
    std::vector<StandardTableau> out;
    std::vector<Box> cur;
    Partition sofar;
    int n = p.size();
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        for (const Box& x : corners(sofar).addable) {
            if (!p.contains(x)) continue;
            Partition keep = sofar;
            cur.push_back(x);
            sofar = sofar.with(x);
            rec();
            sofar = keep;
            cur.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<StandardTableau> all_syt(int n) {
    std::vector<StandardTableau> out;
    for (const auto& p : partitions_of(n))
        for (auto& t : enumerate_syt(p)) out.push_back(std::move(t));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.boxes() < y.boxes(); });
    return out;
}

unsigned long long factorial(int n) {
    unsigned long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

unsigned long long hook_length_count(const Partition& p) {
    unsigned long long den = 1;
    for (const Box& x : p.boxes()) den *= hook(p, x);
    return factorial(p.size()) / den;
}

std::string to_string(const Box& b) { return "(" + std::to_string(b.a) + "," + std::to_string(b.b) + ")"; }

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
    return s + ")";
}

std::string to_string(const StandardTableau& t) {
    Partition p = t.shape();
    std::vector<std::vector<int>> rows(p.parts().size());
    for (std::size_t a = 0; a < rows.size(); ++a) rows[a].assign(p.parts()[a], 0);
    for (int i = 1; i <= t.size(); ++i) rows[t.box(i).a][t.box(i).b] = i;
    std::string s = "[";
    for (std::size_t a = 0; a < rows.size(); ++a) {
        s += a ? ",[" : "[";
        for (std::size_t b = 0; b < rows[a].size(); ++b) s += (b ? "," : "") + std::to_string(rows[a][b]);
        s += "]";
    }
    return s + "]";
}

namespace {

std::vector<int> ints_in(const std::string& s) {
    std::vector<int> v;
    for (std::size_t i = 0; i < s.size();) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            v.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
        } else {
            ++i;
        }
    }
    return v;
}

}  // namespace

Partition parse_partition(const std::string& text) { return Partition(ints_in(text)); }

StandardTableau parse_tableau(const std::string& text) {
    std::vector<std::vector<int>> rows;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '[') {
            ++depth;
            if (depth == 2) cur.clear();
        } else if (c == ']') {
            if (depth == 2) rows.push_back(ints_in(cur));
            --depth;
        } else if (depth == 2) {
            cur += c;
        } else if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') {
            fail(ErrorCode::ParseError, "bad tableau text: " + text);
        }
    }
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    std::vector<Box> boxes(n, Box{-1, -1});
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < rows[a].size(); ++b) {
            int l = rows[a][b];
            if (l < 1 || l > n || boxes[l - 1].a >= 0) fail(ErrorCode::ParseError, "labels must be 1..n once each");
            boxes[l - 1] = {static_cast<int>(a), static_cast<int>(b)};
        }
    try {
        return StandardTableau(boxes);
    } catch (const Error&) {
        fail(ErrorCode::ParseError, "not a standard tableau: " + text);
    }
}

}  // namespace fh
