#include "fhkit/koszul.hpp"

#include <algorithm>
#include <set>

#include "fhkit/errors.hpp"
#include "fhkit/io.hpp"

namespace fh {

ChartPoly::ChartPoly(std::size_t gens, const Rational& c) {
    if (c != 0) terms_[Exp(gens, 0)] = c;
}

ChartPoly ChartPoly::gen(std::size_t gens, std::size_t i) {
    ChartPoly p;
    Exp e(gens, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
}

void ChartPoly::add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ChartPoly ChartPoly::operator+(const ChartPoly& o) const {
    ChartPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ChartPoly ChartPoly::operator-(const ChartPoly& o) const {
    ChartPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ChartPoly ChartPoly::operator*(const ChartPoly& o) const {
    ChartPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

ChartFamily parse_family(const std::string& s) {
    if (s == "toeplitz") return ChartFamily::Toeplitz;
    if (s == "antisym" || s == "antisymmetric") return ChartFamily::Antisymmetric;
    fail(ErrorCode::ParseError, "unknown chart family: " + s);
}

StandardTableau family_tableau(ChartFamily f, int n) {
    if (n < 1) fail(ErrorCode::UnsupportedN, "chart families need n >= 1");
    std::vector<Box> boxes;
    for (int i = 0; i < n; ++i) boxes.push_back(f == ChartFamily::Toeplitz ? Box{0, i} : Box{i, 0});
    return StandardTableau(boxes);
}

ChartPoly Chart::var(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return ChartPoly::gen(gens(), i);
    fail(ErrorCode::ParseError, "no chart coordinate " + name);
}

Monomial Chart::weight(const ChartPoly::Exp& e) const {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) m *= weights[i].pow(e[i]);
    return m;
}

bool Chart::contains_box(int N, int M) const {
    for (const Box& b : tableau.boxes())
        if (b.a == N && b.b == M) return true;
    return false;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size();
    PolyMatrix r(n, std::vector<ChartPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

namespace {

PolyMatrix zero_matrix(const Chart& c) { return PolyMatrix(c.n, std::vector<ChartPoly>(c.n)); }

std::string ij(int i, int j) { return std::to_string(i) + std::to_string(j); }

void fill_matrices(Chart& c) {
    const int n = c.n;
    c.X = zero_matrix(c);
    c.Y = zero_matrix(c);
    auto v = [&](const std::string& s) { return c.var(s); };
    const ChartPoly one = c.constant(1);
    switch (c.kind) {
        case ChartKind::Toeplitz:
            // X = u_1 + B u_2 + ... + B^(n-1) u_n, Y = B
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j <= i; ++j) c.X[i][j] = v("u" + std::to_string(i - j + 1));
                if (i > 0) c.Y[i][i - 1] = one;
            }
            break;
        case ChartKind::Antisymmetric:
            for (int i = 0; i < n; ++i) {
                c.X[i][i] = v("x" + std::to_string(i + 1));
                if (i > 0) c.X[i][i - 1] = one;
                for (int j = 0; j < i; ++j) c.Y[i][j] = v("y" + ij(i + 1, j + 1));
            }
            // [X, Y]_ij = (x_i - x_j) y_ij + y_(i-1)j - y_i(j+1), with y_kk = 0
            for (int i = 2; i <= n; ++i)
                for (int j = 1; j < i; ++j) {
                    ChartPoly r = (v("x" + std::to_string(i)) - v("x" + std::to_string(j))) * v("y" + ij(i, j));
                    if (i - 1 > j) r += v("y" + ij(i - 1, j));
                    if (j + 1 < i) r = r - v("y" + ij(i, j + 1));
                    c.relations.push_back(r);
                }
            break;
        case ChartKind::HookTQ:
            // x32 = x21 y32 eliminated
            c.X = {{v("x1"), {}, {}}, {v("x21"), v("x1"), {}}, {one, v("x21") * v("y32"), v("x3")}};
            c.Y = {{{}, {}, {}}, {one, {}, {}}, {{}, v("y32"), {}}};
            c.relations = {(v("x1") - v("x3")) * v("y32")};
            break;
        case ChartKind::HookQT: {
            // y32 = x32 y21 - x1 + x3 eliminated
            ChartPoly y32 = v("x32") * v("y21") - v("x1") + v("x3");
            c.X = {{v("x1"), {}, {}}, {one, v("x2"), {}}, {{}, v("x32"), v("x3")}};
            c.Y = {{{}, {}, {}}, {v("y21"), {}, {}}, {one, y32, {}}};
            c.relations = {(v("x1") - v("x2")) * v("y21"), (v("x2") - v("x3")) * y32};
            break;
        }
    }
}

bool homogeneous_of(const Chart& c, const ChartPoly& p, const Monomial& w) {
    for (const auto& [e, x] : p.terms())
        if (c.weight(e) != w) return false;
    return true;
}

}  // namespace

Chart build_chart(const StandardTableau& t) {
    ChartPresentation p = chart_presentation(t);
    Chart c;
    c.tableau = t;
    c.kind = p.kind;
    c.n = p.n;
    for (const auto& g : p.generators) {
        c.names.push_back(g.name);
        c.weights.push_back(g.weight);
    }
    c.grading = chart_weights(p);
    fill_matrices(c);
    const std::vector<Monomial> z = t.weights();
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (!homogeneous_of(c, c.X[i][j], q_pow(1) * z[j] / z[i]) ||
                !homogeneous_of(c, c.Y[i][j], t_pow(1) * z[j] / z[i]))
                fail(ErrorCode::UnsupportedShape, "chart matrix entry has the wrong weight");
        }
    for (const ChartPoly& r : c.relations)
        if (r.is_zero() || !homogeneous_of(c, r, c.weight(r.terms().begin()->first)))
            fail(ErrorCode::UnsupportedShape, "inhomogeneous chart relation");
    ChartRing ring(c);
    PolyMatrix xy = mat_mul(c.X, c.Y), yx = mat_mul(c.Y, c.X);
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j)
            if (!ring.is_zero(xy[i][j] - yx[i][j]))
                fail(ErrorCode::UnsupportedShape, "X and Y do not commute modulo the relations");
    return c;
}

Chart build_chart(ChartFamily f, int n) { return build_chart(family_tableau(f, n)); }

ChartRing::ChartRing(const Chart& c) : chart_(c) {}

std::vector<ChartPoly::Exp> ChartRing::monomials_of(const Monomial& degree) {
    std::vector<ChartPoly::Exp> out;
    const Weights& w = chart_.grading;
    ChartPoly::Exp e(chart_.gens(), 0);
    // depth-first over generators with the remaining degree as budget
    auto rec = [&](auto&& self, std::size_t i, const Monomial& rest) -> void {
        if (w.degree(rest) < 0) return;
        if (i == chart_.gens()) {
            if (rest.is_one()) out.push_back(e);
            return;
        }
        Monomial r = rest;
        for (int k = 0; w.degree(r) >= 0; ++k) {
            e[i] = k;
            self(self, i + 1, r);
            r = r / chart_.weights[i];
        }
        e[i] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

const ChartRing::Piece& ChartRing::piece(const Monomial& degree) {
    auto it = pieces_.find(degree);
    if (it != pieces_.end()) return it->second;
    Piece p;
    p.monomials = monomials_of(degree);
    const std::size_t m = p.monomials.size();
    auto column = [&](const ChartPoly::Exp& e) {
        return static_cast<int>(std::lower_bound(p.monomials.begin(), p.monomials.end(), e) - p.monomials.begin());
    };
    std::vector<std::vector<Rational>> span;
    for (const ChartPoly& r : chart_.relations) {
        Monomial rest = degree / chart_.weight(r.terms().begin()->first);
        if (chart_.grading.degree(rest) < 0) continue;
        for (const auto& mono : monomials_of(rest)) {
            std::vector<Rational> row(m, 0);
            for (const auto& [e, c] : r.terms()) {
                ChartPoly::Exp f = e;
                for (std::size_t i = 0; i < f.size(); ++i) f[i] += mono[i];
                row[column(f)] += c;
            }
            span.push_back(std::move(row));
        }
    }
    // reduced row echelon form
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < span.size(); ++col) {
        std::size_t piv = r;
        while (piv < span.size() && span[piv][col] == 0) ++piv;
        if (piv == span.size()) continue;
        std::swap(span[r], span[piv]);
        Rational inv = 1 / span[r][col];
        for (auto& x : span[r]) x *= inv;
        for (std::size_t k = 0; k < span.size(); ++k) {
            if (k == r || span[k][col] == 0) continue;
            Rational f = span[k][col];
            for (std::size_t j = col; j < m; ++j) span[k][j] -= f * span[r][j];
        }
        p.pivots.push_back(static_cast<int>(col));
        ++r;
    }
    span.resize(r);
    p.rows = std::move(span);
    for (std::size_t col = 0, k = 0; col < m; ++col) {
        if (k < p.pivots.size() && p.pivots[k] == static_cast<int>(col)) {
            ++k;
            continue;
        }
        p.quotient.push_back(p.monomials[col]);
        p.quotient_index.push_back(static_cast<int>(col));
    }
    return pieces_.emplace(degree, std::move(p)).first->second;
}

const std::vector<ChartPoly::Exp>& ChartRing::basis(const Monomial& degree) { return piece(degree).quotient; }

std::vector<Rational> ChartRing::coords(const Monomial& degree, const ChartPoly& poly) {
    const Piece& p = piece(degree);
    std::vector<Rational> v(p.monomials.size(), 0);
    for (const auto& [e, c] : poly.terms()) {
        auto it = std::lower_bound(p.monomials.begin(), p.monomials.end(), e);
        if (it == p.monomials.end() || *it != e) fail(ErrorCode::NonGenericParameter, "polynomial is not homogeneous");
        v[it - p.monomials.begin()] += c;
    }
    for (std::size_t k = 0; k < p.rows.size(); ++k) {
        Rational f = v[p.pivots[k]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * p.rows[k][j];
    }
    std::vector<Rational> out;
    for (int idx : p.quotient_index) out.push_back(v[idx]);
    return out;
}

ChartPoly ChartRing::normal_form(const ChartPoly& poly) {
    std::map<Monomial, ChartPoly> parts;
    for (const auto& [e, c] : poly.terms()) parts[chart_.weight(e)].add_term(e, c);
    ChartPoly r;
    for (const auto& [deg, part] : parts) {
        std::vector<Rational> v = coords(deg, part);
        const auto& q = basis(deg);
        for (std::size_t i = 0; i < q.size(); ++i) r.add_term(q[i], v[i]);
    }
    return r;
}

std::vector<ChartPoly> section(const Chart& c, int N, int M) {
    if (N < 0 || M < 0) fail(ErrorCode::NonGenericParameter, "section exponents must be >= 0");
    PolyMatrix f = zero_matrix(c);
    for (int i = 0; i < c.n; ++i) f[i][i] = c.constant(1);
    for (int k = 0; k < N; ++k) f = mat_mul(f, c.X);
    for (int k = 0; k < M; ++k) f = mat_mul(f, c.Y);
    ChartRing ring(c);
    std::vector<ChartPoly> s;
    for (int i = 0; i < c.n; ++i) s.push_back(ring.normal_form(f[i][0]));
    return s;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

int rank(Matrix a) {
    int r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t col = 0; col < cols && r < static_cast<int>(a.size()); ++col) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t k = r + 1; k < a.size(); ++k) {
            if (a[k][col] == 0) continue;
            Rational f = a[k][col] / a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[k][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

bool product_is_zero(const Matrix& a, const Matrix& b) {
    // a: p x m, b: m x k
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
            if (s != 0) return false;
        }
    return true;
}

}  // namespace

KoszulTable koszul_homology(const Chart& c, int N, int M, int cutoff) {
    KoszulTable tab;
    tab.N = N;
    tab.M = M;
    tab.cutoff = cutoff;
    tab.grading = c.grading;
    const int n = c.n;
    const std::vector<ChartPoly> s = section(c, N, M);
    const std::vector<Monomial> z = c.tableau.weights();
    const Weights& w = c.grading;
    std::vector<Monomial> xi(n), subset(1 << n);
    for (int i = 0; i < n; ++i) xi[i] = qt(N, M) / z[i];
    Rational lowest = 0;
    for (int I = 0; I < (1 << n); ++I) {
        for (int i = 0; i < n; ++i)
            if (I >> i & 1) subset[I] *= xi[i];
        lowest = std::min(lowest, w.degree(subset[I]));
    }
    ChartRing ring(c);

    // ring degrees that can occur below the cutoff
    std::set<Monomial> ring_degrees = {Monomial::one()};
    {
        const Rational bound = Rational(cutoff) - lowest;
        std::vector<Monomial> frontier = {Monomial::one()};
        while (!frontier.empty()) {
            std::vector<Monomial> next;
            for (const Monomial& m : frontier)
                for (const Monomial& g : c.weights) {
                    Monomial x = m * g;
                    if (w.degree(x) <= bound && ring_degrees.insert(x).second) next.push_back(x);
                }
            frontier = std::move(next);
        }
    }
    std::set<Monomial> deltas;
    for (const Monomial& e : ring_degrees)
        for (int I = 0; I < (1 << n); ++I) {
            Monomial d = e * subset[I];
            if (w.degree(d) <= cutoff && ring.dim(e) > 0) deltas.insert(d);
        }
    if (cutoff < 0 || deltas.empty()) fail(ErrorCode::CutoffTooSmall, "no multidegree fits under the cutoff");

    for (const Monomial& d : deltas) {
        // chain bases: (subset, offset) per exterior degree
        std::vector<std::vector<std::pair<int, int>>> blocks(n + 1);
        std::vector<int> dims(n + 1, 0);
        for (int I = 0; I < (1 << n); ++I) {
            Monomial e = d / subset[I];
            if (w.degree(e) < 0) continue;
            int dim = ring.dim(e);
            if (dim == 0) continue;
            int k = __builtin_popcount(static_cast<unsigned>(I));
            blocks[k].push_back({I, dims[k]});
            dims[k] += dim;
        }
        std::vector<Matrix> D(n + 2);  // D[k]: C_k -> C_(k-1)
        for (int k = 1; k <= n; ++k) {
            Matrix m(dims[k - 1], std::vector<Rational>(dims[k], 0));
            std::map<int, int> target;
            for (const auto& [J, off] : blocks[k - 1]) target[J] = off;
            for (const auto& [I, off] : blocks[k]) {
                const auto& basis = ring.basis(d / subset[I]);
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    ChartPoly mono;
                    mono.add_term(basis[b], 1);
                    int sign = 1;
                    for (int i = 0; i < n; ++i) {
                        if (!(I >> i & 1)) continue;
                        int J = I & ~(1 << i);
                        ChartPoly img = s[i] * mono;
                        auto it = target.find(J);
                        if (!img.is_zero()) {
                            if (it == target.end()) fail(ErrorCode::NonGenericParameter, "differential leaves the chain group");
                            std::vector<Rational> v = ring.coords(d / subset[J], img);
                            for (std::size_t r = 0; r < v.size(); ++r) m[it->second + r][off + b] += sign * v[r];
                        }
                        sign = -sign;
                    }
                }
            }
            D[k] = std::move(m);
        }
        std::vector<int> ranks(n + 2, 0);
        for (int k = 1; k <= n; ++k) ranks[k] = rank(D[k]);
        for (int k = 2; k <= n; ++k)
            if (!product_is_zero(D[k - 1], D[k])) tab.d_squared_zero = false;
        long chain_euler = 0, hom_euler = 0;
        for (int k = 0; k <= n; ++k) {
            int h = dims[k] - ranks[k] - ranks[k + 1];
            if (dims[k]) tab.chains.push_back({k, d, dims[k]});
            if (h) tab.homology.push_back({k, d, h});
            chain_euler += (k % 2 ? -1 : 1) * dims[k];
            hom_euler += (k % 2 ? -1 : 1) * h;
        }
        if (chain_euler != hom_euler) tab.euler_matches = false;
    }
    auto order = [&](const KoszulEntry& x, const KoszulEntry& y) {
        Rational dx = w.degree(x.weight), dy = w.degree(y.weight);
        if (dx != dy) return dx < dy;
        if (x.weight != y.weight) return x.weight > y.weight;
        return x.degree < y.degree;
    };
    std::sort(tab.chains.begin(), tab.chains.end(), order);
    std::sort(tab.homology.begin(), tab.homology.end(), order);
    return tab;
}

std::string render(const Chart& c, const ChartPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, coef] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += c.names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational a = abs(coef);
        bool neg = coef < 0;
        std::string term = mono.empty() ? render_rational(a) : (a == 1 ? mono : render_rational(a) + "*" + mono);
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace fh
