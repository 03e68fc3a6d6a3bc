#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>

namespace fh {

// Exponent slots. q and t are stored doubled so that q^(1/2) and t^(1/2)
// are integral; every other symbol uses ordinary integer exponents.
enum Slot : int {
    Q = 0,
    T = 1,
    A = 2,
    D = 3,  // trace symbol (1 - a)/(v - v^-1) inside the Hecke module
    L1 = 4,
    L2 = 5,
    L3 = 6,
    L4 = 7,
    R1 = 8,
    Z1 = 13,
    kSlots = 18,
};

inline constexpr int kRoots = 5;
inline constexpr int kWeights = 5;
inline constexpr int kLines = 4;

inline int slot_l(int i) { return L1 + i - 1; }
inline int slot_r(int i) { return R1 + i - 1; }
inline int slot_z(int i) { return Z1 + i - 1; }

const char* slot_name(int s);
int slot_from_name(const std::string& name);  // -1 if unknown

struct Monomial {
    std::array<int, kSlots> e{};

    static Monomial one() { return {}; }
    static Monomial var(int slot, int power = 1);
    // q^(dq2/2) t^(dt2/2) a^da
    static Monomial qta(int dq2, int dt2, int da = 0);

    int dq2() const { return e[Q]; }
    int dt2() const { return e[T]; }
    int da() const { return e[A]; }

    bool is_one() const;
    bool lex_positive() const;  // first nonzero exponent is positive
    bool only_qta() const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    Monomial inv() const;
    Monomial pow(int k) const;
    Monomial& operator*=(const Monomial& o);

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;
};

// q^a t^b with integer a, b
inline Monomial qt(int a, int b) { return Monomial::qta(2 * a, 2 * b, 0); }
inline Monomial q_pow(int a) { return qt(a, 0); }
inline Monomial t_pow(int b) { return qt(0, b); }
inline Monomial a_pow(int k) { return Monomial::qta(0, 0, k); }

std::string to_string(const Monomial& m);

}  // namespace fh

template <>
struct std::hash<fh::Monomial> {
    std::size_t operator()(const fh::Monomial& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : m.e) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ull;
        return h;
    }
};
