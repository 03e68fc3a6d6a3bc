#include "fhkit/monomial.hpp"

#include <string>

#include "fhkit/errors.hpp"

namespace fh {

namespace {

const char* const kNames[kSlots] = {"q",  "t",  "a",  "d",  "l1", "l2", "l3", "l4", "r1",
                                    "r2", "r3", "r4", "r5", "z1", "z2", "z3", "z4", "z5"};

}  // namespace

const char* slot_name(int s) { return kNames[s]; }

int slot_from_name(const std::string& name) {
    if (name == "l") return L1;
    for (int s = 0; s < kSlots; ++s)
        if (name == kNames[s]) return s;
    return -1;
}

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::NotExpandable: return "NotExpandable";
        case ErrorCode::UncancelledPole: return "UncancelledPole";
        case ErrorCode::UnsupportedShape: return "UnsupportedShape";
        case ErrorCode::NotAKnot: return "NotAKnot";
        case ErrorCode::NotMonomialRatio: return "NotMonomialRatio";
        case ErrorCode::KernelNotExpandable: return "KernelNotExpandable";
        case ErrorCode::UnsupportedN: return "UnsupportedN";
        case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
        case ErrorCode::StrandMismatch: return "StrandMismatch";
        case ErrorCode::BoxOutsideDiagram: return "BoxOutsideDiagram";
        case ErrorCode::NonGenericParameter: return "NonGenericParameter";
        case ErrorCode::NonMonomialSubstitution: return "NonMonomialSubstitution";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

Monomial Monomial::var(int slot, int power) {
    Monomial m;
    m.e[slot] = (slot == Q || slot == T) ? 2 * power : power;
    return m;
}

Monomial Monomial::qta(int dq2, int dt2, int da) {
    Monomial m;
    m.e[Q] = dq2;
    m.e[T] = dt2;
    m.e[A] = da;
    return m;
}

bool Monomial::is_one() const {
    for (int x : e)
        if (x != 0) return false;
    return true;
}

bool Monomial::lex_positive() const {
    for (int x : e)
        if (x != 0) return x > 0;
    return false;
}

bool Monomial::only_qta() const {
    for (int s = D; s < kSlots; ++s)
        if (e[s] != 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    r *= o;
    return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    for (int s = 0; s < kSlots; ++s) e[s] += o.e[s];
    return *this;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (int s = 0; s < kSlots; ++s) r.e[s] -= o.e[s];
    return r;
}

Monomial Monomial::inv() const {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.e[s] = -e[s];
    return r;
}

Monomial Monomial::pow(int k) const {
    Monomial r;
    for (int s = 0; s < kSlots; ++s) r.e[s] = e[s] * k;
    return r;
}

std::string to_string(const Monomial& m) {
    std::string out;
    for (int s = 0; s < kSlots; ++s) {
        if (m.e[s] == 0) continue;
        if (!out.empty()) out += "*";
        out += kNames[s];
        bool half = (s == Q || s == T);
        int x = m.e[s];
        if (half && x % 2 != 0) {
            out += "^(" + std::to_string(x) + "/2)";
        } else {
            int p = half ? x / 2 : x;
            if (p != 1) out += "^" + std::to_string(p);
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace fh
