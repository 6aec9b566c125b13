#include "lgp/string_topology.hpp"

#include <bit>

namespace lgp {

ExtElement::ExtElement(int n) : n_(n) {
    if (n < 1 || n > 62) throw DomainError("exterior algebra rank out of range");
}

ExtElement ExtElement::unit(int n) {
    ExtElement a(n);
    a.add_term(0, 1);
    return a;
}

ExtElement ExtElement::basis_vector(int n, int i) {
    ExtElement a(n);
    if (i < 1 || i > n) throw DomainError("basis index out of range");
    a.add_term(Mask(1) << (i - 1), 1);
    return a;
}

ExtElement ExtElement::from_indices(int n, const std::vector<int>& indices, const Int& coeff) {
    ExtElement a(n);
    a.add_term(0, coeff);
    for (int i : indices) a = wedge(a, basis_vector(n, i));
    return a;
}

void ExtElement::add_term(Mask subset, const Int& coeff) {
    if (subset >> n_) throw DomainError("subset index exceeds rank");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(subset, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int ExtElement::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int deg = std::popcount(terms_.begin()->first);
    for (const auto& [mask, c] : terms_) {
        if (std::popcount(mask) != deg) throw DomainError("element is not homogeneous");
    }
    return deg;
}

bool ExtElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    int deg = std::popcount(terms_.begin()->first);
    for (const auto& [mask, c] : terms_) {
        if (std::popcount(mask) != deg) return false;
    }
    return true;
}

ExtElement ExtElement::degree_part(int degree) const {
    ExtElement out(n_);
    for (const auto& [mask, c] : terms_) {
        if (std::popcount(mask) == degree) out.add_term(mask, c);
    }
    return out;
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    if (a.n() != b.n()) throw DimMismatchError("exterior ranks differ");
    ExtElement r = a;
    for (const auto& [mask, c] : b.terms()) r.add_term(mask, c);
    return r;
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    if (a.n() != b.n()) throw DimMismatchError("exterior ranks differ");
    ExtElement r = a;
    for (const auto& [mask, c] : b.terms()) r.add_term(mask, -c);
    return r;
}

ExtElement operator-(const ExtElement& a) {
    ExtElement r(a.n());
    for (const auto& [mask, c] : a.terms()) r.add_term(mask, -c);
    return r;
}

ExtElement operator*(const Int& c, const ExtElement& a) {
    ExtElement r(a.n());
    for (const auto& [mask, coeff] : a.terms()) r.add_term(mask, c * coeff);
    return r;
}

// Parity of the merge permutation: counts pairs (s, t) in S x T with s > t.
static int merge_sign(ExtElement::Mask s, ExtElement::Mask t) {
    int inversions = 0;
    ExtElement::Mask rest = t;
    while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(s >> (bit + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
    if (a.n() != b.n()) throw DimMismatchError("exterior ranks differ");
    ExtElement r(a.n());
    for (const auto& [sa, ca] : a.terms()) {
        for (const auto& [sb, cb] : b.terms()) {
            if (sa & sb) continue;
            Int c = ca * cb;
            if (merge_sign(sa, sb) < 0) c = -c;
            r.add_term(sa | sb, c);
        }
    }
    return r;
}

ExtElement interior_product(const ExponentVector& u, const ExtElement& a) {
    if (u.size() != static_cast<std::size_t>(a.n())) {
        throw DimMismatchError("vector length does not match exterior rank");
    }
    ExtElement r(a.n());
    for (const auto& [mask, c] : a.terms()) {
        int position = 0;  // 1-based position j of the element within the subset
        ExtElement::Mask rest = mask;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            ++position;
            Int coeff = c * Int(u[bit]);
            if (position % 2 == 0) coeff = -coeff;
            r.add_term(mask & ~(ExtElement::Mask(1) << bit), coeff);
        }
    }
    return r;
}

Int skew_pairing(const ExtElement& omega, const ExponentVector& a, const ExponentVector& b) {
    if (omega.n() != static_cast<int>(a.size()) || a.size() != b.size()) {
        throw DimMismatchError("pairing dimension mismatch");
    }
    Int result = 0;
    for (const auto& [mask, c] : omega.terms()) {
        if (std::popcount(mask) != 2) throw DomainError("pairing requires a pure degree-2 form");
        int i = std::countr_zero(mask);
        int j = std::countr_zero(mask & (mask - 1));
        result += c * (Int(a[i]) * Int(b[j]) - Int(a[j]) * Int(b[i]));
    }
    return result;
}

LoopClass::LoopClass(int n) : n_(n) {
    if (n < 1 || n > 62) throw DomainError("loop class rank out of range");
}

LoopClass LoopClass::from(const ExtElement& a, const ExponentVector& u) {
    if (u.size() != static_cast<std::size_t>(a.n())) {
        throw DimMismatchError("exponent length does not match rank");
    }
    LoopClass x(a.n());
    for (const auto& [mask, c] : a.terms()) x.add_term(mask, u, c);
    return x;
}

void LoopClass::add_term(ExtElement::Mask subset, const ExponentVector& exponent, const Int& coeff) {
    if (subset >> n_) throw DomainError("subset index exceeds rank");
    if (exponent.size() != static_cast<std::size_t>(n_)) {
        throw DimMismatchError("exponent length does not match rank");
    }
    if (coeff == 0) return;
    Key key{subset, exponent};
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LoopClass::is_homogeneous() const {
    if (terms_.empty()) return true;
    int deg = std::popcount(terms_.begin()->first.first);
    for (const auto& [key, c] : terms_) {
        if (std::popcount(key.first) != deg) return false;
    }
    return true;
}

int LoopClass::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int deg = std::popcount(terms_.begin()->first.first);
    for (const auto& [key, c] : terms_) {
        if (std::popcount(key.first) != deg) throw DomainError("class is not homogeneous");
    }
    return deg;
}

LoopClass LoopClass::degree_part(int degree) const {
    LoopClass out(n_);
    for (const auto& [key, c] : terms_) {
        if (std::popcount(key.first) == degree) out.add_term(key.first, key.second, c);
    }
    return out;
}

LoopClass operator+(const LoopClass& a, const LoopClass& b) {
    if (a.n() != b.n()) throw DimMismatchError("loop class ranks differ");
    LoopClass r = a;
    for (const auto& [key, c] : b.terms()) r.add_term(key.first, key.second, c);
    return r;
}

LoopClass operator-(const LoopClass& a, const LoopClass& b) {
    if (a.n() != b.n()) throw DimMismatchError("loop class ranks differ");
    LoopClass r = a;
    for (const auto& [key, c] : b.terms()) r.add_term(key.first, key.second, -c);
    return r;
}

LoopClass operator-(const LoopClass& a) {
    LoopClass r(a.n());
    for (const auto& [key, c] : a.terms()) r.add_term(key.first, key.second, -c);
    return r;
}

LoopClass operator*(const Int& c, const LoopClass& a) {
    LoopClass r(a.n());
    for (const auto& [key, coeff] : a.terms()) r.add_term(key.first, key.second, c * coeff);
    return r;
}

LoopClass cs_product(const LoopClass& x, const LoopClass& y) {
    if (x.n() != y.n()) throw DimMismatchError("loop class ranks differ");
    LoopClass r(x.n());
    ExponentVector e(x.n());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            if (kx.first & ky.first) continue;
            Int c = cx * cy;
            if (merge_sign(kx.first, ky.first) < 0) c = -c;
            for (int i = 0; i < x.n(); ++i) e[i] = kx.second[i] + ky.second[i];
            r.add_term(kx.first | ky.first, e, c);
        }
    }
    return r;
}

LoopClass bv(const LoopClass& x) {
    LoopClass r(x.n());
    for (const auto& [key, c] : x.terms()) {
        ExtElement a(x.n());
        a.add_term(key.first, c);
        ExtElement contracted = interior_product(key.second, a);
        for (const auto& [mask, cc] : contracted.terms()) r.add_term(mask, key.second, cc);
    }
    return r;
}

LoopClass bracket(const LoopClass& x, const LoopClass& y) {
    if (x.n() != y.n()) throw DimMismatchError("loop class ranks differ");
    LoopClass result(x.n());
    for (int deg = 0; deg <= x.n(); ++deg) {
        LoopClass xp = x.degree_part(deg);
        if (xp.is_zero()) continue;
        LoopClass term = bv(cs_product(xp, y)) - cs_product(bv(xp), y);
        LoopClass last = cs_product(xp, bv(y));
        result = result + (deg % 2 == 0 ? term - last : term + last);
    }
    return result;
}

LoopClass goldman_t2(const ExponentVector& u, const ExponentVector& v) {
    if (u.size() != 2 || v.size() != 2) throw DomainError("Goldman bracket is for T^2 only");
    Int c = Int(u[0]) * Int(v[1]) - Int(u[1]) * Int(v[0]);
    LoopClass r(2);
    r.add_term(0, ExponentVector{u[0] + v[0], u[1] + v[1]}, c);
    return r;
}

}  // namespace lgp
