#include "hlspec/projective_plane.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hlspec/linalg.hpp"

namespace hlspec {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first, no
// trailing zeros beyond what the caller maintains.

int poly_degree(const std::vector<int>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

int mod_inverse(int a, int p) {
    // Extended Euclid; p is prime and a != 0 mod p.
    int old_r = p, r = a % p;
    int old_t = 0, t = 1;
    while (r != 0) {
        const int quotient = old_r / r;
        int next = old_r - quotient * r;
        old_r = r;
        r = next;
        next = old_t - quotient * t;
        old_t = t;
        t = next;
    }
    return old_t < 0 ? old_t + p : old_t;
}

// Remainder of a modulo b over GF(p); b must be nonzero.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = poly_degree(b);
    const int lead_inv = mod_inverse(b[db], p);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const int factor = a[da] * lead_inv % p;
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
        }
    }
    return a;
}

bool poly_is_zero(const std::vector<int>& a) { return poly_degree(a) < 0; }

// Monic polynomial of degree d whose lower coefficients encode `index` in
// base p, constant term first. Stepping index enumerates candidates in
// lexicographic coefficient order.
std::vector<int> monic_from_index(long long index, int d, int p) {
    std::vector<int> poly(d + 1, 0);
    poly[d] = 1;
    for (int i = 0; i < d; ++i) {
        poly[i] = static_cast<int>(index % p);
        index /= p;
    }
    return poly;
}

bool divisible_by_some_monic_of_degree(const std::vector<int>& candidate, int d, int p) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
        const std::vector<int> divisor = monic_from_index(idx, d, p);
        if (poly_is_zero(poly_rem(candidate, divisor, p))) return true;
    }
    return false;
}

bool is_irreducible(const std::vector<int>& candidate, int e, int p) {
    // No roots (degree-1 factors), then trial division by every monic
    // polynomial of degree up to e/2.
    for (int x = 0; x < p; ++x) {
        int value = 0, power = 1;
        for (int i = 0; i <= e; ++i) {
            value = (value + candidate[i] * power) % p;
            power = power * x % p;
        }
        if (value == 0) return false;
    }
    for (int d = 2; d <= e / 2; ++d)
        if (divisible_by_some_monic_of_degree(candidate, d, p)) return false;
    return true;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (p * p > q) p = q;  // q itself is prime
    int e = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power: " + std::to_string(q) +
                                    " = " + std::to_string(p) + "^" + std::to_string(e) + " * " +
                                    std::to_string(rest));
    p_ = p;
    e_ = e;

    if (e_ == 1) {
        modulus_ = {0};  // x
        return;
    }
    long long count = 1;
    for (int i = 0; i < e_; ++i) count *= p_;
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> candidate = monic_from_index(idx, e_, p_);
        if (is_irreducible(candidate, e_, p_)) {
            modulus_.assign(candidate.begin(), candidate.end() - 1);
            return;
        }
    }
    throw std::runtime_error("no irreducible modulus found for GF(" + std::to_string(q) + ")");
}

FieldElement FiniteField::one() const {
    FieldElement a(e_, 0);
    a[0] = 1;
    return a;
}

bool FiniteField::is_zero(const FieldElement& a) const {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out(e_);
    for (int i = 0; i < e_; ++i) out[i] = (a[i] + b[i]) % p_;
    return out;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out(e_);
    for (int i = 0; i < e_; ++i) out[i] = ((a[i] - b[i]) % p_ + p_) % p_;
    return out;
}

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
    if (e_ == 1) return {a[0] * b[0] % p_};
    std::vector<int> full = poly_mul(a, b, p_);
    std::vector<int> mod(modulus_);
    mod.push_back(1);  // restore the implicit leading coefficient
    std::vector<int> rem = poly_rem(std::move(full), mod, p_);
    rem.resize(e_, 0);
    return rem;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::invalid_argument("inverse of zero field element");
    if (e_ == 1) return {mod_inverse(a[0], p_)};

    // Extended Euclid over GF(p)[x] on (modulus, a).
    std::vector<int> r0(modulus_);
    r0.push_back(1);
    std::vector<int> r1(a);
    std::vector<int> s0{0}, s1{1};  // Bezout coefficients for a

    while (!poly_is_zero(r1)) {
        const int d1 = poly_degree(r1);
        const int lead_inv = mod_inverse(r1[d1], p_);
        // One long-division pass: r0 -= quotient * r1, s0 -= quotient * s1.
        std::vector<int> quotient(std::max(poly_degree(r0) - d1 + 1, 1), 0);
        std::vector<int> rem(r0);
        for (int da = poly_degree(rem); da >= d1; da = poly_degree(rem)) {
            const int factor = rem[da] * lead_inv % p_;
            quotient[da - d1] = factor;
            for (int i = 0; i <= d1; ++i)
                rem[i + da - d1] = ((rem[i + da - d1] - factor * r1[i]) % p_ + p_) % p_;
        }
        std::vector<int> qs = poly_mul(quotient, s1, p_);
        std::vector<int> s_new(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s_new.size(); ++i) {
            const int lhs = i < s0.size() ? s0[i] : 0;
            const int rhs = i < qs.size() ? qs[i] : 0;
            s_new[i] = ((lhs - rhs) % p_ + p_) % p_;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_new);
    }
    // r0 is now gcd = nonzero constant; s0 * a = r0 (mod modulus).
    const int scale = mod_inverse(r0[0], p_);
    FieldElement out(e_, 0);
    for (int i = 0; i < e_ && i < static_cast<int>(s0.size()); ++i) out[i] = s0[i] * scale % p_;
    return out;
}

int FiniteField::index_of(const FieldElement& a) const {
    int idx = 0, power = 1;
    for (int i = 0; i < e_; ++i) {
        idx += a[i] * power;
        power *= p_;
    }
    return idx;
}

FieldElement FiniteField::element(int index) const {
    FieldElement a(e_, 0);
    for (int i = 0; i < e_; ++i) {
        a[i] = index % p_;
        index /= p_;
    }
    return a;
}

std::vector<ProjectiveTriple> normalized_triples(const FiniteField& field) {
    const int q = field.q();
    std::vector<ProjectiveTriple> triples;
    triples.reserve(static_cast<size_t>(q) * q + q + 1);
    for (int i1 = 0; i1 < q; ++i1)
        for (int i2 = 0; i2 < q; ++i2)
            for (int i3 = 0; i3 < q; ++i3) {
                ProjectiveTriple t{field.element(i1), field.element(i2), field.element(i3)};
                int first = 0;
                while (first < 3 && field.is_zero(t[first])) ++first;
                if (first == 3) continue;
                if (field.index_of(t[first]) != 1) continue;  // first nonzero must be 1
                triples.push_back(std::move(t));
            }
    return triples;
}

Graph pg2_incidence_graph(int q) {
    const FiniteField field(q);
    const auto triples = normalized_triples(field);
    const int m = static_cast<int>(triples.size());

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m) * (q + 1));
    for (int point = 0; point < m; ++point) {
        for (int line = 0; line < m; ++line) {
            FieldElement dot = field.zero();
            for (int c = 0; c < 3; ++c)
                dot = field.add(dot, field.mul(triples[point][c], triples[line][c]));
            if (field.is_zero(dot)) edges.emplace_back(point, m + line);
        }
    }
    return from_edge_list(2 * m, edges);
}

bool verify_pp_spectrum(int q, double tol) {
    const FiniteField field(q);  // validates q
    const Graph g = pg2_incidence_graph(q);
    const Spectrum actual = symmetric_spectrum(adjacency_matrix(g));

    const int m = q * q + q + 1;
    std::vector<double> expected;
    expected.reserve(2 * static_cast<size_t>(m));
    expected.push_back(q + 1.0);
    const double root_q = std::sqrt(static_cast<double>(q));
    for (int i = 0; i < m - 1; ++i) expected.push_back(root_q);
    for (int i = 0; i < m - 1; ++i) expected.push_back(-root_q);
    expected.push_back(-(q + 1.0));
    return multiset_close(actual, Spectrum(std::move(expected)), tol);
}

}  // namespace hlspec
