#pragma once

#include <array>
#include <vector>

#include "hlspec/graph.hpp"

namespace hlspec {

// Element of GF(p^e) as a coefficient list over GF(p), constant term first,
// always padded to length e.
using FieldElement = std::vector<int>;

// GF(q) for a prime power q = p^e. Extension arithmetic reduces modulo the
// lexicographically smallest monic irreducible polynomial of degree e; for
// e = 1 the modulus is x and elements are plain residues mod p.
class FiniteField {
public:
    // Factors q and selects the modulus; rejects q that is not a prime power.
    explicit FiniteField(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }
    // Modulus coefficients c0..c_{e-1} (the leading coefficient 1 is implicit).
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement(e_, 0); }
    FieldElement one() const;
    bool is_zero(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // rejects 0

    // Enumeration index sum(c_i * p^i); the element order used everywhere.
    int index_of(const FieldElement& a) const;
    FieldElement element(int index) const;

private:
    int q_, p_, e_;
    std::vector<int> modulus_;
};

// Point or line of the plane: a projective triple normalized so its first
// nonzero coordinate is 1.
using ProjectiveTriple = std::array<FieldElement, 3>;

// All q^2+q+1 normalized triples in lexicographic order of their coordinate
// indices.
std::vector<ProjectiveTriple> normalized_triples(const FiniteField& field);

// Incidence graph of the projective plane of order q over GF(q): points are
// vertices 0..q^2+q, lines q^2+q+1..2(q^2+q)+1, both in triple order; a point
// x lies on a line y iff x1 y1 + x2 y2 + x3 y3 = 0.
Graph pg2_incidence_graph(int q);

// True iff the spectrum of the incidence graph is
// {q+1, sqrt(q) x (q^2+q), -sqrt(q) x (q^2+q), -(q+1)} within tol.
bool verify_pp_spectrum(int q, double tol);

}  // namespace hlspec
