#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "swfam/rational.hpp"

namespace swfam {

/// Ordered list of named odd (degree-one) generators. The order is global:
/// every monomial is stored sorted by it and every product sign is the parity
/// of the transpositions needed to restore it.
class GeneratorBasis {
  public:
    static std::shared_ptr<const GeneratorBasis> named(std::vector<std::string> names);
    /// y1..y_b1 — the torus T^{b1} algebra.
    static std::shared_ptr<const GeneratorBasis> torus(int b1);
    /// x1..x_b1 then y1..y_b1 — fibre-by-base bigraded algebra.
    static std::shared_ptr<const GeneratorBasis> bigraded(int b1);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const; // -1 when absent

    friend bool operator==(const GeneratorBasis& a, const GeneratorBasis& b) {
        return a.names_ == b.names_;
    }

  private:
    explicit GeneratorBasis(std::vector<std::string> names);
    std::vector<std::string> names_;
};

using BasisPtr = std::shared_ptr<const GeneratorBasis>;

/// Subset of generators as a bit mask over the basis order.
using Mask = std::uint32_t;

/// Parity of sorting the concatenation of two sorted monomials, i.e. the
/// number of pairs (i in a, j in b) with i > j. Returns +1 or -1.
int koszul_sign(Mask a, Mask b);

/// Element of the graded-commutative exterior algebra on a GeneratorBasis
/// with Rational coefficients. Zero coefficients are never stored; squares of
/// generators vanish. Immutable value semantics throughout.
class ExtElem {
  public:
    explicit ExtElem(BasisPtr basis);
    static ExtElem zero(BasisPtr basis) { return ExtElem(std::move(basis)); }
    static ExtElem unit(BasisPtr basis) { return monomial(std::move(basis), 0, 1); }
    static ExtElem scalar(BasisPtr basis, Rational c) {
        return monomial(std::move(basis), 0, std::move(c));
    }
    static ExtElem generator(BasisPtr basis, int i);
    static ExtElem monomial(BasisPtr basis, Mask m, Rational c);

    const BasisPtr& basis() const { return basis_; }
    const std::map<Mask, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Mask m) const;
    Rational scalar_part() const { return coefficient(0); }

    /// Largest generator-count among the stored monomials (0 for zero).
    int max_degree() const;
    bool is_homogeneous_of_degree(int d) const;
    ExtElem graded_part(int degree) const;

    ExtElem& operator+=(const ExtElem& o);
    ExtElem& operator-=(const ExtElem& o);
    friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
    friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
    ExtElem operator-() const;

    friend ExtElem operator*(const ExtElem& a, const ExtElem& b); // Koszul product
    friend ExtElem operator*(const ExtElem& a, const Rational& c);
    friend ExtElem operator*(const Rational& c, const ExtElem& a) { return a * c; }

    /// Sum a^k/k!; requires zero scalar part (then terminates by nilpotency).
    ExtElem exp_nilpotent() const;

    friend bool operator==(const ExtElem& a, const ExtElem& b);
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    std::string str() const;

  private:
    void insert_term(Mask m, const Rational& c);
    BasisPtr basis_;
    std::map<Mask, Rational> terms_;
};

/// Coefficient of the full top monomial (all generators, in basis order).
Rational top_coefficient(const ExtElem& a);

/// Integration over the fibre: keeps the terms containing the whole fibre
/// monomial, moves it to the left accumulating Koszul signs, and returns the
/// remaining factor over the complementary basis.
ExtElem fibre_integrate(const ExtElem& a, const std::vector<std::string>& fibre_generators);

} // namespace swfam
