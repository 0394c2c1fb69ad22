#pragma once

#include <array>
#include <optional>
#include <string>

#include "picard/exactnum.hpp"

namespace picard {

/// Exact 3x3 matrix over K = Q(i sqrt d).
class MatK {
public:
    explicit MatK(long d) : d_(d) {
        for (auto& e : m_) e = FieldElement(d, 0, 0);
    }
    MatK(long d, std::array<FieldElement, 9> entries) : d_(d), m_(std::move(entries)) {
        for (const auto& e : m_)
            if (e.d() != d_) throw std::invalid_argument("MatK: mixed fields");
    }

    static MatK identity(long d);
    /// Antidiagonal (1,1,1); this is Y_1, an element of the Picard group.
    static MatK antidiag_one(long d);
    /// The matrix of the Hermitian form: antidiag(-1/2, 1, -1/2).
    static MatK form_matrix(long d);

    long d() const { return d_; }
    const FieldElement& at(int i, int j) const { return m_[i * 3 + j]; }
    FieldElement& at(int i, int j) { return m_[i * 3 + j]; }

    MatK operator*(const MatK& o) const;
    MatK operator+(const MatK& o) const;
    MatK operator-(const MatK& o) const;
    MatK scaled(const FieldElement& s) const;
    MatK conj() const;            // entrywise conjugate
    MatK conj_transpose() const;  // adjoint X*
    MatK transpose() const;
    FieldElement det() const;
    MatK inverse() const;
    std::array<FieldElement, 3> apply(const std::array<FieldElement, 3>& v) const;

    bool operator==(const MatK& o) const { return d_ == o.d_ && m_ == o.m_; }
    bool operator!=(const MatK& o) const { return !(*this == o); }
    bool is_zero() const;

    std::string str() const;

private:
    long d_;
    std::array<FieldElement, 9> m_;
};

/// h(z) = -Re(z0 conj(z2)) + |z1|^2, the signature (1,2) Hermitian form.
Rational h_form(const FieldElement& z0, const FieldElement& z1, const FieldElement& z2);
Rational h_form(const std::array<FieldElement, 3>& z);

/// Index (1..6) of the first violated unitarity equation, or nullopt when X
/// preserves h. The six identities characterize X^-1 = I^-1 X* I.
std::optional<int> unitarity_defect(const MatK& x);
bool is_unitary(const MatK& x);

/// Projective class of a matrix modulo K^x scalars. The canonical form scales
/// the first nonzero entry in row-major order to 1.
class ProjMatK {
public:
    explicit ProjMatK(MatK rep);
    const MatK& rep() const { return rep_; }
    const MatK& canonical() const { return canon_; }
    /// Stable text key of the canonical form (equality and ordering token).
    const std::string& key() const { return key_; }

    bool operator==(const ProjMatK& o) const { return key_ == o.key_; }
    bool operator!=(const ProjMatK& o) const { return !(*this == o); }
    bool operator<(const ProjMatK& o) const { return key_ < o.key_; }

private:
    MatK rep_;
    MatK canon_;
    std::string key_;
};

/// Membership in the Picard lattice PU(1,2; O_K): clear denominators to a
/// primitive O_K matrix and test that the determinant is a unit. Requires a
/// unitary representative.
bool is_picard(const ProjMatK& x);

/// Boundary point (zeta, v) with v = t * sqrt(d), so the null lift
/// [|zeta|^2 + i t sqrt d : zeta : 1] has entries in K.
struct HeisenbergPoint {
    FieldElement zeta;
    Rational t;

    HeisenbergPoint(FieldElement z, Rational t_in) : zeta(std::move(z)), t(std::move(t_in)) {}
    long d() const { return zeta.d(); }
};

/// Upper-triangular translation with rows (1, 2 conj(zeta), |zeta|^2 + i t sqrt d),
/// (0, 1, zeta), (0, 0, 1).
ProjMatK heisenberg_translation(const HeisenbergPoint& p);

/// diag(lambda, 1, 1/conj(lambda)); normalizes the translation group.
ProjMatK heisenberg_dilation(const FieldElement& lambda);

/// Group law, defined as the product of translation matrices.
HeisenbergPoint heisenberg_compose(const HeisenbergPoint& p, const HeisenbergPoint& q);

}  // namespace picard
