#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "turan/error.hpp"
#include "turan/finite_field.hpp"

namespace turan {

/// GF(q) inside GF(q^{s-1}) together with the norm
/// N(X) = X^{1 + q + ... + q^{s-2}}, which maps the nonzero extension
/// elements onto the nonzero base elements.
class NormTower {
public:
    static constexpr std::uint32_t kNotInBase = std::numeric_limits<std::uint32_t>::max();

    const FieldContext& base() const noexcept { return base_; }
    const FieldContext& extension() const noexcept { return ext_; }
    unsigned s() const noexcept { return s_; }
    std::uint32_t q() const noexcept { return base_.order(); }

    /// (q^{s-1} - 1) / (q - 1)
    std::uint64_t norm_exponent() const noexcept { return exponent_; }

    /// Image of the base generator; determines the whole embedding.
    FieldElement embedded_generator() const noexcept { return embed(base_.generator()); }

    FieldElement embed(FieldElement a) const { return ext_.element(embed_[code_in(base_, a)]); }

    /// Inverse of embed() on the image subfield.
    FieldElement restrict_to_base(FieldElement x) const
    {
        const auto code = restrict_[code_in(ext_, x)];
        if (code == kNotInBase)
            throw Error(ErrorCode::BadParameter, "extension element is outside the base subfield");
        return base_.element(code);
    }

    bool in_base(FieldElement x) const { return restrict_[code_in(ext_, x)] != kNotInBase; }

    FieldElement norm(FieldElement x) const
    {
        const auto c = code_in(ext_, x);
        if (c == 0)
            throw Error(ErrorCode::ZeroInput, "norm of zero is undefined");
        if (!norm_table_.empty())
            return base_.element(norm_table_[c]);
        return restrict_to_base(ext_.pow(x, exponent_));
    }

    friend NormTower build_tower(std::uint32_t p, unsigned m, unsigned s);

private:
    static std::uint32_t code_in(const FieldContext& ctx, FieldElement a)
    {
        if (a.context != ctx.id())
            throw Error(ErrorCode::BadParameter, "element belongs to a different field");
        return a.code;
    }

    FieldContext base_ = build_field(2, 1);
    FieldContext ext_ = build_field(2, 1);
    unsigned s_ = 2;
    std::uint64_t exponent_ = 1;
    std::vector<std::uint32_t> embed_;
    std::vector<std::uint32_t> restrict_;
    std::vector<std::uint32_t> norm_table_;
};

inline constexpr std::uint32_t kNormTableLimit = 1U << 16;

/// Builds GF(p^m) and GF(p^{m(s-1)}) with the embedding sending the base
/// indeterminate to the smallest-code root of the base modulus in the
/// extension. The homomorphism property is checked exhaustively when
/// q <= 256.
inline NormTower build_tower(std::uint32_t p, unsigned m, unsigned s)
{
    if (s < 2)
        throw Error(ErrorCode::BadParameter, "tower parameter s must be at least 2");
    NormTower t;
    t.base_ = build_field(p, m);
    t.ext_ = build_field(p, m * (s - 1));
    t.s_ = s;
    const std::uint64_t q = t.base_.order();
    const std::uint64_t big_q = t.ext_.order();
    t.exponent_ = (big_q - 1) / (q - 1);

    const auto& base = t.base_;
    const auto& ext = t.ext_;

    // Root of the base modulus inside the extension.
    const auto& f = base.modulus();
    FieldElement root = ext.zero();
    bool found = false;
    for (std::uint32_t c = 0; c < ext.order() && !found; ++c) {
        const auto x = ext.element(c);
        FieldElement acc = ext.zero();
        for (std::size_t i = f.size(); i-- > 0;)
            acc = ext.add(ext.mul(acc, x), ext.from_int(f[i]));
        if (acc.is_zero()) {
            root = x;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorCode::BadParameter, "base modulus has no root in the extension");

    t.embed_.resize(q);
    t.restrict_.assign(big_q, NormTower::kNotInBase);
    for (std::uint32_t c = 0; c < q; ++c) {
        const auto coeffs = base.coefficients(base.element(c));
        FieldElement acc = ext.zero();
        for (std::size_t i = coeffs.size(); i-- > 0;)
            acc = ext.add(ext.mul(acc, root), ext.from_int(coeffs[i]));
        t.embed_[c] = acc.code;
        t.restrict_[acc.code] = c;
    }

    // Image must be the fixed field of X -> X^q.
    for (std::uint32_t c = 0; c < q; ++c) {
        const auto x = ext.element(t.embed_[c]);
        if (ext.pow(x, q) != x)
            throw Error(ErrorCode::BadParameter, "embedding image is not fixed by Frobenius");
    }
    if (q <= 256) {
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                const auto ea = ext.element(t.embed_[a]), eb = ext.element(t.embed_[b]);
                const auto sum = base.add(base.element(a), base.element(b));
                const auto prod = base.mul(base.element(a), base.element(b));
                if (t.embed_[sum.code] != ext.add(ea, eb).code || t.embed_[prod.code] != ext.mul(ea, eb).code)
                    throw Error(ErrorCode::BadParameter, "embedding is not a ring homomorphism");
            }
        }
    }

    if (big_q <= kNormTableLimit) {
        t.norm_table_.assign(big_q, 0);
        for (std::uint32_t c = 1; c < big_q; ++c) {
            const auto image = ext.pow(ext.element(c), t.exponent_);
            const auto back = t.restrict_[image.code];
            if (back == NormTower::kNotInBase)
                throw Error(ErrorCode::BadParameter, "norm left the base field");
            t.norm_table_[c] = back;
        }
    }
    return t;
}

/// Tower for a prime power q = p^m.
inline NormTower build_tower(std::uint32_t q, unsigned s)
{
    if (q < 2)
        throw Error(ErrorCode::BadParameter, "q must be a prime power");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned m = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw Error(ErrorCode::BadParameter, std::to_string(q) + " is not a prime power");
    return build_tower(p, m, s);
}

inline FieldElement norm(const NormTower& t, FieldElement x) { return t.norm(x); }

/// All X with N(X) = x, sorted by code.
inline std::vector<FieldElement> norm_fiber(const NormTower& t, FieldElement x)
{
    if (x.context != t.base().id())
        throw Error(ErrorCode::BadParameter, "fiber target must be a base element");
    if (x.is_zero())
        throw Error(ErrorCode::ZeroInput, "norm never takes the value zero");
    std::vector<FieldElement> out;
    const auto& ext = t.extension();
    for (std::uint32_t c = 1; c < ext.order(); ++c) {
        const auto e = ext.element(c);
        if (t.norm(e) == x)
            out.push_back(e);
    }
    return out;
}

/// |{C : A + C != 0, B + C != 0, N((A + C) / (B + C)) = x}|, by enumerating
/// every C in the extension.
inline std::uint64_t count_norm_ratio_solutions(const NormTower& t, FieldElement a, FieldElement b, FieldElement x)
{
    const auto& ext = t.extension();
    if (a.context != ext.id() || b.context != ext.id() || x.context != t.base().id())
        throw Error(ErrorCode::BadParameter, "A, B must be extension elements and x a base element");
    if (a == b)
        throw Error(ErrorCode::DegenerateInput, "A and B must differ");
    if (x.is_zero())
        throw Error(ErrorCode::ZeroInput, "x must be nonzero");
    std::uint64_t count = 0;
    for (std::uint32_t c = 0; c < ext.order(); ++c) {
        const auto cc = ext.element(c);
        const auto num = ext.add(a, cc);
        const auto den = ext.add(b, cc);
        if (num.is_zero() || den.is_zero())
            continue;
        if (t.norm(ext.div(num, den)) == x)
            ++count;
    }
    return count;
}

/// The order-r subgroup Q_r of GF(q)^* and the labelling of its cosets.
/// Coset labels come from discrete logs: a = g^k lies in coset k mod (q-1)/r.
class MultSubgroup {
public:
    std::uint32_t order() const noexcept { return r_; }
    std::uint32_t coset_count() const noexcept { return coset_count_; }
    const std::vector<FieldElement>& elements() const noexcept { return elements_; }

    std::uint32_t coset_index(FieldElement a) const
    {
        if (a.context != context_)
            throw Error(ErrorCode::BadParameter, "element belongs to a different field");
        if (a.is_zero())
            throw Error(ErrorCode::ZeroInput, "zero lies in no coset");
        return coset_of_[a.code];
    }

    bool contains(FieldElement a) const { return !a.is_zero() && coset_index(a) == 0; }

    friend MultSubgroup mult_subgroup(const NormTower& t, std::uint32_t r);

private:
    std::uint32_t context_ = 0;
    std::uint32_t r_ = 1;
    std::uint32_t coset_count_ = 1;
    std::vector<FieldElement> elements_;
    std::vector<std::uint32_t> coset_of_;
};

inline MultSubgroup mult_subgroup(const NormTower& t, std::uint32_t r)
{
    const auto& base = t.base();
    const std::uint32_t group = base.order() - 1;
    if (r == 0 || group % r != 0)
        throw Error(ErrorCode::NotDivisor, std::to_string(r) + " does not divide " + std::to_string(group));
    MultSubgroup h;
    h.context_ = base.id();
    h.r_ = r;
    h.coset_count_ = group / r;
    h.coset_of_.assign(base.order(), 0);
    for (std::uint32_t c = 1; c < base.order(); ++c) {
        const auto a = base.element(c);
        h.coset_of_[c] = base.log(a) % h.coset_count_;
        if (base.pow(a, r) == base.one())
            h.elements_.push_back(a);
    }
    return h;
}

} // namespace turan
