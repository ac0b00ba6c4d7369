#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/error.hpp"

namespace turan {

/// Element of GF(p^m). The code packs the coefficient vector in base p with
/// the constant term as the least significant digit, so two elements of the
/// same field are equal iff their codes are equal.
struct FieldElement {
    std::uint32_t context = 0;
    std::uint32_t code = 0;

    bool is_zero() const noexcept { return code == 0; }
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

using Poly = std::vector<std::uint32_t>; // coefficient i of x^i, mod p

inline void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

/// Remainder of a modulo a nonzero divisor, coefficients mod p.
inline Poly poly_rem(Poly a, const Poly& divisor, std::uint32_t p)
{
    Poly d = divisor;
    trim(d);
    trim(a);
    const std::uint32_t lead_inv = inv_mod(d.back(), p);
    while (a.size() >= d.size()) {
        const std::size_t shift = a.size() - d.size();
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i < d.size(); ++i) {
            const std::uint64_t sub = factor * d[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of `code`.
inline Poly monic_from_code(std::uint64_t code, unsigned degree, std::uint32_t p)
{
    Poly out(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        out[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    out[degree] = 1;
    return out;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

/// Trial division by every monic polynomial of degree 1..floor(deg/2).
inline bool is_irreducible(const Poly& f, std::uint32_t p)
{
    const unsigned degree = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= degree / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t code = 0; code < count; ++code)
            if (poly_rem(f, monic_from_code(code, d, p), p).empty())
                return false;
    }
    return true;
}

inline std::uint32_t next_context_id()
{
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
}

} // namespace detail

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;

/// GF(p^m) with a deterministic modulus: the lexicographically smallest monic
/// irreducible polynomial of degree m. Fields up to 2^16 elements multiply via
/// discrete-log tables; larger fields fall back to polynomial arithmetic.
class FieldContext {
public:
    std::uint32_t id() const noexcept { return id_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    FieldElement generator() const noexcept { return make(generator_); }
    bool has_log_tables() const noexcept { return !exp_.empty(); }

    FieldElement zero() const noexcept { return make(0); }
    FieldElement one() const noexcept { return make(1); }

    FieldElement element(std::uint32_t code) const
    {
        if (code >= q_)
            throw Error(ErrorCode::BadParameter, "element code " + std::to_string(code) + " out of range");
        return make(code);
    }

    /// Image of the integer k under Z -> GF(p) -> GF(q).
    FieldElement from_int(std::int64_t k) const
    {
        const auto r = static_cast<std::uint32_t>(((k % p_) + p_) % p_);
        return make(r);
    }

    std::vector<std::uint32_t> coefficients(FieldElement a) const
    {
        check(a);
        std::vector<std::uint32_t> out(m_);
        std::uint32_t c = a.code;
        for (unsigned i = 0; i < m_; ++i) {
            out[i] = c % p_;
            c /= p_;
        }
        return out;
    }

    FieldElement add(FieldElement a, FieldElement b) const
    {
        check(a);
        check(b);
        return make(add_codes(a.code, b.code));
    }

    FieldElement neg(FieldElement a) const
    {
        check(a);
        if (p_ == 2)
            return a;
        std::uint32_t out = 0, c = a.code;
        for (unsigned i = 0; i < m_; ++i) {
            const std::uint32_t d = c % p_;
            out += ((p_ - d) % p_) * place_[i];
            c /= p_;
        }
        return make(out);
    }

    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

    FieldElement mul(FieldElement a, FieldElement b) const
    {
        check(a);
        check(b);
        if (a.code == 0 || b.code == 0)
            return zero();
        if (has_log_tables()) {
            const std::uint32_t e = (log_[a.code] + log_[b.code]) % (q_ - 1);
            return make(exp_[e]);
        }
        return make(mul_codes_poly(a.code, b.code));
    }

    /// Schoolbook multiplication with reduction, independent of the tables.
    FieldElement mul_polynomial(FieldElement a, FieldElement b) const
    {
        check(a);
        check(b);
        return make(mul_codes_poly(a.code, b.code));
    }

    FieldElement pow(FieldElement a, std::uint64_t e) const
    {
        check(a);
        if (a.code == 0)
            return e == 0 ? one() : zero();
        if (has_log_tables()) {
            const std::uint64_t l = static_cast<std::uint64_t>(log_[a.code]) * (e % (q_ - 1)) % (q_ - 1);
            return make(exp_[l]);
        }
        return make(pow_codes_poly(a.code, e));
    }

    FieldElement inv(FieldElement a) const
    {
        check(a);
        if (a.code == 0)
            throw Error(ErrorCode::ZeroInput, "inverse of zero");
        return pow(a, q_ - 2);
    }

    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    /// Discrete logarithm to the base of generator(); needs the log tables.
    std::uint32_t log(FieldElement a) const
    {
        check(a);
        if (a.code == 0)
            throw Error(ErrorCode::ZeroInput, "logarithm of zero");
        if (!has_log_tables())
            throw Error(ErrorCode::TooLarge, "no discrete-log tables above 2^16 elements");
        return log_[a.code];
    }

    FieldElement exp(std::uint64_t k) const
    {
        if (!has_log_tables())
            return pow(generator(), k);
        return make(exp_[k % (q_ - 1)]);
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(FieldElement a) const
    {
        check(a);
        if (a.code == 0)
            throw Error(ErrorCode::ZeroInput, "order of zero");
        std::uint64_t ord = q_ - 1;
        for (auto l : detail::prime_factors(q_ - 1))
            while (ord % l == 0 && pow_codes_poly(a.code, ord / l) == 1)
                ord /= l;
        return ord;
    }

    std::string modulus_string() const
    {
        std::string out;
        for (unsigned i = m_ + 1; i-- > 0;) {
            const auto c = modulus_[i];
            if (c == 0)
                continue;
            if (!out.empty())
                out += " + ";
            if (i == 0 || c != 1)
                out += std::to_string(c);
            if (i >= 1)
                out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    friend FieldContext build_field(std::uint32_t p, unsigned m);

private:
    FieldContext() = default;

    FieldElement make(std::uint32_t code) const noexcept { return FieldElement{id_, code}; }

    void check(FieldElement a) const
    {
        if (a.context != id_)
            throw Error(ErrorCode::BadParameter, "element belongs to a different field");
    }

    std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const noexcept
    {
        if (p_ == 2)
            return a ^ b;
        std::uint32_t out = 0;
        for (unsigned i = 0; i < m_; ++i) {
            out += ((a % p_ + b % p_) % p_) * place_[i];
            a /= p_;
            b /= p_;
        }
        return out;
    }

    std::uint32_t mul_codes_poly(std::uint32_t a, std::uint32_t b) const
    {
        detail::Poly pa(m_), pb(m_);
        for (unsigned i = 0; i < m_; ++i) {
            pa[i] = a % p_;
            a /= p_;
            pb[i] = b % p_;
            b /= p_;
        }
        detail::Poly prod(2 * m_, 0);
        for (unsigned i = 0; i < m_; ++i)
            for (unsigned j = 0; j < m_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
        const auto r = detail::poly_rem(prod, modulus_, p_);
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            out += r[i] * place_[i];
        return out;
    }

    std::uint32_t pow_codes_poly(std::uint32_t a, std::uint64_t e) const
    {
        std::uint32_t result = 1, base = a;
        while (e) {
            if (e & 1)
                result = mul_codes_poly(result, base);
            base = mul_codes_poly(base, base);
            e >>= 1;
        }
        return result;
    }

    std::uint32_t id_ = 0;
    std::uint32_t p_ = 0;
    unsigned m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> place_; // p^i
    std::uint32_t generator_ = 1;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// Builds GF(p^m). Throws NotPrime for composite p and TooLarge when
/// p^m exceeds 2^20.
inline FieldContext build_field(std::uint32_t p, unsigned m)
{
    if (!detail::is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (m == 0)
        throw Error(ErrorCode::BadParameter, "extension degree must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw Error(ErrorCode::TooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
    }

    FieldContext ctx;
    ctx.id_ = detail::next_context_id();
    ctx.p_ = p;
    ctx.m_ = m;
    ctx.q_ = static_cast<std::uint32_t>(q);
    ctx.place_.resize(m + 1);
    ctx.place_[0] = 1;
    for (unsigned i = 1; i <= m; ++i)
        ctx.place_[i] = ctx.place_[i - 1] * p;

    // Lower coefficients as a base-p number with the x^{m-1} digit most
    // significant: increasing code is lexicographic order of (c_{m-1},...,c_0).
    const std::uint64_t candidates = q;
    for (std::uint64_t code = 0; code < candidates; ++code) {
        auto f = detail::monic_from_code(code, m, p);
        if (detail::is_irreducible(f, p)) {
            ctx.modulus_ = std::move(f);
            break;
        }
    }

    if (ctx.q_ == 2) {
        ctx.generator_ = 1;
    } else {
        const auto factors = detail::prime_factors(q - 1);
        for (std::uint32_t g = 1; g < ctx.q_; ++g) {
            bool primitive = true;
            for (auto l : factors) {
                if (ctx.pow_codes_poly(g, (q - 1) / l) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                ctx.generator_ = g;
                break;
            }
        }
    }

    if (q <= kLogTableLimit) {
        ctx.exp_.resize(q - 1);
        ctx.log_.assign(q, 0);
        std::uint32_t x = 1;
        for (std::uint32_t k = 0; k + 1 < q; ++k) {
            ctx.exp_[k] = x;
            ctx.log_[x] = k;
            x = ctx.mul_codes_poly(x, ctx.generator_);
        }
    }
    return ctx;
}

} // namespace turan
