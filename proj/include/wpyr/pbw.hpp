// Exact PBW arithmetic in enveloping algebras of gl_N subalgebras.
//
// An AlgebraContext fixes the generating matrix units, a total order on
// them, the coefficient characteristic, and (optionally) the reduction
// character forcing x^p = x^{[p]} + psi(x)^p.  Elements are sparse maps
// from ordered monomials to coefficients; every product is straightened
// eagerly with the gl_N structure constants.
//
// The generator order is chosen per use:
//   * U(p), U(h), U(m):  ascending (grading degree, i, j);
//   * U(g) for the projection pr:  p-generators first, m-generators last,
//     so pr is a per-monomial evaluation of the m-tail;
//   * induced-module contexts:  the inducing subalgebra last, so the
//     character of the inducing line is applied in one pass.

#pragma once

#include "lie.hpp"
#include "scalar.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <tuple>

namespace wpyr {

using GenRank = std::uint16_t;
inline constexpr GenRank kNoRank = std::numeric_limits<GenRank>::max();

/// Ordered monomial: strictly increasing generator ranks with positive
/// exponents.
using Monomial = std::vector<std::pair<GenRank, std::uint16_t>>;
using Word = std::vector<GenRank>;

class AlgebraContext {
public:
    enum class Kind { u_g, u_p, u_h, u_m, module_induced, module_verma };

    static AlgebraContext u_p(const LieDatum& lie, long long p)
    {
        return AlgebraContext(lie, p, Kind::u_p, false, {});
    }

    /// U_psi(p): reduced by x^p - x^{[p]} - psi(x)^p.  psi is indexed by
    /// matrix-unit code (i-1)*N + (j-1).
    static AlgebraContext u_p_reduced(const LieDatum& lie, long long p, std::vector<int> psi)
    {
        if (p <= 0)
            throw validation_error("reduced context needs positive characteristic");
        return AlgebraContext(lie, p, Kind::u_p, true, std::move(psi));
    }

    /// U(g) with chi fixed, m-generators ordered last.  When reduced, this
    /// is U_chi(g).
    static AlgebraContext u_g(const LieDatum& lie, long long p, bool reduced)
    {
        std::vector<int> psi;
        if (reduced) {
            if (p <= 0)
                throw validation_error("reduced context needs positive characteristic");
            psi = lie.chi;
        }
        return AlgebraContext(lie, p, Kind::u_g, reduced, std::move(psi));
    }

    static AlgebraContext u_h(const LieDatum& lie, long long p)
    {
        return AlgebraContext(lie, p, Kind::u_h, false, {});
    }

    static AlgebraContext u_m(const LieDatum& lie, long long p)
    {
        return AlgebraContext(lie, p, Kind::u_m, false, {});
    }

    /// U_chi(g) normalized for N_chi(A): m-monomials leftmost, U(p)-tail
    /// rightmost.
    static AlgebraContext module_induced(const LieDatum& lie, long long p)
    {
        if (p <= 0)
            throw validation_error("module context needs positive characteristic");
        return AlgebraContext(lie, p, Kind::module_induced, true, lie.chi);
    }

    /// U_chi(g) normalized for Z_chi(A): strictly-lower monomials leftmost,
    /// U(b)-tail rightmost.
    static AlgebraContext module_verma(const LieDatum& lie, long long p)
    {
        if (p <= 0)
            throw validation_error("module context needs positive characteristic");
        return AlgebraContext(lie, p, Kind::module_verma, true, lie.chi);
    }

    const LieDatum& lie() const { return lie_; }
    long long characteristic() const { return p_; }
    bool reduced() const { return reduced_; }
    Kind kind() const { return kind_; }
    int ngens() const { return static_cast<int>(code_of_rank_.size()); }

    GenRank rank_of(int i, int j) const
    {
        const int N = lie_.boxes();
        return rank_of_code_[(i - 1) * N + (j - 1)];
    }
    std::pair<int, int> unit_of(GenRank r) const
    {
        const int N = lie_.boxes();
        const int code = code_of_rank_[r];
        return {code / N + 1, code % N + 1};
    }

    int degree(GenRank r) const { return deg_[r]; }
    /// Kazhdan weight of the generator: grading degree + 1.
    int weight(GenRank r) const { return deg_[r] + 1; }
    bool diagonal(GenRank r) const { return diag_[r]; }
    int psi(GenRank r) const { return psi_[r]; }
    int chi(GenRank r) const { return chi_[r]; }

    /// Number of leading ranks that form the "head" block of the order
    /// (p-generators for u_g, m-generators for module_induced, strictly
    /// lower generators for module_verma).
    int head_count() const { return head_count_; }

    struct BracketTerm {
        GenRank rank;
        int sign;
    };
    const BracketTerm* bracket(GenRank a, GenRank b, int& count) const
    {
        count = br_count_[a * ngens() + b];
        return br_terms_.data() + 2 * (a * ngens() + b);
    }

    bool same(const AlgebraContext& o) const { return this == &o; }

private:
    AlgebraContext(const LieDatum& lie, long long p, Kind kind, bool reduced,
                   std::vector<int> psi_codes)
        : lie_(lie), p_(p), kind_(kind), reduced_(reduced)
    {
        const int N = lie_.boxes();
        rank_of_code_.assign(N * N, kNoRank);

        struct Entry {
            long long key0;
            int deg, i, j, code;
        };
        std::vector<Entry> entries;
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                const int d = lie_.degree(i, j);
                bool enabled = false;
                long long key0 = 0;
                switch (kind) {
                case Kind::u_g:
                    enabled = true;
                    key0 = d < 0 ? 1 : 0;
                    break;
                case Kind::u_p:
                    enabled = d >= 0;
                    break;
                case Kind::u_h:
                    enabled = d == 0;
                    break;
                case Kind::u_m:
                    enabled = d < 0;
                    break;
                case Kind::module_induced:
                    enabled = true;
                    key0 = d < 0 ? 0 : 1;
                    break;
                case Kind::module_verma:
                    enabled = true;
                    key0 = i > j ? 0 : 1;
                    break;
                }
                if (enabled)
                    entries.push_back({key0, d, i, j, (i - 1) * N + (j - 1)});
            }
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.key0, a.deg, a.i, a.j) < std::tie(b.key0, b.deg, b.i, b.j);
        });

        code_of_rank_.resize(entries.size());
        deg_.resize(entries.size());
        diag_.resize(entries.size());
        psi_.assign(entries.size(), 0);
        chi_.resize(entries.size());
        head_count_ = 0;
        for (size_t r = 0; r < entries.size(); ++r) {
            const Entry& e = entries[r];
            code_of_rank_[r] = e.code;
            rank_of_code_[e.code] = static_cast<GenRank>(r);
            deg_[r] = e.deg;
            diag_[r] = (e.i == e.j);
            chi_[r] = lie_.chi[e.code];
            if (!psi_codes.empty())
                psi_[r] = static_cast<int>(((psi_codes[e.code] % std::max<long long>(p_, 1)) +
                                            std::max<long long>(p_, 1)) %
                                           std::max<long long>(p_, 1));
            if (e.key0 == 0)
                ++head_count_;
        }
        build_brackets();
    }

    void build_brackets()
    {
        const int G = ngens();
        br_terms_.assign(2 * G * G, BracketTerm{kNoRank, 0});
        br_count_.assign(G * G, 0);
        for (GenRank a = 0; a < G; ++a)
            for (GenRank b = 0; b < G; ++b) {
                auto [i, j] = unit_of(a);
                auto [k, l] = unit_of(b);
                // [e_{i,j}, e_{k,l}] = d_{j,k} e_{i,l} - d_{l,i} e_{k,j}
                std::map<int, int> acc;
                const int N = lie_.boxes();
                if (j == k)
                    acc[(i - 1) * N + (l - 1)] += 1;
                if (l == i)
                    acc[(k - 1) * N + (j - 1)] -= 1;
                int cnt = 0;
                for (auto [code, sgn] : acc) {
                    if (sgn == 0)
                        continue;
                    const GenRank z = rank_of_code_[code];
                    if (z == kNoRank)
                        throw std::logic_error("bracket leaves the subalgebra");
                    br_terms_[2 * (a * G + b) + cnt] = BracketTerm{z, sgn};
                    ++cnt;
                }
                br_count_[a * G + b] = static_cast<std::uint8_t>(cnt);
            }
    }

    LieDatum lie_;
    long long p_;
    Kind kind_;
    bool reduced_;
    int head_count_ = 0;
    std::vector<GenRank> rank_of_code_;
    std::vector<int> code_of_rank_;
    std::vector<int> deg_;
    std::vector<char> diag_;
    std::vector<int> psi_, chi_;
    std::vector<BracketTerm> br_terms_;
    std::vector<std::uint8_t> br_count_;
};

template <class Ring>
struct ElemT {
    const AlgebraContext* ctx = nullptr;
    std::map<Monomial, typename Ring::S> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const ElemT& o) const { return terms == o.terms; }
};

using PbwElement = ElemT<IntRing>;

inline long long total_degree(const Monomial& m)
{
    long long d = 0;
    for (auto [r, e] : m)
        d += e;
    return d;
}

inline long long kazhdan_degree(const AlgebraContext& ctx, const Monomial& m)
{
    long long d = 0;
    for (auto [r, e] : m)
        d += static_cast<long long>(ctx.weight(r)) * e;
    return d;
}

namespace detail {

inline Monomial word_to_monomial(const Word& w)
{
    Monomial m;
    for (GenRank r : w) {
        if (!m.empty() && m.back().first == r)
            ++m.back().second;
        else
            m.emplace_back(r, 1);
    }
    return m;
}

inline Word monomial_to_word(const Monomial& m)
{
    Word w;
    for (auto [r, e] : m)
        for (int k = 0; k < e; ++k)
            w.push_back(r);
    return w;
}

template <class Ring>
void add_term(const Ring& R, std::map<Monomial, typename Ring::S>& out, const Monomial& m,
              const typename Ring::S& c)
{
    auto it = out.find(m);
    if (it == out.end()) {
        if (!R.zero(c))
            out.emplace(m, c);
        return;
    }
    it->second = R.add(it->second, c);
    if (R.zero(it->second))
        out.erase(it);
}

template <class Ring>
void add_word(const Ring& R, std::map<Word, typename Ring::S>& pending, Word&& w,
              const typename Ring::S& c)
{
    if (R.zero(c))
        return;
    auto it = pending.find(w);
    if (it == pending.end()) {
        pending.emplace(std::move(w), c);
        return;
    }
    it->second = R.add(it->second, c);
    if (R.zero(it->second))
        pending.erase(it);
}

/// Straighten all pending words into canonical monomials.  When
/// kazhdan_bound >= 0 (only meaningful in contexts whose generators all
/// have positive Kazhdan weight), words that cannot produce any canonical
/// term of Kazhdan degree <= bound are dropped.
template <class Ring>
void straighten(const AlgebraContext& ctx, const Ring& R,
                std::map<Word, typename Ring::S>& pending,
                std::map<Monomial, typename Ring::S>& out, long long kazhdan_bound = -1)
{
    const long long p = ctx.characteristic();
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        typename Ring::S coef = std::move(it->second);
        pending.erase(it);
        if (R.zero(coef))
            continue;

        if (kazhdan_bound >= 0 && !w.empty()) {
            long long kz = 0;
            for (GenRank r : w)
                kz += ctx.weight(r);
            if (kz - (static_cast<long long>(w.size()) - 1) > kazhdan_bound)
                continue;
        }

        size_t k = 0;
        bool descent = false;
        for (; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) {
                descent = true;
                break;
            }
        if (descent) {
            int cnt = 0;
            const auto* terms = ctx.bracket(w[k], w[k + 1], cnt);
            Word sw = w;
            std::swap(sw[k], sw[k + 1]);
            add_word(R, pending, std::move(sw), coef);
            for (int t = 0; t < cnt; ++t) {
                Word bw;
                bw.reserve(w.size() - 1);
                bw.insert(bw.end(), w.begin(), w.begin() + k);
                bw.push_back(terms[t].rank);
                bw.insert(bw.end(), w.begin() + k + 2, w.end());
                add_word(R, pending, std::move(bw), R.mul(coef, R.from_long(terms[t].sign)));
            }
            continue;
        }

        if (ctx.reduced()) {
            // collapse the first run of length >= p via g^p = g^{[p]} + psi(g)^p
            size_t run_begin = 0;
            bool reducedrun = false;
            while (run_begin < w.size()) {
                size_t run_end = run_begin;
                while (run_end < w.size() && w[run_end] == w[run_begin])
                    ++run_end;
                if (static_cast<long long>(run_end - run_begin) >= p) {
                    const GenRank g = w[run_begin];
                    Word base;
                    base.reserve(w.size() - p);
                    base.insert(base.end(), w.begin(), w.begin() + run_begin);
                    base.insert(base.end(), w.begin() + run_begin + p, w.end());
                    if (ctx.diagonal(g)) {
                        Word w1 = base;
                        w1.insert(w1.begin() + run_begin, g);
                        add_word(R, pending, std::move(w1), coef);
                    }
                    long long psip = 1; // psi(g)^p mod p
                    for (int t = 0; t < p; ++t)
                        psip = (psip * ctx.psi(g)) % p;
                    add_word(R, pending, std::move(base), R.mul(coef, R.from_long(psip)));
                    reducedrun = true;
                    break;
                }
                run_begin = run_end;
            }
            if (reducedrun)
                continue;
        }

        Monomial m = word_to_monomial(w);
        if (kazhdan_bound >= 0 && kazhdan_degree(ctx, m) > kazhdan_bound)
            continue;
        add_term(R, out, m, coef);
    }
}

} // namespace detail

template <class Ring>
ElemT<Ring> make_zero(const AlgebraContext& ctx)
{
    return ElemT<Ring>{&ctx, {}};
}

template <class Ring>
ElemT<Ring> make_scalar(const AlgebraContext& ctx, typename Ring::S v)
{
    Ring R{ctx.characteristic()};
    ElemT<Ring> e{&ctx, {}};
    v = R.norm(std::move(v));
    if (!R.zero(v))
        e.terms.emplace(Monomial{}, std::move(v));
    return e;
}

template <class Ring = IntRing>
ElemT<Ring> make_unit(const AlgebraContext& ctx, int i, int j)
{
    const GenRank r = ctx.rank_of(i, j);
    if (r == kNoRank)
        throw validation_error("matrix unit e_{" + std::to_string(i) + "," + std::to_string(j) +
                               "} is not a generator of this context");
    ElemT<Ring> e{&ctx, {}};
    e.terms.emplace(Monomial{{r, 1}}, Ring{ctx.characteristic()}.from_long(1));
    return e;
}

template <class Ring>
ElemT<Ring> add(const ElemT<Ring>& a, const ElemT<Ring>& b)
{
    if (a.ctx != b.ctx)
        throw validation_error("context mismatch in add");
    Ring R{a.ctx->characteristic()};
    ElemT<Ring> out = a;
    for (const auto& [m, c] : b.terms)
        detail::add_term(R, out.terms, m, c);
    return out;
}

template <class Ring>
ElemT<Ring> scale(const ElemT<Ring>& a, const typename Ring::S& s)
{
    Ring R{a.ctx->characteristic()};
    ElemT<Ring> out{a.ctx, {}};
    for (const auto& [m, c] : a.terms) {
        auto v = R.mul(c, s);
        if (!R.zero(v))
            out.terms.emplace(m, std::move(v));
    }
    return out;
}

template <class Ring>
ElemT<Ring> negate(const ElemT<Ring>& a)
{
    Ring R{a.ctx->characteristic()};
    return scale(a, R.from_long(-1));
}

template <class Ring>
ElemT<Ring> sub(const ElemT<Ring>& a, const ElemT<Ring>& b)
{
    return add(a, negate(b));
}

template <class Ring>
ElemT<Ring> mul(const ElemT<Ring>& a, const ElemT<Ring>& b, long long kazhdan_bound = -1)
{
    if (a.ctx != b.ctx)
        throw validation_error("context mismatch in mul");
    Ring R{a.ctx->characteristic()};
    std::map<Word, typename Ring::S> pending;
    for (const auto& [ma, ca] : a.terms) {
        const Word wa = detail::monomial_to_word(ma);
        for (const auto& [mb, cb] : b.terms) {
            Word w = wa;
            const Word wb = detail::monomial_to_word(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            detail::add_word(R, pending, std::move(w), R.mul(ca, cb));
        }
    }
    ElemT<Ring> out{a.ctx, {}};
    detail::straighten(*a.ctx, R, pending, out.terms, kazhdan_bound);
    return out;
}

/// Product of several factors straightened in one pass from the fully
/// concatenated words; used as the free-expansion oracle for associativity.
template <class Ring>
ElemT<Ring> mul_free(const std::vector<ElemT<Ring>>& factors)
{
    if (factors.empty())
        throw validation_error("mul_free needs at least one factor");
    const AlgebraContext* ctx = factors[0].ctx;
    Ring R{ctx->characteristic()};
    std::map<Word, typename Ring::S> pending;
    std::vector<std::pair<Word, typename Ring::S>> acc{{Word{}, R.from_long(1)}};
    for (const auto& f : factors) {
        if (f.ctx != ctx)
            throw validation_error("context mismatch in mul_free");
        std::vector<std::pair<Word, typename Ring::S>> nxt;
        for (const auto& [w, c] : acc)
            for (const auto& [m, cm] : f.terms) {
                Word w2 = w;
                const Word wm = detail::monomial_to_word(m);
                w2.insert(w2.end(), wm.begin(), wm.end());
                nxt.emplace_back(std::move(w2), R.mul(c, cm));
            }
        acc = std::move(nxt);
    }
    for (auto& [w, c] : acc)
        detail::add_word(R, pending, std::move(w), c);
    ElemT<Ring> out{ctx, {}};
    detail::straighten(*ctx, R, pending, out.terms);
    return out;
}

template <class Ring>
ElemT<Ring> bracket_elem(const ElemT<Ring>& a, const ElemT<Ring>& b)
{
    return sub(mul(a, b), mul(b, a));
}

template <class Ring>
ElemT<Ring> pow_elem(const ElemT<Ring>& a, long long k)
{
    Ring R{a.ctx->characteristic()};
    ElemT<Ring> out = make_scalar<Ring>(*a.ctx, R.from_long(1));
    for (long long t = 0; t < k; ++t)
        out = mul(out, a);
    return out;
}

/// Structure-constant bracket of two generators.
template <class Ring = IntRing>
ElemT<Ring> generator_bracket(const AlgebraContext& ctx, int i, int j, int k, int l)
{
    return bracket_elem(make_unit<Ring>(ctx, i, j), make_unit<Ring>(ctx, k, l));
}

/// g^p rewritten through the reduction relation of the context: g^{[p]} +
/// psi(g)^p.  Without reduction data this is just the monomial g^p.
template <class Ring = IntRing>
ElemT<Ring> reduce_power(const AlgebraContext& ctx, int i, int j)
{
    Ring R{ctx.characteristic()};
    const GenRank g = ctx.rank_of(i, j);
    if (g == kNoRank)
        throw validation_error("generator not in context");
    if (ctx.characteristic() <= 0)
        throw validation_error("reduce_power needs positive characteristic");
    ElemT<Ring> out{&ctx, {}};
    if (!ctx.reduced()) {
        out.terms.emplace(Monomial{{g, static_cast<std::uint16_t>(ctx.characteristic())}},
                          R.from_long(1));
        return out;
    }
    const long long p = ctx.characteristic();
    if (ctx.diagonal(g))
        detail::add_term(R, out.terms, Monomial{{g, 1}}, R.from_long(1));
    long long psip = 1;
    for (int t = 0; t < p; ++t)
        psip = (psip * ctx.psi(g)) % p;
    detail::add_term(R, out.terms, Monomial{}, R.from_long(psip));
    return out;
}

/// Re-express an element in another context over the same Lie datum (the
/// word of each monomial is straightened in the target order).
template <class Ring>
ElemT<Ring> convert(const ElemT<Ring>& x, const AlgebraContext& target)
{
    Ring R{target.characteristic()};
    const int N = x.ctx->lie().boxes();
    if (N != target.lie().boxes())
        throw validation_error("convert: incompatible Lie data");
    std::map<Word, typename Ring::S> pending;
    for (const auto& [m, c] : x.terms) {
        Word w;
        for (auto [r, e] : m) {
            auto [i, j] = x.ctx->unit_of(r);
            const GenRank tr = target.rank_of(i, j);
            if (tr == kNoRank)
                throw validation_error("convert: generator absent from target context");
            for (int t = 0; t < e; ++t)
                w.push_back(tr);
        }
        detail::add_word(R, pending, std::move(w), R.norm(c));
    }
    ElemT<Ring> out{&target, {}};
    detail::straighten(target, R, pending, out.terms);
    return out;
}

/// Projection pr : U(g) -> U(p) along U(g) m_chi.  The source context must
/// order m-generators last; each monomial's m-tail evaluates to the product
/// of its chi values.
template <class Ring>
ElemT<Ring> project_pr(const ElemT<Ring>& x, const AlgebraContext& up)
{
    const AlgebraContext& ug = *x.ctx;
    if (ug.kind() != AlgebraContext::Kind::u_g)
        throw validation_error("project_pr expects an element of the U(g) context");
    if (up.kind() != AlgebraContext::Kind::u_p)
        throw validation_error("project_pr target must be a U(p) context");
    Ring R{up.characteristic()};
    ElemT<Ring> out{&up, {}};
    const GenRank head = static_cast<GenRank>(ug.head_count());
    for (const auto& [m, c] : x.terms) {
        bool kill = false;
        Monomial pm;
        for (auto [r, e] : m) {
            if (r < head) {
                auto [i, j] = ug.unit_of(r);
                pm.emplace_back(up.rank_of(i, j), e);
            } else if (ug.chi(r) != 1) {
                kill = true; // chi(g)^e = 0
                break;
            }
            // chi(g) = 1 contributes a factor 1
        }
        if (!kill)
            detail::add_term(R, out.terms, pm, c);
    }
    return out;
}

/// Twisted adjoint action of the unipotent element u_{i,j}(s), col(j) <
/// col(i): substitute every generator by its adjoint image, expand in U(g),
/// then project back to U(p).
template <class Ring>
ElemT<Ring> twisted_adjoint(const AlgebraContext& ug, const AlgebraContext& up, int i, int j,
                            const typename Ring::S& s, const ElemT<Ring>& x)
{
    if (x.ctx != &up)
        throw validation_error("twisted_adjoint expects an element of the given U(p) context");
    if (!ug.lie().in_m(i, j))
        throw validation_error("(i,j) is not an m-root");
    Ring R{ug.characteristic()};
    const typename Ring::S s2 = R.mul(s, s);

    // adjoint image of each generator, computed lazily per rank of up
    std::vector<std::optional<ElemT<Ring>>> image(up.ngens());
    auto subst = [&](GenRank r) -> const ElemT<Ring>& {
        if (!image[r]) {
            auto [k, l] = up.unit_of(r);
            ElemT<Ring> y = make_unit<Ring>(ug, k, l);
            if (j == k)
                y = add(y, scale(make_unit<Ring>(ug, i, l), s));
            if (l == i)
                y = add(y, scale(make_unit<Ring>(ug, k, j), R.neg(s)));
            if (j == k && l == i)
                y = add(y, scale(make_unit<Ring>(ug, i, j), R.neg(s2)));
            image[r] = std::move(y);
        }
        return *image[r];
    };

    ElemT<Ring> total{&ug, {}};
    for (const auto& [m, c] : x.terms) {
        ElemT<Ring> prod = make_scalar<Ring>(ug, c);
        for (auto [r, e] : m)
            for (int t = 0; t < e; ++t)
                prod = mul(prod, subst(r));
        total = add(total, prod);
    }
    return project_pr(total, up);
}

inline PbwElement twisted_adjoint_scalar(const AlgebraContext& ug, const AlgebraContext& up,
                                         int i, int j, const Zint& s, const PbwElement& x)
{
    return twisted_adjoint<IntRing>(ug, up, i, j, s, x);
}

/// Stable text dump: terms in canonical monomial order.
template <class Ring>
std::string to_string(const ElemT<Ring>& e)
{
    if (e.terms.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : e.terms) {
        if (!s.empty())
            s += " + ";
        s += Ring::str(c);
        for (auto [r, exp] : m) {
            auto [i, j] = e.ctx->unit_of(r);
            s += "*e[" + std::to_string(i) + "," + std::to_string(j) + "]";
            if (exp > 1)
                s += "^" + std::to_string(exp);
        }
    }
    return s;
}

} // namespace wpyr
