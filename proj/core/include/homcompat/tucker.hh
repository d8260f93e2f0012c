/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_TUCKER_HH
#define HOMCOMPAT_GUARD_TUCKER_HH 1

#include <homcompat/compat.hh>
#include <homcompat/hom_poset.hh>
#include <homcompat/solvers.hh>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace homcompat
{
    /**
     * A non-zero vector in (Z_r u {0})^n. Entry codes: 0 is zero, 1..r-1 is
     * w^1..w^(r-1), and r is the identity e = w^0 = w^r. Positions are 0-based
     * here; position s stands for ground element s + 1 of KG(n, k).
     */
    class SignedVector
    {
        private:
            int _r = 2;
            std::vector<int> _entries;

        public:
            SignedVector(int r, std::vector<int> entries);

            auto r() const -> int
            {
                return _r;
            }

            auto n() const -> int
            {
                return int(_entries.size());
            }

            auto operator[] (int s) const -> int
            {
                return _entries[s];
            }

            auto entries() const -> const std::vector<int> &
            {
                return _entries;
            }

            auto nonzero_count() const -> int;

            /// "(w,0,e)" style, with w^i written as w^i for i >= 2.
            auto to_string() const -> std::string;

            friend auto operator== (const SignedVector &, const SignedVector &) -> bool = default;
    };

    /// Exponent of an entry code as an element of Z_r (e becomes 0). Code 0 has no sign.
    inline auto code_exponent(int code, int r) -> int
    {
        return code % r;
    }

    /// Label (w^sign, level); Z_r acts on the sign only.
    struct TuckerLabel
    {
        int sign = 0;
        int level = 1;

        auto act(int j, int r) const -> TuckerLabel
        {
            return TuckerLabel{ ((sign + j) % r + r) % r, level };
        }

        friend auto operator== (const TuckerLabel &, const TuckerLabel &) -> bool = default;
    };

    /// x <= y iff every non-zero entry of x agrees with y. Throws on length or r mismatch.
    auto sv_leq(const SignedVector & x, const SignedVector & y) -> bool;

    /// Multiply every non-zero entry by w^j.
    auto sv_act(const SignedVector & x, int j) -> SignedVector;

    /// classes(x)[i - 1] = X_i = positions holding w^i, for i = 1..r (so the
    /// last entry holds the positions of e).
    auto classes(const SignedVector & x) -> std::vector<std::vector<int>>;

    /**
     * The whole domain (Z_r u {0})^n minus zero, indexed in base r + 1 with
     * position 0 most significant. Index 0 is the excluded zero vector.
     */
    class TuckerDomain
    {
        private:
            int _n, _r;
            std::uint64_t _size;

        public:
            TuckerDomain(int n, int r, std::uint64_t sweep_cap = 10'000'000);

            auto n() const -> int
            {
                return _n;
            }

            auto r() const -> int
            {
                return _r;
            }

            /// (r + 1)^n, including the zero index.
            auto index_count() const -> std::uint64_t
            {
                return _size;
            }

            auto encode(const SignedVector & x) const -> std::uint64_t;
            auto decode(std::uint64_t index) const -> SignedVector;
    };

    /// A total labelling of a TuckerDomain.
    class Labeling
    {
        private:
            TuckerDomain _domain;
            std::vector<TuckerLabel> _table;

        public:
            Labeling(TuckerDomain domain, std::vector<TuckerLabel> table);

            auto domain() const -> const TuckerDomain &
            {
                return _domain;
            }

            auto at(const SignedVector & x) const -> const TuckerLabel &
            {
                return _table[_domain.encode(x)];
            }

            auto at_index(std::uint64_t i) const -> const TuckerLabel &
            {
                return _table[i];
            }

            auto max_level() const -> int;
    };

    /// The (n, k, r) instance plus a colouring of C(Hom(K_r, KG(n, k))).
    struct TuckerParams
    {
        int n = 0, k = 0, r = 0;
        std::shared_ptr<const CompatGraph> compat;
        Coloring coloring;

        auto colour_count() const -> int
        {
            return coloring.colour_count;
        }
    };

    /// Builds C(Hom(K_r, KG(n, k))) after checking n >= rk, r >= 2, k >= 1.
    auto tucker_compat(int n, int k, int r, const HomEnumerationOptions & options = {}) -> std::shared_ptr<const CompatGraph>;

    /// Validates the parameters and that coloring covers every compat vertex.
    auto make_tucker_params(int n, int k, int r, std::shared_ptr<const CompatGraph> compat, Coloring coloring) -> TuckerParams;

    /// Pullback of the canonical Kneser colouring, a proper colouring with n - 2k + 2 colours.
    auto pullback_tucker_params(int n, int k, int r, const HomEnumerationOptions & options = {}) -> TuckerParams;

    /// The r-tuple whose i-th part is every k-subset of X_i, as KG(n, k)
    /// vertex indices. Throws InvalidInput if some |X_i| < k.
    auto binom_tuple(const SignedVector & x, int k) -> MultiHom;

    enum class TieBreak
    {
        /// Among colour-minimising shifts t, the one whose rotated vector is
        /// lexicographically least with 0 < e < w < ... < w^(r-1). Equivariant.
        EquivariantLex,
        /// The smallest minimising t. Not equivariant; kept to show the checker catches it.
        SmallestShift
    };

    /// 1, 2 or 3 according to how many classes have at least k elements (none,
    /// some, all).
    auto lambda_case(const SignedVector & x, int k) -> int;

    /**
     * The labelling built from a colouring c of C(Hom(K_r, KG(n, k))):
     *   all |X_i| < k:      level sum |X_i|, sign of the first non-zero entry;
     *   some |X_i| >= k:    level r(k - 1) + #{i : |X_i| >= k}, sign of the
     *                       first entry whose class has at least k elements;
     *   all |X_i| >= k:     pick the shift t minimising c(binom_tuple(w^t.x)),
     *                       level rk - 1 + that colour, sign -t.
     */
    auto lambda_label(const SignedVector & x, const TuckerParams & p, TieBreak tie_break = TieBreak::EquivariantLex) -> TuckerLabel;

    auto build_lambda(const TuckerParams & p, TieBreak tie_break = TieBreak::EquivariantLex,
            std::uint64_t sweep_cap = 10'000'000) -> Labeling;

    /// First x (in index order) and j with labeling(w^j.x) != w^j.labeling(x).
    struct EquivarianceViolation
    {
        SignedVector x;
        int shift;
    };

    auto check_equivariance(const Labeling & labeling) -> std::optional<EquivarianceViolation>;

    auto check_equivariance(const TuckerParams & p, TieBreak tie_break = TieBreak::EquivariantLex,
            std::uint64_t sweep_cap = 10'000'000) -> std::optional<EquivarianceViolation>;

    /// x <= y with equal levels and different signs: labeling(x) = w^g.labeling(y), g != 0.
    struct BadPair
    {
        SignedVector x, y;
        int g;
    };

    /// Scans y in index order, then every x obtained by zeroing a subset of
    /// y's support (subset masks in increasing order), returning the first
    /// bad pair. Throws InvalidInput if the labelling is not equivariant.
    auto find_bad_pair(const Labeling & labeling) -> std::optional<BadPair>;

    /// Uniform sign and level in 1..max_level on the first vector of each
    /// orbit, extended equivariantly. Deterministic in seed.
    auto random_equivariant_labeling(int n, int r, int max_level, std::uint64_t seed) -> Labeling;

    /// level = number of non-zero entries, sign = first non-zero entry. Uses
    /// levels 1..n and has no bad pair.
    auto support_count_labeling(int n, int r) -> Labeling;

    enum class VerdictKind
    {
        NoBadPair,
        Case3BadPair,
        AnomalousBadPair
    };

    auto to_string(VerdictKind k) -> std::string;

    /// Two equally coloured, adjacent vertices of the compatibility graph.
    struct MonochromaticEdge
    {
        int u, v;
        MultiHom u_element, v_element;
        int colour;
    };

    struct Verdict
    {
        VerdictKind kind = VerdictKind::NoBadPair;
        int n = 0, k = 0, r = 0, colour_count = 0;
        /// Highest level lambda uses, and the a priori cap C + r(k - 1).
        int max_level = 0, level_cap = 0;
        /// n - r(k - 1): the colour bound lambda certifies when there is no bad pair.
        int implied_lower_bound = 0;
        std::optional<BadPair> bad_pair;
        std::optional<MonochromaticEdge> certificate;
    };

    /**
     * Build lambda from p.coloring and look for a bad pair. A bad pair at a
     * case-3 level is turned into a monochromatic edge of the compatibility
     * graph, re-checked against the graph and the poset before it is
     * returned. A bad pair at a lower level is reported as anomalous.
     */
    auto refute_or_certify(const TuckerParams & p, std::uint64_t sweep_cap = 10'000'000) -> Verdict;
}

#endif
