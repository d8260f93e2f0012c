/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/tucker.hh>
#include <homcompat/errors.hh>
#include <homcompat/generators.hh>

#include <algorithm>
#include <random>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

using namespace homcompat;

SignedVector::SignedVector(int r, vector<int> entries) :
    _r(r),
    _entries(std::move(entries))
{
    if (r < 2)
        throw InvalidInput("signed vectors need r >= 2, got " + std::to_string(r));
    bool any = false;
    for (auto e : _entries) {
        if (e < 0 || e > r)
            throw InvalidInput("signed vector entry " + std::to_string(e) + " outside 0.." + std::to_string(r));
        any = any || e != 0;
    }
    if (! any)
        throw InvalidInput("signed vector must have a non-zero entry");
}

auto SignedVector::nonzero_count() const -> int
{
    return int(std::count_if(_entries.begin(), _entries.end(), [] (int e) { return e != 0; }));
}

auto SignedVector::to_string() const -> string
{
    string result = "(";
    for (int s = 0 ; s < n() ; ++s) {
        if (s > 0)
            result += ",";
        int e = _entries[s];
        if (e == 0)
            result += "0";
        else if (e == _r)
            result += "e";
        else if (e == 1)
            result += "w";
        else
            result += "w^" + std::to_string(e);
    }
    return result + ")";
}

auto homcompat::sv_leq(const SignedVector & x, const SignedVector & y) -> bool
{
    if (x.n() != y.n() || x.r() != y.r())
        throw InvalidInput("comparing signed vectors of different shapes");
    for (int s = 0 ; s < x.n() ; ++s)
        if (x[s] != 0 && x[s] != y[s])
            return false;
    return true;
}

auto homcompat::sv_act(const SignedVector & x, int j) -> SignedVector
{
    int r = x.r();
    vector<int> entries(x.entries());
    for (auto & e : entries)
        if (e != 0)
            e = ((e - 1 + j) % r + r) % r + 1;
    return SignedVector(r, std::move(entries));
}

auto homcompat::classes(const SignedVector & x) -> vector<vector<int>>
{
    vector<vector<int>> result(x.r());
    for (int s = 0 ; s < x.n() ; ++s)
        if (x[s] != 0)
            result[x[s] - 1].push_back(s);
    return result;
}

TuckerDomain::TuckerDomain(int n, int r, uint64_t sweep_cap) :
    _n(n),
    _r(r),
    _size(1)
{
    if (r < 2)
        throw InvalidInput("r must be at least 2, got " + std::to_string(r));
    if (n < 1)
        throw InvalidInput("n must be at least 1, got " + std::to_string(n));
    for (int i = 0 ; i < n ; ++i) {
        if (_size > sweep_cap / uint64_t(r + 1)) {
            uint64_t projected = _size;
            for (int j = i ; j < n ; ++j)
                projected = projected > UINT64_MAX / uint64_t(r + 1) ? UINT64_MAX : projected * uint64_t(r + 1);
            throw CapExceeded("signed vector sweep", projected, sweep_cap);
        }
        _size *= uint64_t(r + 1);
    }
}

auto TuckerDomain::encode(const SignedVector & x) const -> uint64_t
{
    if (x.n() != _n || x.r() != _r)
        throw InvalidInput("signed vector " + x.to_string() + " does not belong to this domain");
    uint64_t index = 0;
    for (int s = 0 ; s < _n ; ++s)
        index = index * uint64_t(_r + 1) + uint64_t(x[s]);
    return index;
}

auto TuckerDomain::decode(uint64_t index) const -> SignedVector
{
    vector<int> entries(_n);
    for (int s = _n - 1 ; s >= 0 ; --s) {
        entries[s] = int(index % uint64_t(_r + 1));
        index /= uint64_t(_r + 1);
    }
    return SignedVector(_r, std::move(entries));
}

Labeling::Labeling(TuckerDomain domain, vector<TuckerLabel> table) :
    _domain(domain),
    _table(std::move(table))
{
    if (_table.size() != _domain.index_count())
        throw InvalidInput("labelling table has the wrong size");
    for (uint64_t i = 1 ; i < _table.size() ; ++i)
        if (_table[i].level < 1 || _table[i].sign < 0 || _table[i].sign >= _domain.r())
            throw InvalidInput("invalid label at index " + std::to_string(i));
}

auto Labeling::max_level() const -> int
{
    int result = 0;
    for (uint64_t i = 1 ; i < _table.size() ; ++i)
        result = std::max(result, _table[i].level);
    return result;
}

auto homcompat::tucker_compat(int n, int k, int r, const HomEnumerationOptions & options) -> std::shared_ptr<const CompatGraph>
{
    if (r < 2 || k < 1 || n < r * k)
        throw InvalidInput("Tucker parameters need r >= 2, k >= 1 and n >= rk, got n=" + std::to_string(n)
                + " k=" + std::to_string(k) + " r=" + std::to_string(r));
    return std::make_shared<const CompatGraph>(build_compat(enumerate_hom(kneser_graph(n, k), r, options)));
}

auto homcompat::make_tucker_params(int n, int k, int r, std::shared_ptr<const CompatGraph> compat, Coloring coloring) -> TuckerParams
{
    if (r < 2 || k < 1 || n < r * k)
        throw InvalidInput("Tucker parameters need r >= 2, k >= 1 and n >= rk, got n=" + std::to_string(n)
                + " k=" + std::to_string(k) + " r=" + std::to_string(r));
    if (compat->source->r() != r || compat->source->host().size() != binomial(n, k))
        throw InvalidInput("compatibility graph was not built from Hom(K_" + std::to_string(r) + ", KG(" + std::to_string(n) + "," + std::to_string(k) + "))");
    check_covers(compat->graph, coloring);
    return TuckerParams{ n, k, r, std::move(compat), std::move(coloring) };
}

auto homcompat::pullback_tucker_params(int n, int k, int r, const HomEnumerationOptions & options) -> TuckerParams
{
    auto compat = tucker_compat(n, k, r, options);
    auto colouring = pullback_coloring(*compat, kneser_canonical_coloring(n, k));
    return make_tucker_params(n, k, r, std::move(compat), std::move(colouring));
}

auto homcompat::binom_tuple(const SignedVector & x, int k) -> MultiHom
{
    int n = x.n();
    auto width = int(binomial(n, k));
    MultiHom result;
    for (auto & cls : classes(x)) {
        if (int(cls.size()) < k)
            throw InvalidInput("class of size " + std::to_string(cls.size()) + " in " + x.to_string()
                    + " has no " + std::to_string(k) + "-subsets");

        Bitset part(width);
        vector<int> pick(k);
        for (int i = 0 ; i < k ; ++i)
            pick[i] = i;
        int m = int(cls.size());
        while (true) {
            vector<int> subset(k);
            for (int i = 0 ; i < k ; ++i)
                subset[i] = cls[pick[i]] + 1;
            part.set(kneser_rank(n, k, subset));

            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1 ; j < k ; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        result.parts.push_back(std::move(part));
    }
    return result;
}

auto homcompat::lambda_case(const SignedVector & x, int k) -> int
{
    int large = 0;
    for (auto & cls : classes(x))
        if (int(cls.size()) >= k)
            ++large;
    return large == 0 ? 1 : large == x.r() ? 3 : 2;
}

namespace
{
    auto lex_key(int code, int r) -> int
    {
        // 0 < e < w < w^2 < ... < w^(r-1)
        if (code == 0)
            return 0;
        return code == r ? 1 : code + 1;
    }

    auto lex_less_rotated(const SignedVector & a, const SignedVector & b) -> bool
    {
        for (int s = 0 ; s < a.n() ; ++s) {
            int ka = lex_key(a[s], a.r()), kb = lex_key(b[s], b.r());
            if (ka != kb)
                return ka < kb;
        }
        return false;
    }

    auto colour_of(const TuckerParams & p, const MultiHom & m) -> int
    {
        auto index = p.compat->source->find(m);
        if (! index)
            throw InvalidInput("colouring has no vertex for " + m.to_string());
        return p.coloring.colours[*index];
    }
}

auto homcompat::lambda_label(const SignedVector & x, const TuckerParams & p, TieBreak tie_break) -> TuckerLabel
{
    int r = p.r, k = p.k;
    if (x.r() != r || x.n() != p.n)
        throw InvalidInput("signed vector " + x.to_string() + " does not match the parameters");

    auto cls = classes(x);
    int large = 0, total = 0;
    for (auto & c : cls) {
        total += int(c.size());
        if (int(c.size()) >= k)
            ++large;
    }

    if (large == 0) {
        for (int s = 0 ; s < x.n() ; ++s)
            if (x[s] != 0)
                return TuckerLabel{ code_exponent(x[s], r), total };
    }

    if (large < r) {
        for (int s = 0 ; s < x.n() ; ++s)
            if (x[s] != 0 && int(cls[x[s] - 1].size()) >= k)
                return TuckerLabel{ code_exponent(x[s], r), r * (k - 1) + large };
    }

    int best_t = -1, best_colour = 0;
    optional<SignedVector> best_rotated;
    for (int t = 0 ; t < r ; ++t) {
        auto rotated = sv_act(x, t);
        int c = colour_of(p, binom_tuple(rotated, k));
        bool better = best_t == -1 || c < best_colour;
        if (! better && c == best_colour && tie_break == TieBreak::EquivariantLex)
            better = lex_less_rotated(rotated, *best_rotated);
        if (better) {
            best_t = t;
            best_colour = c;
            best_rotated = rotated;
        }
    }
    return TuckerLabel{ (r - best_t) % r, r * k - 1 + best_colour };
}

auto homcompat::build_lambda(const TuckerParams & p, TieBreak tie_break, uint64_t sweep_cap) -> Labeling
{
    TuckerDomain domain(p.n, p.r, sweep_cap);
    int case_one_top = p.r * (p.k - 1), case_two_top = p.r * p.k - 1;
    int case_three_top = p.r * p.k - 1 + p.colour_count();

    vector<TuckerLabel> table(domain.index_count());
    for (uint64_t i = 1 ; i < domain.index_count() ; ++i) {
        auto x = domain.decode(i);
        table[i] = lambda_label(x, p, tie_break);

        int level = table[i].level;
        int low = 1, high = case_one_top;
        switch (lambda_case(x, p.k)) {
            case 1: break;
            case 2: low = case_one_top + 1; high = case_two_top; break;
            default: low = case_two_top + 1; high = case_three_top; break;
        }
        if (level < low || level > high)
            throw InternalError("level " + std::to_string(level) + " of " + x.to_string() + " outside its case range "
                    + std::to_string(low) + ".." + std::to_string(high));
    }
    return Labeling(domain, std::move(table));
}

auto homcompat::check_equivariance(const Labeling & labeling) -> optional<EquivarianceViolation>
{
    auto & domain = labeling.domain();
    for (uint64_t i = 1 ; i < domain.index_count() ; ++i) {
        auto x = domain.decode(i);
        for (int j = 1 ; j < domain.r() ; ++j)
            if (labeling.at(sv_act(x, j)) != labeling.at_index(i).act(j, domain.r()))
                return EquivarianceViolation{ x, j };
    }
    return std::nullopt;
}

auto homcompat::check_equivariance(const TuckerParams & p, TieBreak tie_break, uint64_t sweep_cap) -> optional<EquivarianceViolation>
{
    return check_equivariance(build_lambda(p, tie_break, sweep_cap));
}

auto homcompat::find_bad_pair(const Labeling & labeling) -> optional<BadPair>
{
    if (auto violation = check_equivariance(labeling))
        throw InvalidInput("labelling is not equivariant at " + violation->x.to_string()
                + " under shift " + std::to_string(violation->shift));

    auto & domain = labeling.domain();
    int n = domain.n(), r = domain.r();
    vector<uint64_t> weight(n);
    uint64_t w = 1;
    for (int s = n - 1 ; s >= 0 ; --s, w *= uint64_t(r + 1))
        weight[s] = w;

    for (uint64_t yi = 1 ; yi < domain.index_count() ; ++yi) {
        auto y = domain.decode(yi);
        auto & y_label = labeling.at_index(yi);
        vector<int> support;
        for (int s = 0 ; s < n ; ++s)
            if (y[s] != 0)
                support.push_back(s);

        uint64_t full = (uint64_t{1} << support.size()) - 1;
        for (uint64_t mask = 1 ; mask < full ; ++mask) {
            uint64_t xi = yi;
            for (std::size_t b = 0 ; b < support.size() ; ++b)
                if ((mask >> b) & 1)
                    xi -= uint64_t(y[support[b]]) * weight[support[b]];

            auto & x_label = labeling.at_index(xi);
            if (x_label.level == y_label.level && x_label.sign != y_label.sign)
                return BadPair{ domain.decode(xi), y, ((x_label.sign - y_label.sign) % r + r) % r };
        }
    }
    return std::nullopt;
}

namespace
{
    template <typename Pick_>
    auto orbitwise_labeling(int n, int r, Pick_ && pick) -> Labeling
    {
        TuckerDomain domain(n, r);
        vector<TuckerLabel> table(domain.index_count());
        vector<bool> done(domain.index_count(), false);
        for (uint64_t i = 1 ; i < domain.index_count() ; ++i) {
            if (done[i])
                continue;
            auto x = domain.decode(i);
            TuckerLabel base = pick(x);
            for (int j = 0 ; j < r ; ++j) {
                auto image = domain.encode(sv_act(x, j));
                table[image] = base.act(j, r);
                done[image] = true;
            }
        }
        return Labeling(domain, std::move(table));
    }
}

auto homcompat::random_equivariant_labeling(int n, int r, int max_level, uint64_t seed) -> Labeling
{
    if (max_level < 1)
        throw InvalidInput("max_level must be at least 1, got " + std::to_string(max_level));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sign_dist(0, r - 1), level_dist(1, max_level);
    return orbitwise_labeling(n, r, [&] (const SignedVector &) {
            int sign = sign_dist(rng);
            return TuckerLabel{ sign, level_dist(rng) };
            });
}

auto homcompat::support_count_labeling(int n, int r) -> Labeling
{
    return orbitwise_labeling(n, r, [&] (const SignedVector & x) {
            int s = 0;
            while (x[s] == 0)
                ++s;
            return TuckerLabel{ code_exponent(x[s], r), x.nonzero_count() };
            });
}

auto homcompat::to_string(VerdictKind k) -> string
{
    switch (k) {
        case VerdictKind::NoBadPair:        return "NoBadPair";
        case VerdictKind::Case3BadPair:     return "Case3BadPair";
        case VerdictKind::AnomalousBadPair: return "AnomalousBadPair";
    }
    throw InternalError("bad VerdictKind");
}

auto homcompat::refute_or_certify(const TuckerParams & p, uint64_t sweep_cap) -> Verdict
{
    auto labeling = build_lambda(p, TieBreak::EquivariantLex, sweep_cap);

    Verdict verdict;
    verdict.n = p.n;
    verdict.k = p.k;
    verdict.r = p.r;
    verdict.colour_count = p.colour_count();
    verdict.max_level = labeling.max_level();
    verdict.level_cap = p.colour_count() + p.r * (p.k - 1);
    verdict.implied_lower_bound = p.n - p.r * (p.k - 1);

    verdict.bad_pair = find_bad_pair(labeling);
    if (! verdict.bad_pair) {
        verdict.kind = VerdictKind::NoBadPair;
        return verdict;
    }

    auto & [x, y, g] = *verdict.bad_pair;
    auto x_label = labeling.at(x), y_label = labeling.at(y);
    if (x_label.level <= p.r * p.k - 1) {
        verdict.kind = VerdictKind::AnomalousBadPair;
        return verdict;
    }

    // Undo the sign on each side to recover the minimum-colour rotation of
    // each, then re-check everything the certificate claims.
    if (lambda_case(x, p.k) != 3 || lambda_case(y, p.k) != 3)
        throw InternalError("case-3 level on a vector outside case 3");
    auto u_element = binom_tuple(sv_act(x, -x_label.sign), p.k);
    auto v_element = binom_tuple(sv_act(y, -y_label.sign), p.k);
    auto & poset = *p.compat->source;
    auto u = poset.find(u_element), v = poset.find(v_element);
    if (! u || ! v)
        throw InternalError("certificate element missing from the poset");
    if (*u == *v)
        throw InternalError("certificate collapses to a single vertex " + u_element.to_string());
    if (! sv_leq(x, y))
        throw InternalError("bad pair is not ordered");

    bool related = false;
    for (int j = 1 ; j < p.r && ! related ; ++j)
        related = comparable(u_element, shift(v_element, j));
    if (! related || ! p.compat->graph.adjacent(*u, *v))
        throw InternalError("certificate vertices " + u_element.to_string() + " and " + v_element.to_string() + " are not adjacent");

    int cu = p.coloring.colours[*u], cv = p.coloring.colours[*v];
    if (cu != cv || cu != x_label.level - (p.r * p.k - 1))
        throw InternalError("certificate vertices are not equally coloured at the bad-pair level");

    verdict.kind = VerdictKind::Case3BadPair;
    verdict.certificate = MonochromaticEdge{ std::min(*u, *v), std::max(*u, *v),
        *u < *v ? u_element : v_element, *u < *v ? v_element : u_element, cu };
    return verdict;
}
