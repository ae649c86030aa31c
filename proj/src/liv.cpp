#include "gapvogel/liv.hpp"

#include <algorithm>
#include <set>

#include "gapvogel/errors.hpp"
#include "gapvogel/ideal_ops.hpp"

namespace gapvogel {

namespace {

bool vanishes_at(const Ideal& Q, const Point& p) {
    for (const Polynomial& g : Q.generators())
        if (g.evaluate(p) != 0) return false;
    return true;
}

std::vector<PrimeComponent> primes_through(const Ideal& I, const Point& p) {
    std::vector<PrimeComponent> out;
    if (I.is_unit() || !vanishes_at(I, p)) return out;
    for (auto& c : minimal_primes(I))
        if (vanishes_at(c.prime, p)) out.push_back(std::move(c));
    return out;
}

std::set<std::string> keys_through(const Ideal& I, const Point& p) {
    std::set<std::string> out;
    for (const auto& c : primes_through(I, p)) out.insert(c.key);
    return out;
}

// Local dimension at p; -1 when p is not in V(I).
int dim_at(const Ideal& I, const Point& p) {
    int d = -1;
    for (const auto& c : primes_through(I, p)) d = std::max(d, c.dim);
    return d;
}

void require_square(const Tuple& f, const Cycle& M) {
    for (const auto& t : M.terms())
        if (t.comp.dim != static_cast<int>(f.size()))
            throw Error(ErrorCode::PreconditionFailed,
                        "every component of M must have dimension equal to the tuple length",
                        t.comp.prime.canonical_strings());
}

// C . V(h) restricted to p; nullopt when the intersection is improper at p.
std::optional<Cycle> dot_at(const Cycle& C, const Polynomial& h, const Point& p, Rng& rng) {
    try {
        return germ(intersect_hypersurface(germ(C, p), h, rng), p);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ImproperIntersection) throw;
        return std::nullopt;
    }
}

bool proper_at(const Cycle& C, const Polynomial& g, const Point& p) {
    const Cycle G = germ(C, p);
    return std::none_of(G.terms().begin(), G.terms().end(),
                        [&](const CycleTerm& t) { return t.comp.prime.contains(g); });
}

VogelTower report_tower(const Tuple& f, const Cycle& M, Rng& rng) {
    TowerOptions opt;
    opt.mode = TowerMode::Report;
    return vogel_tower(f, M, rng, opt);
}

bool sets_agree(const Tuple& h, const Tuple& fg, const Cycle& M, const Point& p) {
    for (const auto& t : M.terms()) {
        const auto& P = t.comp.prime;
        if (keys_through(P.with(h), p) != keys_through(P.with(fg), p)) return false;
    }
    return true;
}

bool dimension_dropped(const Tuple& h, const Tuple& f, const Cycle& M, const Point& p) {
    const Ideal S = support(M);
    const int df = dim_at(S.with(f), p);
    if (df < 1) return true;
    return dim_at(S.with(h), p) == df - 1;
}

Tuple with_entry(Tuple f, const Polynomial& g) {
    f.push_back(g);
    return f;
}

}  // namespace

Point point_of(const Ideal& q) {
    if (auto pt = rational_point(q)) return *pt;
    throw Error(ErrorCode::NonRationalPoint, "the point ideal has no rational point", q.canonical_strings());
}

Ideal point_ideal(const RingPtr& ring, const Point& p) {
    if (p.size() != ring->nvars()) throw Error(ErrorCode::InvalidInput, "point has the wrong number of coordinates");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < p.size(); ++i) gens.push_back(Polynomial::variable(ring, i) - Polynomial(ring, p[i]));
    return Ideal(ring, gens);
}

Cycle germ(const Cycle& C, const Point& p) { return through_point(C, p); }

long multiplicity_at(const Cycle& C, const Point& p) {
    long m = 0;
    const Cycle G = germ(C, p);
    for (const auto& t : G.terms())
        if (t.comp.dim == 0) m += t.mult;
    return m;
}

std::optional<long> local_intersection_number(const Cycle& C, const Polynomial& h, const Point& p) {
    require_same_ring(C.ring(), h.ring());
    long total = 0;
    const Cycle G = germ(C, p);
    for (const auto& t : G.terms()) {
        if (t.comp.dim != 1)
            throw Error(ErrorCode::PreconditionFailed, "cycle is not purely 1-dimensional at the point",
                        t.comp.prime.canonical_strings());
        if (t.comp.prime.contains(h)) return std::nullopt;
        total += t.mult * length_at_point(t.comp.prime.with(h), p);
    }
    return total;
}

GapRatioReport gap_ratios(const VogelTower& tower, const Polynomial& g, const Point& p) {
    if (g.evaluate(p) != 0) throw Error(ErrorCode::PreconditionFailed, "the point is not in V(g)");
    GapRatioReport rep{p, {}, Scalar(0)};
    for (std::size_t l = 0; l < tower.components.size(); ++l) {
        const auto& ct = tower.components[l];
        const auto* L = ct.level(1);
        if (!L) continue;
        const Polynomial& bottom = ct.tuple[static_cast<std::size_t>(std::max(0, ct.k() + 1 - ct.d))];
        const Cycle G = germ(L->pi_hat, p);
        for (const auto& t : G.terms()) {
            if (t.comp.dim != 1)
                throw Error(ErrorCode::PreconditionFailed, "Pi^^1 is not purely 1-dimensional at the point",
                            t.comp.prime.canonical_strings());
            GapRatio r{l, t.comp, length_at_point(t.comp.prime.with(bottom), p), std::nullopt, Scalar(0)};
            if (!t.comp.prime.contains(g)) {
                r.against_g = length_at_point(t.comp.prime.with(g), p);
                r.ratio = Scalar(r.against_f) / Scalar(*r.against_g);
            }
            rep.max_ratio = std::max(rep.max_ratio, r.ratio);
            rep.ratios.push_back(std::move(r));
        }
    }
    return rep;
}

GapRatioReport gap_ratios(const Tuple& f, const Polynomial& g, const Cycle& M, const Point& p, Rng& rng) {
    return gap_ratios(vogel_tower(f, M, rng), g, p);
}

RestrictionReport restriction_check(const Tuple& f, const Polynomial& g, const Cycle& M, const Point& p,
                                    Rng& rng) {
    require_square(f, M);
    RestrictionReport rep;
    const int n = static_cast<int>(f.size()) - 1;
    const Tuple h = with_entry(Tuple(f.begin() + 1, f.end()), g);

    rep.pi1_pure = rep.pi1_proper = true;
    for (const auto& t : M.terms()) {
        for (const auto& c : primes_through(gap_scheme(f, t.comp.prime, t.comp.dim, 1, GapFlavor::Plain), p)) {
            if (c.dim != 1) rep.pi1_pure = false;
            if (c.prime.contains(g)) rep.pi1_proper = false;
        }
    }
    rep.sets_equal = sets_agree(h, with_entry(f, g), M, p);
    rep.part_i_consistent = !rep.pi1_pure || rep.pi1_proper == rep.sets_equal;

    const VogelTower Tf = report_tower(f, M, rng);
    bool d_proper = true;
    for (int i = 1; i <= n + 1; ++i) d_proper = d_proper && proper_at(Tf.delta(i), g, p);
    rep.preconditions = Tf.correct_dimension() && rep.sets_equal && d_proper;
    if (!rep.preconditions) return rep;

    rep.dimension_drops = dimension_dropped(h, f, M, p);
    const VogelTower Th = report_tower(h, M, rng);
    rep.h_defined = Th.correct_dimension();
    rep.pi_hat_identities = rep.delta_identities = true;
    for (int i = 1; i <= n; ++i) {
        auto ph = dot_at(Tf.pi_hat(i + 1), g, p, rng);
        auto dl = dot_at(Tf.delta(i + 1), g, p, rng);
        rep.pi_hat_identities = rep.pi_hat_identities && ph && germ(Th.pi_hat(i), p) == *ph;
        rep.delta_identities = rep.delta_identities && dl && germ(Th.delta(i), p) == *dl;
    }
    auto a = dot_at(Tf.pi_hat(1), g, p, rng);
    auto b = dot_at(Tf.delta(1), g, p, rng);
    rep.delta0_identity = a && b && germ(Th.delta(0), p) == *a + *b;
    return rep;
}

Tuple liv_tuple(const Tuple& f, const Polynomial& g, long a, unsigned j) {
    if (f.empty()) throw Error(ErrorCode::InvalidInput, "tuple must have at least one entry");
    if (a == 0) throw Error(ErrorCode::InvalidInput, "a must be non-zero");
    if (j == 0) throw Error(ErrorCode::InvalidInput, "j must be positive");
    return with_entry(Tuple(f.begin() + 1, f.end()), f[0] + g.pow(j) * Scalar(a));
}

LivReport liv_check(const Tuple& f, const Polynomial& g, const Cycle& M, const Point& p, long a, unsigned j,
                    Rng& rng) {
    require_square(f, M);
    require_valid_m(M);
    const int n = static_cast<int>(f.size()) - 1;
    const RingPtr& R = M.ring();
    LivReport rep{liv_tuple(f, g, a, j), a, j, {}, false, false, false, false, false, false, false, false,
                  false, false, false, Cycle(R), Cycle(R)};
    const Polynomial& hn = rep.h.back();

    const VogelTower Tf = vogel_tower(f, M, rng);
    rep.ratios = gap_ratios(Tf, g, p);
    rep.j_at_least_max = Scalar(j) >= rep.ratios.max_ratio;
    rep.j_above_max = Scalar(j) > rep.ratios.max_ratio;
    long d0max = 0;
    for (const auto& ct : Tf.components)
        if (const auto* L = ct.level(0)) d0max = std::max(d0max, multiplicity_at(L->delta, p));
    rep.sufficient_bound = static_cast<long>(j) >= 1 + d0max;

    rep.g_proper = true;
    for (int i = 1; i <= n + 1; ++i) rep.g_proper = rep.g_proper && proper_at(Tf.delta(i), g, p);

    rep.sets_equal = sets_agree(rep.h, with_entry(f, g), M, p);
    rep.dimension_drops = dimension_dropped(rep.h, f, M, p);
    const VogelTower Th = report_tower(rep.h, M, rng);
    rep.h_defined = Th.correct_dimension();

    const auto d1g = dot_at(Tf.delta(1), g, p, rng);
    rep.delta0_h = germ(Th.delta(0), p);
    if (d1g) {
        rep.delta0_predicted = germ(Tf.delta(0), p) + *d1g * static_cast<long>(j);
        rep.delta0_identity = rep.delta0_h == rep.delta0_predicted;
    }
    rep.higher_identities = true;
    for (int i = 1; i <= n - 1; ++i) {
        auto rhs = dot_at(Tf.delta(i + 1), g, p, rng);
        rep.higher_identities = rep.higher_identities && rhs && germ(Th.delta(i), p) == *rhs * static_cast<long>(j);
    }

    const long sign = M.terms().front().mult > 0 ? 1 : -1;
    const Cycle pi1 = Tf.pi_hat(1) * sign;
    const auto lhs = local_intersection_number(pi1, hn, p);
    rep.pi_hat1_identity = lhs && *lhs == sign * multiplicity_at(Tf.delta(0), p);
    const auto with_f0 = local_intersection_number(pi1, f[0], p);
    const auto with_g = local_intersection_number(pi1, g, p);
    if (lhs) {
        // nullopt stands for an infinite intersection number
        long m = -1;
        if (with_f0) m = *with_f0;
        if (with_g) m = m < 0 ? static_cast<long>(j) * *with_g : std::min(m, static_cast<long>(j) * *with_g);
        rep.min_inequality = m < 0 || *lhs >= m;
    }
    return rep;
}

ReverseEstimate liv_reverse_estimate(const Tuple& f, const Polynomial& g, const Cycle& M, const Point& p, long a,
                                     unsigned j_from, unsigned j_to, Rng& rng) {
    require_square(f, M);
    if (j_from == 0 || j_to < j_from) throw Error(ErrorCode::InvalidInput, "invalid j range");
    ReverseEstimate est;
    const VogelTower Tf = vogel_tower(f, M, rng);
    const auto d1 = local_intersection_number(Tf.delta(1), g, p);
    if (!d1) throw Error(ErrorCode::PreconditionFailed, "V(g) does not properly meet Delta^1 at the point");
    est.delta1_dot_g = *d1;
    est.c = germ(Tf.pi_hat(1), p).size();

    std::size_t matches = 0;
    for (unsigned j = j_from; j <= j_to; ++j) {
        ReverseRow row;
        row.j = j;
        const Tuple h = liv_tuple(f, g, a, j);
        row.sets_equal = sets_agree(h, with_entry(f, g), M, p);
        row.delta0_h = multiplicity_at(report_tower(h, M, rng).delta(0), p);
        if (!est.rows.empty()) row.difference = row.delta0_h - est.rows.back().delta0_h;
        row.pi_hat_term = row.delta0_h - static_cast<long>(j) * est.delta1_dot_g;
        row.bound_certifies = row.sets_equal && static_cast<long>(j) > row.pi_hat_term;
        row.difference_matches = row.difference && *row.difference == est.delta1_dot_g;
        if (row.difference_matches && ++matches > est.c && !est.certified_by_count) est.certified_by_count = j;
        if (row.bound_certifies && !est.certified_by_bound) est.certified_by_bound = j;
        est.rows.push_back(row);
    }
    if (est.certified_by_bound || est.certified_by_count) {
        est.certified_from = std::min(est.certified_by_bound.value_or(j_to + 1), est.certified_by_count.value_or(j_to + 1));
        for (const auto& row : est.rows)
            if (row.j == *est.certified_from) est.delta0_f = row.pi_hat_term;
    }
    return est;
}

bool CylinderReport::holds() const {
    return h_defined && std::all_of(levels.begin(), levels.end(), [](const CylinderLevel& L) { return L.equal; });
}

CylinderReport cylinder_check(const Tuple& f, const Cycle& M, const Point& p, long a, unsigned j, Rng& rng) {
    require_square(f, M);
    if (a == 0 || j == 0) throw Error(ErrorCode::InvalidInput, "a must be non-zero and j positive");
    const RingPtr& R = M.ring();
    const RingPtr R2 = R->extended({"t"});
    const Polynomial t = Polynomial::variable(R2, R->nvars());
    auto lift = [&](const Cycle& C) {
        Cycle out(R2);
        for (const auto& term : C.terms())
            out.add(PrimeComponent(term.comp.prime.in_ring(R2), term.comp.dim + 1), term.mult);
        return out;
    };
    Tuple fl;
    for (const auto& q : f) fl.push_back(q.in_ring(R2));
    const Polynomial tj = t.pow(j);
    const Polynomial last = fl[0] + tj * Scalar(a);
    Tuple h{tj};
    h.insert(h.end(), fl.begin() + 1, fl.end());
    h.push_back(last);

    Point q = p;
    q.push_back(Scalar(0));
    const VogelTower Tf = vogel_tower(f, M, rng);
    const VogelTower Th = report_tower(h, lift(M), rng);
    CylinderReport rep{R2, h, {}, Th.correct_dimension()};
    const int n = static_cast<int>(f.size()) - 1;
    for (int i = n + 1; i >= 0; --i) {
        CylinderLevel L{i, germ(Th.pi_hat(i), q), Cycle(R2), false};
        if (auto rhs = dot_at(lift(Tf.pi_hat(i)), last, q, rng)) {
            L.rhs = *rhs;
            L.equal = L.lhs == L.rhs;
        }
        rep.levels.push_back(std::move(L));
    }
    return rep;
}

}  // namespace gapvogel
