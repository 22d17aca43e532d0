#include "coprime/difference_analysis.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace coprime {

bool KindFilter::matches(const DifferenceEntry& e) const {
    if (enabled[static_cast<std::size_t>(e.kind)]) return true;
    // A diagonal (i,i) entry is stored once but belongs to the positive and
    // the negative self set of its side alike.
    if (e.is_self_diagonal()) {
        const DiffKind mirror = (e.kind == DiffKind::SelfMPos)   ? DiffKind::SelfMNeg
                                : (e.kind == DiffKind::SelfMNeg) ? DiffKind::SelfMPos
                                : (e.kind == DiffKind::SelfNPos) ? DiffKind::SelfNNeg
                                                                 : DiffKind::SelfNPos;
        return enabled[static_cast<std::size_t>(mirror)];
    }
    return false;
}

DifferenceSet self_differences(const PerturbedGrid& grid, SamplerSide side) {
    const auto& t = side == SamplerSide::MSide ? grid.t1 : grid.t2;
    const DiffKind pos = side == SamplerSide::MSide ? DiffKind::SelfMPos : DiffKind::SelfNPos;
    const DiffKind neg = side == SamplerSide::MSide ? DiffKind::SelfMNeg : DiffKind::SelfNNeg;

    DifferenceSet set;
    set.config = grid.config;
    const std::int64_t count = std::ssize(t);
    set.entries.reserve(static_cast<std::size_t>(count * count));
    for (std::int32_t i = 0; i < count; ++i) {
        for (std::int32_t j = 0; j < count; ++j) {
            const DiffKind kind = i >= j ? pos : neg; // diagonal stored under pos
            set.entries.push_back({t[static_cast<std::size_t>(i)] -
                                       t[static_cast<std::size_t>(j)],
                                   kind, i, j});
        }
    }
    return set;
}

DifferenceSet cross_differences(const PerturbedGrid& grid) {
    DifferenceSet set;
    set.config = grid.config;
    const std::int64_t rN = grid.config.samples1();
    const std::int64_t rM = grid.config.samples2();
    set.entries.reserve(static_cast<std::size_t>(2 * rN * rM));
    for (std::int32_t n = 0; n < rN; ++n)
        for (std::int32_t m = 0; m < rM; ++m)
            set.entries.push_back({grid.t1[static_cast<std::size_t>(n)] -
                                       grid.t2[static_cast<std::size_t>(m)],
                                   DiffKind::CrossPos, n, m});
    for (std::int32_t n = 0; n < rN; ++n)
        for (std::int32_t m = 0; m < rM; ++m)
            set.entries.push_back({grid.t2[static_cast<std::size_t>(m)] -
                                       grid.t1[static_cast<std::size_t>(n)],
                                   DiffKind::CrossNeg, n, m});
    return set;
}

std::vector<Rational> distinct_values(const DifferenceSet& set, const KindFilter& filter) {
    std::vector<Rational> values;
    values.reserve(set.entries.size());
    for (const auto& e : set.entries)
        if (filter.matches(e)) values.push_back(e.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::int64_t distinct_count(const DifferenceSet& set, const KindFilter& filter) {
    return std::ssize(distinct_values(set, filter));
}

const char* to_string(GenericityCondition c) {
    switch (c) {
    case GenericityCondition::Delta1Band: return "delta1_band";
    case GenericityCondition::Delta2Band: return "delta2_band";
    case GenericityCondition::SelfBandOverlap: return "self_band_overlap";
    case GenericityCondition::CrossPairCollision: return "cross_pair_collision";
    case GenericityCondition::CrossNegationCollision: return "cross_negation_collision";
    case GenericityCondition::SelfCrossCollision: return "self_cross_collision";
    }
    return "?";
}

namespace {

using Violations = std::vector<GenericityViolation>;

// Duplicate Delta values within one fixed index offset l: two pairs in the
// same band would generate the same self difference M*l + Delta.
void scan_band_uniqueness(const std::vector<Rational>& eps, GenericityCondition cond,
                          Violations& out) {
    const std::int64_t count = std::ssize(eps);
    for (std::int64_t l = 1; l < count; ++l) {
        std::vector<std::pair<Rational, std::int32_t>> deltas; // (eps[i+l]-eps[i], i)
        deltas.reserve(static_cast<std::size_t>(count - l));
        for (std::int64_t i = 0; i + l < count; ++i)
            deltas.emplace_back(eps[static_cast<std::size_t>(i + l)] -
                                    eps[static_cast<std::size_t>(i)],
                                static_cast<std::int32_t>(i));
        std::sort(deltas.begin(), deltas.end());
        for (std::size_t a = 0; a + 1 < deltas.size(); ++a) {
            for (std::size_t b = a + 1; b < deltas.size() && deltas[b].first == deltas[a].first;
                 ++b) {
                const std::int32_t i = deltas[a].second, j = deltas[b].second;
                out.push_back({cond,
                               {static_cast<std::int32_t>(i + l), i,
                                static_cast<std::int32_t>(j + l), j}});
            }
        }
    }
}

struct CrossTuple {
    std::int32_t n;
    std::int32_t m;
    Rational delta12;    // eps2(m) - eps1(n)
    std::int64_t ideal;  // M*n - N*m
};

} // namespace

std::vector<GenericityViolation> check_genericity(const JitterRealization& jitter,
                                                  const CoprimeConfig& config,
                                                  GenericityMode mode) {
    Violations out;
    const std::int64_t rN = config.samples1();
    const std::int64_t rM = config.samples2();
    const auto& e1 = jitter.eps1;
    const auto& e2 = jitter.eps2;
    auto delta1 = [&](std::int64_t a, std::int64_t b) {
        return e1[static_cast<std::size_t>(a)] - e1[static_cast<std::size_t>(b)];
    };
    auto delta2 = [&](std::int64_t a, std::int64_t b) {
        return e2[static_cast<std::size_t>(a)] - e2[static_cast<std::size_t>(b)];
    };

    scan_band_uniqueness(e1, GenericityCondition::Delta1Band, out);
    scan_band_uniqueness(e2, GenericityCondition::Delta2Band, out);

    // Bands of the two self matrices meet at equal ideal lags M*l1 = N*l2,
    // i.e. l1 = N*j, l2 = M*j.
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t l1 = config.N * j, l2 = config.M * j;
        if (l1 > rN - 1 || l2 > rM - 1) break;
        for (std::int64_t a = 0; a + l1 < rN; ++a)
            for (std::int64_t b = 0; b + l2 < rM; ++b)
                if (delta1(a + l1, a) == delta2(b + l2, b))
                    out.push_back({GenericityCondition::SelfBandOverlap,
                                   {static_cast<std::int32_t>(a + l1), static_cast<std::int32_t>(a),
                                    static_cast<std::int32_t>(b + l2),
                                    static_cast<std::int32_t>(b)}});
    }

    std::vector<CrossTuple> tuples;
    tuples.reserve(static_cast<std::size_t>(rN * rM));
    for (std::int32_t n = 0; n < rN; ++n)
        for (std::int32_t m = 0; m < rM; ++m)
            tuples.push_back({n, m,
                              e2[static_cast<std::size_t>(m)] - e1[static_cast<std::size_t>(n)],
                              config.M * n - config.N * m});

    const bool restrict_ratio = mode == GenericityMode::Necessary;

    // Delta12(t1) = Delta12(t2): collapses two CrossPos values whenever the
    // ideal parts agree; the sufficient form forbids it everywhere.
    {
        std::map<std::int64_t, std::vector<const CrossTuple*>> groups;
        if (restrict_ratio) {
            for (const auto& t : tuples) groups[t.ideal].push_back(&t);
        } else {
            for (const auto& t : tuples) groups[0].push_back(&t);
        }
        for (auto& [ideal, group] : groups) {
            for (std::size_t a = 0; a < group.size(); ++a)
                for (std::size_t b = a + 1; b < group.size(); ++b)
                    if (group[a]->delta12 == group[b]->delta12)
                        out.push_back({GenericityCondition::CrossPairCollision,
                                       {group[a]->n, group[a]->m, group[b]->n, group[b]->m}});
        }
    }

    // Delta12(t1) = -Delta12(t2) (t1 = t2 allowed: Delta12 = 0): collapses a
    // CrossPos value with a CrossNeg value when the ideal parts are opposite.
    {
        auto admissible = [&](const CrossTuple& a, const CrossTuple& b) {
            return !restrict_ratio || a.ideal == -b.ideal;
        };
        for (std::size_t a = 0; a < tuples.size(); ++a)
            for (std::size_t b = a; b < tuples.size(); ++b)
                if (admissible(tuples[a], tuples[b]) &&
                    tuples[a].delta12 == -tuples[b].delta12)
                    out.push_back({GenericityCondition::CrossNegationCollision,
                                   {tuples[a].n, tuples[a].m, tuples[b].n, tuples[b].m}});
    }

    // Self value M(n1-n2) + Delta1 equals cross value Mn - Nm - Delta12 only
    // when the ideal parts match exactly (|Delta| < 1/2 both sides), so scan
    // per ideal value. Diagonal self pairs are excluded: the 0-lag overlap is
    // already covered by the CrossNegationCollision scan above.
    {
        std::map<std::int64_t, std::vector<const CrossTuple*>> by_ideal;
        for (const auto& t : tuples) by_ideal[t.ideal].push_back(&t);
        for (std::int32_t n1 = 0; n1 < rN; ++n1)
            for (std::int32_t n2 = 0; n2 < rN; ++n2) {
                if (n1 == n2) continue;
                auto it = by_ideal.find(config.M * (n1 - n2));
                if (it == by_ideal.end()) continue;
                const Rational d1 = delta1(n1, n2);
                for (const CrossTuple* t : it->second)
                    if (d1 == -t->delta12)
                        out.push_back({GenericityCondition::SelfCrossCollision,
                                       {n1, n2, t->n, t->m},
                                       SamplerSide::MSide});
            }
        for (std::int32_t m1 = 0; m1 < rM; ++m1)
            for (std::int32_t m2 = 0; m2 < rM; ++m2) {
                if (m1 == m2) continue;
                auto it = by_ideal.find(config.N * (m1 - m2));
                if (it == by_ideal.end()) continue;
                const Rational d2 = delta2(m1, m2);
                for (const CrossTuple* t : it->second)
                    if (d2 == -t->delta12)
                        out.push_back({GenericityCondition::SelfCrossCollision,
                                       {m1, m2, t->n, t->m},
                                       SamplerSide::NSide});
            }
    }

    std::sort(out.begin(), out.end(), [](const GenericityViolation& a, const GenericityViolation& b) {
        return std::tie(a.condition, a.indices, a.self_side) <
               std::tie(b.condition, b.indices, b.self_side);
    });
    return out;
}

std::int64_t prop1_expected(const CoprimeConfig& config, int claim_id) {
    const std::int64_t rN = config.samples1();
    const std::int64_t rM = config.samples2();
    switch (claim_id) {
    case 1: return rN * (rN - 1) / 2 + 1;
    case 2: return rM * (rM - 1) / 2 + 1;
    case 3: return rM * (rM - 1) / 2 + rN * (rN - 1) / 2 + 1;
    case 4: return rM * (rM - 1) + rN * (rN - 1) + 1;
    case 5: return config.r * config.r * config.M * config.N;
    case 6: return 2 * config.r * config.r * config.M * config.N;
    case 7: return 0; // |L_S cap L_C|
    case 8: return (rM + rN) * (rM + rN - 1) + 1;
    default: throw std::out_of_range("claim_id must be in 1..8");
    }
}

namespace {

// First two entries of every value group whose size exceeds the expected
// multiplicity (only the all-diagonal zero group is legitimately repeated).
void collect_collision_witnesses(const DifferenceSet& set, const KindFilter& filter, int claim_id,
                                 std::vector<CollisionWitness>& out) {
    std::vector<const DifferenceEntry*> entries;
    for (const auto& e : set.entries)
        if (filter.matches(e)) entries.push_back(&e);
    std::sort(entries.begin(), entries.end(), [](const DifferenceEntry* a, const DifferenceEntry* b) {
        return std::tie(a->value, a->kind, a->idx_a, a->idx_b) <
               std::tie(b->value, b->kind, b->idx_a, b->idx_b);
    });
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j]->value == entries[i]->value) ++j;
        const DifferenceEntry* first_bad = nullptr;
        const DifferenceEntry* second_bad = nullptr;
        if (entries[i]->value.is_zero()) {
            // Zero may repeat, but only via diagonal pairs.
            for (std::size_t k = i; k < j; ++k) {
                if (!entries[k]->is_self_diagonal()) {
                    if (!first_bad) {
                        first_bad = entries[k];
                        second_bad = entries[i]; // collides with the shared diagonal zero
                    } else {
                        second_bad = entries[k];
                        break;
                    }
                }
            }
        } else if (j - i >= 2) {
            first_bad = entries[i];
            second_bad = entries[i + 1];
        }
        if (first_bad && second_bad && first_bad != second_bad)
            out.push_back({claim_id, *first_bad, *second_bad});
        i = j;
    }
}

} // namespace

Prop1Report verify_proposition1(const CoprimeConfig& config, const JitterRealization& jitter) {
    const PerturbedGrid grid = build_grid(config, jitter);

    DifferenceSet all;
    all.config = config;
    {
        DifferenceSet sm = self_differences(grid, SamplerSide::MSide);
        DifferenceSet sn = self_differences(grid, SamplerSide::NSide);
        DifferenceSet cr = cross_differences(grid);
        all.entries.reserve(sm.entries.size() + sn.entries.size() + cr.entries.size());
        all.entries.insert(all.entries.end(), sm.entries.begin(), sm.entries.end());
        all.entries.insert(all.entries.end(), sn.entries.begin(), sn.entries.end());
        all.entries.insert(all.entries.end(), cr.entries.begin(), cr.entries.end());
    }

    Prop1Report report;
    auto record = [&](int id, std::int64_t observed, bool holds) {
        report.claims[static_cast<std::size_t>(id - 1)] = {id, prop1_expected(config, id),
                                                           observed, holds};
    };

    struct PairedClaim {
        int id;
        KindFilter pos;
        KindFilter neg;
    };
    const PairedClaim paired[] = {
        {1, KindFilter::self_m_pos(), KindFilter::self_m_neg()},
        {2, KindFilter::self_n_pos(), KindFilter::self_n_neg()},
        {3, KindFilter::self_pos(), KindFilter::self_neg()},
        {5, KindFilter::cross_pos(), KindFilter::cross_neg()},
    };
    for (const auto& claim : paired) {
        const std::int64_t expected = prop1_expected(config, claim.id);
        const std::int64_t obs_pos = distinct_count(all, claim.pos);
        const std::int64_t obs_neg = distinct_count(all, claim.neg);
        record(claim.id, obs_pos, obs_pos == expected && obs_neg == expected);
        if (obs_pos != expected)
            collect_collision_witnesses(all, claim.pos, claim.id, report.violations);
        if (obs_neg != expected)
            collect_collision_witnesses(all, claim.neg, claim.id, report.violations);
    }

    const std::int64_t obs4 = distinct_count(all, KindFilter::self_all());
    record(4, obs4, obs4 == prop1_expected(config, 4));
    if (!report.claims[3].holds)
        collect_collision_witnesses(all, KindFilter::self_all(), 4, report.violations);

    const std::int64_t obs6 = distinct_count(all, KindFilter::cross_all());
    record(6, obs6, obs6 == prop1_expected(config, 6));
    if (!report.claims[5].holds)
        collect_collision_witnesses(all, KindFilter::cross_all(), 6, report.violations);

    // Claim 7: exact intersection of the self and cross value sets.
    {
        const auto self_vals = distinct_values(all, KindFilter::self_all());
        const auto cross_vals = distinct_values(all, KindFilter::cross_all());
        std::vector<Rational> common;
        std::set_intersection(self_vals.begin(), self_vals.end(), cross_vals.begin(),
                              cross_vals.end(), std::back_inserter(common));
        record(7, std::ssize(common), common.empty());
        if (!common.empty()) {
            for (const auto& v : common) {
                const DifferenceEntry* self_hit = nullptr;
                const DifferenceEntry* cross_hit = nullptr;
                for (const auto& e : all.entries) {
                    if (e.value != v) continue;
                    const bool is_cross =
                        e.kind == DiffKind::CrossPos || e.kind == DiffKind::CrossNeg;
                    if (is_cross && !cross_hit) cross_hit = &e;
                    if (!is_cross && !self_hit) self_hit = &e;
                    if (self_hit && cross_hit) break;
                }
                report.violations.push_back({7, *self_hit, *cross_hit});
            }
        }
    }

    // Claim 8 needs no witnesses of its own: any collision inside L shows up
    // under claim 4 (self), claim 6 (cross) or claim 7 (self vs cross).
    const std::int64_t obs8 = distinct_count(all, KindFilter::all());
    record(8, obs8, obs8 == prop1_expected(config, 8));

    return report;
}

} // namespace coprime
