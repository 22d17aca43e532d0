#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coprime/core_model.hpp"

namespace coprime {

enum class DiffKind : std::uint8_t {
    SelfMPos, // t1[i] - t1[j], i > j (diagonal i == j stored here, shared with SelfMNeg)
    SelfMNeg, // t1[i] - t1[j], i < j
    SelfNPos,
    SelfNNeg,
    CrossPos, // t1[n] - t2[m]
    CrossNeg, // t2[m] - t1[n]
};

enum class SamplerSide { MSide, NSide };

/// One pairwise difference with its generating indices: (n1,n2) or (m1,m2)
/// for self kinds, (n,m) for cross kinds.
struct DifferenceEntry {
    Rational value;
    DiffKind kind;
    std::int32_t idx_a = 0;
    std::int32_t idx_b = 0;

    bool is_self_diagonal() const {
        return kind != DiffKind::CrossPos && kind != DiffKind::CrossNeg && idx_a == idx_b;
    }
};

struct DifferenceSet {
    CoprimeConfig config;
    std::vector<DifferenceEntry> entries;
};

/// Selects entries by kind. A self diagonal entry (value 0, stored once per
/// (i,i) pair) belongs to both the positive and negative set of its side.
struct KindFilter {
    std::array<bool, 6> enabled{};

    static KindFilter of(std::initializer_list<DiffKind> kinds) {
        KindFilter f;
        for (DiffKind k : kinds) f.enabled[static_cast<std::size_t>(k)] = true;
        return f;
    }
    static KindFilter self_m_pos() { return of({DiffKind::SelfMPos}); }
    static KindFilter self_m_neg() { return of({DiffKind::SelfMNeg}); }
    static KindFilter self_n_pos() { return of({DiffKind::SelfNPos}); }
    static KindFilter self_n_neg() { return of({DiffKind::SelfNNeg}); }
    static KindFilter self_pos() { return of({DiffKind::SelfMPos, DiffKind::SelfNPos}); }
    static KindFilter self_neg() { return of({DiffKind::SelfMNeg, DiffKind::SelfNNeg}); }
    static KindFilter self_all() {
        return of({DiffKind::SelfMPos, DiffKind::SelfMNeg, DiffKind::SelfNPos, DiffKind::SelfNNeg});
    }
    static KindFilter cross_pos() { return of({DiffKind::CrossPos}); }
    static KindFilter cross_neg() { return of({DiffKind::CrossNeg}); }
    static KindFilter cross_all() { return of({DiffKind::CrossPos, DiffKind::CrossNeg}); }
    static KindFilter all() {
        KindFilter f;
        f.enabled.fill(true);
        return f;
    }

    bool matches(const DifferenceEntry& e) const;
};

/// All (rK)^2 ordered pairs of one sub-sampler, positive/negative kind by
/// sign of idx_a - idx_b; each diagonal pair stored once with value 0.
DifferenceSet self_differences(const PerturbedGrid& grid, SamplerSide side);

/// r^2*MN CrossPos entries t1[n]-t2[m] plus their r^2*MN CrossNeg negations.
DifferenceSet cross_differences(const PerturbedGrid& grid);

/// Number of distinct exact values among entries matching the filter.
std::int64_t distinct_count(const DifferenceSet& set, const KindFilter& filter);

/// Sorted distinct values matching the filter.
std::vector<Rational> distinct_values(const DifferenceSet& set, const KindFilter& filter);

enum class GenericityMode { Sufficient, Necessary };

/// Jitter uniqueness conditions, named by the collision they forbid. The
/// sufficient set is complete: if none fires, every distinct-count claim
/// holds (see verify_proposition1). The necessary variants restrict the
/// cross-pair scans to the index tuples where a collision is arithmetically
/// possible at all, i.e. (m1-m2)/(n1-n2) = M/N resp. (m1+m2)/(n1+n2) = M/N.
enum class GenericityCondition : std::uint8_t {
    Delta1Band,             // Delta1(n1,n2) repeated within a band n1-n2 = l
    Delta2Band,             // Delta2(m1,m2) repeated within a band m1-m2 = l
    SelfBandOverlap,        // Delta1 value meets Delta2 value where M*l1 = N*l2
    CrossPairCollision,     // Delta12(n1,m1) = Delta12(n2,m2)
    CrossNegationCollision, // Delta12(n1,m1) = -Delta12(n2,m2) (incl. Delta12 = 0)
    SelfCrossCollision,     // self difference value falls into the cross set
};

const char* to_string(GenericityCondition c);

struct GenericityViolation {
    GenericityCondition condition;
    /// Index semantics per condition:
    ///   Delta1Band:             {n1, n2, n3, n4}   Delta1(n1,n2) == Delta1(n3,n4)
    ///   Delta2Band:             {m1, m2, m3, m4}   Delta2(m1,m2) == Delta2(m3,m4)
    ///   SelfBandOverlap:        {n1, n2, m1, m2}   Delta1(n1,n2) == Delta2(m1,m2)
    ///   CrossPairCollision:     {n1, m1, n2, m2}
    ///   CrossNegationCollision: {n1, m1, n2, m2}
    ///   SelfCrossCollision:     {i, j, n, m}       self pair (i,j) vs cross pair (n,m)
    std::array<std::int32_t, 4> indices{};
    /// SelfCrossCollision distinguishes which self side collided.
    SamplerSide self_side = SamplerSide::MSide;

    friend bool operator==(const GenericityViolation&, const GenericityViolation&) = default;
};

/// Scans the jitter realization for collisions. Empty result in Sufficient
/// mode guarantees all 8 claims of verify_proposition1 hold; a violation in
/// Necessary mode pinpoints a claim that actually fails. Violations are
/// sorted by (condition, indices).
std::vector<GenericityViolation> check_genericity(const JitterRealization& jitter,
                                                  const CoprimeConfig& config,
                                                  GenericityMode mode);

struct ClaimRecord {
    int id = 0;                // 1..8
    std::int64_t expected = 0; // closed-form count (claim 7: expected intersection 0)
    std::int64_t observed = 0; // enumerated count (claim 7: |L_S cap L_C|)
    bool holds = false;
};

/// A pair of entries witnessing an unexpected value collision.
struct CollisionWitness {
    int claim_id = 0;
    DifferenceEntry a;
    DifferenceEntry b;
};

struct Prop1Report {
    std::array<ClaimRecord, 8> claims{};
    std::vector<CollisionWitness> violations;

    bool all_hold() const {
        for (const auto& c : claims)
            if (!c.holds) return false;
        return true;
    }
};

/// Enumerates the self, cross and combined difference sets and compares
/// distinct counts against the closed forms (claims 1-6, 8); claim 7 checks
/// L_S cap L_C = {} by exact intersection. Witness pairs are attached for every failed claim.
Prop1Report verify_proposition1(const CoprimeConfig& config, const JitterRealization& jitter);

/// Closed-form expected counts, claim_id in 1..8 (claim 7 returns 0).
std::int64_t prop1_expected(const CoprimeConfig& config, int claim_id);

} // namespace coprime
