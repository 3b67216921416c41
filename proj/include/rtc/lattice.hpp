// lattice.hpp -- closure operators on finite powersets, Moore families, their
// correspondence, and least fixed points of monotone subset maps.

#pragma once

#include <functional>
#include <vector>

#include "rtc/relation.hpp"

namespace rtc {

/// A monotone (or candidate) operator on subsets of a fixed universe.
using SubsetMap = std::function<Subset(const Subset&)>;

/// Collection of subsets intended to be closed under intersection. Members
/// are kept deduplicated and sorted so families compare structurally.
struct MooreFamily {
    Universe universe;
    std::vector<Subset> members;

    MooreFamily() = default;
    MooreFamily(Universe u, std::vector<Subset> subsets);

    bool contains(const Subset& s) const;

    bool operator==(const MooreFamily&) const = default;
};

/// A subset operator presented as a callable over a fixed universe. Law
/// checks enumerate the powerset, so they are guarded by a size bound.
struct ClosureTable {
    Universe universe;
    SubsetMap op;
};

namespace bounds {
inline constexpr std::size_t closure_table_max = 10;
inline constexpr std::size_t transitive_family_max = 3;
} // namespace bounds

/// Inflationary, idempotent and monotone over every subset (pair of subsets
/// for monotonicity). Exhaustive; universe capped at 10 elements.
bool is_closure_operator(const ClosureTable& c);

/// Closed under pairwise intersection and contains the full set, which for a
/// finite family is equivalent to closure under arbitrary intersections
/// (the empty intersection being the full set).
bool is_moore_family(const MooreFamily& f);

/// Smallest member containing a. Throws if f is not a Moore family.
Subset closure_from_family(const MooreFamily& f, const Subset& a);

/// The fixed points of c, which form a Moore family when c is a closure
/// operator. Universe capped at 10 elements.
MooreFamily family_from_closure(const ClosureTable& c);

/// The operator sending a to the smallest member of f containing it.
ClosureTable closure_from_family_as_table(const MooreFamily& f);

/// All transitive relations over u, as subsets of the square universe.
/// |u| is capped at 3 (the family has 2^(n^2) candidates).
MooreFamily transitive_family(const Universe& u);

/// Kleene iteration from the empty set. Throws std::invalid_argument when an
/// iterate fails to grow, which exposes a non-monotone map; a prior
/// exhaustive check is not required.
Subset least_fixed_point(const SubsetMap& f, const Universe& u);

/// A <= B implies f(A) <= f(B), over all pairs. Universe capped at 10.
bool is_monotone(const SubsetMap& f, const Universe& u);

/// Universe of all ordered pairs "(x,y)" over u; pair (i,j) has index i*n+j.
Universe square_universe(const Universe& u);

/// A relation as a subset of the square universe of its own universe.
Subset relation_to_subset(const Relation& r);

/// Inverse of relation_to_subset; s must live on square_universe(x_universe).
Relation subset_to_relation(const Universe& x_universe, const Subset& s);

/// The map S -> identity + R;S on the square universe of r's universe. Its
/// least fixed point is the reflexive-transitive closure of r.
SubsetMap closure_step_map(const Relation& r);

/// Enumerates all subsets of u (by mask order) and applies fn to each.
/// Guarded at 20 elements.
void for_each_subset(const Universe& u, const std::function<void(const Subset&)>& fn);

} // namespace rtc
