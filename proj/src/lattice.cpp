#include "rtc/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtc {

namespace {

void require_member_universe(const Universe& u, const std::vector<Subset>& subsets) {
    for (const auto& s : subsets)
        if (!(s.universe() == u))
            throw UniverseMismatchError("moore family member built over a different universe");
}

std::uint64_t mask_of(const Subset& s) { return s.bits().low_word(); }

} // namespace

MooreFamily::MooreFamily(Universe u, std::vector<Subset> subsets)
    : universe(std::move(u)), members(std::move(subsets)) {
    require_member_universe(universe, members);
    std::sort(members.begin(), members.end(),
              [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool MooreFamily::contains(const Subset& s) const {
    return std::binary_search(members.begin(), members.end(), s,
                              [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });
}

bool is_closure_operator(const ClosureTable& c) {
    const std::size_t n = c.universe.size();
    if (n > bounds::closure_table_max)
        throw SizeGuardError("is_closure_operator", bounds::closure_table_max, n);

    // Tabulate once; the law checks then run on plain masks.
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> table(count);
    for (std::uint64_t m = 0; m < count; ++m)
        table[m] = mask_of(c.op(Subset(c.universe, BitVec::from_mask(n, m))));

    for (std::uint64_t m = 0; m < count; ++m) {
        if ((m & table[m]) != m) return false;            // inflationary
        if (table[table[m]] != table[m]) return false;    // idempotent
    }
    // Monotonicity over all pairs a <= b, via submask enumeration.
    for (std::uint64_t b = 0; b < count; ++b) {
        std::uint64_t a = b;
        while (true) {
            if ((table[a] & ~table[b]) != 0) return false;
            if (a == 0) break;
            a = (a - 1) & b;
        }
    }
    return true;
}

bool is_moore_family(const MooreFamily& f) {
    if (!f.contains(Subset::full(f.universe))) return false;
    for (std::size_t i = 0; i < f.members.size(); ++i)
        for (std::size_t j = i + 1; j < f.members.size(); ++j)
            if (!f.contains(intersect(f.members[i], f.members[j]))) return false;
    return true;
}

Subset closure_from_family(const MooreFamily& f, const Subset& a) {
    if (!(a.universe() == f.universe))
        throw UniverseMismatchError("closure_from_family: universes differ");
    if (!is_moore_family(f))
        throw std::invalid_argument("closure_from_family: not a Moore family");

    Subset acc = Subset::full(f.universe);
    for (const auto& m : f.members)
        if (is_subset(a, m)) acc = intersect(acc, m);
    return acc;
}

MooreFamily family_from_closure(const ClosureTable& c) {
    const std::size_t n = c.universe.size();
    if (n > bounds::closure_table_max)
        throw SizeGuardError("family_from_closure", bounds::closure_table_max, n);

    std::vector<Subset> fixed;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Subset a(c.universe, BitVec::from_mask(n, m));
        if (c.op(a) == a) fixed.push_back(std::move(a));
    }
    return MooreFamily(c.universe, std::move(fixed));
}

ClosureTable closure_from_family_as_table(const MooreFamily& f) {
    if (!is_moore_family(f))
        throw std::invalid_argument("closure_from_family_as_table: not a Moore family");
    return ClosureTable{f.universe, [f](const Subset& a) { return closure_from_family(f, a); }};
}

MooreFamily transitive_family(const Universe& u) {
    const std::size_t n = u.size();
    if (n > bounds::transitive_family_max)
        throw SizeGuardError("transitive_family", bounds::transitive_family_max, n);

    const Universe sq = square_universe(u);
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
    std::vector<Subset> members;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        Relation s(u);
        for (std::uint64_t c = 0; c < cells; ++c)
            if ((mask >> c) & 1u) s.add(c / n, c % n);
        if (is_transitive(s)) members.emplace_back(sq, BitVec::from_mask(cells, mask));
    }
    return MooreFamily(sq, std::move(members));
}

Subset least_fixed_point(const SubsetMap& f, const Universe& u) {
    Subset current(u);
    // A strictly growing chain of subsets has at most |u|+1 stages.
    for (std::size_t step = 0; step <= u.size() + 1; ++step) {
        Subset next = f(current);
        if (!is_subset(current, next))
            throw std::invalid_argument(
                "least_fixed_point: iterate shrank, the map is not monotone");
        if (next == current) return current;
        current = std::move(next);
    }
    throw std::logic_error("least_fixed_point: chain exceeded the lattice height");
}

bool is_monotone(const SubsetMap& f, const Universe& u) {
    const std::size_t n = u.size();
    if (n > bounds::closure_table_max)
        throw SizeGuardError("is_monotone", bounds::closure_table_max, n);

    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> table(count);
    for (std::uint64_t m = 0; m < count; ++m)
        table[m] = mask_of(f(Subset(u, BitVec::from_mask(n, m))));

    for (std::uint64_t b = 0; b < count; ++b) {
        std::uint64_t a = b;
        while (true) {
            if ((table[a] & ~table[b]) != 0) return false;
            if (a == 0) break;
            a = (a - 1) & b;
        }
    }
    return true;
}

Universe square_universe(const Universe& u) {
    std::vector<std::string> labels;
    labels.reserve(u.size() * u.size());
    for (const auto& x : u.labels())
        for (const auto& y : u.labels()) labels.push_back("(" + x + "," + y + ")");
    return Universe(std::move(labels));
}

Subset relation_to_subset(const Relation& r) {
    const std::size_t n = r.size();
    Subset s(square_universe(r.universe()));
    for (std::size_t i = 0; i < n; ++i)
        r.row(i).for_each_set([&](std::size_t j) { s.add(i * n + j); });
    return s;
}

Relation subset_to_relation(const Universe& x_universe, const Subset& s) {
    const std::size_t n = x_universe.size();
    if (!(s.universe() == square_universe(x_universe)))
        throw UniverseMismatchError("subset_to_relation: subset is not over the square universe");
    Relation r(x_universe);
    s.bits().for_each_set([&](std::size_t c) { r.add(c / n, c % n); });
    return r;
}

SubsetMap closure_step_map(const Relation& r) {
    const Universe u = r.universe();
    return [r, u](const Subset& s) {
        const Relation current = subset_to_relation(u, s);
        return relation_to_subset(union_of(Relation::identity(u), compose(r, current)));
    };
}

void for_each_subset(const Universe& u, const std::function<void(const Subset&)>& fn) {
    const std::size_t n = u.size();
    if (n > 20) throw SizeGuardError("for_each_subset", 20, n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        fn(Subset(u, BitVec::from_mask(n, m)));
}

} // namespace rtc
