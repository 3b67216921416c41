// quantale.hpp -- the unital-quantale interface, star as a least fixed point,
// law checking, and the relation-quantale instance.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rtc/errors.hpp"
#include "rtc/laws.hpp"
#include "rtc/relation.hpp"

namespace rtc {

/// A unital quantale over elements of type E, presented by its operations.
/// The order is derived from the join: a <= b iff a v b = b. `enumerate` is
/// set when the carrier is small enough to sweep; `sample` draws random
/// elements for sampled law checks.
template <class E>
struct Quantale {
    std::string name;
    E bottom;
    E unit;
    std::function<E(const E&, const E&)> join;
    std::function<E(const E&, const E&)> multiply;
    std::function<std::string(const E&)> show;
    std::function<std::vector<E>()> enumerate; // null when the carrier is too large
    std::function<E(std::mt19937&)> sample;
    std::size_t star_step_cap = 0;

    bool leq(const E& a, const E& b) const { return join(a, b) == b; }

    E join_all(const std::vector<E>& xs) const {
        E acc = bottom;
        for (const E& x : xs) acc = join(acc, x);
        return acc;
    }
};

/// Least fixed point of S -> unit v (a * S), iterated from bottom. The loop
/// stops exactly when the fixed-point equation holds, which also verifies
/// the postcondition f(a*) = a*. Throws StepCapError if the configured cap
/// is exhausted before stabilization.
template <class E>
E star(const Quantale<E>& q, const E& a) {
    E current = q.bottom;
    for (std::size_t step = 0; step < q.star_step_cap; ++step) {
        E next = q.join(q.unit, q.multiply(a, current));
        if (next == current) return current;
        current = std::move(next);
    }
    throw StepCapError(q.name + ": star iteration did not stabilize within " +
                       std::to_string(q.star_step_cap) + " steps");
}

/// Runs the quantale laws over the full carrier when the triple sweep fits
/// the budget, over random samples otherwise. Each law is reported with a
/// witness on failure.
template <class E>
LawReport check_laws(const Quantale<E>& q, std::size_t sample_budget = 1u << 20,
                     std::uint32_t seed = 20240811) {
    std::vector<E> elems;
    bool exhaustive = false;
    if (q.enumerate) {
        std::vector<E> carrier = q.enumerate();
        const std::size_t c = carrier.size();
        if (c > 0 && c * c * c <= sample_budget) {
            elems = std::move(carrier);
            exhaustive = true;
        }
    }
    if (!exhaustive) {
        std::mt19937 rng(seed);
        // Enough elements that the all-triples loop below stays near budget.
        std::size_t count = 2;
        while ((count + 1) * (count + 1) * (count + 1) <= sample_budget) ++count;
        count = std::min<std::size_t>(count, 64);
        for (std::size_t i = 0; i < count; ++i) elems.push_back(q.sample(rng));
        elems.push_back(q.bottom);
        elems.push_back(q.unit);
    }

    LawReport report;
    auto witness1 = [&](const E& a) { return "a=" + q.show(a); };
    auto witness2 = [&](const E& a, const E& b) { return witness1(a) + " b=" + q.show(b); };
    auto witness3 = [&](const E& a, const E& b, const E& c) {
        return witness2(a, b) + " c=" + q.show(c);
    };

    bool pass = true;
    std::string witness;
    auto run = [&](auto law, std::string name) {
        pass = true;
        witness.clear();
        law();
        report.record(std::move(name), pass, witness);
    };

    run([&] {
        for (const E& a : elems) {
            if (q.join(a, a) == a) continue;
            pass = false;
            witness = witness1(a);
            return;
        }
    }, "join idempotent");
    run([&] {
        for (const E& a : elems)
            for (const E& b : elems) {
                if (q.join(a, b) == q.join(b, a)) continue;
                pass = false;
                witness = witness2(a, b);
                return;
            }
    }, "join commutative");
    run([&] {
        for (const E& a : elems)
            for (const E& b : elems)
                for (const E& c : elems) {
                    if (q.join(q.join(a, b), c) == q.join(a, q.join(b, c))) continue;
                    pass = false;
                    witness = witness3(a, b, c);
                    return;
                }
    }, "join associative");
    run([&] {
        for (const E& a : elems) {
            if (q.join(a, q.bottom) == a) continue;
            pass = false;
            witness = witness1(a);
            return;
        }
    }, "bottom is join unit");
    run([&] {
        for (const E& a : elems)
            for (const E& b : elems)
                for (const E& c : elems) {
                    if (q.multiply(q.multiply(a, b), c) == q.multiply(a, q.multiply(b, c)))
                        continue;
                    pass = false;
                    witness = witness3(a, b, c);
                    return;
                }
    }, "multiply associative");
    run([&] {
        for (const E& a : elems) {
            if (q.multiply(q.unit, a) == a && q.multiply(a, q.unit) == a) continue;
            pass = false;
            witness = witness1(a);
            return;
        }
    }, "unit two-sided");
    run([&] {
        for (const E& a : elems)
            for (const E& b : elems)
                for (const E& c : elems) {
                    if (q.multiply(a, q.join(b, c)) == q.join(q.multiply(a, b), q.multiply(a, c)))
                        continue;
                    pass = false;
                    witness = witness3(a, b, c);
                    return;
                }
    }, "multiply distributes over join (left)");
    run([&] {
        for (const E& a : elems)
            for (const E& b : elems)
                for (const E& c : elems) {
                    if (q.multiply(q.join(a, b), c) == q.join(q.multiply(a, c), q.multiply(b, c)))
                        continue;
                    pass = false;
                    witness = witness3(a, b, c);
                    return;
                }
    }, "multiply distributes over join (right)");
    run([&] {
        // Distribution over the empty join: bottom annihilates.
        for (const E& a : elems) {
            if (q.multiply(a, q.bottom) == q.bottom && q.multiply(q.bottom, a) == q.bottom)
                continue;
            pass = false;
            witness = witness1(a);
            return;
        }
    }, "bottom annihilates");

    return report;
}

/// The three monoid-object inequations for a*: 1 <= a*, a <= a*, a*a* <= a*.
template <class E>
bool check_monoid_object(const Quantale<E>& q, const E& a) {
    const E s = star(q, a);
    return q.leq(q.unit, s) && q.leq(a, s) && q.leq(q.multiply(s, s), s);
}

/// Freeness implication: if 1 v a v bb <= b then a* <= b. Vacuously true
/// when the hypothesis fails.
template <class E>
bool check_freeness(const Quantale<E>& q, const E& a, const E& b) {
    const E hyp = q.join(q.unit, q.join(a, q.multiply(b, b)));
    if (!q.leq(hyp, b)) return true;
    return q.leq(star(q, a), b);
}

/// Binary relations over u under union and composition. The carrier is
/// enumerable while 2^(n^2) stays within 2^16, i.e. n <= 4.
Quantale<Relation> relation_quantale(const Universe& u);

} // namespace rtc
