#include "rtc/quantale.hpp"

namespace rtc {

Quantale<Relation> relation_quantale(const Universe& u) {
    const std::size_t n = u.size();
    Quantale<Relation> q;
    q.name = "relation quantale (|X|=" + std::to_string(n) + ")";
    q.bottom = Relation(u);
    q.unit = Relation::identity(u);
    q.join = [](const Relation& a, const Relation& b) { return union_of(a, b); };
    q.multiply = [](const Relation& a, const Relation& b) { return compose(a, b); };
    q.show = [](const Relation& r) {
        std::string out = "{";
        bool first = true;
        for (const auto& [x, y] : r.pairs()) {
            if (!first) out += ",";
            first = false;
            out += "(" + x + "," + y + ")";
        }
        return out + "}";
    };
    const std::size_t cells = n * n;
    if (cells <= 16) {
        q.enumerate = [u, n, cells]() {
            std::vector<Relation> all;
            all.reserve(std::size_t{1} << cells);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
                Relation r(u);
                for (std::uint64_t c = 0; c < cells; ++c)
                    if ((mask >> c) & 1u) r.add(c / n, c % n);
                all.push_back(std::move(r));
            }
            return all;
        };
    }
    q.sample = [u, n](std::mt19937& rng) {
        std::uniform_real_distribution<double> density(0.0, 1.0);
        std::bernoulli_distribution bit(density(rng));
        Relation r(u);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (bit(rng)) r.add(i, j);
        return r;
    };
    // The chain bottom <= f(bottom) <= ... grows by at least one pair per
    // step, so n^2 + 2 iterations always suffice for a genuine quantale.
    q.star_step_cap = cells + 2;
    return q;
}

} // namespace rtc
