#include "rtc/relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace rtc {

namespace {

void require_same_universe(const Universe& a, const Universe& b, const char* op) {
    if (!(a == b)) throw UniverseMismatchError(std::string(op) + ": universes differ");
}

} // namespace

Universe::Universe(std::vector<std::string> labels) {
    auto data = std::make_shared<Data>();
    data->labels = std::move(labels);
    data->index.reserve(data->labels.size());
    for (std::size_t i = 0; i < data->labels.size(); ++i) {
        auto [it, inserted] = data->index.emplace(data->labels[i], i);
        (void)it;
        if (!inserted)
            throw std::invalid_argument("universe labels must be distinct: " + data->labels[i]);
    }
    data_ = std::move(data);
}

std::shared_ptr<const Universe::Data> Universe::empty_data() {
    static const auto instance = std::make_shared<const Data>();
    return instance;
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    auto it = data_->index.find(std::string(label));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

std::size_t Universe::require_index(std::string_view label) const {
    auto i = index_of(label);
    if (!i) throw UnknownLabelError(std::string(label));
    return *i;
}

Subset::Subset(Universe u, BitVec bits) : universe_(std::move(u)), bits_(std::move(bits)) {
    if (bits_.size() != universe_.size())
        throw std::invalid_argument("subset bit width does not match universe size");
}

Subset Subset::full(Universe u) {
    const std::size_t n = u.size();
    return Subset(std::move(u), BitVec::ones(n));
}

Subset Subset::of_labels(Universe u, const std::vector<std::string>& labels) {
    Subset s(std::move(u));
    for (const auto& l : labels) s.add(l);
    return s;
}

bool Subset::contains(std::string_view label) const {
    return bits_.test(universe_.require_index(label));
}

void Subset::add(std::string_view label) { bits_.set(universe_.require_index(label)); }

std::vector<std::string> Subset::labels() const {
    std::vector<std::string> out;
    bits_.for_each_set([&](std::size_t i) { out.push_back(universe_.label(i)); });
    return out;
}

Subset union_of(const Subset& a, const Subset& b) {
    require_same_universe(a.universe(), b.universe(), "union");
    return Subset(a.universe(), a.bits() | b.bits());
}

Subset intersect(const Subset& a, const Subset& b) {
    require_same_universe(a.universe(), b.universe(), "intersect");
    return Subset(a.universe(), a.bits() & b.bits());
}

bool is_subset(const Subset& a, const Subset& b) {
    require_same_universe(a.universe(), b.universe(), "is_subset");
    return a.bits().subset_of(b.bits());
}

Relation::Relation(Universe u) : universe_(std::move(u)) {
    rows_.assign(universe_.size(), BitVec(universe_.size()));
}

Relation Relation::identity(Universe u) {
    Relation r(std::move(u));
    for (std::size_t i = 0; i < r.size(); ++i) r.add(i, i);
    return r;
}

Relation Relation::full(Universe u) {
    Relation r(std::move(u));
    for (auto& row : r.rows_) row = BitVec::ones(r.universe_.size());
    return r;
}

Relation Relation::from_pairs(Universe u,
                              const std::vector<std::pair<std::string, std::string>>& pairs) {
    Relation r(std::move(u));
    for (const auto& [from, to] : pairs) r.add(from, to);
    return r;
}

bool Relation::contains(std::string_view from, std::string_view to) const {
    return contains(universe_.require_index(from), universe_.require_index(to));
}

void Relation::add(std::string_view from, std::string_view to) {
    add(universe_.require_index(from), universe_.require_index(to));
}

std::size_t Relation::pair_count() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.count();
    return n;
}

std::vector<std::pair<std::string, std::string>> Relation::pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < size(); ++i)
        rows_[i].for_each_set(
            [&](std::size_t j) { out.emplace_back(universe_.label(i), universe_.label(j)); });
    return out;
}

Relation identity(const Universe& u) { return Relation::identity(u); }

Relation compose(const Relation& r, const Relation& s) {
    require_same_universe(r.universe(), s.universe(), "compose");
    Relation out(r.universe());
    for (std::size_t x = 0; x < r.size(); ++x) {
        BitVec acc(r.size());
        r.row(x).for_each_set([&](std::size_t y) { acc |= s.row(y); });
        acc.for_each_set([&](std::size_t z) { out.add(x, z); });
    }
    return out;
}

Relation union_of(const Relation& r, const Relation& s) {
    require_same_universe(r.universe(), s.universe(), "union");
    Relation out = r;
    for (std::size_t x = 0; x < r.size(); ++x)
        s.row(x).for_each_set([&](std::size_t y) { out.add(x, y); });
    return out;
}

Relation intersect(const Relation& r, const Relation& s) {
    require_same_universe(r.universe(), s.universe(), "intersect");
    Relation out(r.universe());
    for (std::size_t x = 0; x < r.size(); ++x) {
        BitVec row = r.row(x) & s.row(x);
        row.for_each_set([&](std::size_t y) { out.add(x, y); });
    }
    return out;
}

bool is_subset(const Relation& r, const Relation& s) {
    require_same_universe(r.universe(), s.universe(), "is_subset");
    for (std::size_t x = 0; x < r.size(); ++x)
        if (!r.row(x).subset_of(s.row(x))) return false;
    return true;
}

Subset image(const Relation& r, const Subset& a) {
    require_same_universe(r.universe(), a.universe(), "image");
    BitVec acc(r.size());
    a.bits().for_each_set([&](std::size_t x) { acc |= r.row(x); });
    return Subset(r.universe(), std::move(acc));
}

bool is_transitive(const Relation& r) { return is_subset(compose(r, r), r); }

bool is_dense(const Relation& r) { return is_subset(r, compose(r, r)); }

Relation power(const Relation& r, std::size_t k) {
    Relation acc = Relation::identity(r.universe());
    for (std::size_t i = 0; i < k; ++i) acc = compose(r, acc);
    return acc;
}

Relation closure_by_powers(const Relation& r) {
    Relation acc = Relation::identity(r.universe());
    Relation pw = acc;
    for (std::size_t i = 0; i < r.size(); ++i) {
        pw = compose(r, pw);
        acc = union_of(acc, pw);
    }
    return acc;
}

Relation closure_by_intersection(const Relation& r) {
    const std::size_t n = r.size();
    if (n > bounds::closure_by_intersection_max)
        throw SizeGuardError("closure_by_intersection", bounds::closure_by_intersection_max, n);

    const Relation one = Relation::identity(r.universe());
    Relation acc = Relation::full(r.universe());
    const std::uint64_t cells = static_cast<std::uint64_t>(n) * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        Relation s(r.universe());
        for (std::uint64_t c = 0; c < cells; ++c)
            if ((mask >> c) & 1u) s.add(c / n, c % n);
        if (is_subset(one, s) && is_subset(r, s) && is_subset(compose(s, s), s))
            acc = intersect(acc, s);
    }
    return acc;
}

Relation closure_by_hereditary(const Relation& r) {
    const std::size_t n = r.size();
    if (n > bounds::closure_by_hereditary_max)
        throw SizeGuardError("closure_by_hereditary", bounds::closure_by_hereditary_max, n);

    // Start every row full and intersect with each hereditary subset that
    // contains the row's source.
    std::vector<BitVec> result(n, BitVec::ones(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        BitVec a = BitVec::from_mask(n, mask);
        BitVec img(n);
        a.for_each_set([&](std::size_t x) { img |= r.row(x); });
        if (!img.subset_of(a)) continue;
        a.for_each_set([&](std::size_t x) { result[x] &= a; });
    }

    Relation out(r.universe());
    for (std::size_t x = 0; x < n; ++x)
        result[x].for_each_set([&](std::size_t y) { out.add(x, y); });
    return out;
}

bool is_rt_closed_superset(const Relation& r, const Relation& s) {
    require_same_universe(r.universe(), s.universe(), "is_rt_closed_superset");
    return is_subset(r, s) && is_subset(Relation::identity(r.universe()), s) &&
           is_subset(compose(s, s), s);
}

Subset descendants(const Relation& r, std::string_view x) {
    const std::size_t i = r.universe().require_index(x);
    return Subset(r.universe(), closure_by_powers(r).row(i));
}

} // namespace rtc
