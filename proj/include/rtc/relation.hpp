// relation.hpp -- finite binary relations over a labeled universe and the
// closure constructions that operate on them directly.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rtc/bitvec.hpp"
#include "rtc/errors.hpp"

namespace rtc {

/// An ordered set of distinct labels. Indices are an internal detail fixed by
/// the label order; copies share storage, so passing by value is cheap.
class Universe {
public:
    Universe() : data_(empty_data()) {}
    explicit Universe(std::vector<std::string> labels);

    std::size_t size() const { return data_->labels.size(); }
    bool empty() const { return data_->labels.empty(); }
    const std::vector<std::string>& labels() const { return data_->labels; }
    const std::string& label(std::size_t i) const { return data_->labels.at(i); }

    std::optional<std::size_t> index_of(std::string_view label) const;

    /// Like index_of but throws UnknownLabelError.
    std::size_t require_index(std::string_view label) const;

    bool contains(std::string_view label) const { return index_of(label).has_value(); }

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, std::size_t> index;
    };

    static std::shared_ptr<const Data> empty_data();

    std::shared_ptr<const Data> data_;
};

/// Subset of a universe, as a bit vector indexed like the universe.
class Subset {
public:
    Subset() = default;
    explicit Subset(Universe u) : universe_(std::move(u)), bits_(universe_.size()) {}
    Subset(Universe u, BitVec bits);

    static Subset full(Universe u);
    static Subset of_labels(Universe u, const std::vector<std::string>& labels);

    const Universe& universe() const { return universe_; }
    const BitVec& bits() const { return bits_; }

    bool contains(std::size_t i) const { return bits_.test(i); }
    bool contains(std::string_view label) const;
    void add(std::size_t i) { bits_.set(i); }
    void add(std::string_view label);

    std::size_t count() const { return bits_.count(); }
    bool is_empty() const { return bits_.none(); }

    std::vector<std::string> labels() const;

    bool operator==(const Subset& o) const {
        return universe_ == o.universe_ && bits_ == o.bits_;
    }

private:
    Universe universe_;
    BitVec bits_;
};

Subset union_of(const Subset& a, const Subset& b);
Subset intersect(const Subset& a, const Subset& b);
bool is_subset(const Subset& a, const Subset& b);

/// Binary relation over a universe, stored as one bit row per source element.
class Relation {
public:
    Relation() = default;
    explicit Relation(Universe u);

    static Relation identity(Universe u);
    static Relation full(Universe u);
    static Relation from_pairs(Universe u,
                               const std::vector<std::pair<std::string, std::string>>& pairs);

    const Universe& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }

    bool contains(std::size_t from, std::size_t to) const { return rows_[from].test(to); }
    bool contains(std::string_view from, std::string_view to) const;
    void add(std::size_t from, std::size_t to) { rows_[from].set(to); }
    void add(std::string_view from, std::string_view to);

    const BitVec& row(std::size_t from) const { return rows_[from]; }

    /// Number of pairs in the relation.
    std::size_t pair_count() const;

    /// All pairs as labels, sorted by (source index, target index).
    std::vector<std::pair<std::string, std::string>> pairs() const;

    bool operator==(const Relation& o) const {
        return universe_ == o.universe_ && rows_ == o.rows_;
    }

private:
    Universe universe_;
    std::vector<BitVec> rows_;
};

Relation identity(const Universe& u);

Relation compose(const Relation& r, const Relation& s);
Relation union_of(const Relation& r, const Relation& s);
Relation intersect(const Relation& r, const Relation& s);
bool is_subset(const Relation& r, const Relation& s);

/// Image R[A] = { b | exists a in A with aRb }.
Subset image(const Relation& r, const Subset& a);

bool is_transitive(const Relation& r);
bool is_dense(const Relation& r);

/// R^k with R^0 the identity and R^(k+1) = R composed with R^k.
Relation power(const Relation& r, std::size_t k);

/// Union of R^0 .. R^n for n the universe size; paths longer than n revisit
/// an element, so this equals the union over all powers.
Relation closure_by_powers(const Relation& r);

/// Intersection of every relation S on the same universe with
/// identity, R and S;S all contained in S. Enumerates all 2^(n^2)
/// candidates, so the universe is capped at 3 elements.
Relation closure_by_intersection(const Relation& r);

/// (x,y) is present iff every subset A with R[A] contained in A and x in A
/// also has y in A. Enumerates all 2^n subsets; capped at 12 elements.
Relation closure_by_hereditary(const Relation& r);

/// True iff r and identity are contained in s and s;s is contained in s.
bool is_rt_closed_superset(const Relation& r, const Relation& s);

/// Elements reachable from x in the closure of r (including x itself).
Subset descendants(const Relation& r, std::string_view x);

namespace bounds {
inline constexpr std::size_t closure_by_intersection_max = 3;
inline constexpr std::size_t closure_by_hereditary_max = 12;
} // namespace bounds

} // namespace rtc
