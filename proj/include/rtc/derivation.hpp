// derivation.hpp -- proof trees for the closure derivation rules, certificate
// checking, proof search, and the rule-elimination rewrites.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtc/relation.hpp"

namespace rtc {

enum class Rule { Id, In, Tx, Trx };

std::string_view rule_name(Rule r);

/// The claim "x is related to y in the closure".
struct Judgment {
    std::string x;
    std::string y;

    bool operator==(const Judgment&) const = default;
};

/// A finite proof tree. Rule schemas:
///   Id:  concludes (x,x), no premises.
///   In:  side fact (x,y) from the base relation, concludes (x,y).
///   Tx:  side fact (x,u), one premise concluding (u,z), concludes (x,z).
///   Trx: premises concluding (x,y) and (y,z), concludes (x,z).
/// Side facts are stored in the node so a certificate can be re-checked
/// without searching the relation.
struct Derivation {
    Rule rule = Rule::Id;
    Judgment conclusion;
    std::optional<std::pair<std::string, std::string>> side;
    std::vector<Derivation> premises;

    static Derivation id(std::string x);
    static Derivation in(std::string x, std::string y);
    static Derivation tx(std::string x, std::string u, Derivation premise);
    static Derivation trx(Derivation left, Derivation right);

    bool operator==(const Derivation&) const = default;
};

struct CheckResult {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Validates every node against its rule schema and side facts against r.
/// Rules outside the allowed set fail the check; malformed trees report a
/// reason instead of throwing.
CheckResult check(const Derivation& d, const Relation& r, bool allow_trx = false,
                  bool allow_in = true);

/// Searches for (x,y) in the closure of r. On success returns the canonical
/// certificate: a right-leaning Tx spine along a breadth-first shortest
/// R-path (ties broken by universe order), ending in Id.
std::optional<Derivation> derive(const Relation& r, std::string_view x, std::string_view y);

/// Leaves have height 1; inner nodes 1 + the tallest premise.
std::size_t height(const Derivation& d);

/// True if any node of the tree uses the given rule.
bool uses_rule(const Derivation& d, Rule rule);

/// Rewrites away every Trx node, preserving the conclusion. The input must
/// check against r with Trx allowed; the output checks with Trx forbidden.
Derivation eliminate_trx(const Derivation& d, const Relation& r);

/// Rewrites every In node to a Tx over Id, preserving the conclusion.
Derivation eliminate_in(const Derivation& d, const Relation& r);

/// The set of derivable judgments, computed by saturating the rules to a
/// fixed point. With use_in false the In rule is dropped from the system.
Relation theorems(const Relation& r, bool use_in = true);

/// Canonical parenthesized prefix form, e.g. (tx "a" "b" (id "b")).
std::string to_text(const Derivation& d);

/// Parses the prefix form; whitespace-insensitive. Throws ParseError.
Derivation parse_derivation(std::string_view text);

} // namespace rtc
