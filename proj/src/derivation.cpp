#include "rtc/derivation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "rtc/errors.hpp"

namespace rtc {

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::Id: return "id";
        case Rule::In: return "in";
        case Rule::Tx: return "tx";
        case Rule::Trx: return "trx";
    }
    return "?";
}

Derivation Derivation::id(std::string x) {
    Derivation d;
    d.rule = Rule::Id;
    d.conclusion = {x, x};
    return d;
}

Derivation Derivation::in(std::string x, std::string y) {
    Derivation d;
    d.rule = Rule::In;
    d.conclusion = {x, y};
    d.side = {std::move(x), std::move(y)};
    return d;
}

Derivation Derivation::tx(std::string x, std::string u, Derivation premise) {
    Derivation d;
    d.rule = Rule::Tx;
    d.conclusion = {x, premise.conclusion.y};
    d.side = {std::move(x), std::move(u)};
    d.premises.push_back(std::move(premise));
    return d;
}

Derivation Derivation::trx(Derivation left, Derivation right) {
    Derivation d;
    d.rule = Rule::Trx;
    d.conclusion = {left.conclusion.x, right.conclusion.y};
    d.premises.push_back(std::move(left));
    d.premises.push_back(std::move(right));
    return d;
}

namespace {

CheckResult fail(std::string reason) { return {false, std::move(reason)}; }

CheckResult check_node(const Derivation& d, const Relation& r, bool allow_trx, bool allow_in) {
    const auto& u = r.universe();
    if (!u.contains(d.conclusion.x) || !u.contains(d.conclusion.y))
        return fail("conclusion (" + d.conclusion.x + "," + d.conclusion.y +
                    ") mentions labels outside the universe");

    switch (d.rule) {
        case Rule::Id:
            if (d.side) return fail("id node carries a side fact");
            if (!d.premises.empty()) return fail("id node has premises");
            if (d.conclusion.x != d.conclusion.y)
                return fail("id concludes (" + d.conclusion.x + "," + d.conclusion.y +
                            ") but must conclude a reflexive pair");
            return {true, {}};

        case Rule::In: {
            if (!allow_in) return fail("rule in is not allowed here");
            if (!d.side) return fail("in node lacks its side fact");
            if (!d.premises.empty()) return fail("in node has premises");
            const auto& [x, y] = *d.side;
            if (x != d.conclusion.x || y != d.conclusion.y)
                return fail("in side fact does not match its conclusion");
            if (!u.contains(x) || !u.contains(y) || !r.contains(x, y))
                return fail("in side fact (" + x + "," + y + ") does not hold in the relation");
            return {true, {}};
        }

        case Rule::Tx: {
            if (!d.side) return fail("tx node lacks its side fact");
            if (d.premises.size() != 1) return fail("tx node needs exactly one premise");
            const auto& [x, mid] = *d.side;
            if (x != d.conclusion.x) return fail("tx side fact source does not match conclusion");
            if (!u.contains(x) || !u.contains(mid) || !r.contains(x, mid))
                return fail("tx side fact (" + x + "," + mid + ") does not hold in the relation");
            const auto& p = d.premises[0];
            if (p.conclusion.x != mid || p.conclusion.y != d.conclusion.y)
                return fail("tx premise concludes (" + p.conclusion.x + "," + p.conclusion.y +
                            ") but (" + mid + "," + d.conclusion.y + ") is required");
            return check_node(p, r, allow_trx, allow_in);
        }

        case Rule::Trx: {
            if (!allow_trx) return fail("rule trx is not allowed here");
            if (d.side) return fail("trx node carries a side fact");
            if (d.premises.size() != 2) return fail("trx node needs exactly two premises");
            const auto& l = d.premises[0];
            const auto& rt = d.premises[1];
            if (l.conclusion.x != d.conclusion.x || rt.conclusion.y != d.conclusion.y ||
                l.conclusion.y != rt.conclusion.x)
                return fail("trx premises (" + l.conclusion.x + "," + l.conclusion.y + ") and (" +
                            rt.conclusion.x + "," + rt.conclusion.y + ") do not chain to (" +
                            d.conclusion.x + "," + d.conclusion.y + ")");
            if (auto res = check_node(l, r, allow_trx, allow_in); !res) return res;
            return check_node(rt, r, allow_trx, allow_in);
        }
    }
    return fail("unknown rule");
}

} // namespace

CheckResult check(const Derivation& d, const Relation& r, bool allow_trx, bool allow_in) {
    return check_node(d, r, allow_trx, allow_in);
}

std::optional<Derivation> derive(const Relation& r, std::string_view x, std::string_view y) {
    const auto& u = r.universe();
    const std::size_t src = u.require_index(x);
    const std::size_t dst = u.require_index(y);

    // Breadth-first shortest path; neighbors scanned in universe order, so
    // the parent assignment (and hence the certificate) is deterministic.
    std::vector<std::size_t> parent(u.size(), SIZE_MAX);
    std::deque<std::size_t> queue;
    std::vector<bool> seen(u.size(), false);
    seen[src] = true;
    queue.push_back(src);
    while (!queue.empty() && !seen[dst]) {
        const std::size_t v = queue.front();
        queue.pop_front();
        r.row(v).for_each_set([&](std::size_t w) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        });
    }
    if (!seen[dst]) return std::nullopt;

    std::vector<std::size_t> path;
    for (std::size_t v = dst; v != SIZE_MAX && v != src; v = parent[v]) path.push_back(v);
    path.push_back(src);
    std::reverse(path.begin(), path.end());

    Derivation d = Derivation::id(u.label(dst));
    for (std::size_t i = path.size() - 1; i-- > 0;)
        d = Derivation::tx(u.label(path[i]), u.label(path[i + 1]), std::move(d));
    return d;
}

std::size_t height(const Derivation& d) {
    std::size_t best = 0;
    for (const auto& p : d.premises) best = std::max(best, height(p));
    return best + 1;
}

bool uses_rule(const Derivation& d, Rule rule) {
    if (d.rule == rule) return true;
    for (const auto& p : d.premises)
        if (uses_rule(p, rule)) return true;
    return false;
}

namespace {

// Joins two Trx-free derivations of (x,y) and (y,z) into a Trx-free
// derivation of (x,z). Recursion is on the height of the left tree, which
// the Tx case strictly decreases.
Derivation splice(Derivation left, Derivation right) {
    switch (left.rule) {
        case Rule::Id:
            return right;
        case Rule::In:
            return Derivation::tx(left.side->first, left.side->second, std::move(right));
        case Rule::Tx: {
            auto [x, u] = *left.side;
            Derivation inner = splice(std::move(left.premises[0]), std::move(right));
            return Derivation::tx(std::move(x), std::move(u), std::move(inner));
        }
        case Rule::Trx:
            throw std::logic_error("splice: operands must be trx-free");
    }
    throw std::logic_error("splice: unknown rule");
}

Derivation eliminate_trx_rec(Derivation d) {
    for (auto& p : d.premises) p = eliminate_trx_rec(std::move(p));
    if (d.rule != Rule::Trx) return d;
    // Both premises are Trx-free now; this is the single-cut case.
    return splice(std::move(d.premises[0]), std::move(d.premises[1]));
}

Derivation eliminate_in_rec(Derivation d) {
    if (d.rule == Rule::In)
        return Derivation::tx(d.side->first, d.side->second, Derivation::id(d.side->second));
    for (auto& p : d.premises) p = eliminate_in_rec(std::move(p));
    return d;
}

} // namespace

Derivation eliminate_trx(const Derivation& d, const Relation& r) {
    if (auto res = check(d, r, /*allow_trx=*/true, /*allow_in=*/true); !res)
        throw std::invalid_argument("eliminate_trx: input fails check: " + res.reason);
    return eliminate_trx_rec(d);
}

Derivation eliminate_in(const Derivation& d, const Relation& r) {
    if (auto res = check(d, r, /*allow_trx=*/true, /*allow_in=*/true); !res)
        throw std::invalid_argument("eliminate_in: input fails check: " + res.reason);
    return eliminate_in_rec(d);
}

Relation theorems(const Relation& r, bool use_in) {
    Relation t = Relation::identity(r.universe());
    if (use_in) t = union_of(t, r);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < r.size(); ++x) {
            r.row(x).for_each_set([&](std::size_t u) {
                t.row(u).for_each_set([&](std::size_t z) {
                    if (!t.contains(x, z)) {
                        t.add(x, z);
                        changed = true;
                    }
                });
            });
        }
    }
    return t;
}

namespace {

void quote_label(std::string& out, const std::string& label) {
    out += '"';
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
}

void print_node(std::string& out, const Derivation& d) {
    out += '(';
    out += rule_name(d.rule);
    if (d.side) {
        out += ' ';
        quote_label(out, d.side->first);
        out += ' ';
        quote_label(out, d.side->second);
    } else if (d.rule == Rule::Id) {
        out += ' ';
        quote_label(out, d.conclusion.x);
    }
    for (const auto& p : d.premises) {
        out += ' ';
        print_node(out, p);
    }
    out += ')';
}

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void error(const std::string& what) {
        throw ParseError(0, "certificate at offset " + std::to_string(pos) + ": " + what);
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            error(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string parse_quoted() {
        skip_ws();
        if (pos >= text.size() || text[pos] != '"') error("expected quoted label");
        ++pos;
        std::string out;
        while (pos < text.size() && text[pos] != '"') {
            char c = text[pos++];
            if (c == '\\') {
                if (pos >= text.size()) error("dangling escape");
                c = text[pos++];
            }
            out += c;
        }
        if (pos >= text.size()) error("unterminated label");
        ++pos;
        return out;
    }

    std::string parse_word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) error("expected rule name");
        return std::string(text.substr(start, pos - start));
    }

    Derivation parse_node() {
        expect('(');
        const std::string word = parse_word();
        Derivation d;
        if (word == "id") {
            d = Derivation::id(parse_quoted());
        } else if (word == "in") {
            std::string x = parse_quoted();
            d = Derivation::in(std::move(x), parse_quoted());
        } else if (word == "tx") {
            std::string x = parse_quoted();
            std::string u = parse_quoted();
            d = Derivation::tx(std::move(x), std::move(u), parse_node());
        } else if (word == "trx") {
            Derivation left = parse_node();
            d = Derivation::trx(std::move(left), parse_node());
        } else {
            error("unknown rule '" + word + "'");
        }
        expect(')');
        return d;
    }
};

} // namespace

std::string to_text(const Derivation& d) {
    std::string out;
    print_node(out, d);
    return out;
}

Derivation parse_derivation(std::string_view text) {
    Parser p{text};
    Derivation d = p.parse_node();
    p.skip_ws();
    if (p.pos != text.size()) p.error("trailing input after certificate");
    return d;
}

} // namespace rtc
