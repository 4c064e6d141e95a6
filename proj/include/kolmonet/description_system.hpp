#ifndef KOLMONET_DESCRIPTION_SYSTEM_HPP
#define KOLMONET_DESCRIPTION_SYSTEM_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kolmonet/bitstring.hpp"

namespace kolmonet {

enum class RunStatus { Value, Undefined, RecursionCapHit };

struct RunResult {
    RunStatus status = RunStatus::Undefined;
    BitString value;  // meaningful only when status == Value

    bool is(const BitString& u) const { return status == RunStatus::Value && value == u; }
};

struct TableEntry {
    BitString key;        // r
    BitString condition;  // v
    BitString output;     // u
};

class TableConflictError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An explicit finite programming language. Programs dispatch on a fixed
/// opcode prefix:
///
///   LIT   = "1" u      -> u
///   ID    = "01"       -> condition
///   APPLY = "0001"     -> run(left(condition), right(condition))
///   FST   = "0010"     -> left of condition decoded as a pair
///   SND   = "0011"     -> right of condition decoded as a pair
///   TAB   = "0000" r   -> table lookup of (r, condition)
///
/// ID/APPLY/FST/SND match exactly (trailing bits leave the program undefined);
/// LIT and TAB consume the remainder as payload, so every string matches at
/// most one rule. The lookup table is append-only across a run; extend()
/// produces a new snapshot and leaves the old one untouched.
class DescriptionSystem {
public:
    DescriptionSystem() : tables_(std::make_shared<const Tables>()) {}

    /// Adds a table entry. A duplicate identical entry is a no-op; binding an
    /// existing (key, condition) to a different output throws
    /// TableConflictError.
    DescriptionSystem extend(const BitString& key, const BitString& condition,
                             const BitString& output) const;

    std::size_t table_size() const { return tables_->entries.size(); }
    const std::vector<TableEntry>& entries() const { return tables_->entries; }

    std::optional<BitString> lookup(const BitString& key, const BitString& condition) const {
        auto it = tables_->by_key.find({key, condition});
        if (it == tables_->by_key.end()) return std::nullopt;
        return it->second;
    }

    /// Shortest (lex-least among shortest) key producing `output` from
    /// `condition`, if any.
    std::optional<BitString> min_key(const BitString& condition, const BitString& output) const {
        auto it = tables_->best_key.find({condition, output});
        if (it == tables_->best_key.end()) return std::nullopt;
        return it->second;
    }

    int recursion_cap() const { return recursion_cap_; }
    DescriptionSystem with_recursion_cap(int cap) const {
        DescriptionSystem s = *this;
        s.recursion_cap_ = cap;
        return s;
    }

    RunResult run(const BitString& program, const BitString& condition) const {
        return run_impl(program, condition, 0);
    }

    /// Table file format: one entry per line "key<TAB>condition<TAB>output",
    /// fields as 0/1 strings with "-" for the empty string; '#' starts a
    /// comment.
    static DescriptionSystem load(std::istream& in);
    void save(std::ostream& out) const;

private:
    struct Tables {
        std::vector<TableEntry> entries;
        std::map<std::pair<BitString, BitString>, BitString> by_key;    // (key, cond) -> out
        std::map<std::pair<BitString, BitString>, BitString> best_key;  // (cond, out) -> min key
    };

    RunResult run_impl(const BitString& program, const BitString& condition, int depth) const;

    std::shared_ptr<const Tables> tables_;
    int recursion_cap_ = 8;
};

}  // namespace kolmonet

#endif  // KOLMONET_DESCRIPTION_SYSTEM_HPP
