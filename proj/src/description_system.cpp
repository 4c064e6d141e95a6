#include "kolmonet/description_system.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace kolmonet {

DescriptionSystem DescriptionSystem::extend(const BitString& key, const BitString& condition,
                                            const BitString& output) const {
    auto existing = lookup(key, condition);
    if (existing) {
        if (*existing == output) return *this;  // duplicate entry, no-op
        throw TableConflictError("table entry (" + key.display() + ", " + condition.display() +
                                 ") already bound to a different output");
    }
    auto t = std::make_shared<Tables>(*tables_);
    t->entries.push_back({key, condition, output});
    t->by_key.emplace(std::make_pair(key, condition), output);
    auto [it, inserted] = t->best_key.emplace(std::make_pair(condition, output), key);
    if (!inserted && key < it->second) it->second = key;
    DescriptionSystem s = *this;
    s.tables_ = std::move(t);
    return s;
}

RunResult DescriptionSystem::run_impl(const BitString& program, const BitString& condition,
                                      int depth) const {
    if (program.empty()) return {};
    if (program.bit(0)) {  // LIT
        return {RunStatus::Value, program.substr(1, program.size() - 1)};
    }
    if (program.size() < 2) return {};
    if (program.bit(1)) {  // "01" = ID, exact match only
        if (program.size() != 2) return {};
        return {RunStatus::Value, condition};
    }
    if (program.size() < 4) return {};
    if (!program.bit(2) && !program.bit(3)) {  // TAB "0000" r
        auto out = lookup(program.substr(4, program.size() - 4), condition);
        if (!out) return {};
        return {RunStatus::Value, *out};
    }
    if (program.size() != 4) return {};
    auto pr = decode_pair(condition);
    if (!pr) return {};
    if (!program.bit(2)) {  // "0001" = APPLY
        if (depth >= recursion_cap_) return {RunStatus::RecursionCapHit, {}};
        return run_impl(pr->first, pr->second, depth + 1);
    }
    if (!program.bit(3)) return {RunStatus::Value, pr->first};  // "0010" = FST
    return {RunStatus::Value, pr->second};                      // "0011" = SND
}

DescriptionSystem DescriptionSystem::load(std::istream& in) {
    DescriptionSystem sys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string key, cond, out;
        if (!(ls >> key >> cond >> out)) {
            throw std::runtime_error("table file line " + std::to_string(lineno) +
                                     ": expected three fields");
        }
        sys = sys.extend(BitString::parse(key), BitString::parse(cond), BitString::parse(out));
    }
    return sys;
}

void DescriptionSystem::save(std::ostream& out) const {
    for (const auto& e : tables_->entries) {
        out << e.key.display() << '\t' << e.condition.display() << '\t' << e.output.display()
            << '\n';
    }
}

}  // namespace kolmonet
