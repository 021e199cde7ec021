#include "dcb/borrowing.hpp"

#include "dcb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dcb {

namespace {

int map_sum(const std::map<int, int>& m) {
    int s = 0;
    for (const auto& [k, v] : m)
        s += v;
    return s;
}

void bump(std::map<int, int>& m, int key, int delta) {
    const int next = m[key] + delta;
    if (next < 0)
        throw StateError("channel count for cell " + std::to_string(key) + " would go negative");
    if (next == 0)
        m.erase(key);
    else
        m[key] = next;
}

} // namespace

int ChannelLedger::total_lent() const { return map_sum(lent_out); }
int ChannelLedger::total_borrowed() const { return map_sum(borrowed_in); }
int ChannelLedger::busy_borrowed() const { return map_sum(busy_borrowed_by); }
int ChannelLedger::free_own() const { return owned - busy_own - total_lent(); }
int ChannelLedger::lendable() const { return std::max(0, threshold - busy_own - total_lent()); }

bool ChannelLedger::pristine() const {
    return busy_own == 0 && lent_out.empty() && borrowed_in.empty() && busy_borrowed_by.empty();
}

void ChannelLedger::check() const {
    const std::string who = "cell " + std::to_string(cell) + ": ";
    if (busy_own < 0)
        throw StateError(who + "negative busy_own");
    if (busy_own + total_lent() > owned)
        throw StateError(who + "busy + lent exceeds owned channels");
    for (const auto& [other, n] : lent_out)
        if (n < 0)
            throw StateError(who + "negative lent_out entry");
    for (const auto& [other, n] : borrowed_in)
        if (n < 0)
            throw StateError(who + "negative borrowed_in entry");
    for (const auto& [donor, n] : busy_borrowed_by) {
        if (n < 0)
            throw StateError(who + "negative busy_borrowed entry");
        auto it = borrowed_in.find(donor);
        const int have = it == borrowed_in.end() ? 0 : it->second;
        if (n > have)
            throw StateError(who + "more borrowed channels in use than borrowed");
    }
}

int BorrowOutcome::total_granted() const {
    int s = 0;
    for (const BorrowGrant& g : granted)
        s += g.count;
    return s;
}

std::optional<int> select_donor(const std::vector<int>& candidates, const LedgerBook& book) {
    if (candidates.empty())
        throw DomainError("empty donor candidate set");
    int best_id = -1;
    int best_lendable = 0;
    for (int id : candidates) {
        const int l = book.lendable(id);
        if (l > best_lendable || (l == best_lendable && l > 0 && (best_id < 0 || id < best_id))) {
            best_lendable = l;
            best_id = id;
        }
    }
    if (best_lendable <= 0)
        return std::nullopt;
    return best_id;
}

LedgerBook::LedgerBook(const ClusterLayout& layout, int channels_per_cell, int threshold)
    : layout_(&layout) {
    if (channels_per_cell < 0)
        throw ConfigError("channels per cell must be nonnegative");
    if (threshold < 0 || threshold > channels_per_cell)
        throw ConfigError("lending threshold must lie in [0, channels per cell]");
    for (const Cell& c : layout.cells()) {
        ChannelLedger l;
        l.cell = c.id;
        l.owned = channels_per_cell;
        l.threshold = threshold;
        ledgers_.push_back(std::move(l));
    }
}

const ChannelLedger& LedgerBook::ledger(int cell) const {
    for (const ChannelLedger& l : ledgers_)
        if (l.cell == cell)
            return l;
    throw DomainError("no ledger for cell " + std::to_string(cell));
}

ChannelLedger& LedgerBook::mutable_ledger(int cell) {
    return const_cast<ChannelLedger&>(ledger(cell));
}

BorrowOutcome LedgerBook::execute_borrow(int reference, int n_req) {
    if (n_req < 1)
        throw DomainError("borrow request must ask for at least one channel");
    ChannelLedger& ref = mutable_ledger(reference);

    auto groups = layout_->donor_groups(reference);
    // Rank candidate groups by their current best donor, best first. Ties go
    // to the group holding the lowest cell id.
    std::stable_sort(groups.begin(), groups.end(),
                     [this](const std::vector<int>& a, const std::vector<int>& b) {
                         int la = 0, lb = 0;
                         for (int id : a)
                             la = std::max(la, lendable(id));
                         for (int id : b)
                             lb = std::max(lb, lendable(id));
                         if (la != lb)
                             return la > lb;
                         return a.front() < b.front();
                     });

    BorrowOutcome outcome;
    int remaining = n_req;
    for (const std::vector<int>& group : groups) {
        while (remaining > 0) {
            const std::optional<int> donor_id = select_donor(group, *this);
            if (!donor_id)
                break;
            ChannelLedger& donor = mutable_ledger(*donor_id);
            const int take = std::min(remaining, donor.lendable());
            bump(donor.lent_out, reference, take);
            bump(ref.borrowed_in, *donor_id, take);
            outcome.granted.push_back({*donor_id, take});
            remaining -= take;
        }
        if (remaining == 0)
            break;
    }
    outcome.shortfall = remaining;
    return outcome;
}

AdmissionResult LedgerBook::admit_call(int cell, bool borrowing_enabled) {
    ChannelLedger& l = mutable_ledger(cell);
    if (l.free_own() > 0) {
        ++l.busy_own;
        return {true, {cell, ChannelAssignment::Kind::Own, 0}};
    }
    if (!borrowing_enabled)
        return {};
    // Idle channel from an earlier borrow?
    for (const auto& [donor, have] : l.borrowed_in) {
        auto it = l.busy_borrowed_by.find(donor);
        const int in_use = it == l.busy_borrowed_by.end() ? 0 : it->second;
        if (in_use < have) {
            bump(l.busy_borrowed_by, donor, 1);
            return {true, {cell, ChannelAssignment::Kind::Borrowed, donor}};
        }
    }
    const BorrowOutcome outcome = execute_borrow(cell, 1);
    if (outcome.shortfall > 0)
        return {};
    const int donor = outcome.granted.front().donor;
    bump(l.busy_borrowed_by, donor, 1);
    return {true, {cell, ChannelAssignment::Kind::Borrowed, donor}};
}

void LedgerBook::release_call(const ChannelAssignment& assignment) {
    ChannelLedger& l = mutable_ledger(assignment.cell);
    if (assignment.kind == ChannelAssignment::Kind::Own) {
        if (l.busy_own <= 0)
            throw StateError("cell " + std::to_string(assignment.cell) +
                             " releasing an owned channel it does not hold");
        --l.busy_own;
        return;
    }
    auto it = l.busy_borrowed_by.find(assignment.donor);
    if (it == l.busy_borrowed_by.end() || it->second <= 0)
        throw StateError("cell " + std::to_string(assignment.cell) +
                         " releasing a borrowed channel it does not hold");
    ChannelLedger& donor = mutable_ledger(assignment.donor);
    bump(l.busy_borrowed_by, assignment.donor, -1);
    bump(l.borrowed_in, assignment.donor, -1);
    bump(donor.lent_out, assignment.cell, -1);
}

int LedgerBook::busy_total() const {
    int s = 0;
    for (const ChannelLedger& l : ledgers_)
        s += l.busy_own + l.busy_borrowed();
    return s;
}

int LedgerBook::borrowed_total() const {
    int s = 0;
    for (const ChannelLedger& l : ledgers_)
        s += l.total_borrowed();
    return s;
}

bool LedgerBook::pristine() const {
    return std::all_of(ledgers_.begin(), ledgers_.end(),
                       [](const ChannelLedger& l) { return l.pristine(); });
}

void LedgerBook::check_invariants() const {
    int lent = 0, borrowed = 0;
    for (const ChannelLedger& l : ledgers_) {
        l.check();
        lent += l.total_lent();
        borrowed += l.total_borrowed();
    }
    if (lent != borrowed)
        throw StateError("systemwide lent_out != borrowed_in");
    // Pairwise consistency of the lending relation.
    for (const ChannelLedger& l : ledgers_) {
        for (const auto& [borrower, n] : l.lent_out) {
            const auto& other = ledger(borrower).borrowed_in;
            auto it = other.find(l.cell);
            if (it == other.end() || it->second != n)
                throw StateError("lent_out/borrowed_in mismatch between cells " +
                                 std::to_string(l.cell) + " and " + std::to_string(borrower));
        }
    }
}

} // namespace dcb
