#pragma once

#include "dcb/topology.hpp"

#include <map>
#include <optional>
#include <vector>

namespace dcb {

// Per-cell channel accounting. `owned` channels belong to the cell; lending
// moves usage rights (not ownership) to a borrower. The lending threshold T
// caps busy_own + total lent: the cell always keeps owned - T channels free
// for its own future calls.
struct ChannelLedger {
    int cell = 0;
    int owned = 0;
    int threshold = 0;
    int busy_own = 0;
    std::map<int, int> lent_out;            // borrower cell -> count
    std::map<int, int> borrowed_in;         // donor cell -> count
    std::map<int, int> busy_borrowed_by;    // donor cell -> borrowed channels in use

    int total_lent() const;
    int total_borrowed() const;
    int busy_borrowed() const;
    int free_own() const;   // owned - busy_own - total_lent
    int lendable() const;   // max(0, threshold - busy_own - total_lent)
    bool pristine() const;  // no busy channels, nothing lent or borrowed
    void check() const;     // throws StateError on any invariant violation
};

struct BorrowGrant {
    int donor = 0;
    int count = 0;
};

struct BorrowOutcome {
    std::vector<BorrowGrant> granted;
    int shortfall = 0;
    int total_granted() const;
};

// How an admitted call is being served; needed to undo it at release.
struct ChannelAssignment {
    enum class Kind { Own, Borrowed };
    int cell = 0;
    Kind kind = Kind::Own;
    int donor = 0; // valid when kind == Borrowed
};

struct AdmissionResult {
    bool admitted = false;
    ChannelAssignment assignment; // valid when admitted
};

// Picks the candidate with the most lendable channels, lowest id on ties;
// nullopt when nothing is lendable. Throws DomainError on an empty set.
class LedgerBook;
std::optional<int> select_donor(const std::vector<int>& candidates, const LedgerBook& book);

// The cluster-wide ledger state machine. All transitions are all-or-nothing
// per call event; a StateError leaves the book unmodified.
class LedgerBook {
public:
    LedgerBook(const ClusterLayout& layout, int channels_per_cell, int threshold);

    const ClusterLayout& layout() const { return *layout_; }
    const ChannelLedger& ledger(int cell) const;
    const std::vector<ChannelLedger>& ledgers() const { return ledgers_; }
    int lendable(int cell) const { return ledger(cell).lendable(); }

    // Borrowing cascade: ranks the reference cell's two donor groups by their
    // best donor's lendable count, drains donors best-first within a group,
    // then falls to the other group; reports any shortfall.
    BorrowOutcome execute_borrow(int reference, int n_req);

    // Admission priority: idle owned channel, then idle already-borrowed
    // channel, then a fresh single-channel borrow, else blocked.
    AdmissionResult admit_call(int cell, bool borrowing_enabled);

    // Owned channel goes idle; borrowed channel is returned to its donor
    // immediately.
    void release_call(const ChannelAssignment& assignment);

    int busy_total() const;
    int borrowed_total() const;
    bool pristine() const;
    void check_invariants() const;

private:
    ChannelLedger& mutable_ledger(int cell);

    const ClusterLayout* layout_;
    std::vector<ChannelLedger> ledgers_;
};

} // namespace dcb
