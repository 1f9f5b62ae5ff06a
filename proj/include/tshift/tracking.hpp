#pragma once

#include "tshift/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace tshift {

// ---------------------------------------------------------------------------
// Entry accounting. The attention kernels route every large working buffer
// (the objects of the closed-form memory model: normalized Q/K copies, the
// augmented V, K^[x]2, A_mod, Yhat, the NxN score/polynomial matrices, and
// outputs) through TrackedMat. While a ledger is active it records the peak
// number of scalar entries simultaneously live in those buffers. O(N + d^2)
// scratch vectors (row norms, column sums, K^T V') are deliberately not
// tracked; they are not part of the model and are asymptotically negligible.
//
// Scoped per kernel call; not safe for concurrent kernel invocations within
// one scope (the active ledger is thread-local).
// ---------------------------------------------------------------------------
class EntryLedger {
public:
    void add(std::int64_t n) {
        live_ += n;
        peak_ = std::max(peak_, live_);
    }
    void release(std::int64_t n) { live_ -= n; }

    std::int64_t live() const { return live_; }
    std::int64_t peak() const { return peak_; }

    static EntryLedger*& active() {
        thread_local EntryLedger* ptr = nullptr;
        return ptr;
    }

private:
    std::int64_t live_ = 0;
    std::int64_t peak_ = 0;
};

class LedgerScope {
public:
    explicit LedgerScope(EntryLedger& ledger) : prev_(EntryLedger::active()) {
        EntryLedger::active() = &ledger;
    }
    ~LedgerScope() { EntryLedger::active() = prev_; }
    LedgerScope(const LedgerScope&) = delete;
    LedgerScope& operator=(const LedgerScope&) = delete;

private:
    EntryLedger* prev_;
};

// ---------------------------------------------------------------------------
// Value probe: records the largest absolute entry seen across the kernel's
// intermediates and whether everything stayed finite. Used by the
// instability demo; inactive (and free) otherwise.
// ---------------------------------------------------------------------------
class ValueProbe {
public:
    template <class S>
    void observe(const Mat<S>& m) {
        if (m.size() == 0) return;
        const double mx = static_cast<double>(m.template cast<double>().cwiseAbs().maxCoeff());
        max_abs_ = std::max(max_abs_, mx);
        finite_ = finite_ && std::isfinite(mx) && m.allFinite();
    }

    double max_abs() const { return max_abs_; }
    bool finite() const { return finite_; }

    static ValueProbe*& active() {
        thread_local ValueProbe* ptr = nullptr;
        return ptr;
    }

private:
    double max_abs_ = 0.0;
    bool finite_ = true;
};

class ProbeScope {
public:
    explicit ProbeScope(ValueProbe& probe) : prev_(ValueProbe::active()) {
        ValueProbe::active() = &probe;
    }
    ~ProbeScope() { ValueProbe::active() = prev_; }
    ProbeScope(const ProbeScope&) = delete;
    ProbeScope& operator=(const ProbeScope&) = delete;

private:
    ValueProbe* prev_;
};

template <class S>
void probe_observe(const Mat<S>& m) {
    if (ValueProbe* p = ValueProbe::active()) p->observe(m);
}

// A matrix whose entry count is registered with the active ledger for the
// lifetime of its storage. release() frees the storage (and the ledger
// count) early; take() hands the storage to the caller untracked.
template <class S>
class TrackedMat {
public:
    TrackedMat() = default;
    TrackedMat(Index rows, Index cols) { resize(rows, cols); }
    explicit TrackedMat(Mat<S>&& m) : m_(std::move(m)) { track(m_.size()); }

    ~TrackedMat() { untrack(); }
    TrackedMat(const TrackedMat&) = delete;
    TrackedMat& operator=(const TrackedMat&) = delete;

    void resize(Index rows, Index cols) {
        untrack();
        m_.resize(rows, cols);
        track(m_.size());
    }

    void assign(Mat<S>&& m) {
        untrack();
        m_ = std::move(m);
        track(m_.size());
    }

    void release() {
        untrack();
        m_.resize(0, 0);
    }

    Mat<S> take() {
        untrack();
        return std::move(m_);
    }

    Mat<S>& get() { return m_; }
    const Mat<S>& get() const { return m_; }
    Mat<S>* operator->() { return &m_; }
    Mat<S>& operator*() { return m_; }

private:
    void track(std::int64_t n) {
        tracked_ = n;
        if (EntryLedger* l = EntryLedger::active()) l->add(n);
    }
    void untrack() {
        if (tracked_ != 0) {
            if (EntryLedger* l = EntryLedger::active()) l->release(tracked_);
            tracked_ = 0;
        }
    }

    Mat<S> m_;
    std::int64_t tracked_ = 0;
};

}  // namespace tshift
