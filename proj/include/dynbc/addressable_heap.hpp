#ifndef DYNBC_ADDRESSABLE_HEAP_HPP_
#define DYNBC_ADDRESSABLE_HEAP_HPP_

#include <vector>

#include <dynbc/types.hpp>

namespace dynbc {

/**
 * Binary min-heap over node ids with addressable decrease-key, keyed by a
 * real-valued priority with ties broken by node id so extraction order is
 * deterministic. Node ids must be < n; each node is in the heap at most once.
 */
class AddressableHeap {
public:
    explicit AddressableHeap(count n) : position_(n, npos) {}

    bool empty() const { return heap_.empty(); }
    count size() const { return heap_.size(); }
    bool contains(node v) const { return position_[v] != npos; }
    edgeweight priority(node v) const { return heap_[position_[v]].key; }

    /// Inserts v, or lowers its priority; a larger key is ignored.
    void insertOrDecrease(node v, edgeweight key) {
        count pos = position_[v];
        if (pos == npos) {
            heap_.push_back({key, v});
            position_[v] = heap_.size() - 1;
            siftUp(heap_.size() - 1);
        } else if (key < heap_[pos].key) {
            heap_[pos].key = key;
            siftUp(pos);
        }
    }

    std::pair<node, edgeweight> extractMin() {
        Entry top = heap_.front();
        position_[top.v] = npos;
        if (heap_.size() > 1) {
            heap_.front() = heap_.back();
            position_[heap_.front().v] = 0;
            heap_.pop_back();
            siftDown(0);
        } else {
            heap_.pop_back();
        }
        return {top.v, top.key};
    }

private:
    struct Entry {
        edgeweight key;
        node v;
    };

    static constexpr count npos = static_cast<count>(-1);

    bool less(const Entry &a, const Entry &b) const {
        return a.key < b.key || (a.key == b.key && a.v < b.v);
    }

    void siftUp(count i) {
        while (i > 0) {
            count parent = (i - 1) / 2;
            if (!less(heap_[i], heap_[parent]))
                break;
            swapEntries(i, parent);
            i = parent;
        }
    }

    void siftDown(count i) {
        const count n = heap_.size();
        while (true) {
            count smallest = i;
            count l = 2 * i + 1, r = 2 * i + 2;
            if (l < n && less(heap_[l], heap_[smallest]))
                smallest = l;
            if (r < n && less(heap_[r], heap_[smallest]))
                smallest = r;
            if (smallest == i)
                break;
            swapEntries(i, smallest);
            i = smallest;
        }
    }

    void swapEntries(count i, count j) {
        std::swap(heap_[i], heap_[j]);
        position_[heap_[i].v] = i;
        position_[heap_[j].v] = j;
    }

    std::vector<Entry> heap_;
    std::vector<count> position_;
};

} // namespace dynbc

#endif // DYNBC_ADDRESSABLE_HEAP_HPP_
