#pragma once

#include <memory>
#include <utility>

namespace amcm {

// Immutable heap cell with value semantics. Copies share the pointee;
// equality compares the pointed-to values.
template <class T>
class Box {
public:
    Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

    const T& operator*() const { return *ptr_; }
    const T* operator->() const { return ptr_.get(); }
    const std::shared_ptr<const T>& shared() const { return ptr_; }

private:
    std::shared_ptr<const T> ptr_;
};

template <class T>
bool operator==(const Box<T>& a, const Box<T>& b) {
    return a.shared() == b.shared() || *a == *b;
}

} // namespace amcm
