#pragma once

#include <functional>
#include <map>
#include <mutex>

namespace fone::detail {

/// Thread-safe memo table. Values are pure functions of the key, so a
/// concurrent double fill stores the same entry twice.
template <class Key, class Value>
class Memo {
public:
    Value get(const Key& key, const std::function<Value(const Key&)>& compute) const
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        Value v = compute(key);
        std::lock_guard lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<Key, Value> table_;
};

}  // namespace fone::detail
