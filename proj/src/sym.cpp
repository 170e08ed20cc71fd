#include "crossed/sym.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace crossed {

namespace {

struct Pool {
    std::mutex mu;
    std::deque<std::string> names;          // stable storage
    std::unordered_map<std::string_view, std::uint32_t> index;

    Pool() { names.emplace_back(); index.emplace(names.back(), 0); }
};

Pool& pool() {
    static Pool p;
    return p;
}

} // namespace

Sym Sym::intern(std::string_view name) {
    Pool& p = pool();
    std::lock_guard<std::mutex> lock(p.mu);
    auto it = p.index.find(name);
    if (it != p.index.end()) return Sym(it->second);
    p.names.emplace_back(name);
    std::uint32_t id = static_cast<std::uint32_t>(p.names.size() - 1);
    p.index.emplace(p.names.back(), id);
    return Sym(id);
}

const std::string& Sym::str() const {
    Pool& p = pool();
    std::lock_guard<std::mutex> lock(p.mu);
    return p.names[id_];   // deque storage is stable, reference outlives the lock
}

} // namespace crossed
