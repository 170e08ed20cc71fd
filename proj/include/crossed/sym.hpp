#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace crossed {

/// Interned generator name. Copies are cheap; identity is pool identity.
/// Use SymNameLess when a container must iterate in a reproducible order.
class Sym {
public:
    Sym() : id_(0) {}
    static Sym intern(std::string_view name);
    const std::string& str() const;
    std::uint32_t id() const { return id_; }
    friend bool operator==(Sym a, Sym b) { return a.id_ == b.id_; }
    friend bool operator!=(Sym a, Sym b) { return a.id_ != b.id_; }

private:
    explicit Sym(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

struct SymNameLess {
    bool operator()(Sym a, Sym b) const {
        if (a == b) return false;
        return a.str() < b.str();
    }
};

} // namespace crossed
