#pragma once

#include "crossed/error.hpp"
#include "crossed/sym.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace crossed {

struct Letter {
    Sym gen;
    int exp;   // +1 or -1
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

/// Freely reduced word in a free group. Immutable; every operation returns
/// a fresh value. The empty word is the identity.
class Word {
public:
    Word() = default;

    /// Free reduction of an arbitrary letter sequence (exponents may be any
    /// nonzero integer and are expanded to +-1 letters).
    static Word reduced(const std::vector<std::pair<Sym, long long>>& raw);
    static Word generator(Sym g, long long exp = 1);

    /// Grammar: whitespace-separated `gen` / `gen^-1` tokens (general
    /// integer exponents accepted on input). Empty string is the identity.
    static Word parse(std::string_view text);
    std::string str() const;

    const std::vector<Letter>& letters() const { return ls_; }
    bool empty() const { return ls_.empty(); }
    std::size_t size() const { return ls_.size(); }

    Word operator*(const Word& rhs) const;
    Word inverse() const;
    Word pow(long long k) const;
    friend bool operator==(const Word& a, const Word& b) { return a.ls_ == b.ls_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    std::vector<Letter> ls_;   // invariant: freely reduced

    void push_reduce(Sym g, int e);
};

/// v^-1 * u * v
Word conj(const Word& u, const Word& v);

/// Throws AlphabetError if a letter of u is not in the allowed set.
void check_alphabet(const Word& u, const std::vector<Sym>& alphabet);

/// Homomorphism between free groups, given on generators.
struct FreeHom {
    std::map<Sym, Word, SymNameLess> images;
    Word apply(const Word& u) const;
};

} // namespace crossed
