#include "crossed/word.hpp"

#include <sstream>

namespace crossed {

void Word::push_reduce(Sym g, int e) {
    if (!ls_.empty() && ls_.back().gen == g && ls_.back().exp == -e) {
        ls_.pop_back();
    } else {
        ls_.push_back({g, e});
    }
}

Word Word::reduced(const std::vector<std::pair<Sym, long long>>& raw) {
    Word w;
    for (const auto& [g, k] : raw) {
        int e = k > 0 ? 1 : -1;
        for (long long i = 0, n = k > 0 ? k : -k; i < n; ++i) w.push_reduce(g, e);
    }
    return w;
}

Word Word::generator(Sym g, long long exp) {
    return reduced({{g, exp}});
}

Word Word::parse(std::string_view text) {
    std::vector<std::pair<Sym, long long>> raw;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        long long exp = 1;
        auto caret = tok.find('^');
        std::string name = tok;
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            try {
                exp = std::stoll(e);
            } catch (const std::exception&) {
                throw IoError("bad exponent in word token: " + tok);
            }
        }
        if (name.empty()) throw IoError("empty generator name in word: " + std::string(text));
        if (exp != 0) raw.emplace_back(Sym::intern(name), exp);
    }
    return reduced(raw);
}

std::string Word::str() const {
    std::string out;
    for (const Letter& l : ls_) {
        if (!out.empty()) out += ' ';
        out += l.gen.str();
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    for (const Letter& l : rhs.ls_) w.push_reduce(l.gen, l.exp);
    return w;
}

Word Word::inverse() const {
    Word w;
    w.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::pow(long long k) const {
    Word base = k >= 0 ? *this : inverse();
    Word out;
    for (long long i = 0, n = k >= 0 ? k : -k; i < n; ++i) out = out * base;
    return out;
}

Word conj(const Word& u, const Word& v) {
    return v.inverse() * u * v;
}

void check_alphabet(const Word& u, const std::vector<Sym>& alphabet) {
    for (const Letter& l : u.letters()) {
        bool found = false;
        for (Sym s : alphabet) {
            if (s == l.gen) { found = true; break; }
        }
        if (!found) throw AlphabetError("generator '" + l.gen.str() + "' not in alphabet");
    }
}

Word FreeHom::apply(const Word& u) const {
    Word out;
    for (const Letter& l : u.letters()) {
        auto it = images.find(l.gen);
        if (it == images.end())
            throw AlphabetError("no image assigned for generator '" + l.gen.str() + "'");
        out = out * (l.exp > 0 ? it->second : it->second.inverse());
    }
    return out;
}

} // namespace crossed
