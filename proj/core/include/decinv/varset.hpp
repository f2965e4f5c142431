#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace decinv {

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

/// An ordered, immutable set of variable names. The ordering is fixed for
/// the lifetime of the handle; monomial comparison depends on it.
class VarSet {
public:
    static constexpr std::size_t kMaxVars = 16;

    static VarSetPtr make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }

    // Throws on unknown name.
    int index(const std::string& n) const;
    // Returns -1 on unknown name.
    int find(const std::string& n) const;
    bool has(const std::string& n) const { return find(n) >= 0; }

    const std::vector<std::string>& names() const { return names_; }

    // a0..a10, x, y -- the ring of the generic decimic.
    static VarSetPtr decimic();
    // a0..an, x, y for the generic form of degree n.
    static VarSetPtr generic(int n);
    // a1, a2, a3, a5, a6, a8, x, y -- the ring left after the search reductions.
    static VarSetPtr reduced();
    // Just x, y -- numeric binary forms.
    static VarSetPtr xy();

private:
    explicit VarSet(std::vector<std::string> names);
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

} // namespace decinv
