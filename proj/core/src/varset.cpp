#include "decinv/varset.hpp"

namespace decinv {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars)
        throw std::invalid_argument("VarSet: at most 16 variables supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
        (void)it;
        if (!fresh) throw std::invalid_argument("VarSet: duplicate variable " + names_[i]);
    }
}

VarSetPtr VarSet::make(std::vector<std::string> names) {
    return VarSetPtr(new VarSet(std::move(names)));
}

int VarSet::index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw std::out_of_range("VarSet: unknown variable " + n);
    return it->second;
}

int VarSet::find(const std::string& n) const {
    auto it = index_.find(n);
    return it == index_.end() ? -1 : it->second;
}

VarSetPtr VarSet::decimic() {
    static VarSetPtr v = generic(10);
    return v;
}

VarSetPtr VarSet::generic(int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("a" + std::to_string(i));
    names.push_back("x");
    names.push_back("y");
    return make(std::move(names));
}

VarSetPtr VarSet::reduced() {
    static VarSetPtr v = make({"a1", "a2", "a3", "a5", "a6", "a8", "x", "y"});
    return v;
}

VarSetPtr VarSet::xy() {
    static VarSetPtr v = make({"x", "y"});
    return v;
}

} // namespace decinv
