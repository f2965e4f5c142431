#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "decinv/binform.hpp"

namespace decinv {

struct CovExpr;
using CovExprPtr = std::shared_ptr<const CovExpr>;

/// Expression tree over covariants: named leaves (resolved against an
/// environment), x^i y^j monomial leaves, transvectants, products, powers
/// and sums. This is the recipe language of the catalog and of the random
/// invariant generator.
struct CovExpr {
    enum class Kind { Leaf, XYMono, Transv, Prod, Pow, Sum };

    Kind kind;
    std::string name; // Leaf
    int xe = 0, ye = 0; // XYMono
    CovExprPtr a, b;
    int arg = 0; // transvectant index or power exponent

    static CovExprPtr leaf(std::string n) {
        auto e = std::make_shared<CovExpr>();
        e->kind = Kind::Leaf;
        e->name = std::move(n);
        return e;
    }
    static CovExprPtr xy(int xe, int ye) {
        auto e = std::make_shared<CovExpr>();
        e->kind = Kind::XYMono;
        e->xe = xe;
        e->ye = ye;
        return e;
    }
    static CovExprPtr transv(CovExprPtr a, CovExprPtr b, int k) {
        auto e = std::make_shared<CovExpr>();
        e->kind = Kind::Transv;
        e->a = std::move(a);
        e->b = std::move(b);
        e->arg = k;
        return e;
    }
    static CovExprPtr prod(CovExprPtr a, CovExprPtr b) {
        auto e = std::make_shared<CovExpr>();
        e->kind = Kind::Prod;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }
    static CovExprPtr pow(CovExprPtr a, int n) {
        auto e = std::make_shared<CovExpr>();
        e->kind = Kind::Pow;
        e->a = std::move(a);
        e->arg = n;
        return e;
    }
    static CovExprPtr sum(CovExprPtr a, CovExprPtr b) {
        auto e = std::make_shared<CovExpr>();
        e->kind = Kind::Sum;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Leaf:
                return name;
            case Kind::XYMono: {
                std::string s;
                auto app = [&](const char* v, int e) {
                    if (e == 0) return;
                    s += v;
                    if (e > 1) s += "^" + std::to_string(e);
                };
                app("x", xe);
                app("y", ye);
                return s.empty() ? "1" : s;
            }
            case Kind::Transv:
                return "(" + a->str() + "," + b->str() + ")_" + std::to_string(arg);
            case Kind::Prod:
                return a->str() + "*" + b->str();
            case Kind::Pow:
                return maybe_paren(a) + "^" + std::to_string(arg);
            case Kind::Sum:
                return a->str() + "+" + b->str();
        }
        return "?";
    }

private:
    static std::string maybe_paren(const CovExprPtr& e) {
        std::string s = e->str();
        if (e->kind == Kind::Prod || e->kind == Kind::Sum) return "(" + s + ")";
        return s;
    }
};

/// Evaluate a recipe against an environment of named forms. Results for
/// shared subtrees are cached per call.
template <class R>
BForm<R> eval_expr(const CovExprPtr& expr, const std::map<std::string, BForm<R>>& env,
                   std::map<const CovExpr*, BForm<R>>* cache = nullptr) {
    std::map<const CovExpr*, BForm<R>> local;
    if (!cache) cache = &local;
    std::function<BForm<R>(const CovExprPtr&)> go = [&](const CovExprPtr& e) -> BForm<R> {
        auto it = cache->find(e.get());
        if (it != cache->end()) return it->second;
        BForm<R> r = [&]() -> BForm<R> {
            switch (e->kind) {
                case CovExpr::Kind::Leaf: {
                    auto f = env.find(e->name);
                    if (f == env.end())
                        throw std::out_of_range("eval_expr: unbound name " + e->name);
                    return f->second;
                }
                case CovExpr::Kind::XYMono: {
                    const auto& any = env.begin()->second;
                    return xy_monomial_form(any.body.vars(), any.body.ring(), e->xe, e->ye);
                }
                case CovExpr::Kind::Transv:
                    return transvectant(go(e->a), go(e->b), e->arg);
                case CovExpr::Kind::Prod:
                    return form_product(go(e->a), go(e->b));
                case CovExpr::Kind::Pow:
                    return form_pow(go(e->a), e->arg);
                case CovExpr::Kind::Sum:
                    return form_sum(go(e->a), go(e->b));
            }
            throw std::logic_error("eval_expr: bad kind");
        }();
        cache->emplace(e.get(), r);
        return r;
    };
    return go(expr);
}

} // namespace decinv
