#include "lstirling/transforms.hpp"

#include "lstirling/errors.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace lstirling {

namespace {

void require_lambda(const Rational& lambda) {
    if (lambda == 0) throw DegenerateLambda("transform needs lambda != 0");
}

}  // namespace

std::shared_ptr<const Triangle> cached_triangle(Kind kind, const Rational& r,
                                                const Rational& lambda, unsigned n_min) {
    using Key = std::tuple<Kind, Rational, Rational>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const Triangle>> cache;

    Key key{kind, r, lambda};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end() || it->second->n_max < n_min) {
        // grow in chunks so repeated +1 requests do not rebuild every time
        unsigned n_build = std::max(n_min, it == cache.end() ? n_min : it->second->n_max * 2);
        auto t = std::make_shared<const Triangle>(triangle(kind, n_build, r, lambda));
        cache[key] = t;
        return t;
    }
    return it->second;
}

Rational orthogonality_defect(unsigned n, unsigned l, const Rational& r, const Rational& lambda,
                              OrthogonalitySide side) {
    require_lambda(lambda);
    auto first = cached_triangle(Kind::first_unsigned, r, lambda, n);
    auto second = cached_triangle(Kind::second, r, lambda, n);
    Rational sum(0);
    for (unsigned k = l; k <= n; ++k) {
        Rational term = side == OrthogonalitySide::a
                            ? first->at(n, k) * second->at(k, l)
                            : first->at(k, l) * second->at(n, k);
        unsigned sign = side == OrthogonalitySide::a ? n - k : k - l;
        sum += sign % 2 == 1 ? -term : term;
    }
    return sum - Rational(n == l ? 1 : 0);
}

FiniteSequence stirling2_transform(const FiniteSequence& c, const Rational& r,
                                   const Rational& lambda) {
    require_lambda(lambda);
    if (c.empty()) return {};
    auto t = cached_triangle(Kind::second, r, lambda, static_cast<unsigned>(c.size()) - 1);
    FiniteSequence a(c.size());
    for (unsigned n = 0; n < c.size(); ++n) {
        Rational sum(0);
        for (unsigned k = 0; k <= n; ++k) sum += t->at(n, k) * c[k];
        a[n] = sum;
    }
    return a;
}

FiniteSequence stirling1_inverse_transform(const FiniteSequence& a, const Rational& r,
                                           const Rational& lambda) {
    require_lambda(lambda);
    if (a.empty()) return {};
    auto t = cached_triangle(Kind::first_unsigned, r, lambda, static_cast<unsigned>(a.size()) - 1);
    FiniteSequence c(a.size());
    for (unsigned n = 0; n < a.size(); ++n) {
        Rational sum(0);
        for (unsigned k = 0; k <= n; ++k) {
            Rational term = t->at(n, k) * a[k];
            sum += (n - k) % 2 == 1 ? -term : term;
        }
        c[n] = sum;
    }
    return c;
}

FiniteSequence dual_stirling2_transform(const FiniteSequence& c, unsigned m, const Rational& r,
                                        const Rational& lambda) {
    require_lambda(lambda);
    if (c.size() != m + 1) throw DomainError("dual transform needs length m+1");
    auto t = cached_triangle(Kind::second, r, lambda, m);
    FiniteSequence a(m + 1);
    for (unsigned n = 0; n <= m; ++n) {
        Rational sum(0);
        for (unsigned k = n; k <= m; ++k) sum += t->at(k, n) * c[k];
        a[n] = sum;
    }
    return a;
}

FiniteSequence dual_stirling1_inverse_transform(const FiniteSequence& a, unsigned m,
                                                const Rational& r, const Rational& lambda) {
    require_lambda(lambda);
    if (a.size() != m + 1) throw DomainError("dual transform needs length m+1");
    auto t = cached_triangle(Kind::first_unsigned, r, lambda, m);
    FiniteSequence c(m + 1);
    for (unsigned n = 0; n <= m; ++n) {
        Rational sum(0);
        for (unsigned k = n; k <= m; ++k) {
            Rational term = t->at(k, n) * a[k];
            sum += (k - n) % 2 == 1 ? -term : term;
        }
        c[n] = sum;
    }
    return c;
}

}  // namespace lstirling
