#pragma once

#include "coframe/error.hpp"

#include <type_traits>

namespace coframe {

template <typename F>
auto richardson_partial(const F& f, const Point3& p, int k, double h)
{
    auto at = [&](double offset) {
        Point3 q = p;
        q.x(k) += offset;
        if (!admissible(q))
            throw Error(ErrorKind::StepOutOfChart, "finite-difference stencil leaves the chart",
                        {q.x(0), q.x(1), q.x(2)});
        return f(q);
    };
    using Value = std::decay_t<decltype(f(p))>;
    const Value coarse = (at(h) - at(-h)) / (2.0 * h);
    const Value fine = (at(0.5 * h) - at(-0.5 * h)) / h;
    return Value((4.0 * fine - coarse) / 3.0);
}

} // namespace coframe
