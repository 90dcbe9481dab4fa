/*
 *   Copyright 2026 The polycert authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "polycert/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace polycert {

namespace {

constexpr long kGridBudget = 1L << 21;

int thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("POLYCERT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < 1024) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return static_cast<int>(hw);
}

// Runs fn(begin, end) over [0, total) in contiguous chunks; the returned
// per-chunk results are reduced by the caller in chunk order, keeping the
// overall outcome independent of the thread count.
template <typename R, typename Fn>
std::vector<R> map_chunks(long total, Fn fn) {
    int nthreads = thread_budget();
    long chunk = std::max<long>(1024, (total + nthreads - 1) / nthreads);
    std::vector<std::future<R>> futures;
    for (long begin = 0; begin < total; begin += chunk) {
        long end = std::min(total, begin + chunk);
        futures.push_back(std::async(std::launch::async, [fn, begin, end] { return fn(begin, end); }));
    }
    std::vector<R> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

std::vector<Rational> axis_values(const SampleConfig& config, bool strictly_positive) {
    if (config.compact_per_axis < 2 || config.box_per_axis < 2 || config.box_max <= 0)
        throw std::invalid_argument("invalid sample configuration");
    std::set<Rational> values;
    for (int j = 0; j < config.box_per_axis; ++j)
        values.insert(Rational(j) * config.box_max / Rational(config.box_per_axis - 1));
    for (int j = 0; j < config.compact_per_axis; ++j) {
        // t = j/N, s = t/(1-t) = j/(N-j)
        values.insert(Rational(j) / Rational(config.compact_per_axis - j));
    }
    std::vector<Rational> out(values.begin(), values.end());
    if (strictly_positive && !out.empty() && out.front() == 0) out.erase(out.begin());
    return out;
}

// Deterministically thins axes until the full product grid fits the budget.
std::vector<std::vector<Rational>> build_grid(const SampleConfig& config, int dim,
                                              bool strictly_positive) {
    std::vector<Rational> axis = axis_values(config, strictly_positive);
    auto total = [&](const std::vector<Rational>& a) {
        double t = 1;
        for (int i = 0; i < dim; ++i) t *= static_cast<double>(a.size());
        return t;
    };
    while (total(axis) > static_cast<double>(kGridBudget) && axis.size() > 3) {
        std::vector<Rational> thinned;
        for (std::size_t i = 0; i < axis.size(); i += 2) thinned.push_back(axis[i]);
        if (thinned.back() != axis.back()) thinned.push_back(axis.back());
        axis.swap(thinned);
    }
    return std::vector<std::vector<Rational>>(dim, axis);
}

long grid_size(const std::vector<std::vector<Rational>>& grid) {
    long n = 1;
    for (const auto& axis : grid) n *= static_cast<long>(axis.size());
    return n;
}

EvaluationPoint point_at(const std::vector<std::vector<Rational>>& grid, long index) {
    EvaluationPoint p(grid.size());
    for (int i = static_cast<int>(grid.size()) - 1; i >= 0; --i) {
        long n = static_cast<long>(grid[i].size());
        p[i] = grid[i][index % n];
        index /= n;
    }
    return p;
}

double evaluate_double(const Polynomial& p, const std::vector<double>& s) {
    double total = 0;
    for (const auto& [e, c] : p.terms()) {
        double term = c.get_d();
        for (std::size_t i = 0; i < s.size(); ++i)
            if (e[i] != 0) term *= std::pow(s[i], e[i]);
        total += term;
    }
    return total;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// log x(s) / log y(s) with the conventions 0/0 := inf and c/0 := inf.
double log_ratio(const Polynomial& x, const Polynomial& y, const std::vector<double>& s) {
    double xv = evaluate_double(x, s);
    double yv = evaluate_double(y, s);
    double lx = xv > 1 ? std::log(xv) : 0;
    double ly = yv > 1 ? std::log(yv) : 0;
    if (ly == 0) return kInf;
    return lx / ly;
}

std::vector<double> to_doubles(const EvaluationPoint& p) {
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i].get_d();
    return out;
}

}  // namespace

std::string format_point(const EvaluationPoint& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << rational_to_string(p[i]);
    }
    os << ')';
    return os.str();
}

std::string SampleConfig::describe() const {
    std::ostringstream os;
    os << "compact=" << compact_per_axis << " box=" << box_per_axis << "x"
       << rational_to_string(box_max) << " rounds=" << refine_rounds;
    return os.str();
}

PointwiseResult pointwise_check(const SemiringInstance& inst, const Polynomial& x,
                                const Polynomial& y, const SampleConfig& config) {
    if (!is_member(inst, x) || !is_member(inst, y))
        throw std::invalid_argument("pointwise_check arguments must be members of the instance");
    const Polynomial diff = x - y;
    const auto grid = build_grid(config, inst.dimension, inst.laurent);
    const long total = grid_size(grid);

    struct Chunk {
        long witness_index = -1;
        Rational min_gap;
        long min_index = -1;
    };
    auto worker = [&](long begin, long end) {
        Chunk c;
        for (long i = begin; i < end; ++i) {
            EvaluationPoint p = point_at(grid, i);
            Rational v = diff.evaluate(p);
            if (c.min_index < 0 || v < c.min_gap) {
                c.min_gap = v;
                c.min_index = i;
            }
            if (v < 0) {
                c.witness_index = i;
                break;  // earliest in this chunk; earlier chunks win overall
            }
        }
        return c;
    };
    auto chunks = map_chunks<Chunk>(total, worker);

    PointwiseResult result;
    result.samples = total;
    long witness = -1;
    long min_index = -1;
    for (const auto& c : chunks) {
        if (c.min_index >= 0 && (min_index < 0 || c.min_gap < result.min_gap)) {
            result.min_gap = c.min_gap;
            min_index = c.min_index;
        }
        if (witness < 0 && c.witness_index >= 0) witness = c.witness_index;
    }
    if (min_index >= 0) result.min_gap_point = point_at(grid, min_index);
    if (witness >= 0) {
        EvaluationPoint p = point_at(grid, witness);
        result.x_at_witness = x.evaluate(p);
        result.y_at_witness = y.evaluate(p);
        result.counterexample = std::move(p);
        result.holds_on_samples = false;
    } else {
        result.holds_on_samples = true;
    }
    return result;
}

std::optional<EvaluationPoint> ideal_pointwise_witness(const Polynomial& f,
                                                       const std::vector<Polynomial>& gens,
                                                       const SampleConfig& config) {
    const int d = f.dimension();
    const auto grid = build_grid(config, d, false);
    const long total = grid_size(grid);
    auto worker = [&](long begin, long end) {
        long found = -1;
        for (long i = begin; i < end; ++i) {
            EvaluationPoint p = point_at(grid, i);
            bool on_variety = true;
            for (const auto& g : gens)
                if (g.extended(d).evaluate(p) != 0) {
                    on_variety = false;
                    break;
                }
            if (on_variety && f.evaluate(p) < 0) {
                found = i;
                break;
            }
        }
        return found;
    };
    for (long idx : map_chunks<long>(total, worker))
        if (idx >= 0) return point_at(grid, idx);
    return std::nullopt;
}

RateResult rate(const SemiringInstance& inst, const Polynomial& x, const Polynomial& y,
                const SampleConfig& config) {
    if (!is_member(inst, x) || !is_member(inst, y))
        throw std::invalid_argument("rate arguments must be members of the instance");
    const Polynomial one = Polynomial::one(inst.dimension);
    if (!coeffwise_geq(x, one) || !coeffwise_geq(y, one))
        throw std::invalid_argument("rate requires x >= 1 and y >= 1 coefficientwise");

    RateResult result;
    result.resolution = config.describe();
    // constant-ratio argmin: the all-ones point is valid in every mode
    result.argmin.assign(inst.dimension, Rational(1));

    // Constant-ratio path: x = y^(a/b) forces a/b = deg x / deg y.
    const int dx = x.degree().value_or(0);
    const int dy = y.degree().value_or(0);
    if (dx >= 1 && dy >= 1) {
        int g = std::gcd(dx, dy);
        int a = dx / g, b = dy / g;
        if (a <= 16 && b <= 16 &&
            x.pow(static_cast<unsigned>(b)) == y.pow(static_cast<unsigned>(a))) {
            result.value = static_cast<double>(a) / static_cast<double>(b);
            result.exact = true;
            result.resolution += " (exact constant-ratio)";
            return result;
        }
    }
    if (x == y && x.term_count() > 1) {  // Laurent pairs elude the degree check above
        result.value = 1.0;
        result.exact = true;
        result.resolution += " (exact constant-ratio)";
        return result;
    }

    const auto grid = build_grid(config, inst.dimension, inst.laurent);
    const long total = grid_size(grid);
    struct Best {
        double value = kInf;
        long index = -1;
    };
    auto worker = [&](long begin, long end) {
        Best b;
        for (long i = begin; i < end; ++i) {
            double v = log_ratio(x, y, to_doubles(point_at(grid, i)));
            if (v < b.value) {
                b.value = v;
                b.index = i;
            }
        }
        return b;
    };
    Best best;
    for (const auto& b : map_chunks<Best>(total, worker))
        if (b.index >= 0 && b.value < best.value) best = b;

    EvaluationPoint incumbent =
        best.index >= 0 ? point_at(grid, best.index) : point_at(grid, 0);
    double value = best.value;

    // Local refinement: per round, a multiplicative ladder spanning one
    // decade around the incumbent in every axis.
    static const Rational kLadder[] = {Rational(1, 10), Rational(1, 6), Rational(1, 3),
                                       Rational(1, 2),  Rational(1),    Rational(2),
                                       Rational(3),     Rational(6),    Rational(10)};
    for (int round = 0; round < config.refine_rounds; ++round) {
        std::vector<std::vector<Rational>> local(inst.dimension);
        for (int i = 0; i < inst.dimension; ++i) {
            if (incumbent[i] == 0) {
                local[i] = {Rational(0)};
            } else {
                for (const auto& f : kLadder) local[i].push_back(incumbent[i] * f);
            }
        }
        long n = grid_size(local);
        for (long idx = 0; idx < n; ++idx) {
            EvaluationPoint p = point_at(local, idx);
            double v = log_ratio(x, y, to_doubles(p));
            if (v < value) {
                value = v;
                incumbent = p;
            }
        }
    }

    result.value = value;
    result.argmin = incumbent;
    return result;
}

}  // namespace polycert
