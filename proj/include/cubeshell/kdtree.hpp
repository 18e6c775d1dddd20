#pragma once

// Static 2-d tree over exact planar points. Traversal order and pruning use
// double shadows of the coordinates with a conservative slack; every answer
// that is reported as exact is confirmed with rational arithmetic.

#include "cubeshell/planar.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace cubeshell {

class KdTree {
public:
    KdTree() = default;

    explicit KdTree(std::vector<Vec2> pts) : pts_(std::move(pts)) {
        const std::size_t n = pts_.size();
        xs_.resize(n);
        ys_.resize(n);
        double scale = 1;
        for (std::size_t i = 0; i < n; ++i) {
            xs_[i] = to_double(pts_[i].x);
            ys_[i] = to_double(pts_[i].y);
            scale = std::max({scale, std::abs(xs_[i]), std::abs(ys_[i])});
        }
        slack_ = 1e-9 * scale;
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<std::uint32_t>(i);
        if (n) build(0, n);
    }

    std::size_t size() const noexcept { return pts_.size(); }
    const Vec2& point(std::size_t i) const { return pts_[i]; }
    double slack() const noexcept { return slack_; }

    /// All indices i with linf(q, point(i)) <= d, in increasing index order.
    std::vector<std::size_t> within(const Vec2& q, const Scalar& d) const {
        std::vector<std::size_t> out;
        if (nodes_.empty()) return out;
        const double qx = to_double(q.x), qy = to_double(q.y), dd = to_double(d) + slack_;
        std::vector<std::uint32_t> stack{0};
        while (!stack.empty()) {
            const Node& nd = nodes_[stack.back()];
            stack.pop_back();
            if (box_dist(nd, qx, qy) > dd) continue;
            if (nd.left < 0) {
                for (std::size_t k = nd.begin; k < nd.end; ++k) {
                    std::uint32_t i = order_[k];
                    if (std::max(std::abs(xs_[i] - qx), std::abs(ys_[i] - qy)) <= dd && linf(q, pts_[i]) <= d)
                        out.push_back(i);
                }
            } else {
                stack.push_back(static_cast<std::uint32_t>(nd.left));
                stack.push_back(static_cast<std::uint32_t>(nd.right));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Exact nearest point under the order (L-inf, then L1, then index).
    std::size_t nearest(const Vec2& q) const {
        if (nodes_.empty()) throw UsageError("KdTree::nearest: empty tree");
        std::size_t best = nearest_approx(to_double(q.x), to_double(q.y));
        Scalar bd = linf(q, pts_[best]);
        // Everything within bd is a contender; the double search only seeds it.
        for (std::size_t i : within(q, bd)) {
            Scalar d = linf(q, pts_[i]);
            if (d < bd) {
                bd = d;
                best = i;
            } else if (d == bd) {
                Scalar a = l1(q, pts_[i]), b = l1(q, pts_[best]);
                if (a < b || (a == b && i < best)) best = i;
            }
        }
        return best;
    }

    /// Nearest point in double arithmetic; a hint, not an answer.
    std::size_t nearest_approx(double qx, double qy) const {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        std::vector<std::uint32_t> stack{0};
        while (!stack.empty()) {
            const Node& nd = nodes_[stack.back()];
            stack.pop_back();
            if (box_dist(nd, qx, qy) > bd) continue;
            if (nd.left < 0) {
                for (std::size_t k = nd.begin; k < nd.end; ++k) {
                    std::uint32_t i = order_[k];
                    double d = std::max(std::abs(xs_[i] - qx), std::abs(ys_[i] - qy));
                    if (d < bd) {
                        bd = d;
                        best = i;
                    }
                }
            } else {
                const Node& l = nodes_[nd.left];
                const Node& r = nodes_[nd.right];
                bool left_first = box_dist(l, qx, qy) <= box_dist(r, qx, qy);
                stack.push_back(static_cast<std::uint32_t>(left_first ? nd.right : nd.left));
                stack.push_back(static_cast<std::uint32_t>(left_first ? nd.left : nd.right));
            }
        }
        return best;
    }

    /// Points in nondecreasing (double) L-inf distance from a query.
    class Walker {
    public:
        Walker(const KdTree& tree, const Vec2& q) : t_(tree), qx_(to_double(q.x)), qy_(to_double(q.y)) {
            if (!t_.nodes_.empty()) heap_.push({t_.box_dist(t_.nodes_[0], qx_, qy_), 0, false});
        }

        /// Next point index and its approximate distance; false when exhausted.
        bool next(std::size_t& index, double& dist) {
            while (!heap_.empty()) {
                Item it = heap_.top();
                heap_.pop();
                if (it.is_point) {
                    index = it.id;
                    dist = it.key;
                    return true;
                }
                const Node& nd = t_.nodes_[it.id];
                if (nd.left < 0) {
                    for (std::size_t k = nd.begin; k < nd.end; ++k) {
                        std::uint32_t i = t_.order_[k];
                        heap_.push({std::max(std::abs(t_.xs_[i] - qx_), std::abs(t_.ys_[i] - qy_)), i, true});
                    }
                } else {
                    heap_.push({t_.box_dist(t_.nodes_[nd.left], qx_, qy_), static_cast<std::uint32_t>(nd.left), false});
                    heap_.push(
                        {t_.box_dist(t_.nodes_[nd.right], qx_, qy_), static_cast<std::uint32_t>(nd.right), false});
                }
            }
            return false;
        }

    private:
        struct Item {
            double key;
            std::uint32_t id;
            bool is_point;
            bool operator>(const Item& o) const { return key > o.key; }
        };
        const KdTree& t_;
        double qx_, qy_;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap_;
    };

private:
    struct Node {
        std::size_t begin, end;
        double xlo, xhi, ylo, yhi;
        std::int64_t left = -1, right = -1;
    };

    static constexpr std::size_t kLeaf = 8;

    std::int64_t build(std::size_t begin, std::size_t end) {
        Node nd{begin, end, xs_[order_[begin]], xs_[order_[begin]], ys_[order_[begin]], ys_[order_[begin]]};
        for (std::size_t k = begin; k < end; ++k) {
            std::uint32_t i = order_[k];
            nd.xlo = std::min(nd.xlo, xs_[i]);
            nd.xhi = std::max(nd.xhi, xs_[i]);
            nd.ylo = std::min(nd.ylo, ys_[i]);
            nd.yhi = std::max(nd.yhi, ys_[i]);
        }
        auto id = static_cast<std::int64_t>(nodes_.size());
        nodes_.push_back(nd);
        if (end - begin > kLeaf) {
            bool by_x = (nd.xhi - nd.xlo) >= (nd.yhi - nd.ylo);
            std::size_t mid = (begin + end) / 2;
            std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                             order_.begin() + static_cast<std::ptrdiff_t>(mid),
                             order_.begin() + static_cast<std::ptrdiff_t>(end),
                             [&](std::uint32_t a, std::uint32_t b) { return by_x ? xs_[a] < xs_[b] : ys_[a] < ys_[b]; });
            std::int64_t l = build(begin, mid);
            std::int64_t r = build(mid, end);
            nodes_[static_cast<std::size_t>(id)].left = l;
            nodes_[static_cast<std::size_t>(id)].right = r;
        }
        return id;
    }

    static double box_dist(const Node& nd, double qx, double qy) {
        double dx = std::max({nd.xlo - qx, 0.0, qx - nd.xhi});
        double dy = std::max({nd.ylo - qy, 0.0, qy - nd.yhi});
        return std::max(dx, dy);
    }

    std::vector<Vec2> pts_;
    std::vector<double> xs_, ys_;
    std::vector<std::uint32_t> order_;
    std::vector<Node> nodes_;
    double slack_ = 0;
};

}  // namespace cubeshell
