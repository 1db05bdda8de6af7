#include "homshift/cover.hpp"

#include <algorithm>
#include <deque>

namespace homshift {

CoverVertex::CoverVertex(std::vector<int> walk) : walk_(std::move(walk)) {
    if (walk_.empty()) fail(ErrorCode::invalid_input, "cover vertex walk is empty");
}

CoverVertex CoverVertex::parent() const {
    if (is_root()) fail(ErrorCode::invalid_input, "the cover root has no parent");
    std::vector<int> w(walk_.begin(), walk_.end() - 1);
    return CoverVertex(std::move(w));
}

namespace {

void check_walk(const Graph& h, const std::vector<int>& walk) {
    if (walk.empty()) fail(ErrorCode::invalid_input, "walk is empty");
    for (int v : walk)
        if (v < 0 || v >= h.vertex_count())
            fail(ErrorCode::invalid_input, "walk entry is not a graph vertex");
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!h.adjacent(walk[i], walk[i + 1]))
            fail(ErrorCode::invalid_input, "walk steps across a non-edge");
}

void check_reduced(const std::vector<int>& walk) {
    for (std::size_t i = 1; i + 1 < walk.size(); ++i)
        if (walk[i - 1] == walk[i + 1])
            fail(ErrorCode::invalid_input, "walk backtracks");
}

} // namespace

CoverVertex make_cover_vertex(const Graph& h, std::vector<int> walk) {
    check_walk(h, walk);
    check_reduced(walk);
    return CoverVertex(std::move(walk));
}

std::vector<CoverVertex> cover_neighbors(const Graph& h, const CoverVertex& v) {
    check_walk(h, v.walk());
    check_reduced(v.walk());
    std::vector<CoverVertex> out;
    if (!v.is_root()) out.push_back(v.parent());
    int last = v.terminal();
    int forbid = v.is_root() ? -1 : v.walk()[v.walk().size() - 2];
    for (int u : h.neighbors(last)) {
        if (u == forbid) continue;
        std::vector<int> w = v.walk();
        w.push_back(u);
        out.emplace_back(std::move(w));
    }
    return out;
}

std::vector<int> reduce_concat(const Graph& h, const std::vector<int>& p,
                               const std::vector<int>& q) {
    check_walk(h, p);
    check_walk(h, q);
    if (p.back() != q.front())
        fail(ErrorCode::invalid_input, "walks do not share an endpoint");
    // Full reduction via a stack; handles unreduced inputs too.
    std::vector<int> stack;
    auto push = [&stack](int v) {
        if (stack.size() >= 2 && stack[stack.size() - 2] == v)
            stack.pop_back();
        else
            stack.push_back(v);
    };
    stack.push_back(p.front());
    for (std::size_t i = 1; i < p.size(); ++i) push(p[i]);
    for (std::size_t i = 1; i < q.size(); ++i) push(q[i]);
    return stack;
}

namespace {

// Common-prefix vertex count of two walks.
std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

} // namespace

int cover_distance(const CoverVertex& p, const CoverVertex& q) {
    if (p.base() != q.base())
        fail(ErrorCode::invalid_input, "cover vertices have different bases");
    std::size_t c = common_prefix(p.walk(), q.walk());
    return p.length() + q.length() - 2 * (static_cast<int>(c) - 1);
}

std::vector<CoverVertex> cover_geodesic(const CoverVertex& from, const CoverVertex& to) {
    if (from.base() != to.base())
        fail(ErrorCode::invalid_input, "cover vertices have different bases");
    std::size_t c = common_prefix(from.walk(), to.walk());
    std::vector<CoverVertex> path;
    // climb from `from` down to the common prefix, then descend to `to`
    for (std::size_t len = from.walk().size(); len >= c; --len)
        path.emplace_back(std::vector<int>(from.walk().begin(), from.walk().begin() + len));
    for (std::size_t len = c + 1; len <= to.walk().size(); ++len)
        path.emplace_back(std::vector<int>(to.walk().begin(), to.walk().begin() + len));
    return path;
}

CoverVertex deck_transform(const Graph& h, const std::vector<int>& closed_walk,
                           const CoverVertex& v) {
    check_walk(h, closed_walk);
    if (closed_walk.front() != closed_walk.back())
        fail(ErrorCode::invalid_input, "deck transformation walk is not closed");
    if (closed_walk.front() != v.base())
        fail(ErrorCode::invalid_input, "deck transformation walk starts off base");
    return CoverVertex(reduce_concat(h, closed_walk, v.walk()));
}

std::vector<CoverVertex> enumerate_cover(const Graph& h, int base, int radius,
                                         std::size_t cap) {
    if (base < 0 || base >= h.vertex_count())
        fail(ErrorCode::invalid_input, "cover base is not a graph vertex");
    std::vector<CoverVertex> out;
    std::deque<std::pair<CoverVertex, int>> frontier;
    frontier.emplace_back(CoverVertex::root(base), 0);
    while (!frontier.empty()) {
        auto [v, dist] = frontier.front();
        frontier.pop_front();
        out.push_back(v);
        if (out.size() > cap)
            fail(ErrorCode::resource_limit, "cover enumeration exceeded cap");
        if (dist == radius) continue;
        for (auto& w : cover_neighbors(h, v))
            if (w.length() > v.length()) // children only; BFS never revisits
                frontier.emplace_back(std::move(w), dist + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace homshift
