#include "torlist/structured.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "torlist/alon_tarsi.hpp"
#include "torlist/errors.hpp"
#include "torlist/json_io.hpp"

namespace torlist {

namespace {

bool list_has(const ListAssignment& L, VertexId v, ColorId c) {
    const auto& l = L.lists[v];
    return std::binary_search(l.begin(), l.end(), c);
}

int uniform_size(const SidedPath& p, const ListAssignment& L) {
    int k = -1;
    for (VertexId v : p.seq) {
        int sz = static_cast<int>(L.lists[v].size());
        if (k == -1) k = sz;
        if (sz != k || sz == 0)
            throw invalid_parameter("path coloring requires uniform nonempty lists");
    }
    return k;
}

} // namespace

std::vector<int> list_run(const SidedPath& p, const ListAssignment& L, int start_pos, ColorId c) {
    int len = p.length();
    if (start_pos < 0 || start_pos >= len) throw invalid_parameter("start position out of range");
    if (!list_has(L, p.seq[start_pos], c))
        throw invalid_parameter("start vertex list does not contain the color");

    if (p.is_cycle) {
        std::vector<int> run = {start_pos};
        int fwd = start_pos;
        for (int step = 1; step < len; ++step) {
            int nxt = (fwd + 1) % len;
            if (!list_has(L, p.seq[nxt], c)) break;
            run.push_back(nxt);
            fwd = nxt;
        }
        if (static_cast<int>(run.size()) == len) return run; // whole cycle
        int bwd = start_pos;
        for (;;) {
            int prv = (bwd - 1 + len) % len;
            if (!list_has(L, p.seq[prv], c)) break;
            run.insert(run.begin(), prv);
            bwd = prv;
        }
        return run;
    }

    int lo = start_pos, hi = start_pos;
    while (lo > 0 && list_has(L, p.seq[lo - 1], c)) --lo;
    while (hi + 1 < len && list_has(L, p.seq[hi + 1], c)) ++hi;
    std::vector<int> run(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) run[i - lo] = i;
    return run;
}

ColorId escape_color(const ListAssignment& L, VertexId avoid, VertexId from) {
    const auto& lf = L.lists[from];
    const auto& la = L.lists[avoid];
    for (ColorId c : lf)
        if (!std::binary_search(la.begin(), la.end(), c)) return c;
    throw precondition_error("no escape color: list is contained in the avoided list");
}

void color_alternating_path(const SidedPath& p, const ListAssignment& L, int start_pos,
                            std::optional<ColorId> forced, Coloring& out,
                            std::vector<ColorId>* segment_colors) {
    if (p.is_cycle) throw invalid_parameter("path coloring requires a linear path");
    int len = p.length();
    if (len < 2) throw invalid_parameter("path coloring requires at least 2 vertices");
    if (start_pos != 0 && start_pos != len - 1)
        throw invalid_parameter("start must be an end point");
    uniform_size(p, L);

    int dir = start_pos == 0 ? 1 : -1;
    int cur = start_pos;
    ColorId c;
    if (forced) {
        if (!list_has(L, p.seq[cur], *forced))
            throw invalid_parameter("forced color not in the start vertex's list");
        c = *forced;
    } else {
        c = L.lists[p.seq[cur]].front();
    }

    for (;;) {
        // the run of the current color starting at cur, extending inward
        int last = cur;
        if (p.to_color[cur]) out.assignment[p.seq[cur]] = c;
        while (last + dir >= 0 && last + dir < len && list_has(L, p.seq[last + dir], c)) {
            last += dir;
            if (p.to_color[last]) out.assignment[p.seq[last]] = c;
        }
        if (segment_colors) segment_colors->push_back(c);
        if (last + dir < 0 || last + dir >= len) return; // run reached the far end
        int w = last + dir;
        c = escape_color(L, p.seq[last], p.seq[w]);
        cur = w;
    }
}

int max_other_side_loss(const SidedPath& p, const ListAssignment& L, const Coloring& col) {
    int len = p.length();
    int worst = 0;
    for (int pos = 0; pos < len; ++pos) {
        if (p.to_color[pos]) continue;
        std::set<ColorId> lost;
        for (int d : {-1, 1}) {
            int q = pos + d;
            if (p.is_cycle)
                q = (q + len) % len;
            else if (q < 0 || q >= len)
                continue;
            auto cq = col.color(p.seq[q]);
            if (cq && list_has(L, p.seq[pos], *cq)) lost.insert(*cq);
        }
        worst = std::max(worst, static_cast<int>(lost.size()));
    }
    return worst;
}

namespace {

// Maximal runs of positions whose lists contain c, in scan order starting
// just after the first position lacking c. Some position must lack c (a
// color on every list is consumed by case (a) before runs are scanned).
std::vector<std::vector<int>> cycle_runs(const SidedPath& p, const ListAssignment& L, ColorId c) {
    int len = p.length();
    int gap = -1;
    for (int pos = 0; pos < len; ++pos)
        if (!list_has(L, p.seq[pos], c)) {
            gap = pos;
            break;
        }
    if (gap == -1) throw internal_error("run scan reached a color present on every list");
    std::vector<std::vector<int>> runs;
    std::vector<int> current;
    for (int step = 1; step <= len; ++step) {
        int pos = (gap + step) % len;
        if (list_has(L, p.seq[pos], c)) {
            current.push_back(pos);
        } else if (!current.empty()) {
            runs.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) runs.push_back(std::move(current));
    return runs;
}

// Linear remainder of the cycle after removing a run, starting at the
// position after the run's back and walking forward; may be empty.
SidedPath cycle_minus_run(const SidedPath& c, const std::vector<int>& run) {
    int len = c.length();
    SidedPath p;
    int start = (run.back() + 1) % len;
    for (int i = 0; i < len - static_cast<int>(run.size()); ++i) {
        int pos = (start + i) % len;
        p.seq.push_back(c.seq[pos]);
        p.to_color.push_back(c.to_color[pos]);
    }
    return p;
}

} // namespace

CycleTrace color_grid_cycle(const SidedPath& cyc, const ListAssignment& L, Coloring& out) {
    if (!cyc.is_cycle) throw invalid_parameter("cycle coloring requires a cycle");
    int len = cyc.length();
    if (len < 4 || len % 2 != 0) throw invalid_parameter("cycle must be even of length >= 4");
    for (int pos = 0; pos < len; ++pos)
        if (cyc.to_color[pos] == cyc.to_color[(pos + 1) % len])
            throw invalid_parameter("cycle sides must alternate");
    uniform_size(cyc, L);

    CycleTrace trace;
    trace.length = len;

    // (a) a color common to every list on the side being colored
    {
        std::vector<ColorId> common;
        bool first = true;
        for (int pos = 0; pos < len; ++pos) {
            if (!cyc.to_color[pos]) continue;
            const auto& l = L.lists[cyc.seq[pos]];
            if (first) {
                common = l;
                first = false;
            } else {
                std::vector<ColorId> tmp;
                std::set_intersection(common.begin(), common.end(), l.begin(), l.end(),
                                      std::back_inserter(tmp));
                common = std::move(tmp);
            }
        }
        if (!common.empty()) {
            ColorId c = common.front();
            for (int pos = 0; pos < len; ++pos)
                if (cyc.to_color[pos]) out.assignment[cyc.seq[pos]] = c;
            trace.case_taken = 'a';
            trace.colors = {c};
            trace.max_loss = max_other_side_loss(cyc, L, out);
            if (trace.max_loss > 1) throw internal_error("cycle case (a) loss bound violated");
            return trace;
        }
    }

    std::set<ColorId> palette;
    for (VertexId v : cyc.seq) palette.insert(L.lists[v].begin(), L.lists[v].end());

    auto color_run_and_finish = [&](ColorId c, const std::vector<int>& run, char which,
                                    bool reverse_rest, std::optional<ColorId> forced_color) {
        for (int pos : run)
            if (cyc.to_color[pos]) out.assignment[cyc.seq[pos]] = c;
        trace.case_taken = which;
        trace.colors = {c};
        SidedPath rest = cycle_minus_run(cyc, run);
        if (reverse_rest) {
            std::reverse(rest.seq.begin(), rest.seq.end());
            std::reverse(rest.to_color.begin(), rest.to_color.end());
        }
        if (rest.length() >= 2)
            color_alternating_path(rest, L, 0, forced_color, out, &trace.colors);
        trace.max_loss = max_other_side_loss(cyc, L, out);
        if (trace.max_loss > 1)
            throw internal_error(std::string("cycle case (") + which + ") loss bound violated");
    };

    // (b) some color with an even-order run: color it, then walk the rest
    // from the colored-side neighbor of the run's other-side end, forced to
    // an escape color.
    for (ColorId c : palette) {
        for (const auto& run : cycle_runs(cyc, L, c)) {
            if (run.size() % 2 != 0) continue;
            int front = run.front(), back = run.back();
            int v2 = cyc.to_color[back] ? front : back; // other-side end of the run
            int w2 = v2 == back ? (back + 1) % len : (front - 1 + len) % len;
            ColorId d = escape_color(L, cyc.seq[v2], cyc.seq[w2]);
            // the remainder walk must begin at w2; when v2 is the run's
            // front, w2 sits at the far end of the forward remainder
            color_run_and_finish(c, run, 'b', v2 == front, d);
            return trace;
        }
    }

    // (c) all runs odd: find one with both ends on the colored side, directly
    // or through the escape-color construction, then walk the rest freely.
    for (ColorId c : palette) {
        for (const auto& run : cycle_runs(cyc, L, c)) {
            if (cyc.to_color[run.front()] && cyc.to_color[run.back()]) {
                color_run_and_finish(c, run, 'c', false, std::nullopt);
                return trace;
            }
        }
    }
    for (ColorId c : palette) {
        for (const auto& run : cycle_runs(cyc, L, c)) {
            if (cyc.to_color[run.front()] || cyc.to_color[run.back()]) continue;
            int v = run.back();
            int w = (v + 1) % len; // outside the run, on the colored side
            ColorId c2 = escape_color(L, cyc.seq[v], cyc.seq[w]);
            auto runs2 = cycle_runs(cyc, L, c2);
            for (const auto& run2 : runs2) {
                if (std::find(run2.begin(), run2.end(), w) == run2.end()) continue;
                if (!cyc.to_color[run2.front()] || !cyc.to_color[run2.back()])
                    throw internal_error("constructed run does not end on the colored side");
                color_run_and_finish(c2, run2, 'c', false, std::nullopt);
                return trace;
            }
            throw internal_error("escape color has no run through the witness vertex");
        }
    }
    throw internal_error("cycle case analysis exhausted; contradicts the coloring argument");
}

ListAssignment residual_lists(const TorusTriangulation& T, const ClassPartition& part,
                              const ListAssignment& L, const Coloring& partial,
                              const Subgraph& g1) {
    if (L.size() != T.graph.n) throw invalid_parameter("lists must cover the triangulation");
    for (const auto& [v, c] : partial.assignment) {
        (void)c;
        if (v < 0 || v >= T.graph.n || part.cls[v] != 0)
            throw invalid_parameter("partial coloring must cover class 0 only");
    }
    for (VertexId v : part.members[0])
        if (!partial.assignment.count(v))
            throw invalid_parameter("partial coloring must cover all of class 0");

    auto nbrs = T.graph.neighbor_sets();
    ListAssignment out(g1.graph.n);
    for (VertexId v = 0; v < g1.graph.n; ++v) {
        VertexId u = g1.to_parent[v];
        std::set<ColorId> blocked;
        for (VertexId w : nbrs[u]) {
            auto cw = partial.color(w);
            if (cw) blocked.insert(*cw);
        }
        for (ColorId c : L.lists[u])
            if (!blocked.count(c)) out.lists[v].push_back(c);
    }
    return out;
}

Coloring five_list_color(const TorusTriangulation& T, const ListAssignment& L,
                         FiveListTrace* trace) {
    const auto& p = T.params;
    if (!T.graph.is_simple())
        throw precondition_error("five-list coloring requires a simple instance");
    if (p.s % 3 != 0 || (p.r - p.t) % 3 != 0)
        throw precondition_error("five-list coloring requires a 3-chromatic instance");
    if (L.size() != T.graph.n) throw invalid_parameter("lists must cover the triangulation");
    ListAssignment lists = L;
    lists.normalize();
    if (!lists.is_uniform(5))
        throw invalid_parameter("lists must all have exactly 5 distinct colors");

    auto bundle = [&]() {
        return " [instance " + to_json(T).dump() + " lists " + to_json(L).dump() + "]";
    };

    ClassPartition part = canonical_three_coloring(T);
    Subgraph grid = grid_subgraph(T, part);

    Coloring partial;
    FiveListTrace local;
    for (const auto& cycle : cycle_decomposition(grid.graph)) {
        SidedPath sp;
        sp.is_cycle = true;
        for (VertexId v : cycle) {
            VertexId u = grid.to_parent[v];
            sp.seq.push_back(u);
            sp.to_color.push_back(part.cls[u] == 0);
        }
        local.cycles.push_back(color_grid_cycle(sp, lists, partial));
    }
    for (VertexId v : part.members[0])
        if (!partial.assignment.count(v))
            throw internal_error("class 0 not fully colored" + bundle());

    Subgraph g1 = completion_subgraph(T, part);
    ListAssignment residual = residual_lists(T, part, lists, partial, g1);
    local.min_residual_class1 = local.min_residual_class2 = 5;
    for (VertexId v = 0; v < g1.graph.n; ++v) {
        int sz = static_cast<int>(residual.lists[v].size());
        int& slot = part.cls[g1.to_parent[v]] == 1 ? local.min_residual_class1
                                                   : local.min_residual_class2;
        slot = std::min(slot, sz);
    }
    if (local.min_residual_class1 < 3 || local.min_residual_class2 < 2)
        throw internal_error("residual list guarantee violated" + bundle());

    // Orientation certificate: outdegree profile plus the list bound; the
    // backtracking completion below is then guaranteed to succeed.
    Orientation orient = orient_completion_subgraph(T, part, g1);
    if (!at_list_bound_check(orient, residual))
        throw internal_error("residual lists fail the orientation bound" + bundle());

    auto completed = find_list_coloring(g1.graph, residual);
    if (!completed) throw internal_error("completion coloring did not exist" + bundle());

    Coloring full = partial;
    for (const auto& [v, c] : completed->assignment) full.assignment[g1.to_parent[v]] = c;
    if (!verify_coloring(T.graph, full, &lists))
        throw internal_error("pipeline produced an invalid coloring" + bundle());

    if (trace) *trace = std::move(local);
    return full;
}

} // namespace torlist
