#!/usr/bin/env python3
"""Brute-force oracle for the frozen expectations used by the C++ test suite.

Everything here is computed straight from the definitions (exhaustive path
enumeration, pairwise checks, permutation-based isomorphism).  Run it to
regenerate the constants that the unit and acceptance tests assert against;
the C++ library must reproduce these values through its own algorithms.
"""

from itertools import combinations, permutations, product

# ---------------------------------------------------------------------------
# fixtures

FIG1A = [
    ("r", "a"), ("r", "b"), ("a", "A"), ("b", "A"), ("b", "c"), ("b", "d"),
    ("a", "1"), ("A", "2"), ("c", "3"), ("c", "B"), ("B", "4"), ("d", "B"),
    ("d", "5"),
]
FIG1B = [
    ("r", "a"), ("r", "b"), ("a", "A"), ("b", "A"), ("a", "1"), ("b", "5"),
    ("A", "c"), ("A", "d"), ("c", "B"), ("c", "2"), ("d", "B"), ("d", "4"),
    ("B", "3"),
]
FIG2 = [
    ("r", "a"), ("r", "b"), ("r", "c"), ("a", "1"), ("a", "h"), ("b", "2"),
    ("b", "h"), ("c", "4"), ("c", "h"), ("h", "3"),
]


class Net:
    def __init__(self, arcs, extra_nodes=()):
        self.arcs = sorted(set(arcs))
        assert len(self.arcs) == len(arcs), "parallel arcs in fixture"
        self.nodes = sorted({u for u, _ in arcs} | {v for _, v in arcs} | set(extra_nodes))
        self.children = {v: sorted(c for u, c in self.arcs if u == v) for v in self.nodes}
        self.parents = {v: sorted(u for u, c in self.arcs if c == v) for v in self.nodes}
        roots = [v for v in self.nodes if not self.parents[v]]
        assert len(roots) == 1, roots
        self.root = roots[0]

    def hybrids(self):
        return [v for v in self.nodes if len(self.parents[v]) >= 2]

    def leaves(self):
        return [v for v in self.nodes if not self.children[v]]

    def descendants(self, u):
        seen, stack = {u}, [u]
        while stack:
            for c in self.children[stack.pop()]:
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        return seen

    def is_ancestor(self, u, v):
        return v in self.descendants(u)

    def mca(self, u, v):
        common = [c for c in self.nodes if self.is_ancestor(c, u) and self.is_ancestor(c, v)]
        return sorted(c for c in common
                      if not any(c != d and self.is_ancestor(c, d) for d in common))

    def paths_between(self, u, v):
        """All directed paths u ~> v, as node tuples."""
        out = []

        def walk(path):
            if path[-1] == v:
                out.append(tuple(path))
                return
            for c in self.children[path[-1]]:
                walk(path + [c])

        walk([u])
        return out

    def paths_ending_at(self, h):
        """All non-trivial paths ending at h, sorted (last arc, then lex)."""
        out = []
        for u in self.nodes:
            if u != h:
                out.extend(p for p in self.paths_between(u, h))
        return sorted(out, key=lambda p: (p[-2], p))

    def reticulation_cycles(self, h=None):
        """(split, end, pathA, pathB), pathA < pathB, sorted by (end, split, pathA)."""
        cycles = []
        for end in self.hybrids():
            if h is not None and end != h:
                continue
            paths = self.paths_ending_at(end)
            for p, q in combinations(paths, 2):
                if p[0] != q[0]:
                    continue
                if set(p[1:-1]) & set(q[1:-1]):
                    continue
                a, b = sorted((p, q))
                cycles.append((p[0], end, a, b))
        return sorted(cycles, key=lambda c: (c[1], c[0], c[2]))

    def intermediate_map(self):
        imap = {v: set() for v in self.nodes}
        for split, end, a, b in self.reticulation_cycles():
            for v in list(a[1:-1]) + list(b[1:-1]):
                imap[v].add(end)
        return imap

    def merge_paths(self, h):
        """Paths that take part in at least one reticulation cycle for h."""
        out = set()
        for _, _, a, b in self.reticulation_cycles(h):
            out.add(a)
            out.add(b)
        return sorted(out)

    # -- classes ------------------------------------------------------------

    def cycle_nodes(self, c):
        return set(c[2]) | set(c[3])

    def cycle_arcs(self, c):
        return {(p[i], p[i + 1]) for p in (c[2], c[3]) for i in range(len(p) - 1)}

    def is_galled(self):
        cs = self.reticulation_cycles()
        return all(not (self.cycle_nodes(x) & self.cycle_nodes(y))
                   for x, y in combinations(cs, 2))

    def is_weakly_galled(self):
        cs = self.reticulation_cycles()
        return all(not (self.cycle_arcs(x) & self.cycle_arcs(y))
                   for x, y in combinations(cs, 2))

    def nesting_depth(self):
        return max((len(s) for s in self.intermediate_map().values()), default=0)

    def is_1_nested(self):
        return self.nesting_depth() <= 1

    def is_nested(self):
        def subpath(p, q):
            return any(q[i:i + len(p)] == p for i in range(len(q) - len(p) + 1))

        for h1, h2 in combinations(self.hybrids(), 2):
            m1, m2 = self.merge_paths(h1), self.merge_paths(h2)
            c1 = all(not (set(p[1:-1]) & set(q[1:-1])) for p in m1 for q in m2)
            c2 = all(any(subpath(p, q) for q in m2) for p in m1)
            c3 = all(any(subpath(q, p) for p in m1) for q in m2)
            if not (c1 or c2 or c3):
                return False
        return True

    def simple_cycles(self):
        """All simple cycles of the underlying undirected graph, as node tuples
        (smallest node first, second < last so each cycle appears once)."""
        adj = {v: set() for v in self.nodes}
        for u, v in self.arcs:
            adj[u].add(v)
            adj[v].add(u)
        cycles = []

        def walk(start, path, seen):
            u = path[-1]
            for w in sorted(adj[u]):
                if w == start and len(path) >= 3:
                    if path[1] < path[-1]:
                        cycles.append(tuple(path))
                elif w > start and w not in seen:
                    walk(start, path + [w], seen | {w})

        for s in self.nodes:
            walk(s, [s], {s})
        return sorted(cycles)

    def muc_decomposition(self, cyc):
        """Sources/sinks of a simple undirected cycle; returns k and the 2k
        directed paths (each a node tuple)."""
        n = len(cyc)
        sinks, sources = [], []
        for i, v in enumerate(cyc):
            prv, nxt = cyc[i - 1], cyc[(i + 1) % n]
            inc = ((prv, v) in set(self.arcs), (nxt, v) in set(self.arcs))
            if inc == (True, True):
                sinks.append(v)
            elif inc == (False, False):
                sources.append(v)
        assert len(sinks) == len(sources)
        paths = []
        for i, v in enumerate(cyc):
            if v not in sources:
                continue
            for d in (-1, 1):
                p, j = [v], i
                while cyc[j % n] not in sinks or len(p) == 1:
                    j += d
                    p.append(cyc[j % n])
                    if cyc[j % n] in sinks:
                        break
                paths.append(tuple(p))
        return len(sources), sorted(paths)

    def blocks(self):
        """Biconnected components as arc-set partitions: two arcs are in one
        block iff they lie on a common simple cycle (transitively); arcs on no
        cycle are bridges."""
        parent = {a: a for a in self.arcs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        und = {frozenset(a): a for a in self.arcs}
        for cyc in self.simple_cycles():
            edges = [und[frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))]
                     for i in range(len(cyc))]
            for e in edges[1:]:
                union(edges[0], e)
        groups = {}
        for a in self.arcs:
            groups.setdefault(find(a), []).append(a)
        return sorted(sorted(g) for g in groups.values())

    def level(self):
        hyb = set(self.hybrids())
        best = 0
        for b in self.blocks():
            nodes = {x for a in b for x in a}
            best = max(best, len(nodes & hyb))
        return best

    def is_tree_child(self):
        return all(any(len(self.parents[c]) <= 1 for c in self.children[v])
                   for v in self.nodes if self.children[v])

    def degree_profile(self):
        hyb = self.hybrids()
        h2 = all(len(self.parents[h]) == 2 for h in hyb)
        h1 = all(len(self.children[h]) == 1 for h in hyb)
        sb = h2 and h1
        bi = sb and all(len(self.children[v]) == 2
                        for v in self.nodes
                        if self.children[v] and len(self.parents[v]) <= 1)
        return h2, h1, sb, bi

    def has_hybrid_split(self):
        return any(len(self.parents[c[0]]) >= 2 for c in self.reticulation_cycles())


# ---------------------------------------------------------------------------
# exhaustive enumeration oracle (labeled digraph brute force + permutation iso)

def valid_networks_exact(n):
    """All single-rooted connected simple DAGs on nodes 0..n-1, up to iso."""
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    reps, seen = [], set()
    for mask in range(1 << len(slots)):
        arcs = frozenset(s for k, s in enumerate(slots) if mask >> k & 1)
        if not is_valid(n, arcs):
            continue
        key = canon(n, arcs)
        if key not in seen:
            seen.add(key)
            reps.append(arcs)
    return reps


def is_valid(n, arcs):
    indeg = [0] * n
    child = [[] for _ in range(n)]
    for u, v in arcs:
        indeg[v] += 1
        child[u].append(v)
    roots = [v for v in range(n) if indeg[v] == 0]
    if len(roots) != 1:
        return False
    seen, stack = {roots[0]}, [roots[0]]
    while stack:
        for c in child[stack.pop()]:
            if c not in seen:
                seen.add(c)
                stack.append(c)
    if len(seen) != n:
        return False
    # acyclic?
    state = [0] * n

    def dfs(v):
        state[v] = 1
        for c in child[v]:
            if state[c] == 1 or (state[c] == 0 and dfs(c)):
                return True
        state[v] = 2
        return False

    return not any(state[v] == 0 and dfs(v) for v in range(n))


def canon(n, arcs):
    return min(tuple(sorted((p[u], p[v]) for u, v in arcs))
               for p in permutations(range(n)))


# ---------------------------------------------------------------------------

def show(name, net):
    print(f"== {name}: {len(net.nodes)} nodes, {len(net.arcs)} arcs, "
          f"hybrids {net.hybrids()}")
    for h in net.hybrids():
        print(f"   paths ending at {h}: {net.paths_ending_at(h)}")
    cycles = net.reticulation_cycles()
    print(f"   reticulation cycles ({len(cycles)}):")
    for c in cycles:
        print(f"     split {c[0]} end {c[1]}: {'->'.join(c[2])} / {'->'.join(c[3])}")
    imap = {v: sorted(s) for v, s in net.intermediate_map().items() if s}
    print(f"   intermediate map (nonempty): {imap}")
    print(f"   blocks: {net.blocks()}")
    ntb = [b for b in net.blocks() if len(b) > 1]
    print(f"   non-trivial blocks: {len(ntb)}, trivial: {len(net.blocks()) - len(ntb)}")
    mucs = net.simple_cycles()
    print(f"   minimal undirected cycles ({len(mucs)}):")
    for cyc in mucs:
        k, paths = net.muc_decomposition(cyc)
        print(f"     k={k} {cyc} paths={paths}")
    print(f"   galled={net.is_galled()} weaklyGalled={net.is_weakly_galled()} "
          f"1nested={net.is_1_nested()} nested={net.is_nested()} "
          f"depth={net.nesting_depth()} level={net.level()} "
          f"treeChild={net.is_tree_child()} hybridSplit={net.has_hybrid_split()}")
    print(f"   degreeProfile (2h,h1,sb,bin)={net.degree_profile()}")
    print(f"   mca(1,2)={net.mca('1','2') if '1' in net.nodes and '2' in net.nodes else '-'}"
          f" mca(3,5)={net.mca('3','5') if '3' in net.nodes and '5' in net.nodes else '-'}")


def main():
    show("FIG1A", Net(FIG1A))
    show("FIG1B", Net(FIG1B))
    show("FIG2", Net(FIG2))

    tc3 = Net([("r", "a"), ("r", "h"), ("a", "h")])
    print(f"== minimal non-tree-child candidate r->a, r->h, a->h: "
          f"treeChild={tc3.is_tree_child()} valid hybrid={tc3.hybrids()}")

    for n in range(1, 5):
        reps = valid_networks_exact(n)
        print(f"== exact networks on {n} nodes up to iso: {len(reps)}")
    # cumulative counts
    total = 0
    for n in range(1, 5):
        total += len(valid_networks_exact(n))
        print(f"== networks with <= {n} nodes: {total}")


if __name__ == "__main__":
    main()
