"""Tree decompositions: validation, nice form, and text interchange."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphInputError, build_graph


@dataclass
class TreeDecomposition:
    """Tree of vertex bags over a host graph.  Bags are sorted tuples."""

    nodes: int
    tree_edges: list[tuple[int, int]]
    bags: list[tuple[int, ...]]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


@dataclass
class ValidationReport:
    valid: bool
    width: int
    violation: str | None = None
    witness: object = None


def _is_tree(nodes: int, edges: list[tuple[int, int]]) -> bool:
    if nodes == 0 or len(edges) != nodes - 1:
        return False
    adj = [[] for _ in range(nodes)]
    for a, b in edges:
        if not (0 <= a < nodes and 0 <= b < nodes):
            return False
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * nodes
    stack = [0]
    seen[0] = True
    cnt = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                cnt += 1
                stack.append(y)
    return cnt == nodes


def validate(td: TreeDecomposition, g: Graph) -> ValidationReport:
    """Check the three bag conditions; violations go into the report."""
    width = td.width
    if len(td.bags) != td.nodes:
        return ValidationReport(False, width, "bag count does not match node count", None)
    if not _is_tree(td.nodes, td.tree_edges):
        return ValidationReport(False, width, "decomposition edges do not form a tree", None)
    bag_sets = [set(b) for b in td.bags]
    for b in bag_sets:
        for v in b:
            if not (0 <= v < g.n):
                return ValidationReport(False, width, "bag references a non-host vertex", v)

    covered = set().union(*bag_sets) if bag_sets else set()
    for v in range(g.n):
        if v not in covered:
            return ValidationReport(False, width, "vertex not covered by any bag", v)

    for u, v in g.edges:
        if not any(u in b and v in b for b in bag_sets):
            return ValidationReport(False, width, "edge endpoints never share a bag", (u, v))

    adj = [[] for _ in range(td.nodes)]
    for a, b in td.tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    for v in range(g.n):
        holding = [i for i in range(td.nodes) if v in bag_sets[i]]
        start = holding[0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen and v in bag_sets[y]:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(holding):
            missing = next(i for i in holding if i not in seen)
            return ValidationReport(False, width,
                                    "bags containing a vertex do not form a subtree",
                                    (v, start, missing))
    return ValidationReport(True, width)


# ---------------------------------------------------------------------------
# Nice decompositions

LEAF, INTRODUCE, FORGET, JOIN = "leaf", "introduce", "forget", "join"


@dataclass
class NiceDecomposition:
    """Rooted binary decomposition of leaf/introduce/forget/join nodes.

    The root bag is empty.  `children[i]` lists child node indices,
    `vertex[i]` is the introduced/forgotten vertex where applicable.
    """

    kind: list[str]
    bag: list[tuple[int, ...]]
    children: list[tuple[int, ...]]
    vertex: list[int | None]
    root: int

    @property
    def node_count(self) -> int:
        return len(self.kind)

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bag) - 1

    def postorder(self) -> list[int]:
        order = []
        stack = [(self.root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
            else:
                stack.append((node, True))
                for c in self.children[node]:
                    stack.append((c, False))
        return order


class _NiceBuilder:
    def __init__(self):
        self.kind: list[str] = []
        self.bag: list[tuple[int, ...]] = []
        self.children: list[tuple[int, ...]] = []
        self.vertex: list[int | None] = []

    def add(self, kind, bag, children=(), vertex=None) -> int:
        self.kind.append(kind)
        self.bag.append(tuple(sorted(bag)))
        self.children.append(tuple(children))
        self.vertex.append(vertex)
        return len(self.kind) - 1

    def chain_from_empty(self, target: tuple[int, ...]) -> int:
        node = self.add(LEAF, ())
        cur: list[int] = []
        for v in sorted(target):
            cur.append(v)
            node = self.add(INTRODUCE, cur, (node,), v)
        return node

    def morph(self, node: int, target: tuple[int, ...]) -> int:
        """Forget/introduce chain turning `node`'s bag into `target`."""
        cur = set(self.bag[node])
        tgt = set(target)
        for v in sorted(cur - tgt):
            cur.discard(v)
            node = self.add(FORGET, cur, (node,), v)
        for v in sorted(tgt - cur):
            cur.add(v)
            node = self.add(INTRODUCE, cur, (node,), v)
        return node


def make_nice(td: TreeDecomposition) -> NiceDecomposition:
    """Convert to nice form; the width is preserved exactly."""
    if not _is_tree(td.nodes, td.tree_edges):
        raise GraphInputError("input decomposition is not a tree")
    b = _NiceBuilder()
    adj = [[] for _ in range(td.nodes)]
    for x, y in td.tree_edges:
        adj[x].append(y)
        adj[y].append(x)

    # iterative post-order over the td tree rooted at 0
    parent = {0: None}
    order = [0]
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    top: dict[int, int] = {}
    for x in reversed(order):
        bag = td.bags[x]
        kids = [y for y in adj[x] if parent.get(y) == x]
        if not kids:
            top[x] = b.chain_from_empty(bag)
        else:
            morphed = [b.morph(top[y], bag) for y in kids]
            node = morphed[0]
            for other in morphed[1:]:
                node = b.add(JOIN, bag, (node, other))
            top[x] = node
    root = b.morph(top[0], ())
    return NiceDecomposition(kind=b.kind, bag=b.bag, children=b.children,
                             vertex=b.vertex, root=root)


# ---------------------------------------------------------------------------
# Heuristic decomposition for arbitrary hosts (min-degree elimination).
# Used where a decomposition of a non-embedded graph is needed (e.g. the DP
# solvers on random test hosts); makes no width guarantee.

def heuristic_td(g: Graph) -> TreeDecomposition:
    if g.n == 0:
        return TreeDecomposition(nodes=1, tree_edges=[], bags=[()])
    nbrs = [set(s) for s in g.neighbor_sets()]
    alive = set(range(g.n))
    elim_order: list[int] = []
    elim_bag: list[set[int]] = []
    while alive:
        v = min(alive, key=lambda x: (len(nbrs[x] & alive), x))
        live_nb = nbrs[v] & alive
        elim_order.append(v)
        elim_bag.append({v} | live_nb)
        for a in live_nb:
            for c in live_nb:
                if a != c:
                    nbrs[a].add(c)
        alive.discard(v)
    return _td_from_elimination(g, elim_order, elim_bag)


def _td_from_elimination(g: Graph, order: list[int],
                         bags: list[set[int]]) -> TreeDecomposition:
    pos = {v: i for i, v in enumerate(order)}
    tree_edges = []
    for i, v in enumerate(order):
        rest = bags[i] - {v}
        if rest:
            j = min(pos[w] for w in rest)
            tree_edges.append((i, j))
        elif i + 1 < len(order):
            tree_edges.append((i, i + 1))
    return TreeDecomposition(nodes=len(order), tree_edges=tree_edges,
                             bags=[tuple(sorted(b)) for b in bags])


# ---------------------------------------------------------------------------
# Text interchange format

def emit_td(td: TreeDecomposition, host_n: int) -> str:
    lines = [f"td {td.nodes} {td.width} {host_n}"]
    for i, bag in enumerate(td.bags):
        lines.append("b " + str(i) + "".join(f" {v}" for v in bag))
    for a, c in td.tree_edges:
        lines.append(f"t {a} {c}")
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    nodes = width = host_n = None
    bags: dict[int, tuple[int, ...]] = {}
    tree_edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "td" and len(parts) == 4:
            nodes, width, host_n = int(parts[1]), int(parts[2]), int(parts[3])
        elif parts[0] == "b" and len(parts) >= 2:
            bags[int(parts[1])] = tuple(sorted(int(x) for x in parts[2:]))
        elif parts[0] == "t" and len(parts) == 3:
            tree_edges.append((int(parts[1]), int(parts[2])))
        else:
            raise GraphInputError(f"line {lineno}: cannot parse {raw!r}")
    if nodes is None:
        raise GraphInputError("missing td header line")
    td = TreeDecomposition(nodes=nodes, tree_edges=tree_edges,
                           bags=[bags.get(i, ()) for i in range(nodes)])
    return td, host_n
