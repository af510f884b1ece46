"""图结构与拉普拉斯矩阵模块。"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import networkx as nx
import numpy as np
import numpy.typing as npt

from .errors import DisconnectedGraph, InvalidGraph, InvalidOrder

# 稠密整数方阵；本模块产生的矩阵都是对称的
IntegerMatrix = npt.NDArray[np.int64]


@dataclass(frozen=True)
class Graph:
    """
    简单无向图。

    顶点为 0..n-1 的连续整数，边表在构造时规范化（每条边内部升序，
    整体升序），因此结构相同的图判等、哈希结果一致。

    Parameters
    ----------
    n : int
        顶点数，至少为 1。
    edges : 可迭代的 (u, v) 对
        无序边；不允许自环、重边和越界端点。

    Raises
    ------
    InvalidGraph
        边表不满足上述约束。

    使用示例
    --------
    >>> Graph(3, [(1, 0), (2, 1)]).edges
    ((0, 1), (1, 2))
    """
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise InvalidGraph(f"顶点数必须为正整数，得到 {self.n!r}")
        canonical = []
        for pair in self.edges:
            try:
                ends = tuple(pair)
            except TypeError as exc:
                raise InvalidGraph(f"边必须是端点对，得到 {pair!r}") from exc
            if len(ends) != 2:
                raise InvalidGraph(f"边必须恰有两个端点，得到 {pair!r}")
            try:
                u, v = (int(x) for x in ends)
            except (TypeError, ValueError) as exc:
                raise InvalidGraph(f"端点必须是整数，得到 {pair!r}") from exc
            if u == v:
                raise InvalidGraph(f"不允许自环: ({u}, {v})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidGraph(f"端点越界: ({u}, {v})，n={self.n}")
            canonical.append((u, v) if u < v else (v, u))
        canonical.sort()
        for a, b in zip(canonical, canonical[1:]):
            if a == b:
                raise InvalidGraph(f"重复的边: {a}")
        object.__setattr__(self, 'n', int(self.n))
        object.__setattr__(self, 'edges', tuple(canonical))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[list[int]]:
        """邻接表。"""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ============================================================================
# 矩阵
# ============================================================================

def degrees(g: Graph) -> list[int]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _degree_plus_adjacency(g: Graph, sign: int) -> IntegerMatrix:
    M = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        M[u, v] = sign
        M[v, u] = sign
    M[np.diag_indices(g.n)] = degrees(g)
    return M


def laplacian_matrix(g: Graph) -> IntegerMatrix:
    """拉普拉斯矩阵 L = D − A，行和恒为零。"""
    return _degree_plus_adjacency(g, -1)


def signless_laplacian_matrix(g: Graph) -> IntegerMatrix:
    """无符号拉普拉斯矩阵 Q = D + A。"""
    return _degree_plus_adjacency(g, 1)


# ============================================================================
# 结构性质
# ============================================================================

def to_networkx(g: Graph) -> nx.Graph:
    """转换为 networkx 图；孤立顶点同样保留。"""
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def is_connected(g: Graph) -> bool:
    return nx.is_connected(to_networkx(g))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_bipartite(g: Graph) -> bool:
    """逐连通分量 BFS 二染色。"""
    return nx.is_bipartite(to_networkx(g))


def wiener_index(g: Graph) -> int:
    """
    Wiener 指数：所有无序顶点对距离之和。

    Raises
    ------
    DisconnectedGraph
        存在不可达的顶点对。
    """
    G = to_networkx(g)
    total = 0
    for source in range(g.n):
        lengths = nx.single_source_shortest_path_length(G, source)
        if len(lengths) != g.n:
            raise DisconnectedGraph(f"顶点 {source} 无法到达全部 {g.n} 个顶点")
        total += sum(lengths.values())
    # 每对被计了两次
    return total // 2


# ============================================================================
# 常用图族
# ============================================================================

def path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidOrder(f"路径图要求 n ≥ 1，得到 {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """中心为顶点 0 的星图 S_n。"""
    if n < 2:
        raise InvalidOrder(f"星图要求 n ≥ 2，得到 {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidOrder(f"圈要求 n ≥ 3，得到 {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


# ============================================================================
# 文本格式："n m" 后接 m 行 "u v"
# ============================================================================

def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """
    解析图文本格式。

    Raises
    ------
    InvalidGraph
        头部缺失、行数与 m 不符或存在非整数字段。
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise InvalidGraph("空的图文本")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise InvalidGraph(f"图文本含非整数字段: {exc}") from exc
    if len(header) != 2:
        raise InvalidGraph(f"头部应为 'n m'，得到 {rows[0]}")
    n, m = header
    if len(body) != m:
        raise InvalidGraph(f"声明 m={m}，实际 {len(body)} 行边")
    if any(len(pair) != 2 for pair in body):
        raise InvalidGraph("每条边应恰有两个端点")
    return Graph(n, body)  # type: ignore[arg-type]


def read_graph(path: str | Path) -> Graph:
    return parse_graph_text(Path(path).read_text(encoding='utf-8'))


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph_text(g), encoding='utf-8')
