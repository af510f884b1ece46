"""无标号树（自由树）的穷举。

生成器按层序列（level sequence）逐个产生每个同构类的唯一代表：
先用有根树的后继规则按字典序递减遍历，再只保留以中心为根、
满足自由树规范条件的序列，条件不满足时整段跳过。

Prüfer 普查是独立的校验手段：解码全部 n^{n−2} 棵标号树，
按规范编码去重后计数。
"""
from __future__ import annotations

import hashlib
import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import total_ordering
from itertools import product

from .config import MAX_TREE_ORDER, PRUFER_MAX_ORDER
from .errors import InvalidOrder, NotATree, OrderTooLarge
from .graph import Graph, is_tree

logger = logging.getLogger(__name__)


# ============================================================================
# 数据类型
# ============================================================================

@dataclass(frozen=True)
class LevelSequence:
    """
    先序遍历下各顶点的深度，seq[0] = 0 为根。

    Attributes
    ----------
    seq : tuple[int, ...]
        满足 seq[i+1] ≤ seq[i] + 1，且除根外深度都 ≥ 1。
    """
    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(int(v) for v in self.seq)
        if not seq or seq[0] != 0:
            raise ValueError(f"层序列必须以 0 开头: {seq}")
        for i in range(1, len(seq)):
            if not 1 <= seq[i] <= seq[i - 1] + 1:
                raise ValueError(f"层序列在位置 {i} 处非法: {seq}")
        object.__setattr__(self, 'seq', seq)

    @property
    def n(self) -> int:
        return len(self.seq)

    def to_tree(self) -> Graph:
        return level_sequence_to_tree(self.seq)

    def __str__(self):
        return ",".join(str(v) for v in self.seq)


@total_ordering
@dataclass(frozen=True)
class CanonicalCode:
    """AHU 括号编码，以中心（双中心时取两者中较小的编码）为根。"""
    code: bytes

    def __lt__(self, other: CanonicalCode) -> bool:
        return self.code < other.code

    def tree_id(self) -> str:
        """sha1 摘要的前 12 个十六进制位。"""
        return hashlib.sha1(self.code).hexdigest()[:12]


# ============================================================================
# 层序列 ↔ 树
# ============================================================================

def level_sequence_to_tree(seq: Sequence[int]) -> Graph:
    """
    由层序列构造树，顶点编号即先序位置。

    每个顶点的父结点是它之前最近的、深度恰好小 1 的顶点。

    使用示例
    --------
    >>> level_sequence_to_tree([0, 1, 2, 1]).edges
    ((0, 1), (0, 3), (1, 2))
    """
    last_at_level: list[int] = []
    edges = []
    for v, level in enumerate(seq):
        if v == 0:
            if level != 0:
                raise ValueError(f"层序列必须以 0 开头: {list(seq)}")
        elif not 1 <= level <= len(last_at_level):
            raise ValueError(f"层序列在位置 {v} 处非法: {list(seq)}")
        else:
            edges.append((last_at_level[level - 1], v))
        del last_at_level[level:]
        last_at_level.append(v)
    return Graph(len(seq), edges)


def _adjacency(n: int, edges) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    degree = [len(nbrs) for nbrs in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for u in adj[leaf]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def tree_centers(t: Graph) -> list[int]:
    """
    逐层剥叶得到树的中心（1 个或 2 个顶点）。

    Raises
    ------
    NotATree
    """
    if not is_tree(t):
        raise NotATree(f"需要树，得到 n={t.n}, m={t.m}")
    return _centers(t.neighbors())


def _rooted_code(adj: list[list[int]], root: int) -> bytes:
    order = [root]
    parent = {root: -1}
    for v in order:
        for u in adj[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    codes: dict[int, list[bytes]] = {v: [] for v in order}
    for v in reversed(order):
        code = b"(" + b"".join(sorted(codes[v])) + b")"
        if parent[v] >= 0:
            codes[parent[v]].append(code)
        else:
            return code
    raise AssertionError("unreachable")


def _code_from_adjacency(adj: list[list[int]]) -> bytes:
    return min(_rooted_code(adj, c) for c in _centers(adj))


def canonical_code(t: Graph) -> CanonicalCode:
    """
    树的同构不变编码：两棵树编码相同当且仅当它们同构。

    Raises
    ------
    NotATree
    """
    if not is_tree(t):
        raise NotATree(f"需要树，得到 n={t.n}, m={t.m}")
    return CanonicalCode(_code_from_adjacency(t.neighbors()))


# ============================================================================
# 自由树生成
# ============================================================================

def _successor(seq: list[int], p: int | None = None) -> list[int] | None:
    """有根树层序列按字典序递减的后继；p 缺省时取最后一个深度 > 1 的位置。"""
    if p is None:
        p = len(seq) - 1
        while p > 0 and seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """拆成根的第一棵子树（深度减 1）与其余部分。"""
    m = 2
    while m < len(seq) and seq[m] != 1:
        m += 1
    left = [v - 1 for v in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _is_free_canonical(seq: list[int]) -> bool:
    left, rest = _split(seq)
    left_height, rest_height = max(left), max(rest)
    if rest_height != left_height:
        return rest_height > left_height
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _next_free(seq: list[int] | None) -> list[int] | None:
    while seq is not None:
        if _is_free_canonical(seq):
            return seq
        left, _ = _split(seq)
        p = len(left)
        jump = seq[p] > 2
        seq = _successor(seq, p)
        if seq is not None and jump:
            new_left, _ = _split(seq)
            suffix = list(range(1, max(new_left) + 2))
            if len(suffix) < len(seq):
                seq[-len(suffix):] = suffix
    return None


def free_tree_level_sequences(n: int) -> Iterator[LevelSequence]:
    """
    逐个产生 n 阶自由树的规范层序列，顺序确定。

    Raises
    ------
    InvalidOrder
        n < 1。
    OrderTooLarge
        n > MAX_TREE_ORDER。
    """
    if n < 1:
        raise InvalidOrder(f"树的阶数至少为 1，得到 {n}")
    if n > MAX_TREE_ORDER:
        raise OrderTooLarge(f"n={n} 超过枚举上限 {MAX_TREE_ORDER}")
    if n == 1:
        yield LevelSequence((0,))
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while True:
        seq = _next_free(seq)
        if seq is None:
            return
        yield LevelSequence(tuple(seq))
        seq = _successor(seq)


def all_free_trees(n: int) -> Iterator[Graph]:
    """
    n 阶自由树，每个同构类恰好一棵，顶点按先序编号。

    Raises
    ------
    InvalidOrder
    OrderTooLarge

    使用示例
    --------
    >>> [t.edges for t in all_free_trees(4)]
    [((0, 1), (0, 3), (1, 2)), ((0, 1), (0, 2), (0, 3))]
    """
    for ls in free_tree_level_sequences(n):
        yield ls.to_tree()


# ============================================================================
# Prüfer 普查
# ============================================================================

def _prufer_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for v in seq:
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """
    线性时间的 Prüfer 解码。

    Raises
    ------
    InvalidOrder
        n < 2，或 len(seq) ≠ n − 2。
    ValueError
        序列中有越界的顶点。
    """
    if n < 2 or len(seq) != n - 2:
        raise InvalidOrder(f"n={n} 需要长度 {n - 2} 的 Prüfer 序列，得到 {len(seq)}")
    if any(not 0 <= v < n for v in seq):
        raise ValueError(f"Prüfer 序列含越界顶点: {list(seq)}")
    return Graph(n, _prufer_edges(seq, n))


def _census_chunk(n: int, first: int | None) -> set[bytes]:
    """
    解码一批 Prüfer 序列并收集规范码。

    每个同构类都有一种标号使 n−1 为叶子且挂在 n−2 上；这类标号树的
    Prüfer 序列不含 n−1 且以 n−2 结尾。只解码这 (n−1)^{n−3} 个序列
    就能覆盖全部同构类。
    """
    codes: set[bytes] = set()
    free = n - 3
    if first is None:
        heads = product(range(n - 1), repeat=free)
    else:
        heads = ((first,) + tail for tail in product(range(n - 1), repeat=free - 1))
    last = (n - 2,)
    for head in heads:
        seq = head + last
        codes.add(_code_from_adjacency(_adjacency(n, _prufer_edges(seq, n))))
    return codes


def prufer_census(n: int, jobs: int = 1) -> int:
    """
    用 Prüfer 解码独立统计 n 阶自由树的个数，按规范编码去重。

    Parameters
    ----------
    n : int
        2 ≤ n ≤ PRUFER_MAX_ORDER。
    jobs : int
        大于 1 时按 Prüfer 序列首位拆分到进程池。

    Raises
    ------
    InvalidOrder
    OrderTooLarge
    """
    if n < 2:
        raise InvalidOrder(f"Prüfer 普查要求 n ≥ 2，得到 {n}")
    if n > PRUFER_MAX_ORDER:
        raise OrderTooLarge(f"n={n} 超过普查上限 {PRUFER_MAX_ORDER}")
    if n == 2:
        return 1
    logger.info(f"Prüfer 普查 n={n}：解码 {(n - 1) ** (n - 3)} 个序列")
    if n == 3:
        return len(_census_chunk(n, None))
    codes: set[bytes] = set()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_census_chunk, [n] * (n - 1), range(n - 1)):
                codes |= chunk
    else:
        for first in range(n - 1):
            codes |= _census_chunk(n, first)
    return len(codes)


# ============================================================================
# 文本格式："n:l0,l1,..."
# ============================================================================

def format_tree_dump(ls: LevelSequence) -> str:
    return f"{ls.n}:{ls}"


def parse_tree_dump(line: str) -> LevelSequence:
    """
    解析一行树转储。

    Raises
    ------
    ValueError
        格式错误，或声明的阶数与序列长度不符。
    """
    head, sep, body = line.strip().partition(":")
    if not sep:
        raise ValueError(f"缺少 ':' 分隔符: {line!r}")
    try:
        n = int(head)
        seq = tuple(int(v) for v in body.split(","))
    except ValueError as exc:
        raise ValueError(f"树转储含非整数字段: {line!r}") from exc
    if len(seq) != n:
        raise ValueError(f"声明 n={n}，序列长度为 {len(seq)}")
    return LevelSequence(seq)
