"""精确特征多项式系数模块。

约定 det(λI − M) = Σ_k (−1)^k c_k λ^{n−k}；拉普拉斯矩阵的 c_k 全部非负，
因此支配关系的比较只需逐项 ≤。所有运算都在 Python 任意精度整数上进行。
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotATree
from .graph import (
    Graph,
    IntegerMatrix,
    is_connected,
    is_tree,
    laplacian_matrix,
    wiener_index,
)


@dataclass(frozen=True)
class ExactCoeffs:
    """
    精确系数 c₀..c_n。

    Attributes
    ----------
    n : int
        矩阵阶数。
    c : tuple[int, ...]
        长度 n+1，c[0] == 1。
    """
    n: int
    c: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.c[k]

    def __len__(self) -> int:
        return len(self.c)

    def as_strings(self) -> list[str]:
        """十进制字符串形式，用于 CSV/JSON（从不写成浮点数）。"""
        return [str(v) for v in self.c]

    @property
    def column_names(self) -> list[str]:
        return [f"c{k}" for k in range(self.n + 1)]


def _berkowitz(A: np.ndarray) -> list[int]:
    """
    Berkowitz 无除法递推，返回首一多项式 det(λI − A) 的系数 p₀..p_n。

    逐步扩展前导主子阵：第 r 步用 Toeplitz 矩阵（首列为
    1, −a, −R·C, −R·M·C, …）乘上前一步的系数向量。
    """
    n = A.shape[0]
    poly = np.array([1, -A[0, 0]], dtype=object)
    for r in range(1, n):
        M = A[:r, :r]
        R = A[r, :r]
        C = A[:r, r]
        t = [1, -A[r, r]]
        v = C
        for _ in range(r):
            t.append(-R.dot(v))
            v = M.dot(v)
        T = np.zeros((r + 2, r + 1), dtype=object)
        for j in range(r + 1):
            T[j:, j] = t[:r + 2 - j]
        poly = T.dot(poly)
    return [int(p) for p in poly]


def characteristic_coefficients(M: IntegerMatrix) -> ExactCoeffs:
    """
    整数方阵的精确特征系数。

    Parameters
    ----------
    M : IntegerMatrix
        任意整数方阵（本库只传入对称矩阵）。

    Returns
    -------
    ExactCoeffs
        按 (−1)^k 约定去掉符号后的系数。

    使用示例
    --------
    >>> from src.graph import path_graph, laplacian_matrix
    >>> characteristic_coefficients(laplacian_matrix(path_graph(3))).c
    (1, 4, 3, 0)
    """
    A = np.array([[int(x) for x in row] for row in np.asarray(M)], dtype=object)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"需要方阵，得到形状 {A.shape}")
    poly = _berkowitz(A)
    c = tuple(p if k % 2 == 0 else -p for k, p in enumerate(poly))
    return ExactCoeffs(n=A.shape[0], c=c)


def laplacian_coefficients(g: Graph) -> ExactCoeffs:
    return characteristic_coefficients(laplacian_matrix(g))


def coefficients_from_spectrum(values) -> list[float]:
    """数值谱的初等对称多项式 σ₀..σ_n。"""
    poly = np.poly(np.asarray(values, dtype=float))
    return [float((-1) ** k * p) for k, p in enumerate(np.atleast_1d(poly))]


# ============================================================================
# 生成树计数（矩阵树定理）
# ============================================================================

def _bareiss_determinant(rows: list[list[int]]) -> int:
    """Bareiss 无分数消元求整数行列式。"""
    size = len(rows)
    if size == 0:
        return 1
    M = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if M[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if M[i][k] != 0), None)
            if pivot is None:
                return 0
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                # 整除是精确的（Sylvester 恒等式）
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1]


def spanning_tree_count(g: Graph) -> int:
    """τ(G)：删去第 0 行第 0 列后的拉普拉斯余子式。"""
    L = laplacian_matrix(g)
    reduced = [[int(x) for x in row[1:]] for row in L[1:]]
    return _bareiss_determinant(reduced)


# ============================================================================
# 系数恒等式
# ============================================================================

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class CoefficientIdentityReport:
    """
    系数恒等式检查结果。

    只有当所有适用的检查都通过时 passed 才为真。
    """
    coeffs: ExactCoeffs
    checks: tuple[IdentityCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(chk.passed for chk in self.checks)

    def failures(self) -> list[IdentityCheck]:
        return [chk for chk in self.checks if not chk.passed]


def _identity_checks(g: Graph, coeffs: ExactCoeffs, tau: int,
                     wiener: int | None) -> tuple[IdentityCheck, ...]:
    n, c = g.n, coeffs.c
    checks = [
        IdentityCheck('c0=1', 1, c[0]),
        IdentityCheck('c1=2m', 2 * g.m, c[1]),
        IdentityCheck('c(n-1)=n*tau', n * tau, c[n - 1]),
        IdentityCheck('c(n)=0', 0, c[n]),
    ]
    if wiener is not None and n >= 2:
        checks.append(IdentityCheck('c(n-2)=W', wiener, c[n - 2]))
    return tuple(checks)


def verify_coefficient_identities(t: Graph) -> CoefficientIdentityReport:
    """
    检查树的系数恒等式 c₀=1, c₁=2(n−1), c_{n−1}=n, c_n=0, c_{n−2}=W(T)。

    Raises
    ------
    NotATree
        m ≠ n−1 或图不连通。
    """
    if not is_tree(t):
        raise NotATree(f"需要树，得到 n={t.n}, m={t.m}")
    coeffs = laplacian_coefficients(t)
    return CoefficientIdentityReport(coeffs, _identity_checks(t, coeffs, 1, wiener_index(t)))


def verify_graph_coefficient_identities(g: Graph) -> CoefficientIdentityReport:
    """
    一般图的系数恒等式 c₀=1, c₁=2m, c_{n−1}=nτ(G), c_n=0。

    仅当 g 是树时附加 Wiener 检查；不连通图的 τ 为 0。
    """
    coeffs = laplacian_coefficients(g)
    wiener = wiener_index(g) if is_tree(g) else None
    tau = spanning_tree_count(g) if is_connected(g) else 0
    return CoefficientIdentityReport(coeffs, _identity_checks(g, coeffs, tau, wiener))
