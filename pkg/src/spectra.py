"""数值谱模块：实对称矩阵特征值与路径、星图的闭式谱。"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .config import DEFAULT_EIG_TOL
from .errors import ConvergenceFailure, InvalidOrder
from .graph import Graph, IntegerMatrix, laplacian_matrix, signless_laplacian_matrix

SpectrumKind = Literal['laplacian', 'signless']


@dataclass(frozen=True)
class Spectrum:
    """
    降序排列的非负特征值。

    Attributes
    ----------
    values : tuple[float, ...]
        降序；截断后全部 ≥ 0。
    tol : float
        求解时使用的容差（闭式谱为 0）。
    kind : {'laplacian', 'signless'}
    """
    values: tuple[float, ...]
    tol: float
    kind: SpectrumKind = 'laplacian'

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def trace(self) -> float:
        return float(np.sum(self.values))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def eigenvalues_symmetric(M: IntegerMatrix, tol: float = DEFAULT_EIG_TOL,
                          kind: SpectrumKind = 'laplacian') -> Spectrum:
    """
    实对称矩阵的全部特征值。

    Parameters
    ----------
    M : IntegerMatrix
        对称矩阵。
    tol : float
        相对于 max|M_ij| 的容差；|w| ≤ tol·‖M‖ 的估计值截断为 0，
        正负两侧都截断。
    kind : {'laplacian', 'signless'}
        为 'laplacian' 且行和全为零时，最小特征值精确置 0
        （全 1 向量是精确的零特征向量）。

    Returns
    -------
    Spectrum

    Raises
    ------
    ConvergenceFailure
        LAPACK 迭代未收敛。
    """
    A = np.asarray(M, dtype=float)
    try:
        w = np.linalg.eigvalsh(A)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(f"对称特征值求解未收敛: {exc}") from exc

    scale = max(1.0, float(np.max(np.abs(A)))) if A.size else 1.0
    cutoff = tol * scale
    w = np.where(np.abs(w) <= cutoff, 0.0, w)
    w = np.sort(w)[::-1]

    if kind == 'laplacian' and w.size and not np.any(np.asarray(M).sum(axis=1)):
        w[-1] = 0.0
    return Spectrum(values=tuple(float(x) for x in w), tol=tol, kind=kind)


def laplacian_spectrum(g: Graph, tol: float = DEFAULT_EIG_TOL) -> Spectrum:
    return eigenvalues_symmetric(laplacian_matrix(g), tol, kind='laplacian')


def signless_laplacian_spectrum(g: Graph, tol: float = DEFAULT_EIG_TOL) -> Spectrum:
    return eigenvalues_symmetric(signless_laplacian_matrix(g), tol, kind='signless')


# ============================================================================
# 闭式谱
# ============================================================================

def path_spectrum_closed_form(n: int) -> Spectrum:
    """P_n 的拉普拉斯谱 {2 + 2cos(kπ/n) : k = 1..n}，k = n 给出唯一的 0。"""
    if n < 1:
        raise InvalidOrder(f"路径图要求 n ≥ 1，得到 {n}")
    k = np.arange(1, n + 1)
    w = 2.0 + 2.0 * np.cos(k * np.pi / n)
    w[-1] = 0.0
    return Spectrum(values=tuple(float(x) for x in np.sort(w)[::-1]), tol=0.0)


def path_spectrum_standard(n: int) -> Spectrum:
    """同一谱的常见写法 {2 − 2cos(kπ/n) : k = 0..n−1}。"""
    if n < 1:
        raise InvalidOrder(f"路径图要求 n ≥ 1，得到 {n}")
    k = np.arange(0, n)
    w = 2.0 - 2.0 * np.cos(k * np.pi / n)
    w[0] = 0.0
    return Spectrum(values=tuple(float(x) for x in np.sort(w)[::-1]), tol=0.0)


def star_spectrum_closed_form(n: int) -> Spectrum:
    """S_n 的拉普拉斯谱 {n, 1^(n−2), 0}。"""
    if n < 2:
        raise InvalidOrder(f"星图要求 n ≥ 2，得到 {n}")
    values = (float(n),) + (1.0,) * (n - 2) + (0.0,)
    return Spectrum(values=values, tol=0.0)
