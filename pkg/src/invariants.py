"""谱不变量：LEL、IE、LEE 及其在路径、星图上的闭式。"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_EIG_TOL, LEE_EXP_LIMIT
from .errors import EigenvalueOverflow, InvalidOrder, NegativeEigenvalue
from .graph import Graph, wiener_index, is_connected
from .spectra import (
    Spectrum,
    laplacian_spectrum,
    path_spectrum_closed_form,
    signless_laplacian_spectrum,
)


@dataclass(frozen=True)
class InvariantRecord:
    """一个图的全部标量不变量。wiener 仅对连通图有定义，否则为 None。"""
    n: int
    m: int
    lel: float
    lee: float
    ie: float
    wiener: int | None


def _sqrt_sum(s: Spectrum) -> float:
    w = s.as_array()
    if np.any(w < 0):
        raise NegativeEigenvalue(f"谱中含负值 {w.min():.3e}，截断步骤被跳过")
    return float(np.sum(np.sqrt(w)))


def lel(s: Spectrum) -> float:
    """Laplacian-like energy：Σ√μ_k，零特征值贡献 0。"""
    if s.kind != 'laplacian':
        raise ValueError(f"LEL 需要拉普拉斯谱，得到 {s.kind}")
    return _sqrt_sum(s)


def incidence_energy(g: Graph, tol: float = DEFAULT_EIG_TOL) -> float:
    """关联能量 IE：无符号拉普拉斯特征值平方根之和。"""
    return _sqrt_sum(signless_laplacian_spectrum(g, tol))


def lee(s: Spectrum) -> float:
    """
    Laplacian Estrada index：Σ exp(μ_k)，含零特征值的贡献 1。

    Raises
    ------
    EigenvalueOverflow
        存在 μ > LEE_EXP_LIMIT，不做静默饱和。
    """
    w = s.as_array()
    if w.size and w.max() > LEE_EXP_LIMIT:
        raise EigenvalueOverflow(f"μ = {w.max():.6g} 超过 exp 上限 {LEE_EXP_LIMIT}")
    return float(np.sum(np.exp(w)))


def compute_invariants(g: Graph, tol: float = DEFAULT_EIG_TOL) -> InvariantRecord:
    s = laplacian_spectrum(g, tol)
    return InvariantRecord(
        n=g.n,
        m=g.m,
        lel=lel(s),
        lee=lee(s),
        ie=incidence_energy(g, tol),
        wiener=wiener_index(g) if is_connected(g) else None,
    )


# ============================================================================
# 闭式
# ============================================================================

def _check_order(n: int):
    if n < 2:
        raise InvalidOrder(f"闭式要求 n ≥ 2，得到 {n}")


def lee_star_closed_form(n: int) -> float:
    """LEE(S_n) = eⁿ + 1 + (n − 2)e。"""
    _check_order(n)
    if n > LEE_EXP_LIMIT:
        raise EigenvalueOverflow(f"e^{n} 溢出")
    return float(np.exp(n) + 1.0 + (n - 2) * np.e)


def lee_path_closed_form(n: int) -> float:
    """LEE(P_n) = Σ_{k=1..n} e^{2 + 2cos(kπ/n)}。"""
    _check_order(n)
    k = np.arange(1, n + 1)
    return float(np.sum(np.exp(2.0 + 2.0 * np.cos(k * np.pi / n))))


def lel_star_closed_form(n: int) -> float:
    """LEL(S_n) = √n + (n − 2)。"""
    _check_order(n)
    return float(np.sqrt(n) + (n - 2))


def lel_path_closed_form(n: int) -> float:
    _check_order(n)
    return lel(path_spectrum_closed_form(n))
