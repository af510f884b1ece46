"""Vieta 映射及其微积分。

F 把严格递减的正根 x₁ > … > x_n 映到初等对称多项式 (c₁, …, c_n)。
本模块给出 F 的雅可比矩阵（递推式与直接式）、逆雅可比的闭式、
加权幂和 s_m = Σ x_i^m / ω′(x_i) 及其递推、Newton 恒等式、差商，
以及谱和函数（LEL、LEE）对系数的梯度。

所有幂次都通过逐次相乘得到，不使用对数。
"""
from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .config import (
    GAP_FLOOR_REL,
    ROOT_MAX_ITER,
    ROOT_RESIDUAL_TOL,
    ROOT_ROUNDTRIP_TOL,
)
from .errors import (
    InvalidOrder,
    NoRealSimpleRoots,
    NonFiniteFunctionValue,
    RepeatedRoots,
    SignMismatch,
    ZeroEigenvalueIncluded,
)


# ============================================================================
# 数据类型
# ============================================================================

@dataclass(frozen=True, eq=False)
class PreparedRoots:
    """
    严格递减的正根及预计算的 ω′(x_i) = Π_{k≠i} (x_i − x_k)。

    降序排列时 sign(ω′(x_i)) = (−1)^{i−1}。不检查 x₁ < n 的上界，
    那只在把根解释为图的特征值时才有意义。

    Attributes
    ----------
    x : np.ndarray
    omega_prime : np.ndarray
    min_gap : float
        相邻根的最小差；单根时为 inf。
    gap_floor : float
    """
    x: np.ndarray
    omega_prime: np.ndarray
    min_gap: float
    gap_floor: float

    @property
    def n(self) -> int:
        return int(self.x.size)

    def __repr__(self):
        return f"PreparedRoots({np.array2string(self.x, precision=6)})"


@dataclass(frozen=True)
class RealCoeffs:
    """实系数 c₁..c_n（c₀ = 1 隐含）。"""
    c: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.c)

    def as_array(self, with_leading: bool = False) -> np.ndarray:
        arr = np.asarray(self.c, dtype=float)
        return np.concatenate(([1.0], arr)) if with_leading else arr


@dataclass(frozen=True, eq=False)
class JacobianMatrix:
    """
    雅可比矩阵。

    orientation 为 'forward' 时 entries[i, j] = ∂c_{i+1}/∂x_{j+1}，
    为 'inverse' 时 entries[i, j] = ∂x_{i+1}/∂c_{j+1}。
    """
    entries: np.ndarray
    orientation: Literal['forward', 'inverse']

    @property
    def order(self) -> int:
        return int(self.entries.shape[0])

    def __matmul__(self, other: JacobianMatrix) -> np.ndarray:
        return self.entries @ other.entries


# ============================================================================
# 构造与校验
# ============================================================================

def _omega_prime(x: np.ndarray) -> np.ndarray:
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    return np.prod(diff, axis=1)


def prepare_roots(values: Sequence[float] | np.ndarray,
                  gap_floor: float | None = None) -> PreparedRoots:
    """
    排序、校验并预计算 ω′。

    Parameters
    ----------
    values : 实数序列
        任意顺序的根。
    gap_floor : float, optional
        允许的最小根间距，默认 GAP_FLOOR_REL · x₁。

    Raises
    ------
    InvalidOrder
        空输入。
    ZeroEigenvalueIncluded
        存在非正的根。
    RepeatedRoots
        最小间距低于 gap_floor。
    """
    x = np.sort(np.asarray(values, dtype=float).ravel())[::-1].copy()
    if x.size == 0:
        raise InvalidOrder("至少需要一个根")
    if not np.all(np.isfinite(x)):
        raise ValueError(f"根中含非有限值: {x}")
    if x[-1] <= 0:
        raise ZeroEigenvalueIncluded(f"根必须为正，最小根为 {x[-1]:.6g}")
    if gap_floor is None:
        gap_floor = GAP_FLOOR_REL * float(x[0])
    min_gap = float(np.min(x[:-1] - x[1:])) if x.size > 1 else math.inf
    if min_gap < gap_floor:
        raise RepeatedRoots(f"最小根间距 {min_gap:.3e} 低于下限 {gap_floor:.3e}")
    return PreparedRoots(x=x, omega_prime=_omega_prime(x), min_gap=min_gap, gap_floor=float(gap_floor))


def random_prepared_roots(rng: np.random.Generator, n: int, low: float, high: float,
                          min_gap: float) -> PreparedRoots:
    """
    在 (low, high) 内均匀抽取相邻间距不小于 min_gap 的 n 个根。

    先在缩短的区间上抽 n 个点，再依次平移 i·min_gap，
    得到的是满足间距约束的配置上的均匀分布，无需拒绝采样。
    """
    span = (high - low) - (n - 1) * min_gap
    if span <= 0:
        raise InvalidOrder(f"区间 ({low}, {high}) 放不下 {n} 个间距为 {min_gap} 的根")
    u = np.sort(rng.uniform(0.0, span, size=n))
    x = low + u + min_gap * np.arange(n)
    return prepare_roots(x)


def _require_distinct(r: PreparedRoots):
    if r.min_gap < r.gap_floor:
        raise RepeatedRoots(f"最小根间距 {r.min_gap:.3e} 低于下限 {r.gap_floor:.3e}")


def _esym(x: np.ndarray) -> np.ndarray:
    """σ₀..σ_n，逐个根展开 Π(t + x_i)。保持输入的浮点类型。"""
    sigma = np.zeros(x.size + 1, dtype=x.dtype)
    sigma[0] = 1
    for k, xi in enumerate(x, start=1):
        sigma[1:k + 1] = sigma[1:k + 1] + xi * sigma[0:k]
    return sigma


def _powers(x: np.ndarray, m: int) -> np.ndarray:
    out = np.ones_like(x)
    for _ in range(m):
        out = out * x
    return out


def _power_table(x: np.ndarray, top: int) -> np.ndarray:
    """P[i, e] = x_i^e，e = 0..top。"""
    P = np.ones((x.size, top + 1), dtype=x.dtype)
    for e in range(1, top + 1):
        P[:, e] = P[:, e - 1] * x
    return P


# ============================================================================
# Vieta 映射与雅可比
# ============================================================================

def elementary_symmetric(r: PreparedRoots) -> RealCoeffs:
    """c_k = σ_k(x)，k = 1..n。"""
    return RealCoeffs(tuple(float(v) for v in _esym(r.x)[1:]))


def forward_jacobian(r: PreparedRoots, dtype=float) -> JacobianMatrix:
    """
    正向雅可比 ∂c_i/∂x_j，按递推 ∂c_i/∂x_j = c_{i−1} − x_j·∂c_{i−1}/∂x_j 逐行生成。

    第一行全为 1。dtype 传 np.longdouble 时整个递推在扩展精度中进行。
    """
    n = r.n
    x = r.x.astype(dtype)
    sigma = _esym(x)
    J = np.empty((n, n), dtype=x.dtype)
    J[0] = 1
    for i in range(1, n):
        J[i] = sigma[i] - x * J[i - 1]
    return JacobianMatrix(J, 'forward')


def forward_jacobian_direct(r: PreparedRoots, dtype=float) -> JacobianMatrix:
    """
    直接求 ∂c_i/∂x_j = σ_{i−1}(去掉 x_j 的其余根)，每列独立展开一次。

    各项都是同号正数之和，没有递推中的相消，适合作高精度校验。
    """
    n = r.n
    x = r.x.astype(dtype)
    J = np.empty((n, n), dtype=x.dtype)
    for j in range(n):
        J[:, j] = _esym(np.delete(x, j))
    return JacobianMatrix(J, 'forward')


def inverse_jacobian_closed_form(r: PreparedRoots, dtype=float) -> JacobianMatrix:
    """
    逆雅可比闭式：entry(i, j) = (−1)^{j−1} x_i^{n−j} / ω′(x_i)。

    Parameters
    ----------
    r : PreparedRoots
    dtype : 浮点类型
        非 float 时在该精度下重新计算 ω′。

    Raises
    ------
    RepeatedRoots
        最小间距低于 gap_floor。
    """
    _require_distinct(r)
    n = r.n
    x = r.x.astype(dtype)
    omega = r.omega_prime if x.dtype == r.x.dtype else _omega_prime(x)
    P = _power_table(x, n - 1)
    exponents = n - np.arange(1, n + 1)
    signs = np.where(np.arange(n) % 2 == 0, 1, -1).astype(x.dtype)
    entries = P[:, exponents] * signs[None, :] / omega[:, None]
    return JacobianMatrix(entries, 'inverse')


# ============================================================================
# 幂和与恒等式
# ============================================================================

def weighted_power_sum(r: PreparedRoots, m: int) -> float:
    """
    s_m = Σ x_i^m / ω′(x_i)。

    m ≤ n−2 时为 0，m = n−1 时为 1。
    """
    _require_distinct(r)
    if m < 0:
        raise ValueError(f"幂次必须非负，得到 {m}")
    return float(np.sum(_powers(r.x, m) / r.omega_prime))


def weighted_sum_scale(r: PreparedRoots, m: int) -> float:
    """s_m 的误差尺度 max(1, x₁^m / min|ω′|)。"""
    return max(1.0, float(_powers(r.x[:1], m)[0] / np.min(np.abs(r.omega_prime))))


def power_sum(r: PreparedRoots, m: int) -> float:
    """不加权的幂和 p_m = Σ x_i^m。"""
    return float(np.sum(_powers(r.x, m)))


def _coeff(sigma: np.ndarray, j: int) -> float:
    return float(sigma[j]) if 0 <= j < sigma.size else 0.0


def weighted_sum_recurrence_residual(r: PreparedRoots, k: int) -> float:
    """
    Σ_{t=0}^{k} (−1)^t c_{k−t} s_{n−1+t}，其中 c₀ = 1，j > n 时 c_j = 0。

    恒等式对所有 k ≥ 1 成立（s_{n−1+t} 即 t 次完全齐次对称多项式），
    这里只要求 k ≥ 1。
    """
    if k < 1:
        raise ValueError(f"k 必须 ≥ 1，得到 {k}")
    sigma = _esym(r.x)
    n = r.n
    total = 0.0
    for t in range(k + 1):
        total += (-1) ** t * _coeff(sigma, k - t) * weighted_power_sum(r, n - 1 + t)
    return total


def recurrence_scale(r: PreparedRoots, k: int) -> float:
    sigma = _esym(r.x)
    n = r.n
    return max(1.0, sum(_coeff(sigma, k - t) * weighted_sum_scale(r, n - 1 + t)
                        for t in range(k + 1)))


def newton_identity_residual(r: PreparedRoots, k: int) -> float:
    """
    k·c_k − Σ_{i=1}^{k} (−1)^{i−1} c_{k−i} p_i，p_i 为不加权幂和。

    经典 Newton-Girard 恒等式作用于不加权幂和；加权的 s_i 满足的是
    weighted_sum_recurrence_residual 中的另一族恒等式。
    """
    n = r.n
    if not 1 <= k <= n:
        raise ValueError(f"k 应在 1..{n} 之间，得到 {k}")
    sigma = _esym(r.x)
    rhs = sum((-1) ** (i - 1) * sigma[k - i] * power_sum(r, i) for i in range(1, k + 1))
    return float(k * sigma[k] - rhs)


@dataclass(frozen=True, eq=False)
class IdentityTable:
    """
    一组根上全部幂和恒等式的残差与尺度，幂次表只建一次。

    Attributes
    ----------
    weighted_sums, weighted_scales : np.ndarray
        s_m 与其尺度，m = 0..n−1+k_max。
    recurrence, recurrence_scales : np.ndarray
        递推残差与尺度，k = 1..k_max。
    newton, newton_scales : np.ndarray
        Newton 恒等式残差与尺度，k = 1..n。
    """
    weighted_sums: np.ndarray
    weighted_scales: np.ndarray
    recurrence: np.ndarray
    recurrence_scales: np.ndarray
    newton: np.ndarray
    newton_scales: np.ndarray


def identity_table(r: PreparedRoots, k_max: int) -> IdentityTable:
    """
    逐项与 weighted_power_sum、weighted_sum_recurrence_residual、
    newton_identity_residual 及对应尺度函数一致，批量计算。
    """
    _require_distinct(r)
    if k_max < 1:
        raise ValueError(f"k_max 必须 ≥ 1，得到 {k_max}")
    n = r.n
    top = n - 1 + k_max
    P = _power_table(r.x, top)
    s = np.sum(P / r.omega_prime[:, None], axis=0)
    s_scale = np.maximum(1.0, P[0] / np.min(np.abs(r.omega_prime)))
    p = np.sum(P, axis=0)

    c = np.zeros(max(n, k_max) + 1)
    c[:n + 1] = _esym(r.x)

    rec = np.empty(k_max)
    rec_scale = np.empty(k_max)
    for k in range(1, k_max + 1):
        t = np.arange(k + 1)
        coeffs = c[k - t]
        rec[k - 1] = np.sum((-1.0) ** t * coeffs * s[n - 1 + t])
        rec_scale[k - 1] = max(1.0, float(np.sum(coeffs * s_scale[n - 1 + t])))

    newton = np.empty(n)
    newton_scale = np.empty(n)
    for k in range(1, n + 1):
        i = np.arange(1, k + 1)
        terms = c[k - i] * p[i]
        newton[k - 1] = k * c[k] - np.sum((-1.0) ** (i - 1) * terms)
        newton_scale[k - 1] = max(1.0, k * c[k] + float(np.sum(terms)))
    return IdentityTable(s, s_scale, rec, rec_scale, newton, newton_scale)


# ============================================================================
# 差商
# ============================================================================

def divided_difference(f: Callable[[float], float], r: PreparedRoots,
                       derivative_sign: Callable[[int], int] | None = None) -> float:
    """
    差商 f[x₁..x_n] = Σ f(x_i) / ω′(x_i)。

    它等于 f 在这些节点上的插值多项式的首项系数，也等于
    f^{(n−1)}(ξ)/(n−1)!，ξ 落在根所在的区间内。

    Parameters
    ----------
    f : Callable[[float], float]
        单变量函数。
    r : PreparedRoots
    derivative_sign : Callable[[int], int], optional
        derivative_sign(order) 返回 f^{(order)} 在根区间上的恒定符号
        （+1、−1，或 0 表示不确定）。给出时会核对结果的符号。

    Raises
    ------
    RepeatedRoots
    NonFiniteFunctionValue
        f 在某个节点处不是有限值。
    SignMismatch
        结果符号与 derivative_sign(n−1) 不一致。
    """
    _require_distinct(r)
    values = np.array([f(float(xi)) for xi in r.x], dtype=float)
    if not np.all(np.isfinite(values)):
        raise NonFiniteFunctionValue(f"f 在节点处取到非有限值: {values}")
    S = float(np.sum(values / r.omega_prime))
    if derivative_sign is not None:
        expected = int(derivative_sign(r.n - 1))
        if expected != 0 and int(np.sign(S)) != expected:
            raise SignMismatch(f"差商 {S:.6g} 的符号与 f^({r.n - 1}) 的符号 {expected} 不一致")
    return S


def lagrange_leading_coefficient(xs: Sequence[float], ys: Sequence[float]) -> float:
    """解 Vandermonde 方程组得到插值多项式的首项系数。"""
    V = np.vander(np.asarray(xs, dtype=float))
    coeffs = np.linalg.solve(V, np.asarray(ys, dtype=float))
    return float(coeffs[0])


# ============================================================================
# 谱和函数对系数的梯度
# ============================================================================

def spectral_sum_gradient(mu: PreparedRoots, phi_prime: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """
    Φ(μ) = Σ φ(μ_i) 对系数的梯度。

    ∂Φ/∂c_k = (−1)^{k−1} Σ_i φ′(μ_i) μ_i^{N−k} / ω′(μ_i)，k = 1..N。
    由差商的符号方法，Φ 在每个 c_k 上递增当且仅当
    φ′(x)·x^{N−k} 的 N−1 阶差商符号为 (−1)^{k−1}。
    """
    J_inv = inverse_jacobian_closed_form(mu).entries
    return phi_prime(mu.x) @ J_inv


def _check_positive_spectrum(mu: PreparedRoots):
    if mu.x[-1] <= mu.gap_floor:
        raise ZeroEigenvalueIncluded(
            f"最小特征值 {mu.x[-1]:.3e} 不大于 gap_floor {mu.gap_floor:.3e}，应去掉零特征值")


def lel_gradient_wrt_coeffs(mu: PreparedRoots) -> np.ndarray:
    """
    ∂LEL/∂c_k = ((−1)^{k−1}/2) Σ_i μ_i^{N−k} / (ω′(μ_i)·√μ_i)。

    mu 为 N 个互不相同的非零拉普拉斯特征值；每个分量都严格为正。

    Raises
    ------
    RepeatedRoots
    ZeroEigenvalueIncluded
        存在 μ_i ≤ gap_floor。
    """
    _check_positive_spectrum(mu)
    return spectral_sum_gradient(mu, lambda x: 0.5 / np.sqrt(x))


def lee_gradient_wrt_coeffs(mu: PreparedRoots) -> np.ndarray:
    """∂LEE/∂c_k；φ′ = exp 的各阶导数都为正，因此分量符号交替为 (−1)^{k−1}。"""
    return spectral_sum_gradient(mu, np.exp)


def lel_from_roots(r: PreparedRoots) -> float:
    return float(np.sum(np.sqrt(r.x)))


# ============================================================================
# 由系数求根
# ============================================================================

def _monic_from_coeffs(c: np.ndarray) -> np.ndarray:
    """x^N − c₁x^{N−1} + c₂x^{N−2} − … 的降幂系数。"""
    signs = np.where(np.arange(c.size) % 2 == 0, -1, 1).astype(c.dtype)
    return np.concatenate((np.ones(1, dtype=c.dtype), signs * c))


def refine_roots(c: np.ndarray, seeds: np.ndarray,
                 residual_tol: float = ROOT_RESIDUAL_TOL,
                 max_iter: int = ROOT_MAX_ITER) -> np.ndarray:
    """
    Aberth–Ehrlich 同时迭代，全部在 np.longdouble 中进行。

    Parameters
    ----------
    c : np.ndarray
        系数 c₁..c_N。
    seeds : np.ndarray
        N 个互不相同的实初值。

    Returns
    -------
    np.ndarray
        longdouble 类型的根，降序。

    Raises
    ------
    NoRealSimpleRoots
        初值重合、迭代发散或残差不达标。
    """
    c = np.asarray(c, dtype=np.longdouble)
    z = np.sort(np.asarray(seeds, dtype=np.longdouble))[::-1].copy()
    a = _monic_from_coeffs(c)
    da = np.polyder(a)
    abs_a = np.abs(a)
    if z.size > 1 and np.min(np.abs(z[:-1] - z[1:])) == 0:
        raise NoRealSimpleRoots("初值中有重合的点，无法开始同时迭代")

    def residual_ok(z):
        p = np.abs(np.polyval(a, z))
        scale = np.polyval(abs_a, np.abs(z))
        return bool(np.all(p <= residual_tol * scale))

    for _ in range(max_iter):
        p = np.polyval(a, z)
        dp = np.polyval(da, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        inv = 1 / diff
        np.fill_diagonal(inv, 0)
        with np.errstate(divide='ignore', invalid='ignore'):
            ratio = np.where(dp != 0, p / dp, 0)
            step = ratio / (1 - ratio * inv.sum(axis=1))
        if not np.all(np.isfinite(step)):
            raise NoRealSimpleRoots("同时迭代出现非有限的修正量")
        z = z - step
        if residual_ok(z) and np.all(np.abs(step) <= 1e-3 * residual_tol * (1 + np.abs(z))):
            break
    if not residual_ok(z):
        raise NoRealSimpleRoots(f"{max_iter} 步后残差仍未达到 {residual_tol:g}")
    return np.sort(z)[::-1]


def roots_from_coeffs(c: RealCoeffs, guess: PreparedRoots | None = None) -> PreparedRoots:
    """
    由系数反求实单根。

    Parameters
    ----------
    c : RealCoeffs
    guess : PreparedRoots, optional
        热启动初值（通常是扰动前的根）；缺省时用 np.roots 的实部作初值。

    Raises
    ------
    NoRealSimpleRoots
        迭代失败，或结果不满足正性、间距、回代精度的要求。
    """
    coeffs = c.as_array()
    if guess is not None:
        if guess.n != coeffs.size:
            raise ValueError(f"初值个数 {guess.n} 与系数个数 {coeffs.size} 不符")
        seeds = guess.x
    else:
        seeds = np.real(np.roots(_monic_from_coeffs(coeffs)))
    z = refine_roots(coeffs, seeds)
    try:
        roots = prepare_roots(z.astype(float))
    except (RepeatedRoots, ZeroEigenvalueIncluded) as exc:
        raise NoRealSimpleRoots(f"求得的根不是互异正实根: {exc}") from exc
    back = _esym(roots.x)[1:]
    if np.any(np.abs(back - coeffs) > ROOT_ROUNDTRIP_TOL * np.maximum(1.0, np.abs(coeffs))):
        raise NoRealSimpleRoots(f"回代系数偏差过大: {back} vs {coeffs}")
    return roots


def _perturbed_root_shifts(x: np.ndarray, k: int, h, max_iter: int = ROOT_MAX_ITER) -> np.ndarray:
    """
    c_k 增加 h 后各根的位移 δ_i。

    扰动后的多项式为 ω(z) + (−1)^k·h·z^{N−k}。对每个 i 解
    δ·Π_{j≠i}(x_i − x_j + δ) + (−1)^k·h·(x_i + δ)^{N−k} = 0，
    从 x_i 出发做 Newton 迭代。ω 按乘积形式求值，不经过展开后的系数。
    """
    n = x.size
    sign = x.dtype.type(-1 if k % 2 else 1)
    e = n - k
    d = x[:, None] - x[None, :]
    off = ~np.eye(n, dtype=bool)
    eps = np.finfo(x.dtype).eps
    delta = np.zeros_like(x)
    for _ in range(max_iter):
        shifted = np.where(off, d + delta[:, None], 1)
        prod = np.prod(shifted, axis=1)
        inv_sum = np.sum(np.where(off, 1 / shifted, 0), axis=1)
        z = x + delta
        g = delta * prod + sign * h * _powers(z, e)
        dg = prod * (1 + delta * inv_sum)
        if e > 0:
            dg = dg + sign * h * e * _powers(z, e - 1)
        step = g / dg
        if not np.all(np.isfinite(step)):
            raise NoRealSimpleRoots(f"c_{k} 扰动后的 Newton 修正量非有限")
        delta = delta - step
        if np.all(np.abs(step) <= 1e3 * eps * np.abs(delta)):
            break
    else:
        raise NoRealSimpleRoots(f"c_{k} 扰动后 {max_iter} 步内根的位移未收敛")
    if n > 1 and np.max(np.abs(delta)) >= 0.5 * np.min(np.abs(d[off])):
        raise NoRealSimpleRoots(f"c_{k} 的扰动 {float(h):.3e} 使根越过相邻根")
    return delta


def _central_difference(x: np.ndarray, k: int, h) -> np.floating:
    """(LEL(c + h·e_k) − LEL(c − h·e_k)) / 2h，差值按 Σ(δ⁺ − δ⁻)/(√x⁺ + √x⁻) 求和。"""
    up = _perturbed_root_shifts(x, k, h)
    down = _perturbed_root_shifts(x, k, -h)
    return np.sum((up - down) / (np.sqrt(x + up) + np.sqrt(x + down))) / (2 * h)


def lel_gradient_finite_difference(mu: PreparedRoots, step: float) -> np.ndarray:
    """
    中心差分估计 ∂LEL/∂c_k：c_k ± h_k 后重新求根，再对 LEL 做差商。

    h_k 按根对 c_k 的灵敏度选取，使根的最大位移约为 step·min_gap：
    h_k = step·min_gap / max_i |∂x_i/∂c_k|。步长 h 与 h/2 的两个中心差分
    再做一次 Richardson 外推消去 h² 项。重新求根与求和都在 longdouble 中完成。

    Raises
    ------
    NoRealSimpleRoots
        扰动后的根无法从原根出发收敛。
    """
    _check_positive_spectrum(mu)
    x = mu.x.astype(np.longdouble)
    sensitivity = np.abs(inverse_jacobian_closed_form(mu, dtype=np.longdouble).entries)
    gap = np.longdouble(mu.min_gap if mu.n > 1 else mu.x[0])
    grad = np.empty(mu.n)
    for k in range(1, mu.n + 1):
        h = np.longdouble(step) * gap / np.max(sensitivity[:, k - 1])
        coarse = _central_difference(x, k, h)
        fine = _central_difference(x, k, h / 2)
        grad[k - 1] = float((4 * fine - coarse) / 3)
    return grad
