"""随机根向量上的数值检查：雅可比恒等式、加权幂和引理、梯度。

所有检查都由一个种子决定：同样的参数两次运行抽到同样的根。
"""
from __future__ import annotations

import logging
import math

import numpy as np

from .config import (
    DEFAULT_MIN_GAP,
    DEFAULT_SEED,
    FD_RETRIES,
    RECURRENCE_MAX_K,
    SAMPLE_HIGH,
    SAMPLE_LOW,
)
from .errors import NoRealSimpleRoots, SignMismatch
from .report import CheckReport
from .vieta import (
    PreparedRoots,
    divided_difference,
    forward_jacobian_direct,
    identity_table,
    inverse_jacobian_closed_form,
    lel_gradient_finite_difference,
    lel_gradient_wrt_coeffs,
    random_prepared_roots,
)

logger = logging.getLogger(__name__)


def _check_range(n_min: int, n_max: int, low: int = 1):
    if n_min < low or n_min > n_max:
        raise ValueError(f"需要 {low} ≤ n_min ≤ n_max，得到 n_min={n_min}, n_max={n_max}")


def _roots(r: PreparedRoots) -> list[float]:
    return [float(v) for v in r.x]


# ============================================================================
# 雅可比
# ============================================================================

def jacobian_errors(r: PreparedRoots) -> tuple[float, float]:
    """
    ‖J_F·J_{F⁻¹} − I‖_max 与 ‖J_{F⁻¹}·J_F − I‖_max。

    J_F 按子集和直接展开，两个因子与乘积都在 longdouble 中计算。
    """
    J = forward_jacobian_direct(r, dtype=np.longdouble).entries
    J_inv = inverse_jacobian_closed_form(r, dtype=np.longdouble).entries
    eye = np.eye(r.n, dtype=np.longdouble)
    return (float(np.max(np.abs(J @ J_inv - eye))),
            float(np.max(np.abs(J_inv @ J - eye))))


def verify_jacobian(n_min: int = 2, n_max: int = 8, samples: int = 200,
                    min_gap: float = DEFAULT_MIN_GAP, tol: float = 1e-7,
                    seed: int = DEFAULT_SEED) -> CheckReport:
    """
    在随机根上检查逆雅可比闭式确实是正向雅可比的逆。

    Parameters
    ----------
    n_min, n_max : int
        根的个数范围。
    samples : int
        每个 n 的样本数。
    min_gap : float
        相邻根的最小间距。
    tol : float
        两个乘积与单位阵之差的最大元允许值。
    seed : int

    Returns
    -------
    CheckReport
    """
    _check_range(n_min, n_max)
    rng = np.random.default_rng(seed)
    report = CheckReport('jacobian', params={'n_min': n_min, 'n_max': n_max, 'samples': samples,
                                             'min_gap': min_gap, 'tol': tol, 'seed': seed})
    worst = 0.0
    for n in range(n_min, n_max + 1):
        for i in range(samples):
            r = random_prepared_roots(rng, n, SAMPLE_LOW, SAMPLE_HIGH, min_gap)
            right, left = jacobian_errors(r)
            worst = max(worst, right, left)
            report.cases_checked += 1
            if right > tol or left > tol:
                report.violations.append({'n': n, 'sample': i, 'roots': _roots(r),
                                          'right_error': right, 'left_error': left})
    report.observations.append({'max_error': worst})
    logger.info(f"jacobian: {report.cases_checked} 个样本，最大误差 {worst:.3e}")
    return report


# ============================================================================
# 引理与恒等式
# ============================================================================

def _sqrt_derivative_sign(order: int) -> int:
    """√x 的 order 阶导数在 x > 0 上的符号。"""
    return 1 if order == 0 else (-1) ** (order - 1)


def lemma_violations(r: PreparedRoots, tol: float, k_max: int = RECURRENCE_MAX_K) -> list[dict]:
    """
    单个根向量上的全部引理检查，返回违例列表。

    - s_m = 0（m ≤ n−2），s_{n−1} = 1
    - 加权幂和递推，k = 1..k_max
    - Newton 恒等式，k = 1..n
    - √x 的 n−1 阶差商符号与导数符号一致
    """
    n = r.n
    table = identity_table(r, k_max)
    out = []
    for m in range(n):
        s = float(table.weighted_sums[m])
        target = 1.0 if m == n - 1 else 0.0
        if abs(s - target) > tol * table.weighted_scales[m]:
            out.append({'identity': 'weighted_sum', 'm': m, 'value': s, 'target': target})
    for k, (res, scale) in enumerate(zip(table.recurrence, table.recurrence_scales), start=1):
        if abs(res) > tol * scale:
            out.append({'identity': 'recurrence', 'k': k, 'residual': float(res)})
    for k, (res, scale) in enumerate(zip(table.newton, table.newton_scales), start=1):
        if abs(res) > tol * scale:
            out.append({'identity': 'newton', 'k': k, 'residual': float(res)})
    try:
        divided_difference(math.sqrt, r, derivative_sign=_sqrt_derivative_sign)
    except SignMismatch as exc:
        out.append({'identity': 'divided_difference_sign', 'message': str(exc)})
    return out


def verify_lemmas(n_min: int = 2, n_max: int = 8, samples: int = 200, tol: float = 1e-9,
                  seed: int = DEFAULT_SEED, min_gap: float = DEFAULT_MIN_GAP) -> CheckReport:
    """加权幂和引理、递推与 Newton 恒等式，误差按各自的尺度相对化。"""
    _check_range(n_min, n_max)
    rng = np.random.default_rng(seed)
    report = CheckReport('lemmas', params={'n_min': n_min, 'n_max': n_max, 'samples': samples,
                                           'tol': tol, 'seed': seed, 'min_gap': min_gap})
    for n in range(n_min, n_max + 1):
        for i in range(samples):
            r = random_prepared_roots(rng, n, SAMPLE_LOW, SAMPLE_HIGH, min_gap)
            report.cases_checked += 1
            for v in lemma_violations(r, tol):
                report.violations.append({'n': n, 'sample': i, 'roots': _roots(r), **v})
    logger.info(f"lemmas: {report.cases_checked} 个样本，{len(report.violations)} 条违例")
    return report


# ============================================================================
# 梯度
# ============================================================================

def _finite_difference(mu: PreparedRoots, step: float) -> tuple[np.ndarray, float]:
    for _ in range(FD_RETRIES + 1):
        try:
            return lel_gradient_finite_difference(mu, step), step
        except NoRealSimpleRoots as exc:
            logger.warning(f"步长 {step:g} 下重新求根失败，缩小步长: {exc}")
            step /= 10.0
    return lel_gradient_finite_difference(mu, step), step


def verify_gradient(samples: int = 500, fd_step: float = 1e-6, tol: float = 1e-4,
                    seed: int = DEFAULT_SEED, n_min: int = 3, n_max: int = 8,
                    min_gap: float = DEFAULT_MIN_GAP) -> CheckReport:
    """
    LEL 对系数的梯度：闭式各分量为正，且与中心差分的相对误差不超过 tol。

    每个样本的阶数在 [n_min, n_max] 内均匀抽取。
    """
    _check_range(n_min, n_max, low=2)
    rng = np.random.default_rng(seed)
    report = CheckReport('gradient', params={'samples': samples, 'fd_step': fd_step, 'tol': tol,
                                             'seed': seed, 'n_min': n_min, 'n_max': n_max,
                                             'min_gap': min_gap})
    worst = 0.0
    for i in range(samples):
        n = int(rng.integers(n_min, n_max + 1))
        mu = random_prepared_roots(rng, n, SAMPLE_LOW, SAMPLE_HIGH, min_gap)
        grad = lel_gradient_wrt_coeffs(mu)
        report.cases_checked += 1
        if np.any(grad <= 0):
            report.violations.append({'sample': i, 'roots': _roots(mu), 'reason': 'non_positive',
                                      'gradient': [float(g) for g in grad]})
            continue
        try:
            fd, used_step = _finite_difference(mu, fd_step)
        except NoRealSimpleRoots as exc:
            report.violations.append({'sample': i, 'roots': _roots(mu), 'reason': 'reroot_failed',
                                      'message': str(exc)})
            continue
        rel = float(np.max(np.abs(fd - grad) / np.abs(grad)))
        worst = max(worst, rel)
        if used_step != fd_step:
            report.observations.append({'sample': i, 'fd_step': used_step})
        if rel > tol:
            report.violations.append({'sample': i, 'roots': _roots(mu), 'reason': 'fd_mismatch',
                                      'relative_error': rel,
                                      'gradient': [float(g) for g in grad],
                                      'finite_difference': [float(g) for g in fd]})
    report.observations.append({'max_relative_error': worst})
    logger.info(f"gradient: {report.cases_checked} 个样本，最大相对误差 {worst:.3e}")
    return report
