"""穷举验证：在全部 n 阶自由树上做系数与不变量的检查。

每棵树先算成 TreeRecord（精确系数 + 数值不变量），再在记录表上
做支配关系的逐对扫描。记录可并行计算，但总按规范编码排序后
再进入任何检查，报告与 jobs 数无关。
"""
from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import pandas as pd

from .charpoly import (
    ExactCoeffs,
    coefficients_from_spectrum,
    laplacian_coefficients,
    verify_coefficient_identities,
)
from .config import (
    CLOSURE_CAUCHY_TOL,
    CLOSURE_START_GAP,
    DEFAULT_SLACK,
    FULL_PAIR_SCAN_MAX,
    MAX_TREE_ORDER,
)
from .errors import InvalidOrder, OrderMismatch, OrderTooLarge, RepeatedRoots
from .graph import cycle_graph, path_graph, star_graph
from .invariants import incidence_energy, lee, lel
from .report import CheckReport
from .spectra import laplacian_spectrum
from .treeenum import LevelSequence, canonical_code, free_tree_level_sequences
from .vieta import lel_from_roots, lel_gradient_wrt_coeffs, prepare_roots

logger = logging.getLogger(__name__)


# ============================================================================
# 数据类型
# ============================================================================

@dataclass(frozen=True)
class TreeRecord:
    """
    一棵树的全部数据。

    Attributes
    ----------
    tree_id : str
        规范编码 sha1 的前 12 位。
    code : bytes
        规范编码本身，用于排序。
    level_sequence : LevelSequence
    coeffs : ExactCoeffs
    lel, lee, ie : float
    wiener : int
    identities_passed : bool
        精确系数恒等式是否全部成立。
    """
    tree_id: str
    code: bytes
    level_sequence: LevelSequence
    coeffs: ExactCoeffs
    lel: float
    lee: float
    ie: float
    wiener: int
    identities_passed: bool

    @property
    def n(self) -> int:
        return self.level_sequence.n


class Relation(str, Enum):
    LE = 'LE'
    GE = 'GE'
    EQ = 'EQ'
    INCOMPARABLE = 'INCOMPARABLE'


@dataclass(frozen=True)
class DominanceVerdict:
    """
    c₁..c_{n−1} 上逐项比较的结论。

    witness 为第一个严格不等的下标 k；EQ 时为 None。
    """
    relation: Relation
    witness: int | None = None


@dataclass(frozen=True)
class OrderCheckRecord:
    """一对可比的树，G ⪯ H；差值均为 H − G。"""
    g_id: str
    h_id: str
    verdict: DominanceVerdict
    lel_diff: float
    lee_diff: float
    violation_lel: bool
    violation_lee: bool

    def as_dict(self) -> dict:
        return {
            'g': self.g_id,
            'h': self.h_id,
            'relation': self.verdict.relation.value,
            'witness': self.verdict.witness,
            'lel_diff': self.lel_diff,
            'lee_diff': self.lee_diff,
            'violation_lel': self.violation_lel,
            'violation_lee': self.violation_lee,
        }


# ============================================================================
# 记录表
# ============================================================================

def tree_record(ls: LevelSequence) -> TreeRecord:
    t = ls.to_tree()
    report = verify_coefficient_identities(t)
    code = canonical_code(t)
    s = laplacian_spectrum(t)
    wiener = next((chk.expected for chk in report.checks if chk.name == 'c(n-2)=W'), 0)
    return TreeRecord(
        tree_id=code.tree_id(),
        code=code.code,
        level_sequence=ls,
        coeffs=report.coeffs,
        lel=lel(s),
        lee=lee(s),
        ie=incidence_energy(t),
        wiener=wiener,
        identities_passed=report.passed,
    )


def _records_chunk(seqs: list[tuple[int, ...]]) -> list[TreeRecord]:
    return [tree_record(LevelSequence(seq)) for seq in seqs]


def _chunks(items: list, count: int) -> list[list]:
    size = max(1, math.ceil(len(items) / count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _check_order(n: int, low: int = 2):
    if n < low:
        raise InvalidOrder(f"阶数至少为 {low}，得到 {n}")
    if n > MAX_TREE_ORDER:
        raise OrderTooLarge(f"n={n} 超过枚举上限 {MAX_TREE_ORDER}")


def coefficient_table(n: int, jobs: int = 1) -> list[TreeRecord]:
    """
    n 阶全部自由树的记录，按规范编码排序。

    Parameters
    ----------
    n : int
        2 ≤ n ≤ MAX_TREE_ORDER。
    jobs : int
        并行进程数；1 表示在当前进程内计算。

    Returns
    -------
    list[TreeRecord]

    使用示例
    --------
    >>> [r.coeffs.c for r in coefficient_table(4)]    # 顺序由规范编码决定
    """
    _check_order(n)
    seqs = [ls.seq for ls in free_tree_level_sequences(n)]
    logger.info(f"n={n}: {len(seqs)} 棵树，jobs={jobs}")
    if jobs > 1 and len(seqs) > 1:
        records: list[TreeRecord] = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_records_chunk, _chunks(seqs, jobs * 4)):
                records.extend(part)
    else:
        records = _records_chunk(seqs)
    records.sort(key=lambda r: r.code)
    return records


def records_frame(records: Sequence[TreeRecord]) -> pd.DataFrame:
    """
    记录表转 DataFrame：n, tree_id, level_sequence, c0..cn, lel, lee, ie, wiener。

    系数列是十进制字符串。
    """
    rows = []
    for r in records:
        row = {'n': r.n, 'tree_id': r.tree_id, 'level_sequence': str(r.level_sequence)}
        row.update(zip(r.coeffs.column_names, r.coeffs.as_strings()))
        row.update({'lel': r.lel, 'lee': r.lee, 'ie': r.ie, 'wiener': r.wiener})
        rows.append(row)
    return pd.DataFrame(rows)


# ============================================================================
# 支配关系
# ============================================================================

def _dominance(a: Sequence[int], b: Sequence[int]) -> DominanceVerdict:
    less = greater = None
    for k, (x, y) in enumerate(zip(a, b), start=1):
        if x < y and less is None:
            less = k
        elif x > y and greater is None:
            greater = k
    if less is None and greater is None:
        return DominanceVerdict(Relation.EQ)
    if greater is None:
        return DominanceVerdict(Relation.LE, less)
    if less is None:
        return DominanceVerdict(Relation.GE, greater)
    return DominanceVerdict(Relation.INCOMPARABLE, min(less, greater))


def dominance(a: ExactCoeffs, b: ExactCoeffs) -> DominanceVerdict:
    """
    按 c₁..c_{n−1} 精确比较两组系数；c₀ 与 c_n 恒相等，不参与比较。

    Raises
    ------
    OrderMismatch
        两组系数的阶数不同。

    使用示例
    --------
    >>> dominance(laplacian_coefficients(star_graph(4)), laplacian_coefficients(path_graph(4)))
    DominanceVerdict(relation=<Relation.LE: 'LE'>, witness=2)
    """
    if a.n != b.n:
        raise OrderMismatch(f"阶数不同: {a.n} vs {b.n}")
    return _dominance(a.c[1:a.n], b.c[1:b.n])


# ============================================================================
# 精确检查
# ============================================================================

def _coeffs_chunk(seqs: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    return [(seq, laplacian_coefficients(LevelSequence(seq).to_tree()).c) for seq in seqs]


def _tree_coefficients(n: int, jobs: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    seqs = [ls.seq for ls in free_tree_level_sequences(n)]
    if jobs > 1 and len(seqs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return [item for part in pool.map(_coeffs_chunk, _chunks(seqs, jobs * 4)) for item in part]
    return _coeffs_chunk(seqs)


def verify_zhou_gutman(n: int, jobs: int = 1) -> CheckReport:
    """
    检查每棵 n 阶树 T 满足 c_k(S_n) ≤ c_k(T) ≤ c_k(P_n)，k = 1..n−1。

    全部为整数比较。
    """
    _check_order(n)
    star = laplacian_coefficients(star_graph(n)).c
    path = laplacian_coefficients(path_graph(n)).c
    report = CheckReport('extremal', params={'n': n})
    for seq, c in _tree_coefficients(n, jobs):
        report.cases_checked += 1
        for k in range(1, n):
            if star[k] > c[k]:
                report.violations.append({'level_sequence': list(seq), 'side': 'star', 'k': k,
                                          'tree': str(c[k]), 'bound': str(star[k])})
            if c[k] > path[k]:
                report.violations.append({'level_sequence': list(seq), 'side': 'path', 'k': k,
                                          'tree': str(c[k]), 'bound': str(path[k])})
    logger.info(f"extremal n={n}: {report.cases_checked} 棵树，{len(report.violations)} 条违例")
    return report


def verify_extremal(n_max: int, jobs: int = 1) -> CheckReport:
    """对 n = 2..n_max 依次做 verify_zhou_gutman 并合并。"""
    merged = CheckReport('extremal', params={'n_max': n_max})
    for n in range(2, n_max + 1):
        part = verify_zhou_gutman(n, jobs)
        merged.cases_checked += part.cases_checked
        merged.violations.extend({'n': n, **v} for v in part.violations)
    return merged


def verify_identities(n_max: int, jobs: int = 1) -> CheckReport:
    """
    对 n = 1..n_max 的每棵树检查 c₀=1, c₁=2(n−1), c_{n−1}=n, c_n=0, c_{n−2}=W(T)。
    """
    _check_order(n_max, low=1)
    report = CheckReport('identities', params={'n_max': n_max})
    for n in range(1, n_max + 1):
        seqs = [ls.seq for ls in free_tree_level_sequences(n)]
        if jobs > 1 and len(seqs) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = [x for part in pool.map(_identity_chunk, _chunks(seqs, jobs * 4)) for x in part]
        else:
            results = _identity_chunk(seqs)
        for seq, failures in results:
            report.cases_checked += 1
            for name, expected, actual in failures:
                report.violations.append({'n': n, 'level_sequence': list(seq), 'identity': name,
                                          'expected': str(expected), 'actual': str(actual)})
        logger.info(f"identities n={n}: {len(seqs)} 棵树")
    return report


def _identity_chunk(seqs: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], list[tuple[str, int, int]]]]:
    out = []
    for seq in seqs:
        rep = verify_coefficient_identities(LevelSequence(seq).to_tree())
        out.append((seq, [(c.name, c.expected, c.actual) for c in rep.failures()]))
    return out


# ============================================================================
# 逐对扫描
# ============================================================================

@dataclass
class _PairScan:
    pairs: int = 0
    comparable: int = 0
    incomparable: int = 0
    equal: int = 0
    min_positive_gap: float = math.inf
    flagged: list[tuple[int, int, OrderCheckRecord]] = field(default_factory=list)

    def merge(self, other: _PairScan):
        self.pairs += other.pairs
        self.comparable += other.comparable
        self.incomparable += other.incomparable
        self.equal += other.equal
        self.min_positive_gap = min(self.min_positive_gap, other.min_positive_gap)
        self.flagged.extend(other.flagged)


def order_check(g: TreeRecord, h: TreeRecord, verdict: DominanceVerdict,
                slack: float = DEFAULT_SLACK) -> OrderCheckRecord:
    """
    为一对 G ⪯ H 生成检查记录。

    LE 严格时 lel(G) > lel(H) + slack 记为 LEL 违例；EQ 时要求
    |lel 差| ≤ slack。LEE 标志的规则相同，它本来就可能被违反。
    """
    lel_diff = h.lel - g.lel
    lee_diff = h.lee - g.lee
    if verdict.relation is Relation.EQ:
        bad_lel = abs(lel_diff) > slack
        bad_lee = False
    else:
        bad_lel = lel_diff < -slack
        bad_lee = lee_diff < -slack
    return OrderCheckRecord(g.tree_id, h.tree_id, verdict, lel_diff, lee_diff, bad_lel, bad_lee)


def _scan_rows(records: Sequence[TreeRecord], rows: Iterable[int], slack: float) -> _PairScan:
    scan = _PairScan()
    tails = [r.coeffs.c[1:r.n] for r in records]
    for i in rows:
        for j in range(i + 1, len(records)):
            scan.pairs += 1
            verdict = _dominance(tails[i], tails[j])
            match verdict.relation:
                case Relation.INCOMPARABLE:
                    scan.incomparable += 1
                    continue
                case Relation.LE | Relation.EQ:
                    g, h = records[i], records[j]
                case Relation.GE:
                    g, h = records[j], records[i]
                    verdict = DominanceVerdict(Relation.LE, verdict.witness)
            scan.comparable += 1
            if verdict.relation is Relation.EQ:
                scan.equal += 1
            rec = order_check(g, h, verdict, slack)
            if verdict.relation is Relation.LE and rec.lel_diff > 0:
                scan.min_positive_gap = min(scan.min_positive_gap, rec.lel_diff)
            if rec.violation_lel or rec.violation_lee:
                scan.flagged.append((i, j, rec))
    return scan


def _scan_block(args) -> _PairScan:
    records, rows, slack = args
    return _scan_rows(records, rows, slack)


def scan_pairs(records: Sequence[TreeRecord], slack: float = DEFAULT_SLACK, jobs: int = 1) -> _PairScan:
    """
    全部无序树对的支配扫描。

    jobs > 1 时按行号轮转分块，合并后按 (i, j) 排序。
    """
    if jobs > 1 and len(records) > 2:
        scan = _PairScan()
        blocks = [(list(records), range(b, len(records), jobs), slack) for b in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_block, blocks):
                scan.merge(part)
    else:
        scan = _scan_rows(records, range(len(records)), slack)
    scan.flagged.sort(key=lambda item: (item[0], item[1]))
    return scan


def _star_path_ids(n: int) -> tuple[str, str]:
    return canonical_code(star_graph(n)).tree_id(), canonical_code(path_graph(n)).tree_id()


def verify_theorem1(n: int, slack: float = DEFAULT_SLACK, jobs: int = 1,
                    records: Sequence[TreeRecord] | None = None) -> CheckReport:
    """
    系数支配蕴含 LEL 单调：c(G) ⪯ c(H) ⇒ lel(G) ≤ lel(H) + slack。

    Parameters
    ----------
    n : int
    slack : float
        LEL 比较的绝对松弛量。
    jobs : int
    records : list[TreeRecord], optional
        已算好的记录表，缺省时调用 coefficient_table(n)。

    Returns
    -------
    CheckReport
        observations 记录可比对数、EQ 对数、最小正间隙以及 (S_n, P_n) 的间隙。
    """
    if n > FULL_PAIR_SCAN_MAX:
        logger.warning(f"n={n} 超过默认全对扫描上限 {FULL_PAIR_SCAN_MAX}，树对数量按平方增长")
    if records is None:
        records = coefficient_table(n, jobs)
    scan = scan_pairs(records, slack, jobs)
    report = CheckReport('order', params={'n': n, 'slack': slack}, cases_checked=scan.pairs)
    report.violations = [rec.as_dict() for _, _, rec in scan.flagged if rec.violation_lel]

    by_id = {r.tree_id: r for r in records}
    star_id, path_id = _star_path_ids(n)
    star, path = by_id[star_id], by_id[path_id]
    report.observations.append({
        'comparable_pairs': scan.comparable,
        'incomparable_pairs': scan.incomparable,
        'equal_pairs': scan.equal,
        'min_positive_gap': None if math.isinf(scan.min_positive_gap) else scan.min_positive_gap,
        'star_path_relation': dominance(star.coeffs, path.coeffs).relation.value,
        'star_path_gap': path.lel - star.lel,
    })
    logger.info(f"order n={n}: {scan.pairs} 对，可比 {scan.comparable}，违例 {len(report.violations)}")
    return report


# ============================================================================
# LEE 反例
# ============================================================================

def _star_path_records(n: int) -> tuple[TreeRecord, TreeRecord]:
    star_ls = LevelSequence((0,) + (1,) * (n - 1))
    path_ls = LevelSequence(tuple(range(n // 2 + 1)) + tuple(range(1, (n + 1) // 2)))
    return tree_record(star_ls), tree_record(path_ls)


def hunt_lee_violations(n_min: int, n_max: int, slack: float = DEFAULT_SLACK,
                        full_scan_max: int = FULL_PAIR_SCAN_MAX, jobs: int = 1) -> CheckReport:
    """
    寻找 c(G) ⪯ c(H) 严格但 lee(G) > lee(H) + slack 的树对。

    n ≤ full_scan_max 时扫描全部树对，否则只看 (S_n, P_n)。
    找到的反例记在 observations 里；n ≥ 6 时若 (S_n, P_n) 不在其中，
    记为违例。
    """
    _check_order(n_min)
    _check_order(n_max)
    if n_min > n_max:
        raise ValueError(f"n_min={n_min} 大于 n_max={n_max}")
    report = CheckReport('lee', params={'n_min': n_min, 'n_max': n_max, 'slack': slack,
                                        'full_scan_max': full_scan_max})
    for n in range(n_min, n_max + 1):
        star_id, path_id = _star_path_ids(n)
        if n <= full_scan_max:
            records = coefficient_table(n, jobs)
            scan = scan_pairs(records, slack, jobs)
            flagged = [rec for _, _, rec in scan.flagged if rec.violation_lee]
            report.cases_checked += scan.pairs
            by_id = {r.tree_id: r for r in records}
            star, path = by_id[star_id], by_id[path_id]
        else:
            star, path = _star_path_records(n)
            verdict = dominance(star.coeffs, path.coeffs)
            rec = order_check(star, path, verdict, slack)
            flagged = [rec] if rec.violation_lee and verdict.relation is Relation.LE else []
            report.cases_checked += 1
        star_path_flagged = any(r.g_id == star_id and r.h_id == path_id for r in flagged)
        report.observations.append({
            'n': n,
            'pairs_flagged': len(flagged),
            'star_path_flagged': star_path_flagged,
            'lee_star': star.lee,
            'lee_path': path.lee,
        })
        report.observations.extend({'n': n, **rec.as_dict()} for rec in flagged)
        if n >= 6 and not star_path_flagged:
            report.violations.append({'n': n, 'missing': 'star_path',
                                      'lee_star': star.lee, 'lee_path': path.lee})
        logger.info(f"lee n={n}: {len(flagged)} 个反例，(S_n, P_n) {'在内' if star_path_flagged else '不在内'}")
    return report


# ============================================================================
# 闭包探测
# ============================================================================

def _coincident_value(mu: Sequence[float]) -> float | None:
    values = sorted(float(v) for v in mu)
    repeats = [a for a, b in zip(values, values[1:]) if a == b]
    if len(repeats) > 1:
        raise ValueError(f"至多允许一对重合的值，得到 {values}")
    return repeats[0] if repeats else None


def closure_probe(mu_limit: Sequence[float], steps: int = 20) -> CheckReport:
    """
    沿 (…, v+δ, v−δ, …) 逼近含一对重根的极限点，δ = δ₀·2^{−t}。

    每一步都要求 LEL 梯度全为正；最后两步的 LEL 之差不超过
    CLOSURE_CAUCHY_TOL。极限点本身会被 prepare_roots 拒绝，
    拒绝被记作 observation 而非违例。没有重根时只做一次梯度计算。
    """
    if steps < 1:
        raise ValueError(f"steps 至少为 1，得到 {steps}")
    v = _coincident_value(mu_limit)
    report = CheckReport('closure', params={'mu': [float(x) for x in mu_limit], 'steps': steps})

    if v is None:
        mu = prepare_roots(mu_limit)
        grad = lel_gradient_wrt_coeffs(mu)
        report.cases_checked = 1
        report.observations.append({'step': 0, 'delta': 0.0, 'lel': lel_from_roots(mu),
                                    'min_gradient': float(np.min(grad))})
        if np.any(grad <= 0):
            report.violations.append({'step': 0, 'gradient': [float(g) for g in grad]})
        return report

    others = list(mu_limit)
    others.remove(v)
    others.remove(v)
    lels: list[float] = []
    for t in range(steps):
        delta = CLOSURE_START_GAP * 2.0 ** (-t)
        try:
            mu = prepare_roots(others + [v + delta, v - delta])
        except RepeatedRoots as exc:
            logger.warning(f"δ={delta:.3e} 处间距过小，探测提前结束: {exc}")
            report.observations.append({'step': t + 1, 'delta': delta, 'refused': str(exc)})
            break
        grad = lel_gradient_wrt_coeffs(mu)
        lels.append(lel_from_roots(mu))
        report.cases_checked += 1
        report.observations.append({'step': t + 1, 'delta': delta, 'lel': lels[-1],
                                    'min_gradient': float(np.min(grad))})
        if np.any(grad <= 0):
            report.violations.append({'step': t + 1, 'delta': delta,
                                      'gradient': [float(g) for g in grad]})

    if len(lels) >= 2 and abs(lels[-1] - lels[-2]) > CLOSURE_CAUCHY_TOL:
        report.violations.append({'cauchy': abs(lels[-1] - lels[-2]), 'tol': CLOSURE_CAUCHY_TOL})

    try:
        prepare_roots(mu_limit)
    except RepeatedRoots as exc:
        logger.warning(f"极限点 {list(mu_limit)} 被拒绝: {exc}")
        report.observations.append({'limit': [float(x) for x in mu_limit], 'refused': str(exc)})
    return report


# ============================================================================
# 数值一致性
# ============================================================================

def verify_bipartite(n_max: int = 10, tol: float = 1e-8) -> CheckReport:
    """
    二部图上 IE = LEL：对 n ≤ n_max 的每棵树检查 |ie − lel| ≤ tol。

    C₃ 的差值 4 − 2√3 作为非二部图的对照记入 observations。
    """
    _check_order(n_max, low=1)
    report = CheckReport('bipartite', params={'n_max': n_max, 'tol': tol})
    for n in range(1, n_max + 1):
        for ls in free_tree_level_sequences(n):
            t = ls.to_tree()
            gap = incidence_energy(t) - lel(laplacian_spectrum(t))
            report.cases_checked += 1
            if abs(gap) > tol:
                report.violations.append({'n': n, 'level_sequence': list(ls.seq), 'ie_minus_lel': gap})
    c3 = cycle_graph(3)
    report.observations.append({'graph': 'C3', 'ie_minus_lel': incidence_energy(c3) - lel(laplacian_spectrum(c3))})
    return report


def verify_spectral_roundtrip(n_max: int = 12, rel_tol: float = 1e-8) -> CheckReport:
    """
    数值谱的初等对称多项式与精确系数一致：|σ_k − c_k| ≤ rel_tol·max(1, c_k)。
    """
    _check_order(n_max, low=1)
    report = CheckReport('roundtrip', params={'n_max': n_max, 'tol': rel_tol})
    for n in range(1, n_max + 1):
        for ls in free_tree_level_sequences(n):
            t = ls.to_tree()
            exact = laplacian_coefficients(t).c
            numeric = coefficients_from_spectrum(laplacian_spectrum(t).values)
            report.cases_checked += 1
            for k, (c, s) in enumerate(zip(exact, numeric)):
                if abs(s - c) > rel_tol * max(1.0, float(c)):
                    report.violations.append({'n': n, 'level_sequence': list(ls.seq), 'k': k,
                                              'exact': str(c), 'numeric': s})
    return report
