"""报告与表格输出。

检查结果统一用 CheckReport 表示；表格型结果（每棵树一行）用
pandas DataFrame 承载。JSON 输出按键排序，同样的参数两次运行
得到逐字节相同的文件。
"""
from __future__ import annotations

import json
import math
import re
import sys
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal, TextIO

import numpy as np
import pandas as pd

OutputFormat = Literal['csv', 'json']

CSV_FLOAT_FORMAT = "%.17g"


@dataclass
class CheckReport:
    """
    一次检查的结果。

    Attributes
    ----------
    check : str
        检查名称，例如 'jacobian'、'order'。
    params : dict
        本次运行的参数。
    cases_checked : int
        检查过的用例数（树、样本或树对）。
    violations : list[dict]
        每条违例一个字典；非空即失败。
    observations : list[dict]
        不影响结论的附加记录，例如最小正间隙、极限点处的拒绝。
    """
    check: str
    params: dict[str, Any] = field(default_factory=dict)
    cases_checked: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    observations: list[dict[str, Any]] = field(default_factory=list)

    @property
    def status(self) -> str:
        return 'fail' if self.violations else 'pass'

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            'check': self.check,
            'params': self.params,
            'cases_checked': self.cases_checked,
            'violations': self.violations,
            'observations': self.observations,
            'status': self.status,
        }

    def summary_frame(self) -> pd.DataFrame:
        """单行摘要，参数展开为列。"""
        row = {
            'check': self.check,
            'status': self.status,
            'cases_checked': self.cases_checked,
            'violations': len(self.violations),
            'observations': len(self.observations),
        }
        row.update({f"param_{k}": v for k, v in sorted(self.params.items())})
        return pd.DataFrame([row])


# ============================================================================
# 序列化
# ============================================================================

JSON_FLOAT_FORMAT = ".17g"
_FLOAT_TOKEN = re.compile(r'"\\u0000f:([^"\\]*)"')


def _float_text(value: float) -> str:
    """17 位有效数字；非有限值沿用 json 模块的 NaN / Infinity 写法。"""
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    text = format(value, JSON_FLOAT_FORMAT)
    if not any(ch in text for ch in ".e"):
        text += ".0"
    return text


def _tokenize_floats(obj: Any) -> Any:
    match obj:
        case bool() | np.bool_():
            return bool(obj)
        case float() | np.floating():
            return "\0f:" + _float_text(float(obj))
        case np.integer():
            return int(obj)
        case dict():
            return {k: _tokenize_floats(v) for k, v in obj.items()}
        case list() | tuple():
            return [_tokenize_floats(v) for v in obj]
        case _:
            return obj


def _json_default(obj):
    if isinstance(obj, np.ndarray):
        return _tokenize_floats(obj.tolist())
    raise TypeError(f"无法序列化 {type(obj).__name__}")


def dumps_json(payload: Any) -> str:
    """按键排序、缩进 2 的 JSON；浮点数写成 17 位有效数字。"""
    text = json.dumps(_tokenize_floats(payload), sort_keys=True, indent=2, ensure_ascii=False,
                      default=_json_default)
    return _FLOAT_TOKEN.sub(lambda m: m.group(1), text) + "\n"


def frame_to_text(df: pd.DataFrame, fmt: OutputFormat) -> str:
    """
    把表格转成文本。

    csv 使用 "%.17g" 保证浮点数可无损读回；json 为记录列表。
    """
    match fmt:
        case 'csv':
            return df.to_csv(index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
        case 'json':
            return dumps_json(df.to_dict(orient='records'))
        case _:
            raise ValueError(f"未知的输出格式: {fmt}")


def report_to_text(report: CheckReport, fmt: OutputFormat) -> str:
    match fmt:
        case 'json':
            return dumps_json(report.to_dict())
        case 'csv':
            return frame_to_text(report.summary_frame(), 'csv')
        case _:
            raise ValueError(f"未知的输出格式: {fmt}")


def emit(text: str, out: str | Path | None = None, stream: TextIO | None = None) -> None:
    """写入文件；out 为 None 时写到标准输出。"""
    if out is None:
        (stream or sys.stdout).write(text)
    else:
        Path(out).write_text(text, encoding='utf-8')


def write_lines(lines: Iterable[str], out: str | Path) -> int:
    """逐行写文件，返回行数。"""
    count = 0
    with open(out, 'w', encoding='utf-8') as fh:
        for line in lines:
            fh.write(line + "\n")
            count += 1
    return count
