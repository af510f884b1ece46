"""
自由树枚举脚本
用途：枚举 n 阶自由树，导出系数与不变量表，并检查系数支配下的 LEL 单调性
"""
import logging
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.harness import coefficient_table, records_frame, verify_theorem1

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")

# ============================================================
# 配置常量
# ============================================================
ORDER = 9                                   # 树的阶数
JOBS = 1                                    # 并行进程数
OUTPUT_CSV = Path(f"trees_n{ORDER}.csv")    # 输出文件

# ============================================================
# 记录表
# ============================================================
records = coefficient_table(ORDER, jobs=JOBS)
df = records_frame(records)
df.to_csv(OUTPUT_CSV, index=False, float_format="%.17g")
print(df[['tree_id', 'level_sequence', 'lel', 'lee', 'wiener']].sort_values('lel').to_string(index=False))

# ============================================================
# 逐对检查
# ============================================================
report = verify_theorem1(ORDER, records=records)
print(f"{report.cases_checked} 对，状态 {report.status}，观测 {report.observations[0]}")
