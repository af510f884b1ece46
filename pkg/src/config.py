"""全局配置常量。

各模块以关键字默认值的形式引用这里的常量，CLI 通过命令行参数逐次覆盖。
"""

# ============================================================================
# 数值容差
# ============================================================================
DEFAULT_EIG_TOL = 1e-10        # 特征值容差（相对矩阵最大范数）
GAP_FLOOR_REL = 1e-8           # 根间距下限（相对最大根 x₁）
DEFAULT_SLACK = 1e-9           # LEL 比较的绝对松弛量
LEE_EXP_LIMIT = 700.0          # exp 溢出前的特征值上限

# ============================================================================
# 求根迭代
# ============================================================================
ROOT_RESIDUAL_TOL = 1e-12      # 首一多项式残差（相对尺度）
ROOT_MAX_ITER = 200            # 同时迭代的最大步数
ROOT_ROUNDTRIP_TOL = 1e-9      # σ(roots) 与输入系数的相对偏差

# ============================================================================
# 树枚举
# ============================================================================
MAX_TREE_ORDER = 22            # all_free_trees 的阶数上限
PRUFER_MAX_ORDER = 9           # Prüfer 普查的阶数上限
FULL_PAIR_SCAN_MAX = 10        # 全对扫描的默认阶数上限

# ============================================================================
# 随机采样
# ============================================================================
DEFAULT_SEED = 20090407
SAMPLE_LOW = 0.1               # 随机根区间 (SAMPLE_LOW, SAMPLE_HIGH)
SAMPLE_HIGH = 10.0
DEFAULT_MIN_GAP = 0.3
RECURRENCE_MAX_K = 5           # 加权幂和递推检查到的最大 k
FD_RETRIES = 2                 # 中心差分求根失败后缩小步长重试的次数

# ============================================================================
# 闭包探测
# ============================================================================
CLOSURE_START_GAP = 0.5        # 初始半间距 δ₀，之后逐步减半
CLOSURE_CAUCHY_TOL = 1e-9
