"""异常类型。

每种异常同时继承对应的内置异常，调用方既可以捕获具体类型，
也可以按 ValueError / RuntimeError 统一处理。
"""


class LelCheckError(Exception):
    """本库所有异常的基类。"""


# ============================================================================
# 输入错误（ValueError 族）
# ============================================================================
class InvalidGraph(LelCheckError, ValueError):
    """图结构非法：自环、重边或端点越界。"""


class InvalidOrder(LelCheckError, ValueError):
    """阶数不满足构造函数的前置条件。"""


class NotATree(LelCheckError, ValueError):
    """要求输入为树，但 m ≠ n−1 或图不连通。"""


class DisconnectedGraph(LelCheckError, ValueError):
    """存在不可达的顶点对。"""


class OrderTooLarge(LelCheckError, ValueError):
    """阶数超过枚举上限。"""


class OrderMismatch(LelCheckError, ValueError):
    """比较的两个系数向量阶数不同。"""


class RepeatedRoots(LelCheckError, ValueError):
    """根间距低于 gap_floor，ω′ 病态。"""


class ZeroEigenvalueIncluded(LelCheckError, ValueError):
    """LEL 梯度的输入中含零（或过小）特征值。"""


class NegativeEigenvalue(LelCheckError, ValueError):
    """特征值为负，说明跳过了截断步骤。"""


class NonFiniteFunctionValue(LelCheckError, ValueError):
    """被差商的函数在某个节点处取到非有限值。"""


# ============================================================================
# 运行时错误（RuntimeError / ArithmeticError 族）
# ============================================================================
class ConvergenceFailure(LelCheckError, RuntimeError):
    """特征值求解器未收敛。"""


class NoRealSimpleRoots(LelCheckError, RuntimeError):
    """求根迭代未能给出满足残差与间距要求的实单根。"""


class EigenvalueOverflow(LelCheckError, ArithmeticError):
    """exp(μ) 溢出双精度范围。"""


class SignMismatch(LelCheckError, ArithmeticError):
    """差商的符号与给定的导数符号不一致。"""
