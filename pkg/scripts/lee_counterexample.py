"""
LEE 反例脚本
用途：对比 S_n 与 P_n 的系数、LEL 与 LEE，展示系数支配不能推出 LEE 单调
"""
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.charpoly import laplacian_coefficients
from src.graph import path_graph, star_graph
from src.harness import dominance
from src.invariants import lee, lel
from src.spectra import laplacian_spectrum
from src.vieta import lee_gradient_wrt_coeffs, lel_gradient_wrt_coeffs, prepare_roots

# ============================================================
# 配置常量
# ============================================================
N_MIN = 4
N_MAX = 12

# ============================================================
# 逐阶对比
# ============================================================
print(f"{'n':>3} {'关系':>4} {'LEL(S)':>10} {'LEL(P)':>10} {'LEE(S)':>14} {'LEE(P)':>12}")
for n in range(N_MIN, N_MAX + 1):
    star, path = star_graph(n), path_graph(n)
    verdict = dominance(laplacian_coefficients(star), laplacian_coefficients(path))
    s_star, s_path = laplacian_spectrum(star), laplacian_spectrum(path)
    print(f"{n:>3} {verdict.relation.value:>4} {lel(s_star):>10.5f} {lel(s_path):>10.5f} "
          f"{lee(s_star):>14.4f} {lee(s_path):>12.4f}")

# ============================================================
# 梯度符号：LEL 全正，LEE 交替
# ============================================================
mu = prepare_roots([v for v in laplacian_spectrum(path_graph(6)).values if v > 0])
print("∂LEL/∂c:", lel_gradient_wrt_coeffs(mu))
print("∂LEE/∂c:", lee_gradient_wrt_coeffs(mu))
