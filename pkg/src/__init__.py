"""lelcheck - 树的拉普拉斯系数、谱不变量与 Vieta 映射验证库。"""

from .graph import Graph, path_graph, star_graph, cycle_graph, laplacian_matrix
from .charpoly import ExactCoeffs, laplacian_coefficients, verify_coefficient_identities
from .spectra import Spectrum, laplacian_spectrum, signless_laplacian_spectrum
from .invariants import lel, lee, incidence_energy, compute_invariants
from .vieta import PreparedRoots, prepare_roots, lel_gradient_wrt_coeffs
from .treeenum import all_free_trees, canonical_code, prufer_census
from .harness import coefficient_table, dominance
from .report import CheckReport

__all__ = [
    'Graph',
    'path_graph',
    'star_graph',
    'cycle_graph',
    'laplacian_matrix',
    'ExactCoeffs',
    'laplacian_coefficients',
    'verify_coefficient_identities',
    'Spectrum',
    'laplacian_spectrum',
    'signless_laplacian_spectrum',
    'lel',
    'lee',
    'incidence_energy',
    'compute_invariants',
    'PreparedRoots',
    'prepare_roots',
    'lel_gradient_wrt_coeffs',
    'all_free_trees',
    'canonical_code',
    'prufer_census',
    'coefficient_table',
    'dominance',
    'CheckReport',
]
