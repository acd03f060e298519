"""t-clique spectral radius of graphs and extremal checks for graphs without long cycles or paths."""
from .cliques import CliqueSet, count_snla, count_t_cliques, enumerate_t_cliques
from .errors import (CliqueRhoError, ConvergenceError, DomainError, Graph6Error,
                     GraphSizeError, SearchError, StabilizationError)
from .graph import (Graph, complete_graph, construct_snla, cycle_graph, diameter, empty_graph,
                    is_biconnected, is_connected, join, parse_graph6, path_graph, star_graph,
                    to_graph6, union_disjoint)
from .paths import (PathCycleStats, circumference, is_c_geq_k_free, is_p_k_free,
                    longest_path_order)
from .spectral import (CMP_TOL, EIGEN_TOL, MAX_ITER, OrbitSolution, SpectralResult,
                       clique_components, rho_complete, rho_snab_reduced, rho_t, tensor_apply)
from .transforms import (ShiftTrace, kelmans_shift, level_classify, shift_set, stabilize,
                         universal_vertices)

__version__ = "0.1.0"
