"""H-spectra of generalized power hypergraphs G^{k,k/2}.

The H-spectrum of the adjacency (signless Laplacian) tensor of ``G^{k,k/2}``
is assembled from the matrix spectra of the connected (modified) induced
subgraphs of ``G``; the tensor side is available for direct verification.
"""

from .eigen import (
    EigenPair,
    SpectrumSet,
    min_form_descent,
    nqz_spectral_radius,
    single_edge_eigenvalues,
    sym_eigen,
    sym_eigvals,
)
from .errors import CapacityError, ConvergenceError, HyperspecError, InputError, VerificationError
from .graph import (
    Graph,
    adjacency_matrix,
    degree,
    enumerate_connected_induced_vertex_sets,
    induced_subgraph,
    is_bipartite,
    is_connected,
    modified_induced_subgraph,
    signless_laplacian_matrix,
)
from .hypergraph import Hypergraph, h_degree, h_is_connected, is_odd_bipartite
from .limits import (
    LIMIT_TARGET,
    beta_alpha,
    convergence_experiment,
    gen_caterpillar,
    gen_cycle,
    gen_cycle_plus_pendant,
    gen_opened_tree,
    gen_path,
)
from .power import PowerMap, build_power, check_half_edge_modulus, lift_vector, project_vector
from .spectra import (
    h_spectrum_adjacency,
    h_spectrum_signless_laplacian,
    lamin_adjacency,
    lamin_signless_laplacian,
    power_spectral_radius,
    verify_lift_correspondence,
)
from .tensor import Kind, TensorOperator, is_weakly_irreducible, principal_subtensor, residual

__version__ = "0.1.0"
