"""Generalised (Sharma-Mittal, Renyi, Tsallis, von Neumann) entropies of
graph Laplacian quantum states, with spectra, product formulas and bounds."""

from .entropy import EntropyParams, Family, all_entropies, entropy, renyi, sharma_mittal, tsallis, von_neumann
from .errors import SpectralEntropyError
from .graph import (
    Graph,
    MatrixKind,
    ProductKind,
    build_graph,
    complete,
    complete_bipartite,
    corona_iterate,
    cycle,
    erdos_renyi,
    generate,
    path,
    product,
    read_edgelist,
    write_edgelist,
)
from .spectra import (
    DensitySpectrum,
    Spectrum,
    closed_form_spectrum,
    corona_graph_spectrum,
    density_spectrum,
    eig_symmetric,
    graph_density,
    graph_spectrum,
    moment_sum,
    product_spectrum,
    product_spectrum_of,
)

__version__ = "0.1.0"

__all__ = [
    "all_entropies",
    "build_graph",
    "closed_form_spectrum",
    "complete",
    "complete_bipartite",
    "corona_graph_spectrum",
    "corona_iterate",
    "cycle",
    "density_spectrum",
    "DensitySpectrum",
    "eig_symmetric",
    "entropy",
    "EntropyParams",
    "erdos_renyi",
    "Family",
    "generate",
    "Graph",
    "graph_density",
    "graph_spectrum",
    "MatrixKind",
    "moment_sum",
    "path",
    "product",
    "product_spectrum",
    "product_spectrum_of",
    "ProductKind",
    "read_edgelist",
    "renyi",
    "sharma_mittal",
    "SpectralEntropyError",
    "Spectrum",
    "tsallis",
    "von_neumann",
    "write_edgelist",
]
