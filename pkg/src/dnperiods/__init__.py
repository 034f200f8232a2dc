"""Recover the b-period matrix of the double of a bordered surface from
boundary measurements (the Dirichlet-to-Neumann map), with an independent
finite-element interior oracle for validation."""

from .mesh_geometry import (
    InvariantError,
    TriMesh,
    CycleBasis,
    build_flat_torus_with_hole,
    build_genus2_with_hole,
    build_disk,
    homology_basis,
    load_mesh,
    save_mesh,
)
from .boundary_calculus import (
    BoundaryGrid,
    BoundaryFn,
    DNMatrix,
    d_gamma,
    d_gamma_inv,
    lambda_inner,
    disk_dn,
    load_dn,
    save_dn,
)
from .fem_oracle import (
    P1Function,
    PwField,
    assemble_laplacian,
    harmonic_extension,
    dn_map,
    rotate,
    tangent_harmonic_basis,
    field_from_trace,
    period,
    interior_inner,
)
from .hilbert_spectrum import (
    EigenSystem,
    SpectrumResult,
    hilbert_apply,
    hilbert_inv_apply,
    spectrum,
    detect_genus,
    exceptional_pairs,
)
from .lattice_solver import (
    ParamVector,
    PQSystem,
    BoundaryDatum,
    build_pq,
    residual,
    datum_from_params,
    find_lattice,
    extract_generators,
)
from .canonical_form import (
    PairingMatrix,
    pairing,
    gram,
    pairing_matrix,
    symplectic_reduce,
    canonical_data,
)
from .period_assembly import (
    PeriodMatrices,
    chi_matrices,
    standard_symplectic,
    aux_period_matrix,
    b_period_matrix,
    sp_transform,
    check_siegel,
    random_symplectic,
)
from .noise_harness import (
    NoiseSpec,
    NoiseThresholds,
    perturb,
    reconstruct_noisy,
    run_reconstruction,
    stability_sweep,
)

__version__ = "0.1.0"
