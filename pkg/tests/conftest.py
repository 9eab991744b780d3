import numpy as np
import pytest

from diskgap import (
    BoundaryModel,
    DiskPair,
    IncidentField,
    SolverOptions,
    assemble_and_solve,
)

FAST_OPTS = SolverOptions(residual_target=1e-9, max_order=256)


@pytest.fixture(scope="session")
def symmetric_case():
    """A converged mid-gap zero-flux solve shared across solver tests."""
    pair = DiskPair(1.0, 1.0, 1e-2)
    inc = IncidentField.plane_wave(0.05, direction=(0, 1))
    sol = assemble_and_solve(pair, 0.05, BoundaryModel.zero_flux(), inc, FAST_OPTS)
    assert sol.boundary_residual < 1e-9
    return sol


@pytest.fixture(scope="session")
def asymmetric_case():
    """Unequal radii, flux-coupled model."""
    pair = DiskPair(1.3, 0.6, 5e-3)
    inc = IncidentField.plane_wave(0.08, direction=(0.6, 0.8))
    sol = assemble_and_solve(pair, 0.08, BoundaryModel.flux_coupled(1.0), inc, FAST_OPTS)
    assert sol.boundary_residual < 1e-9
    return sol


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)
